"""Spin structures as edge-orientation classes on a trivalent fatgraph.

An orientation assigns each edge a sign: +1 means the edge points along
its stored reference direction (tail -> head), -1 the opposite way.  A
fatgraph reflection at a vertex reverses every incident edge (a loop is
reversed twice, hence unchanged); two orientations define the same spin
structure iff they differ by reflections.  Classes number 2^(E-V+1) =
2^(2g+s-1) on a connected graph.

Membership and canonical representatives are decided by GF(2) linear
algebra over int bitmasks (bit i = edge i reversed); a brute-force orbit
search is kept alongside as an independent oracle.
"""

from __future__ import annotations

from collections import deque

from .fatgraph import (FlipRecord, boundary_cycles, flip_quadrilateral,
                       whitehead_flip)


class SpinError(ValueError):
    """Invalid orientation data or mismatched graphs."""


class OrientationState:
    """Immutable assignment of a sign (+1/-1) to every edge of a graph."""

    __slots__ = ("graph", "signs")

    def __init__(self, graph, signs):
        signs = tuple(signs)
        if len(signs) != graph.num_edges or any(s not in (1, -1) for s in signs):
            raise SpinError("need one sign +1/-1 per edge, got %r" % (signs,))
        self.graph = graph
        self.signs = signs

    @classmethod
    def all_plus(cls, graph):
        return cls(graph, (1,) * graph.num_edges)

    def sign(self, e):
        return self.signs[e]

    def sign_string(self):
        return "".join("+" if s == 1 else "-" for s in self.signs)

    def __eq__(self, other):
        return (isinstance(other, OrientationState)
                and self.graph == other.graph and self.signs == other.signs)

    def __hash__(self):
        return hash((self.graph, self.signs))

    def __repr__(self):
        return "OrientationState(%s)" % self.sign_string()


def _signs_to_mask(signs):
    mask = 0
    for i, s in enumerate(signs):
        if s == -1:
            mask |= 1 << i
    return mask


def _mask_to_signs(mask, num_edges):
    return tuple(-1 if mask >> i & 1 else 1 for i in range(num_edges))


def _lex_key(state):
    # edge-id order with + before -
    return tuple(0 if s == 1 else 1 for s in state.signs)


def reflection_mask(graph, v):
    """GF(2) vector of edges toggled by a reflection at vertex v."""
    mask = 0
    for h in graph.vertices[v]:
        mask ^= 1 << graph.edge_of(h)
    return mask


def star_matrix(graph):
    """Reflection vectors of all vertices (loops cancel out)."""
    return [reflection_mask(graph, v) for v in range(graph.num_vertices)]


def _rref(rows):
    """Reduced row echelon form over GF(2); pivots at lowest set bits."""
    basis = []  # list of (pivot_bit, row), pivot_bit increasing
    for row in rows:
        for pivot, r in basis:
            if row >> pivot & 1:
                row ^= r
        if row:
            pivot = (row & -row).bit_length() - 1
            basis = [(p, r ^ row if r >> pivot & 1 else r) for p, r in basis]
            basis.append((pivot, row))
    basis.sort()
    return basis


def _canonical_mask(mask, basis):
    # zeroing all pivot bits yields the lexicographically smallest coset
    # element for the edge-id order with + before -
    for pivot, row in basis:
        if mask >> pivot & 1:
            mask ^= row
    return mask


def reflect(state, v):
    """Reflect at vertex v: toggle each incident edge once per incidence."""
    graph = state.graph
    if not 0 <= v < graph.num_vertices:
        raise SpinError("unknown vertex %r" % (v,))
    mask = _signs_to_mask(state.signs) ^ reflection_mask(graph, v)
    return OrientationState(graph, _mask_to_signs(mask, graph.num_edges))


def same_spin_class(state1, state2):
    """True iff the two orientations differ by fatgraph reflections."""
    if state1.graph != state2.graph:
        raise SpinError("orientation states live on different graphs")
    diff = _signs_to_mask(state1.signs) ^ _signs_to_mask(state2.signs)
    basis = _rref(star_matrix(state1.graph))
    return _canonical_mask(diff, basis) == 0


def reflection_vertices_between(state1, state2):
    """A vertex set whose reflections carry state1 to state2, or None.

    The answer is unique up to complementation (reflecting at every
    vertex of a connected graph is the identity).
    """
    if state1.graph != state2.graph:
        raise SpinError("orientation states live on different graphs")
    graph = state1.graph
    target = _signs_to_mask(state1.signs) ^ _signs_to_mask(state2.signs)
    rows = star_matrix(graph)
    # track combinations: reduce target by rows, remembering which were used
    basis = []  # (pivot, row, vertex_set_mask)
    for v, row in enumerate(rows):
        comb = 1 << v
        for pivot, r, c in basis:
            if row >> pivot & 1:
                row ^= r
                comb ^= c
        if row:
            basis.append(((row & -row).bit_length() - 1, row, comb))
            basis.sort()
    comb = 0
    for pivot, row, c in basis:
        if target >> pivot & 1:
            target ^= row
            comb ^= c
    if target:
        return None
    return tuple(v for v in range(graph.num_vertices) if comb >> v & 1)


def canonical_representative(state):
    """Lexicographically smallest orientation in the spin class."""
    basis = _rref(star_matrix(state.graph))
    mask = _canonical_mask(_signs_to_mask(state.signs), basis)
    return OrientationState(state.graph, _mask_to_signs(mask, state.graph.num_edges))


def spin_class_count(graph):
    """Class count from the GF(2) rank formula: 2^(E - rank) = 2^(E-V+1)."""
    rank = len(_rref(star_matrix(graph)))
    return 1 << (graph.num_edges - rank)


def enumerate_spin_classes(graph):
    """One canonical representative per spin class, lexicographically sorted."""
    basis = _rref(star_matrix(graph))
    reps = {_canonical_mask(m, basis) for m in range(1 << graph.num_edges)}
    states = [OrientationState(graph, _mask_to_signs(m, graph.num_edges))
              for m in reps]
    states.sort(key=_lex_key)  # + sorts before -
    return tuple(states)


def brute_force_spin_classes(graph):
    """Independent oracle: orbit partition of all 2^E orientations.

    Explores reflection moves directly (no linear algebra) and returns the
    lexicographically smallest member of each orbit, sorted.
    """
    num_edges = graph.num_edges
    moves = star_matrix(graph)
    seen = set()
    reps = []
    for start in range(1 << num_edges):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            m = queue.popleft()
            for move in moves:
                nxt = m ^ move
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        seen |= orbit
        reps.append(min(orbit, key=lambda m: [m >> i & 1 for i in range(num_edges)]))
    states = [OrientationState(graph, _mask_to_signs(m, num_edges)) for m in reps]
    states.sort(key=_lex_key)
    return tuple(states)


def classify_punctures(state):
    """R/NS type of every boundary cycle, in boundary_cycles order.

    Walking a cycle traverses each half-edge h along h -> alpha(h); the
    traversal opposes the edge's orientation when it runs from the head
    half while the sign is +1, or from the tail half while the sign is -1.
    An even count of opposing traversals gives R, odd gives NS.
    """
    graph = state.graph
    tags = []
    for cycle in boundary_cycles(graph):
        k = 0
        for h in cycle:
            e = graph.edge_of(h)
            along_reference = graph.edges[e][0] == h
            if along_reference != (state.signs[e] == 1):
                k += 1
        tags.append("R" if k % 2 == 0 else "NS")
    return tuple(tags)


def flip_orientation(state, e):
    """Evolve an orientation through the flip of edge e.

    The evolution rule is stated for the arrow configuration in which e
    points from the (c,d)-vertex to the (a,b)-vertex, i.e. sign -1 against
    the stored tail->head reference.  A +1 edge is first brought there by
    an auto-reflection at the tail vertex (recorded).  Then a, c, d keep
    their orientations, b is reversed, and the new edge points from the
    (b,c)-vertex to the (a,d)-vertex, which is its new reference (+1).
    """
    graph = state.graph
    q = flip_quadrilateral(graph, e)
    signs = list(state.signs)
    reflections = ()
    if signs[e] == 1:
        reflections = (q.tail_vertex,)
        mask = _signs_to_mask(signs) ^ reflection_mask(graph, q.tail_vertex)
        signs = list(_mask_to_signs(mask, graph.num_edges))
    flipped, record = whitehead_flip(graph, e)
    signs[q.b] = -signs[q.b]
    signs[e] = 1
    record = FlipRecord(
        flipped_edge=record.flipped_edge, a=record.a, b=record.b,
        c=record.c, d=record.d, e=record.e,
        tail_vertex=record.tail_vertex, head_vertex=record.head_vertex,
        reflections_applied=reflections, relabeling=record.relabeling)
    return OrientationState(flipped, signs), record

"""Randomized property suites shared by the CLI `check` command and tests.

All randomness flows from one seed; identical (graph, seed, mode) runs
produce identical reports.  The flip suites compare states across flip
sequences by transporting the final state back along the canonical graph
isomorphism (the one fixing every half-edge of untouched edges), aligning
the orientation representative by reflections, and then comparing modulo
the global odd sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .decorated import DecoratedState, states_equal_mod_sign, superflip
from .fatgraph import (NonGenericFlipError, boundary_cycles, find_isomorphisms,
                       flip_quadrilateral, topology)
from .grassmann import FLOAT, RATIONAL, GrassmannAlgebra
from .spin import (OrientationState, brute_force_spin_classes,
                   enumerate_spin_classes, reflect,
                   reflection_vertices_between, spin_class_count)


class CheckSetupError(ValueError):
    """The requested suite cannot run on this input (precondition failure)."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str

    def report(self):
        status = "pass" if self.passed else "FAIL"
        return "%s: %s (%d cases)%s" % (
            self.name, status, self.cases,
            " " + self.detail if self.detail else "")


# ---------------------------------------------------------------------------
# state transport along graph isomorphisms


def transport_state(final_state, phi, initial_graph):
    """Pull a decorated state back along a half-edge isomorphism.

    phi maps half-edges of final_state.graph to initial_graph; signs are
    conjugated by whether phi preserves each edge's reference direction.
    """
    gf = final_state.graph
    gi = initial_graph
    lam = {}
    signs = [None] * gi.num_edges
    for ef in range(gf.num_edges):
        t, _ = gf.edges[ef]
        ei = gi.edge_of(phi[t])
        lam[ei] = final_state.lam[ef]
        same_dir = gi.edges[ei][0] == phi[t]
        signs[ei] = final_state.orientation.signs[ef] * (1 if same_dir else -1)
    mu = {}
    for vf in range(gf.num_vertices):
        vi = gi.vertex_of(phi[gf.vertices[vf][0]])
        mu[vi] = final_state.mu[vf]
    return DecoratedState(gi, OrientationState(gi, signs),
                          final_state.algebra, lam, mu)


def aligned_equal_mod_sign(initial, final, touched_edges, tol=None):
    """Compare states across a flip sequence that returns the triangulation.

    Finds the isomorphism from the final graph to the initial one that is
    the identity on all half-edges of edges outside touched_edges,
    transports the final state, applies the reflections aligning the
    orientation representative (negating the reflected mu-invariants), and
    compares modulo the global odd sign.  False when no such isomorphism
    exists or the spin classes disagree.
    """
    gi, gf = initial.graph, final.graph
    fixed = [h for e in range(gi.num_edges) if e not in touched_edges
             for h in gi.edges[e]]
    isos = [phi for phi in find_isomorphisms(gf, gi)
            if all(phi[h] == h for h in fixed)]
    for phi in isos:
        moved = transport_state(final, phi, gi)
        refl = reflection_vertices_between(moved.orientation, initial.orientation)
        if refl is None:
            continue
        orientation = moved.orientation
        mu = dict(moved.mu)
        for v in refl:
            orientation = reflect(orientation, v)
            mu[v] = -mu[v]
        candidate = DecoratedState(gi, orientation, moved.algebra, moved.lam, mu)
        if states_equal_mod_sign(candidate, initial, tol=tol):
            return True
    return False


# ---------------------------------------------------------------------------
# random decorated states


def _pythagorean_ratio(rng):
    # chi = (m/n)^2 with m^2 + n^2 a perfect square, so that both sqrt(chi)
    # and sqrt(1 + chi) are rational
    p = rng.randint(2, 6)
    q = rng.randint(1, p - 1)
    m, n = p * p - q * q, 2 * p * q
    if rng.random() < 0.5:
        m, n = n, m
    return m, n


def _random_even_soul(algebra, rng, coeff):
    n = algebra.num_generators
    x = algebra.zero()
    for _ in range(rng.randint(0, 2)):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            x = x + algebra.monomial([i, j], coeff(rng))
    return x


def _random_odd(algebra, rng, coeff):
    n = algebra.num_generators
    x = algebra.zero()
    for i in range(n):
        c = coeff(rng)
        if c != 0:
            x = x + algebra.monomial([i], c)
    if n >= 3 and rng.random() < 0.2:
        picks = rng.sample(range(n), 3)
        x = x + algebra.monomial(picks, coeff(rng))
    return x


def random_decorated_state(graph, rng, mode=RATIONAL, odd=True,
                           square_friendly_edge=None):
    """Random decorated state on graph, one algebra generator per vertex.

    With square_friendly_edge set (rational mode), the quadrilateral of
    that edge gets lambda bodies making chi and 1+chi squares of
    rationals, so a superflip there stays exact.
    """
    algebra = GrassmannAlgebra(graph.num_vertices, mode)
    if mode == RATIONAL:
        def body(r):
            return Fraction(r.randint(1, 9), r.randint(1, 9))

        def coeff(r):
            return Fraction(r.randint(-3, 3))
    else:
        def body(r):
            return r.uniform(0.5, 4.0)

        def coeff(r):
            return r.uniform(-1.0, 1.0)

    bodies = {e: body(rng) for e in range(graph.num_edges)}
    if square_friendly_edge is not None:
        q = flip_quadrilateral(graph, square_friendly_edge)
        m, n = _pythagorean_ratio(rng)
        w1, w2 = body(rng), body(rng)
        bodies[q.a] = m * w1
        bodies[q.c] = m * w2
        bodies[q.b] = n * w1
        bodies[q.d] = n * w2
    lam = {e: algebra.scalar(bodies[e]) + _random_even_soul(algebra, rng, coeff)
           for e in range(graph.num_edges)}
    if odd:
        mu = {v: _random_odd(algebra, rng, coeff)
              for v in range(graph.num_vertices)}
    else:
        mu = {v: algebra.zero() for v in range(graph.num_vertices)}
    signs = [rng.choice((1, -1)) for _ in range(graph.num_edges)]
    return DecoratedState(graph, OrientationState(graph, signs), algebra, lam, mu)


def generic_edges(graph):
    out = []
    for e in range(graph.num_edges):
        try:
            flip_quadrilateral(graph, e)
        except NonGenericFlipError:
            continue
        out.append(e)
    return out


def boundary_correspondence(graph1, graph2, skip_halves=()):
    """Match boundary cycles of graph1 to graph2 by shared half-edges.

    Half-edges in skip_halves (those of flipped edges) are ignored when
    matching.  Returns a dict cycle-index -> cycle-index, or None when the
    matching is not a bijection.
    """
    skip = set(skip_halves)
    cycles1 = boundary_cycles(graph1)
    cycles2 = boundary_cycles(graph2)
    if len(cycles1) != len(cycles2):
        return None
    mapping = {}
    for i, cyc in enumerate(cycles1):
        keys = set(cyc) - skip
        matches = [j for j, other in enumerate(cycles2) if keys & set(other)]
        if len(matches) != 1:
            return None
        mapping[i] = matches[0]
    if len(set(mapping.values())) != len(cycles1):
        return None
    return mapping


def pentagon_pairs(graph):
    """Edge pairs (e1, e2) that are the diagonals of an embedded pentagon.

    e1 and e2 share exactly one vertex, their far endpoints are distinct,
    and the five outer sides are five distinct further edges.  On such a
    pair the alternating 5-flip sequence returns the triangulation.
    """
    pairs = []
    for e1 in range(graph.num_edges):
        for e2 in range(graph.num_edges):
            if e1 == e2 or graph.is_loop(e1) or graph.is_loop(e2):
                continue
            end1 = {graph.tail_vertex(e1), graph.head_vertex(e1)}
            end2 = {graph.tail_vertex(e2), graph.head_vertex(e2)}
            shared = end1 & end2
            if len(shared) != 1:
                continue
            v = shared.pop()
            u = (end1 - {v}).pop()
            w = (end2 - {v}).pop()
            if u == w:
                continue
            sides = set(graph.edges_at(v)) - {e1, e2}
            sides |= set(graph.edges_at(u)) - {e1}
            sides |= set(graph.edges_at(w)) - {e2}
            if len(sides) == 5 and not sides & {e1, e2}:
                pairs.append((e1, e2))
    return pairs


# ---------------------------------------------------------------------------
# the suites


def check_ptolemy(graph, seed=0, mode=RATIONAL, tol=1e-12, cases=1000):
    """Classical limit: e*f = ac + bd after every flip of a mu=0 state."""
    edges = generic_edges(graph)
    if not edges:
        raise CheckSetupError("graph has no generically flippable edge")
    rng = random.Random(seed)
    failures = 0
    for _ in range(cases):
        e = rng.choice(edges)
        state = random_decorated_state(graph, rng, mode=mode, odd=False)
        q = flip_quadrilateral(graph, e)
        flipped, _ = superflip(state, e)
        lhs = state.lam[e] * flipped.lam[e]
        rhs = state.lam[q.a] * state.lam[q.c] + state.lam[q.b] * state.lam[q.d]
        if flipped.lam[e].body <= 0:
            failures += 1
        elif mode == RATIONAL:
            if lhs != rhs:
                failures += 1
        else:
            scale = max(1.0, abs(lhs.body), abs(rhs.body))
            if not lhs.isclose(rhs, tol * scale):
                failures += 1
    return CheckResult("ptolemy", failures == 0, cases,
                       "mode=%s failures=%d" % (mode, failures))


def check_involution(graph, seed=0, mode=RATIONAL, tol=1e-9, cases=500):
    """Double superflip returns the original state modulo global odd sign.

    Exact in rational mode (chi engineered square-friendly), within tol
    coefficientwise in float mode.
    """
    edges = generic_edges(graph)
    if not edges:
        raise CheckSetupError("graph has no generically flippable edge")
    rng = random.Random(seed)
    failures = 0
    for _ in range(cases):
        e = rng.choice(edges)
        if mode == RATIONAL:
            state = random_decorated_state(graph, rng, mode=mode,
                                           square_friendly_edge=e)
            use_tol = None
        else:
            state = random_decorated_state(graph, rng, mode=mode)
            use_tol = tol
        once, _ = superflip(state, e)
        twice, _ = superflip(once, e)
        if not aligned_equal_mod_sign(state, twice, {e}, tol=use_tol):
            failures += 1
    return CheckResult("involution", failures == 0, cases,
                       "mode=%s failures=%d" % (mode, failures))


def check_pentagon(graph, seed=0, mode=FLOAT, tol=1e-9, cases=100):
    """The alternating 5-flip sequence on pentagon diagonals is the identity."""
    if mode != FLOAT:
        raise CheckSetupError("pentagon check needs float mode (square roots "
                              "along the sequence are irrational)")
    pairs = pentagon_pairs(graph)
    if not pairs:
        raise CheckSetupError("graph contains no generic pentagon configuration")
    rng = random.Random(seed)
    failures = 0
    for _ in range(cases):
        e1, e2 = pairs[rng.randrange(len(pairs))]
        state = random_decorated_state(graph, rng, mode=mode)
        current = state
        for e in (e1, e2, e1, e2, e1):
            current, _ = superflip(current, e)
        if not aligned_equal_mod_sign(state, current, {e1, e2}, tol=tol):
            failures += 1
    return CheckResult("pentagon", failures == 0, cases,
                       "mode=%s pairs=%d failures=%d" % (mode, len(pairs), failures))


def check_spincount(graph, seed=0, mode=RATIONAL, tol=None, cases=None):
    """Spin class count: orbit enumeration vs GF(2) rank vs 2^(2g+s-1)."""
    g, s, _, _ = topology(graph)
    fast = enumerate_spin_classes(graph)
    slow = brute_force_spin_classes(graph)
    formula = spin_class_count(graph)
    expected = 1 << (2 * g + s - 1)
    same_reps = [st.signs for st in fast] == [st.signs for st in slow]
    passed = (len(fast) == len(slow) == formula == expected) and same_reps
    detail = ("enumerated=%d brute_force=%d rank_formula=%d 2^(2g+s-1)=%d reps_match=%s"
              % (len(fast), len(slow), formula, expected, same_reps))
    return CheckResult("spincount", passed, len(fast), detail)


SUITES = {
    "ptolemy": check_ptolemy,
    "involution": check_involution,
    "pentagon": check_pentagon,
    "spincount": check_spincount,
}

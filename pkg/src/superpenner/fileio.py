"""Loading and saving decorated fatgraph documents.

The text format is line-based (# starts a comment):

    fatgraph v1
    vertex <name>: <h> <h> <h>     # counterclockwise cyclic order
    edge <id>: <tail_h> <head_h>   # reference direction tail->head
    orient <edge_id>: +|-          # optional, default +
    lambda <edge_id>: <value>      # optional even element, default 1
    mu <vertex_name>: <value>      # optional odd element, default t<index>

Edge ids in orient/lambda lines are the file's edge ids (normalized to a
dense 0-based range by the parser); mu lines use vertex names.  Element
values use the Grassmann text grammar, e.g. "3/4", "2.5", "t0", or
"1 + 2*t0^t1"; a plain scalar is the common case for lambda.
"""

from __future__ import annotations

from .decorated import DecoratedState
from .fatgraph import FatGraphError, edge_id_map, parse_fatgraph, render_fatgraph, scan_document
from .grassmann import RATIONAL, GrassmannAlgebra, GrassmannError
from .spin import OrientationState


def load_state(text, mode=RATIONAL):
    """Parse a full document into a DecoratedState.

    The algebra has one generator per vertex in the given scalar mode.
    Missing decoration sections fall back to their defaults.
    """
    graph = parse_fatgraph(text)
    id_map = edge_id_map(text)
    name_index = {name: i for i, name in enumerate(graph.vertex_names)}
    algebra = GrassmannAlgebra(graph.num_vertices, mode)

    signs = [1] * graph.num_edges
    lam = {e: algebra.one() for e in range(graph.num_edges)}
    mu = {v: algebra.gen(v) for v in range(graph.num_vertices)}

    for kind, key, rest, lineno in scan_document(text):
        if kind == "orient":
            e = _edge_key(key, id_map, lineno)
            if rest not in ("+", "-"):
                raise FatGraphError("line %d: orient value must be + or -, got %r"
                                    % (lineno, rest))
            signs[e] = 1 if rest == "+" else -1
        elif kind == "lambda":
            e = _edge_key(key, id_map, lineno)
            try:
                lam[e] = algebra.parse(rest)
            except GrassmannError as exc:
                raise FatGraphError("line %d: bad lambda value: %s" % (lineno, exc)) from None
        elif kind == "mu":
            if key not in name_index:
                raise FatGraphError("line %d: unknown vertex %r in mu line"
                                    % (lineno, key))
            try:
                mu[name_index[key]] = algebra.parse(rest)
            except GrassmannError as exc:
                raise FatGraphError("line %d: bad mu value: %s" % (lineno, exc)) from None
    orientation = OrientationState(graph, signs)
    return DecoratedState(graph, orientation, algebra, lam, mu)


def _edge_key(key, id_map, lineno):
    try:
        eid = int(key)
    except ValueError:
        raise FatGraphError("line %d: edge id must be an integer, got %r"
                            % (lineno, key)) from None
    if eid not in id_map:
        raise FatGraphError("line %d: unknown edge id %d" % (lineno, eid))
    return id_map[eid]


def render_state(state):
    """Serialize a decorated state as a loadable document."""
    out = [render_fatgraph(state.graph).rstrip("\n")]
    for e, sign in enumerate(state.orientation.signs):
        out.append("orient %d: %s" % (e, "+" if sign == 1 else "-"))
    for e in range(state.graph.num_edges):
        out.append("lambda %d: %s" % (e, state.lam[e]))
    for v in range(state.graph.num_vertices):
        out.append("mu %s: %s" % (state.graph.vertex_names[v], state.mu[v]))
    return "\n".join(out) + "\n"

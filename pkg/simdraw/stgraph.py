"""st-digraph machinery over the red edges: faces, merged dual, face order."""

import logging
from typing import Dict, Iterable, Iterator, List, Tuple

import networkx as nx

from models import POLE_NAMES, LabeledGraph
from simdraw.errors import ConstructionError, InputError
from simdraw.subdivision import validate_rel
from simdraw.types import Face, FacePlan, StDigraph, StepFaces

logger = logging.getLogger(__name__)

V_S, V_N, V_W, V_E = POLE_NAMES
S_STAR, T_STAR = "s*", "t*"
POLE_EDGES = [(V_S, V_W), (V_W, V_N), (V_S, V_E), (V_E, V_N)]


def assert_st_digraph(edges: Iterable[Tuple[str, str]], source: str, sink: str) -> nx.DiGraph:
    """Raise ConstructionError unless edges form an acyclic digraph with one source and one sink."""
    d = nx.DiGraph(list(edges))
    if not nx.is_directed_acyclic_graph(d):
        cycle = nx.find_cycle(d)
        raise ConstructionError(f"digraph has a cycle through {[e[0] for e in cycle]}")
    sources = sorted(v for v, deg in d.in_degree() if deg == 0)
    sinks = sorted(v for v, deg in d.out_degree() if deg == 0)
    if sources != [source] or sinks != [sink]:
        raise ConstructionError(
            f"expected single source {source} and sink {sink}, got sources {sources} sinks {sinks}"
        )
    return d


def build_red(g: LabeledGraph) -> StDigraph:
    """G^R of an augmented labeled graph, embedded via the REL's rotation system."""
    if any(g.poles.get(name) != name for name in POLE_NAMES):
        raise InputError("labeled graph has no pole frame; augment the boundary first")
    rel = validate_rel(g)
    if not rel.passed:
        raise InputError(f"invalid REL: {rel.violations[0].message}")

    edges = sorted(set(g.red))
    missing = [e for e in POLE_EDGES if e not in edges]
    if missing:
        raise InputError(f"pole edges missing from the red edges: {missing}")
    assert_st_digraph(edges, V_S, V_N)

    red_nbrs: Dict[str, set] = {v: set() for v in g.vertices}
    for a, b in edges:
        red_nbrs[a].add(b)
        red_nbrs[b].add(a)
    # networkx wants neighbours clockwise; the rotation system is counterclockwise
    data = {
        v: [n for n in reversed(g.rotation.get(v, [])) if n in red_nbrs[v]]
        for v in g.vertices
        if red_nbrs[v]
    }
    emb = nx.PlanarEmbedding()
    emb.set_data(data)
    try:
        emb.check_structure()
    except nx.NetworkXException as exc:
        raise ConstructionError(f"red subgraph embedding is not planar: {exc}") from exc

    vertices = sorted(data)
    logger.debug(f"G^R: {len(vertices)} vertices, {len(edges)} edges")
    return StDigraph(vertices=vertices, edges=edges, embedding=emb, source=V_S, sink=V_N)


def _split_face(cycle: List[str], red: set) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Left and right directed paths of a face traversed with the face on the right."""
    n = len(cycle)
    fwd = [(cycle[i], cycle[(i + 1) % n]) in red for i in range(n)]
    starts = [i for i in range(n) if fwd[i] and not fwd[i - 1]]
    if len(starts) != 1:
        raise ConstructionError(f"face {cycle} is not bounded by two directed paths")
    s = starts[0]
    cyc = cycle[s:] + cycle[:s]
    fwd = fwd[s:] + fwd[:s]
    j = fwd.index(False)
    if any(fwd[j:]):
        raise ConstructionError(f"face {cycle} is not bounded by two directed paths")
    left = tuple(cyc[: j + 1])
    right = (cyc[0], *reversed(cyc[j + 1 :]), cyc[j])
    return left, right


def build_face_plan(r: StDigraph) -> FacePlan:
    """Faces of G^R, the merged dual and a deterministic topological face order."""
    red = set(r.edges)
    face_of: Dict[Tuple[str, str], str] = {}
    cycles: Dict[str, List[str]] = {}
    marked: set = set()
    counter = 0

    for a, b in r.edges:
        for he in ((a, b), (b, a)):
            if he in face_of:
                continue
            cycle = r.embedding.traverse_face(*he, mark_half_edges=marked)
            fid = f"f{counter:04d}"
            counter += 1
            cycles[fid] = cycle
            for i in range(len(cycle)):
                face_of[(cycle[i], cycle[(i + 1) % len(cycle)])] = fid

    outer = face_of[(V_S, V_E)]
    outer_left, outer_right = _split_face(cycles[outer], red)
    if outer_left != (V_S, V_E, V_N) or outer_right != (V_S, V_W, V_N):
        raise ConstructionError(f"unexpected outer face {cycles[outer]}")

    faces: Dict[str, Face] = {}
    for fid, cycle in cycles.items():
        if fid == outer:
            continue
        left, right = _split_face(cycle, red)
        if set(left[1:-1]) & set(right[1:-1]):
            raise ConstructionError(f"face {fid} boundary paths share inner vertices")
        faces[fid] = Face(fid, left, right)

    dual = nx.DiGraph()
    dual.add_nodes_from([S_STAR, T_STAR, *faces])
    for a, b in r.edges:
        lf, rf = face_of[(b, a)], face_of[(a, b)]
        lf = S_STAR if lf == outer else lf
        rf = T_STAR if rf == outer else rf
        dual.add_edge(lf, rf)

    assert_st_digraph(dual.edges(), S_STAR, T_STAR)
    order = [
        f
        for f in nx.lexicographical_topological_sort(dual, key=str)
        if f not in (S_STAR, T_STAR)
    ]
    first = faces[order[0]]
    if first.left != (V_S, V_W, V_N):
        raise ConstructionError(f"first face {first.id} does not start at the west pole")
    logger.info(f"Face plan: {len(order)} internal faces")
    return FacePlan(faces=faces, dual=dual, order=order, outer=(outer_left, outer_right))


def face_boundaries(plan: FacePlan, f: str) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    face = plan.faces[f]
    return face.left, face.right


def subgraph_sequence(plan: FacePlan) -> Iterator[StepFaces]:
    """Walk the faces in order, keeping the right boundary of G^R_i as a stack."""
    stack: List[str] = [V_S, V_W, V_N]
    for i, fid in enumerate(plan.order, start=1):
        left, right = face_boundaries(plan, fid)
        a = len(left)
        try:
            at = stack.index(left[0])
        except ValueError:
            raise ConstructionError(f"source of face {fid} is not on the right boundary", step=i)
        if tuple(stack[at : at + a]) != left:
            raise ConstructionError(
                f"left boundary {list(left)} of face {fid} is not contiguous on {stack}", step=i
            )
        yield StepFaces(index=i, face=fid, left=left, right=right, stack=tuple(stack))
        stack[at + 1 : at + a - 1] = list(right[1:-1])
    if stack != [V_S, V_E, V_N]:
        raise ConstructionError(f"final right boundary is {stack}, expected the east pole")

"""Ribbon graphs as signed rotation systems.

Every edge has two ends, ``<edge>.a`` and ``<edge>.b``.  A vertex carries the
cyclic sequence of the ends attached to it, and each edge carries a twist
bit.  Boundary components are found by tracing the boundary of the ribbon
surface: every retained end contributes a left and a right side point, vertex
corners join the right side of one end to the left side of the next end in
the rotation, and edge ribbons join the sides of their two ends (crossing
sides when untwisted, keeping sides when twisted).
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple

__all__ = [
    "End",
    "RibbonGraph",
    "SubgraphStats",
    "EdgeKind",
    "StructuralError",
    "GraphParseError",
    "validate",
    "boundary_components",
    "stats",
    "classify_edge",
    "delete_edge",
    "contract_edge",
    "vertex_flip",
    "disjoint_union",
    "vertex_join",
    "parse_graph",
    "format_graph",
    "random_ribbon_graph",
    "natural_key",
]


class StructuralError(ValueError):
    """A ribbon graph violates one of its structural invariants."""


class GraphParseError(ValueError):
    """Malformed ``ribbon v1`` text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class End(NamedTuple):
    edge: str
    side: str  # "a" or "b"

    def __str__(self):
        return f"{self.edge}.{self.side}"

    @classmethod
    def parse(cls, text: str) -> End:
        edge, dot, side = text.rpartition(".")
        if not dot or not edge or side not in ("a", "b"):
            raise ValueError(f"bad edge end {text!r}; expected <edge>.a or <edge>.b")
        return cls(edge, side)


def natural_key(name: str):
    """Sort key treating digit runs numerically (``e2`` < ``e10``)."""
    return [(0, int(tok), "") if tok.isdigit() else (1, 0, tok)
            for tok in re.findall(r"\d+|\D+", name)]


@dataclass(frozen=True)
class RibbonGraph:
    """Signed rotation system.

    ``rotations`` is a tuple of ``(vertex, ends)`` pairs in vertex order;
    ``twists`` is a tuple of ``(edge, twisted)`` pairs in edge order.
    Instances are not validated on construction, see :func:`validate`.
    """

    rotations: tuple[tuple[str, tuple[End, ...]], ...]
    twists: tuple[tuple[str, bool], ...]

    @classmethod
    def build(cls, vertices: Mapping[str, Iterable[str | End]],
              edges: Mapping[str, int | bool]) -> RibbonGraph:
        """Convenience constructor from plain mappings.

        >>> g = RibbonGraph.build({"v": ["e.a", "e.b"]}, {"e": 0})
        >>> boundary_components(g, ["e"])
        2
        """
        rots = tuple(
            (str(v), tuple(e if isinstance(e, End) else End.parse(e) for e in ends))
            for v, ends in vertices.items())
        tw = tuple((str(e), bool(t)) for e, t in edges.items())
        return cls(rots, tw)

    @property
    def vertex_names(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.rotations)

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(e for e, _ in self.twists)

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.twists)

    def rotation(self, vertex: str) -> tuple[End, ...]:
        for v, ends in self.rotations:
            if v == vertex:
                return ends
        raise KeyError(f"unknown vertex {vertex!r}")

    def is_twisted(self, edge: str) -> bool:
        return self._twist_map[edge]

    def endpoints(self, edge: str) -> tuple[str, str]:
        """Vertices holding ``edge.a`` and ``edge.b``."""
        loc = self._end_vertex
        return loc[End(edge, "a")], loc[End(edge, "b")]

    def is_loop(self, edge: str) -> bool:
        u, v = self.endpoints(edge)
        return u == v

    @cached_property
    def _twist_map(self) -> dict[str, bool]:
        return dict(self.twists)

    @cached_property
    def _end_vertex(self) -> dict[End, str]:
        return {end: v for v, ends in self.rotations for end in ends}

    @cached_property
    def compiled(self) -> CompiledGraph:
        return CompiledGraph.from_graph(self)

    def key(self) -> tuple:
        """Hashable structural encoding, for memoization."""
        return (tuple(sorted((v, tuple(map(tuple, ends))) for v, ends in self.rotations)),
                tuple(sorted(self.twists)))

    def __str__(self):
        return format_graph(self)


class CompiledGraph(NamedTuple):
    """Integer encoding used by the hot loops.

    Edge ``i`` owns ends ``2i`` (``.a``) and ``2i + 1`` (``.b``).  Side point
    ``2h`` is the left side of end ``h`` and ``2h + 1`` its right side.
    """

    n_vertices: int
    n_edges: int
    rotations: tuple[tuple[int, ...], ...]
    end_vertex: tuple[int, ...]
    twisted: tuple[bool, ...]
    edge_partner: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: RibbonGraph) -> CompiledGraph:
        index = {e: i for i, (e, _) in enumerate(g.twists)}
        rots = []
        end_vertex = [0] * (2 * len(index))
        for vi, (_, ends) in enumerate(g.rotations):
            hs = tuple(2 * index[e.edge] + (e.side == "b") for e in ends)
            for h in hs:
                end_vertex[h] = vi
            rots.append(hs)
        twisted = tuple(t for _, t in g.twists)
        partner = []
        for node in range(4 * len(index)):
            h, s = node >> 1, node & 1
            other = h ^ 1
            partner.append(2 * other + (s if twisted[h >> 1] else 1 - s))
        return cls(len(rots), len(index), tuple(rots), tuple(end_vertex), twisted,
                   tuple(partner))


@dataclass(frozen=True)
class SubgraphStats:
    v: int
    E: int
    k: int
    r: int
    n: int
    bc: int


class EdgeKind(Enum):
    BRIDGE = "bridge"
    TRIVIAL_UNTWISTED_LOOP = "trivial_untwisted_loop"
    TRIVIAL_TWISTED_LOOP = "trivial_twisted_loop"
    NONTRIVIAL_LOOP = "nontrivial_loop"
    ORDINARY = "ordinary"


# ---------------------------------------------------------------------------
# validation


def validate(graph: RibbonGraph) -> None:
    """Raise :class:`StructuralError` on the first violated invariant."""
    seen_v = set()
    for v, _ in graph.rotations:
        if v in seen_v:
            raise StructuralError(f"duplicate vertex {v!r}")
        seen_v.add(v)
    declared = set()
    for e, _ in graph.twists:
        if e in declared:
            raise StructuralError(f"duplicate edge {e!r}")
        declared.add(e)
    placed = set()
    for v, ends in graph.rotations:
        for end in ends:
            if end.edge not in declared:
                raise StructuralError(f"dangling end {end} at vertex {v!r}: no edge {end.edge!r}")
            if end in placed:
                raise StructuralError(f"duplicate end {end} at vertex {v!r}")
            placed.add(end)
    for e in graph.edge_names:
        for side in "ab":
            if End(e, side) not in placed:
                raise StructuralError(f"end {e}.{side} of edge {e!r} is not attached to any vertex")


def _selector_mask(graph: RibbonGraph, sel: Iterable[str] | None) -> int:
    if sel is None:
        return (1 << graph.num_edges) - 1
    index = {e: i for i, e in enumerate(graph.edge_names)}
    mask = 0
    for e in sel:
        if e not in index:
            raise KeyError(f"unknown edge {e!r}")
        mask |= 1 << index[e]
    return mask


# ---------------------------------------------------------------------------
# per-subset statistics on the compiled form


def _components(cg: CompiledGraph, mask: int) -> int:
    parent = list(range(cg.n_vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    k = cg.n_vertices
    ev = cg.end_vertex
    for i in range(cg.n_edges):
        if mask >> i & 1:
            ra, rb = find(ev[2 * i]), find(ev[2 * i + 1])
            if ra != rb:
                parent[ra] = rb
                k -= 1
    return k


def _boundary(cg: CompiledGraph, mask: int) -> int:
    corner = {}
    bc = 0
    for rot in cg.rotations:
        kept = [h for h in rot if mask >> (h >> 1) & 1]
        if not kept:
            bc += 1
            continue
        prev = kept[-1]
        for h in kept:
            corner[2 * prev + 1] = 2 * h
            corner[2 * h] = 2 * prev + 1
            prev = h
    partner = cg.edge_partner
    seen = set()
    for start in corner:
        if start in seen:
            continue
        bc += 1
        cur = start
        while True:
            seen.add(cur)
            c = corner[cur]
            seen.add(c)
            cur = partner[c]
            if cur == start:
                break
    return bc


def boundary_components(graph: RibbonGraph, sel: Iterable[str] | None = None) -> int:
    """Number of boundary circles of the spanning subgraph on ``sel``.

    ``sel=None`` keeps every edge.  Isolated vertices count one each.
    """
    return _boundary(graph.compiled, _selector_mask(graph, sel))


def stats(graph: RibbonGraph, sel: Iterable[str] | None = None) -> SubgraphStats:
    mask = _selector_mask(graph, sel)
    cg = graph.compiled
    v = cg.n_vertices
    E = bin(mask).count("1")
    k = _components(cg, mask)
    r = v - k
    return SubgraphStats(v=v, E=E, k=k, r=r, n=E - r, bc=_boundary(cg, mask))


# ---------------------------------------------------------------------------
# edge classification


def _require_edge(graph: RibbonGraph, edge: str) -> None:
    if edge not in graph._twist_map:
        raise KeyError(f"unknown edge {edge!r}")


def interleaved(rotation: Sequence[End], e: str, f: str) -> bool:
    """Whether the ends of loops ``e`` and ``f`` alternate in ``rotation``."""
    pos_e = [i for i, end in enumerate(rotation) if end.edge == e]
    pos_f = [i for i, end in enumerate(rotation) if end.edge == f]
    if len(pos_e) != 2 or len(pos_f) != 2:
        return False
    lo, hi = pos_e
    inside = sum(lo < p < hi for p in pos_f)
    return inside == 1


def classify_edge(graph: RibbonGraph, edge: str) -> EdgeKind:
    _require_edge(graph, edge)
    u, v = graph.endpoints(edge)
    if u == v:
        rot = graph.rotation(u)
        others = {end.edge for end in rot if end.edge != edge}
        if any(interleaved(rot, edge, f) for f in others):
            return EdgeKind.NONTRIVIAL_LOOP
        if graph.is_twisted(edge):
            return EdgeKind.TRIVIAL_TWISTED_LOOP
        return EdgeKind.TRIVIAL_UNTWISTED_LOOP
    cg = graph.compiled
    full = (1 << cg.n_edges) - 1
    i = graph.edge_names.index(edge)
    if _components(cg, full & ~(1 << i)) > _components(cg, full):
        return EdgeKind.BRIDGE
    return EdgeKind.ORDINARY


# ---------------------------------------------------------------------------
# moves


def delete_edge(graph: RibbonGraph, edge: str) -> RibbonGraph:
    _require_edge(graph, edge)
    rots = tuple((v, tuple(end for end in ends if end.edge != edge))
                 for v, ends in graph.rotations)
    tw = tuple((e, t) for e, t in graph.twists if e != edge)
    return RibbonGraph(rots, tw)


def vertex_flip(graph: RibbonGraph, vertex: str) -> RibbonGraph:
    """Reverse the rotation at ``vertex`` and toggle its non-loop edges."""
    if vertex not in graph.vertex_names:
        raise KeyError(f"unknown vertex {vertex!r}")
    ends = graph.rotation(vertex)
    touched = {end.edge for end in ends}
    toggle = {e for e in touched if not graph.is_loop(e)}
    rots = tuple((v, tuple(reversed(r)) if v == vertex else r) for v, r in graph.rotations)
    tw = tuple((e, (not t) if e in toggle else t) for e, t in graph.twists)
    return RibbonGraph(rots, tw)


def contract_edge(graph: RibbonGraph, edge: str) -> RibbonGraph:
    """Contract ``edge``; a self-loop is simply deleted.

    A twisted non-loop edge is first untwisted by flipping the vertex that
    holds ``edge.b``.  The rotation of that vertex, read from just after the
    removed end, is spliced into the gap left at the vertex holding
    ``edge.a``; the merged vertex keeps the latter's name.
    """
    _require_edge(graph, edge)
    u, v = graph.endpoints(edge)
    if u == v:
        return delete_edge(graph, edge)
    if graph.is_twisted(edge):
        graph = vertex_flip(graph, v)
    ru, rv = graph.rotation(u), graph.rotation(v)
    iu = ru.index(End(edge, "a"))
    iv = rv.index(End(edge, "b"))
    tail_v = rv[iv + 1:] + rv[:iv]
    merged = ru[:iu] + tail_v + ru[iu + 1:]
    rots = []
    for name, ends in graph.rotations:
        if name == u:
            rots.append((name, merged))
        elif name != v:
            rots.append((name, ends))
    tw = tuple((e, t) for e, t in graph.twists if e != edge)
    return RibbonGraph(tuple(rots), tw)


def disjoint_union(g1: RibbonGraph, g2: RibbonGraph) -> RibbonGraph:
    """Side-by-side union; names must not clash."""
    return RibbonGraph(g1.rotations + g2.rotations, g1.twists + g2.twists)


def vertex_join(g1: RibbonGraph, v1: str, g2: RibbonGraph, v2: str,
                corner: int = 0) -> RibbonGraph:
    """Glue ``v2`` of ``g2`` onto ``v1`` of ``g1``.

    The whole rotation of ``v2`` is inserted as one contiguous block before
    position ``corner`` of the rotation of ``v1``.
    """
    r1 = g1.rotation(v1)
    r2 = g2.rotation(v2)
    corner %= len(r1) + 1
    merged = r1[:corner] + r2 + r1[corner:]
    rots = tuple((v, merged if v == v1 else ends) for v, ends in g1.rotations)
    rots += tuple((v, ends) for v, ends in g2.rotations if v != v2)
    return RibbonGraph(rots, g1.twists + g2.twists)


def relabel(graph: RibbonGraph, vertex_map: Mapping[str, str] | None = None,
            edge_map: Mapping[str, str] | None = None) -> RibbonGraph:
    vm = vertex_map or {}
    em = edge_map or {}
    rots = tuple((vm.get(v, v), tuple(End(em.get(e.edge, e.edge), e.side) for e in ends))
                 for v, ends in graph.rotations)
    tw = tuple((em.get(e, e), t) for e, t in graph.twists)
    return RibbonGraph(rots, tw)


# ---------------------------------------------------------------------------
# text format

_HEADER = "ribbon v1"
_NAME = re.compile(r"^[A-Za-z0-9_\-+]+$")


def parse_graph(text: str) -> RibbonGraph:
    """Parse the ``ribbon v1`` text format.

    ::

        ribbon v1
        # two interleaved petals
        vertex v: e1.a e2.a e1.b e2.b
        edge e1 0
        edge e2 0
    """
    header_seen = False
    vertices: dict[str, tuple[End, ...]] = {}
    edges: dict[str, bool] = {}
    end_line: dict[End, int] = {}
    edge_line: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line.split() != _HEADER.split():
                raise GraphParseError(lineno, f"expected header {_HEADER!r}, got {line!r}")
            header_seen = True
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "vertex":
            name, colon, ends_txt = rest.partition(":")
            name = name.strip()
            if not colon or not _NAME.match(name):
                raise GraphParseError(lineno, f"malformed vertex line {line!r}")
            if name in vertices:
                raise GraphParseError(lineno, f"duplicate vertex {name!r}")
            ends = []
            for tok in ends_txt.split():
                try:
                    end = End.parse(tok)
                except ValueError as exc:
                    raise GraphParseError(lineno, str(exc)) from None
                if end in end_line:
                    raise GraphParseError(
                        lineno, f"duplicate end {end} (first used on line {end_line[end]})")
                end_line[end] = lineno
                ends.append(end)
            vertices[name] = tuple(ends)
        elif keyword == "edge":
            parts = rest.split()
            if len(parts) != 2 or parts[1] not in ("0", "1") or not _NAME.match(parts[0]):
                raise GraphParseError(lineno, f"malformed edge line {line!r}; expected 'edge <name> 0|1'")
            if parts[0] in edges:
                raise GraphParseError(lineno, f"duplicate edge {parts[0]!r}")
            edges[parts[0]] = parts[1] == "1"
            edge_line[parts[0]] = lineno
        else:
            raise GraphParseError(lineno, f"unknown directive {keyword!r}")
    if not header_seen:
        raise GraphParseError(1, f"missing header {_HEADER!r}")
    for end, ln in end_line.items():
        if end.edge not in edges:
            raise GraphParseError(ln, f"dangling end {end}: no edge {end.edge!r} declared")
    for e, ln in edge_line.items():
        for side in "ab":
            if End(e, side) not in end_line:
                raise GraphParseError(ln, f"end {e}.{side} of edge {e!r} is not attached to any vertex")
    graph = RibbonGraph(tuple(vertices.items()), tuple(edges.items()))
    validate(graph)
    return graph


def format_graph(graph: RibbonGraph) -> str:
    lines = [_HEADER]
    for v, ends in graph.rotations:
        lines.append(f"vertex {v}: " + " ".join(map(str, ends)) if ends else f"vertex {v}:")
    for e, t in graph.twists:
        lines.append(f"edge {e} {int(t)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# random instances


def random_ribbon_graph(rng: random.Random, n_vertices: int, n_edges: int,
                        loop_bias: float = 0.3, twist_prob: float = 0.5) -> RibbonGraph:
    """Random valid ribbon graph; ends are inserted at random rotation slots."""
    rots: list[list[End]] = [[] for _ in range(n_vertices)]
    tw = []
    for i in range(n_edges):
        name = f"e{i + 1}"
        u = rng.randrange(n_vertices)
        if n_vertices == 1 or rng.random() < loop_bias:
            v = u
        else:
            v = rng.randrange(n_vertices - 1)
            v += v >= u
        for vert, side in ((u, "a"), (v, "b")):
            rots[vert].insert(rng.randrange(len(rots[vert]) + 1), End(name, side))
        tw.append((name, rng.random() < twist_prob))
    return RibbonGraph(tuple((f"v{i + 1}", tuple(r)) for i, r in enumerate(rots)), tuple(tw))

"""The Bollobás–Riordan polynomial R(X, Y, Z) of a ribbon graph.

Two independent routes are provided:

* :func:`state_sum` enumerates all ``2^E`` spanning subgraphs and adds
  ``(X-1)^(r(G)-r(A)) Y^n(A) Z^(k(A)-bc(A)+n(A))`` for each one.
* :func:`reduce` applies deletion/contraction to ordinary edges and
  factorizes the resulting terminal forms (bridges, trivial loops, trivial
  flowers), falling back to the state sum only on unrecognized rosette
  blocks.

The orientability variable of the four-variable polynomial is set to 1.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .compositions import CapExceeded
from .poly import Poly3
from .ribbon import (
    CompiledGraph,
    EdgeKind,
    End,
    RibbonGraph,
    _boundary,
    _components,
    classify_edge,
    contract_edge,
    delete_edge,
    natural_key,
)

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "state_sum",
    "reduce",
    "tutte_specialize",
    "rosette_blocks",
    "is_chain_flower",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 24


def _accumulate(cg: CompiledGraph, lo: int, hi: int) -> dict[tuple[int, int, int], int]:
    k_full = _components(cg, (1 << cg.n_edges) - 1)
    r_full = cg.n_vertices - k_full
    acc: Counter = Counter()
    v = cg.n_vertices
    for mask in range(lo, hi):
        k = _components(cg, mask)
        bc = _boundary(cg, mask)
        r = v - k
        n = bin(mask).count("1") - r
        acc[(r_full - r, n, k - bc + n)] += 1
    return dict(acc)


def state_sum(graph: RibbonGraph, *, cap: int = DEFAULT_CAP, workers: int | None = None,
              chunks: int | None = None, basis: str = "x") -> Poly3:
    """Sum over all spanning subgraphs.

    The subset range ``[0, 2^E)`` may be split into ``chunks`` disjoint
    intervals, evaluated in ``workers`` processes and added back together.
    The result does not depend on the partition.  Returned in the ``x =
    X - 1`` basis unless ``basis="X"``.
    """
    E = graph.num_edges
    if E > cap:
        raise CapExceeded(f"state sum over {E} edges exceeds cap {cap}")
    cg = graph.compiled
    total = 1 << E
    if chunks is None:
        chunks = 1 if not workers or workers <= 1 else 4 * workers
    chunks = max(1, min(chunks, total))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    ranges = list(zip(bounds[:-1], bounds[1:]))
    if workers and workers > 1 and chunks > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_accumulate, [cg] * len(ranges),
                                  [a for a, _ in ranges], [b for _, b in ranges]))
    else:
        parts = [_accumulate(cg, a, b) for a, b in ranges]
    acc: Counter = Counter()
    for part in parts:
        acc.update(part)
    return Poly3(acc, "x").to_basis(basis)


def tutte_specialize(p: Poly3) -> Poly3:
    """Set Z = 1, leaving a polynomial in X and Y (returned in the X basis)."""
    return p.to_basis("X").subs_z1()


# ---------------------------------------------------------------------------
# rosette decomposition


def _loop_components(word: list[str]) -> list[set[str]]:
    """Connected components of the interlacement graph of a rosette word."""
    pos: dict[str, list[int]] = {}
    for i, e in enumerate(word):
        pos.setdefault(e, []).append(i)
    names = list(pos)
    parent = {e: e for e in names}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, e in enumerate(names):
        lo, hi = pos[e]
        for f in names[i + 1:]:
            a, b = pos[f]
            if (lo < a < hi) != (lo < b < hi):
                parent[find(e)] = find(f)
    comps: dict[str, set[str]] = {}
    for e in names:
        comps.setdefault(find(e), set()).add(e)
    return list(comps.values())


def _contiguous_arc(word: list[str], block: set[str]) -> list[str] | None:
    """The block's letters as a linear word if they fill one cyclic arc."""
    L = len(word)
    inside = [w in block for w in word]
    if all(inside):
        return list(word)
    starts = [i for i in range(L) if inside[i] and not inside[i - 1]]
    if len(starts) != 1:
        return None
    s = starts[0]
    return [word[(s + j) % L] for j in range(len(block) * 2)]


def rosette_blocks(word: list[str]) -> list[list[str]]:
    """Split a rosette rotation word into one-vertex join factors.

    Each returned block is a linear word occupying a contiguous arc of the
    rotation once the blocks peeled before it have been removed; the
    rosette is the one-vertex join of the blocks.
    """
    word = list(word)
    comps = _loop_components(word)
    blocks = []
    while comps:
        for i, comp in enumerate(comps):
            arc = _contiguous_arc(word, comp)
            if arc is not None:
                blocks.append(arc)
                word = [w for w in word if w not in comp]
                del comps[i]
                break
        else:  # pragma: no cover - non-crossing components always leave a leaf
            raise AssertionError("no contiguous interlacement block found")
    return blocks


def _relabel_first_occurrence(word: list[str]) -> tuple[int, ...]:
    seen: dict[str, int] = {}
    return tuple(seen.setdefault(w, len(seen)) for w in word)


def chain_word(n: int) -> tuple[int, ...]:
    """e1 e2 e1 e3 e2 ... eN e(N-1) eN with petals numbered from 0."""
    if n == 0:
        return ()
    if n == 1:
        return (0, 0)
    word = [0, 1, 0]
    for i in range(2, n):
        word += [i, i - 1]
    word.append(n - 1)
    return tuple(word)


def is_chain_flower(word: list[str]) -> bool:
    """Whether a rosette word is an N-petal flower, up to rotation and reflection."""
    n = len(word) // 2
    target = chain_word(n)
    L = len(word)
    for w in (word, word[::-1]):
        for s in range(L):
            if _relabel_first_occurrence(w[s:] + w[:s]) == target:
                return True
    return False


# ---------------------------------------------------------------------------
# deletion/contraction


def _block_poly(graph: RibbonGraph, block: list[str], cap: int) -> Poly3:
    from .flowers import closed_form_twisted, closed_form_untwisted

    letters = list(dict.fromkeys(block))
    twists = {e: graph.is_twisted(e) for e in letters}
    X, Y, Z = Poly3.gens()
    if len(letters) == 1:
        return 1 + Y * Z if twists[letters[0]] else 1 + Y
    uniform = len(set(twists.values())) == 1
    if uniform and is_chain_flower(block):
        n = len(letters)
        return closed_form_twisted(n) if twists[letters[0]] else closed_form_untwisted(n)
    log.debug("state-sum fallback on rosette block of %d petals", len(letters))
    ends, placed = [], set()
    for e in block:
        side = "b" if e in placed else "a"
        placed.add(e)
        ends.append(End(e, side))
    sub = RibbonGraph((("v", tuple(ends)),), tuple((e, twists[e]) for e in letters))
    return state_sum(sub, cap=cap, basis="X")


def _terminal(graph: RibbonGraph, cap: int) -> Poly3:
    X, Y, Z = Poly3.gens()
    result = Poly3.const(1)
    # every remaining non-loop edge is a bridge: R(G) = X R(G/e)
    while True:
        bridge = next((e for e in graph.edge_names if not graph.is_loop(e)), None)
        if bridge is None:
            break
        result = result * X
        graph = contract_edge(graph, bridge)
    for _, ends in graph.rotations:
        word = [end.edge for end in ends]
        for block in rosette_blocks(word):
            result = result * _block_poly(graph, block, cap)
    return result


def _first_ordinary(graph: RibbonGraph) -> str | None:
    for e in sorted(graph.edge_names, key=natural_key):
        if not graph.is_loop(e) and classify_edge(graph, e) is EdgeKind.ORDINARY:
            return e
    return None


def reduce(graph: RibbonGraph, *, cap: int = DEFAULT_CAP) -> Poly3:
    """BR polynomial by deletion/contraction down to terminal forms.

    Ordinary edges are processed lowest name first.  Results are memoized
    per call on the structural key of each intermediate graph.  Returned in
    the X basis.
    """
    memo: dict[tuple, Poly3] = {}

    def go(g: RibbonGraph) -> Poly3:
        key = g.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        e = _first_ordinary(g)
        if e is None:
            res = _terminal(g, cap)
        else:
            res = go(delete_edge(g, e)) + go(contract_edge(g, e))
        memo[key] = res
        return res

    return go(graph)

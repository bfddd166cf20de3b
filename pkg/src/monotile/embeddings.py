"""Backtracking search for monochromatic embedded copies of a pattern graph.

The matcher embeds a pattern into a host by ordered backtracking over an
adjacency relation given as per-vertex bitmasks.  Passing one colour class's
adjacency yields monochromatic copies of that colour.  The pattern vertex
order is fixed (connected expansion, highest degree first) and host
candidates are tried in ascending vertex order, so results are deterministic.

Copies are counted as subgraphs: distinct vertex images up to pattern
automorphism, i.e. the labelled embedding count divided by ``|Aut(H)|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .budget import require_budget
from .graphs import Colour, ColouredGraph, Graph, iter_bits, mask_of
from .patterns import PatternStats


@dataclass(frozen=True)
class EmbeddedCopy:
    """An embedded copy of the pattern: pattern vertex ``i`` sits at ``vertex_map[i]``.

    ``colour`` is the single colour of all mapped edges, or ``None`` for a
    copy that is not monochromatic.
    """

    vertex_map: tuple[int, ...]
    colour: Colour | None

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    @property
    def vertex_mask(self) -> int:
        return mask_of(self.vertex_map)

    def host_edges(self, pattern: Graph) -> list[tuple[int, int]]:
        vm = self.vertex_map
        out = []
        for u, v in pattern.edges:
            a, b = vm[u], vm[v]
            out.append((a, b) if a < b else (b, a))
        return out


def _expansion_order(pattern: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Pattern vertex order plus, per position, the earlier positions it must attach to."""
    adj = pattern.adjacency
    remaining = set(range(pattern.n))
    order: list[int] = []
    placed_mask = 0
    while remaining:
        # Prefer vertices with most already-placed neighbours, then high degree.
        nxt = max(
            remaining,
            key=lambda v: ((adj[v] & placed_mask).bit_count(), adj[v].bit_count(), -v),
        )
        remaining.remove(nxt)
        order.append(nxt)
        placed_mask |= 1 << nxt
    pos_of = {v: i for i, v in enumerate(order)}
    parents = tuple(
        tuple(pos_of[u] for u in iter_bits(adj[v]) if pos_of[u] < i)
        for i, v in enumerate(order)
    )
    return tuple(order), parents


@lru_cache(maxsize=256)
def _cached_order(pattern: Graph):
    return _expansion_order(pattern)


def iter_embeddings(
    adjacency: Sequence[int],
    pattern: Graph,
    universe_mask: int,
    side_mask: int = 0,
    min_side: int = 0,
) -> Iterator[tuple[int, ...]]:
    """Yield injective maps sending every pattern edge into ``adjacency``.

    ``side_mask``/``min_side`` restrict output to embeddings whose image meets
    the side set in at least ``min_side`` vertices (pruned during search).
    """
    k = pattern.n
    order, parents = _cached_order(pattern)
    assign = [0] * k

    def rec(pos: int, used: int, side_count: int) -> Iterator[tuple[int, ...]]:
        if pos == k:
            vm = [0] * k
            for i, pv in enumerate(order):
                vm[pv] = assign[i]
            yield tuple(vm)
            return
        cand = universe_mask & ~used
        for j in parents[pos]:
            cand &= adjacency[assign[j]]
        slack = k - pos - 1
        for v in iter_bits(cand):
            new_side = side_count + ((side_mask >> v) & 1)
            if new_side + slack < min_side:
                continue
            assign[pos] = v
            yield from rec(pos + 1, used | (1 << v), new_side)

    yield from rec(0, 0, 0)


@lru_cache(maxsize=256)
def automorphism_count(pattern: Graph) -> int:
    """|Aut(pattern)|, counted as embeddings of the pattern into itself."""
    full = (1 << pattern.n) - 1
    return sum(1 for _ in iter_embeddings(pattern.adjacency, pattern, full))


def _resolve_universe(n: int, allowed_vertices: Iterable[int] | None) -> int:
    full = (1 << n) - 1
    if allowed_vertices is None:
        return full
    return mask_of(allowed_vertices) & full


def find_mono_copy(
    G: ColouredGraph,
    H: PatternStats,
    allowed_vertices: Iterable[int] | None = None,
    colour_filter: Colour | None = None,
) -> EmbeddedCopy | None:
    """First monochromatic copy of ``H`` inside ``G[allowed_vertices]``, or ``None``.

    With no colour filter, red is searched before blue.
    """
    if H.ell == 0:
        raise ValueError("monochromatic copy search needs a pattern with at least one edge")
    universe = _resolve_universe(G.n, allowed_vertices)
    colours = (colour_filter,) if colour_filter else (Colour.RED, Colour.BLUE)
    for colour in colours:
        adj = G.adjacency_for(colour)
        if H.is_triangle():
            tri = find_triangle(adj, universe)
            if tri is not None:
                return EmbeddedCopy(tri, colour)
            continue
        for vm in iter_embeddings(adj, H.pattern, universe):
            return EmbeddedCopy(vm, colour)
    return None


def count_mono_embeddings(
    G: ColouredGraph,
    H: PatternStats,
    colour: Colour,
    allowed_vertices: Iterable[int] | None = None,
    budget: float | None = None,
) -> int:
    universe = _resolve_universe(G.n, allowed_vertices)
    require_budget(float(universe.bit_count()) ** H.k, budget, "embedding enumeration")
    adj = G.adjacency_for(colour)
    return sum(1 for _ in iter_embeddings(adj, H.pattern, universe))


def count_mono_copies(
    G: ColouredGraph,
    H: PatternStats,
    colour: Colour,
    allowed_vertices: Iterable[int] | None = None,
    budget: float | None = None,
) -> int:
    """Number of monochromatic copies of ``H`` in colour ``colour``, as subgraphs."""
    if H.ell == 0:
        raise ValueError("monochromatic copy counting needs a pattern with at least one edge")
    labelled = count_mono_embeddings(G, H, colour, allowed_vertices, budget)
    aut = automorphism_count(H.pattern)
    if labelled % aut:
        raise AssertionError("labelled embedding count not divisible by |Aut(H)|")
    return labelled // aut


def iter_copy_vertex_masks(
    adjacency: Sequence[int], pattern: Graph, universe_mask: int
) -> Iterator[int]:
    """Vertex masks of copies, deduplicated (several copies may share a mask)."""
    seen: set[int] = set()
    for vm in iter_embeddings(adjacency, pattern, universe_mask):
        m = mask_of(vm)
        if m not in seen:
            seen.add(m)
            yield m


# ---------------------------------------------------------------------------
# Triangle fast path.  Cluster extraction and richness sweeps probe triangles
# millions of times, so K3 avoids the generic machinery.  Equivalence with
# the generic matcher is property-tested.
# ---------------------------------------------------------------------------

def iter_triangles(
    adjacency: Sequence[int],
    universe_mask: int,
    side_mask: int = 0,
    min_side: int = 0,
) -> Iterator[tuple[int, int, int]]:
    """All triangles in ``adjacency`` within the universe, ascending, each once."""
    for a in iter_bits(universe_mask):
        na = adjacency[a] & universe_mask
        # Only scan pairs above a, so each triangle is seen once, ordered.
        higher = na & ~((1 << (a + 1)) - 1)
        for b in iter_bits(higher):
            common = higher & adjacency[b]
            for c in iter_bits(common & ~((1 << (b + 1)) - 1)):
                if min_side:
                    hits = ((side_mask >> a) & 1) + ((side_mask >> b) & 1) + ((side_mask >> c) & 1)
                    if hits < min_side:
                        continue
                yield (a, b, c)


def find_triangle(
    adjacency: Sequence[int],
    universe_mask: int,
    side_mask: int = 0,
    min_side: int = 0,
) -> tuple[int, int, int] | None:
    return next(iter_triangles(adjacency, universe_mask, side_mask, min_side), None)

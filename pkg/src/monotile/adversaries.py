"""Colouring adversaries: seeded stand-ins for a universally quantified opponent.

Every strategy produces a total red/blue colouring of any input graph and is
a pure function of (graph, spec), so sweeps replay bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .embeddings import iter_embeddings
from .graphs import Colour, ColouredGraph, Edge, Graph, normalize_edge, pattern_by_name
from .sampling import derive_seed, philox_generator

ADVERSARY_NAMES = (
    "uniform-random",
    "planted-partition",
    "copy-avoider-greedy",
    "majority-degree",
)


@dataclass(frozen=True)
class AdversarySpec:
    name: str
    params: Mapping[str, object] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.name not in ADVERSARY_NAMES:
            raise ValueError(f"unknown adversary {self.name!r}; known: {ADVERSARY_NAMES}")


def _edge_order(G: Graph, seed: int) -> list[Edge]:
    edges = sorted(G.edges)
    rng = philox_generator(derive_seed("adversary-order", seed))
    return [edges[i] for i in rng.permutation(len(edges))]


def _uniform_random(G: Graph, spec: AdversarySpec) -> dict[Edge, Colour]:
    edges = sorted(G.edges)
    draws = philox_generator(derive_seed("adversary-uniform", spec.seed)).random(
        max(len(edges), 1)
    )
    return {e: (Colour.RED if d < 0.5 else Colour.BLUE) for e, d in zip(edges, draws)}


def _planted_partition(G: Graph, spec: AdversarySpec) -> dict[Edge, Colour]:
    part = spec.params.get("part")
    if part is None:
        size = int(spec.params.get("part_size", max(1, G.n // 5)))
        part = range(size)
    inside = frozenset(part)
    return {
        e: (Colour.RED if e[0] in inside and e[1] in inside else Colour.BLUE)
        for e in G.edges
    }


def _resolve_pattern(spec: AdversarySpec) -> Graph:
    pattern = spec.params.get("pattern", "k3")
    if isinstance(pattern, Graph):
        return pattern
    return pattern_by_name(str(pattern))


def _copies_by_edge(G: Graph, pattern: Graph) -> dict[Edge, list[tuple[Edge, ...]]]:
    """For each host edge, the edge sets of all pattern copies through it."""
    universe = (1 << G.n) - 1
    by_edge: dict[Edge, list[tuple[Edge, ...]]] = {e: [] for e in G.edges}
    seen: set[frozenset[Edge]] = set()
    for vm in iter_embeddings(G.adjacency, pattern, universe):
        edge_set = frozenset(
            normalize_edge(vm[u], vm[v]) for u, v in pattern.edges
        )
        if edge_set in seen:
            continue
        seen.add(edge_set)
        fixed = tuple(sorted(edge_set))
        for e in fixed:
            by_edge[e].append(fixed)
    return by_edge


def _copy_avoider(G: Graph, spec: AdversarySpec) -> dict[Edge, Colour]:
    """Greedy: give each edge the colour that completes fewer monochromatic copies."""
    pattern = _resolve_pattern(spec)
    by_edge = _copies_by_edge(G, pattern)
    coin = philox_generator(derive_seed("adversary-avoider", spec.seed))
    assigned: dict[Edge, Colour] = {}
    for e in _edge_order(G, spec.seed):
        closed = {Colour.RED: 0, Colour.BLUE: 0}
        for copy_edges in by_edge[e]:
            colours = {assigned.get(other) for other in copy_edges if other != e}
            if len(colours) == 1:
                (only,) = colours
                if only is not None:
                    closed[only] += 1
        if closed[Colour.RED] < closed[Colour.BLUE]:
            pick = Colour.RED
        elif closed[Colour.BLUE] < closed[Colour.RED]:
            pick = Colour.BLUE
        else:
            pick = Colour.RED if coin.random() < 0.5 else Colour.BLUE
        assigned[e] = pick
    return assigned


def _majority_degree(G: Graph, spec: AdversarySpec) -> dict[Edge, Colour]:
    """Rich-get-richer: follow the majority colour already at the endpoints."""
    coin = philox_generator(derive_seed("adversary-majority", spec.seed))
    red_deg = [0] * G.n
    blue_deg = [0] * G.n
    assigned: dict[Edge, Colour] = {}
    for u, v in _edge_order(G, spec.seed):
        reds = red_deg[u] + red_deg[v]
        blues = blue_deg[u] + blue_deg[v]
        if reds > blues:
            pick = Colour.RED
        elif blues > reds:
            pick = Colour.BLUE
        else:
            pick = Colour.RED if coin.random() < 0.5 else Colour.BLUE
        assigned[(u, v)] = pick
        if pick is Colour.RED:
            red_deg[u] += 1
            red_deg[v] += 1
        else:
            blue_deg[u] += 1
            blue_deg[v] += 1
    return assigned


_STRATEGIES = {
    "uniform-random": _uniform_random,
    "planted-partition": _planted_partition,
    "copy-avoider-greedy": _copy_avoider,
    "majority-degree": _majority_degree,
}


def colour_with(G: Graph, spec: AdversarySpec) -> ColouredGraph:
    """Apply the adversary; the result is total and deterministic per seed."""
    return ColouredGraph(G, _STRATEGIES[spec.name](G, spec))

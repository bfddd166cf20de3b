"""Disk-cached oracle results: the regression corpus.

Each fixture is one JSON file embedding its own inputs (host text, pattern
text, parameters) plus the cached value, keyed by content hashes.
``verify_fixtures`` recomputes every value within per-operation budgets and
reports any drift as a hard failure naming the offending keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import oracles
from .graphs import ColouredGraph, Graph, parse_graph_text, write_graph_text
from .patterns import PatternStats, independence_number, m2_density

FIXTURE_SUFFIX = ".fixture.json"


def _stats(payload: dict) -> PatternStats:
    return PatternStats.from_graph(parse_graph_text(payload["pattern"]))


def _host(payload: dict) -> Graph | ColouredGraph:
    return parse_graph_text(payload["host"])


def _compute_rt_exact(payload: dict, budget: float | None):
    host = _host(payload)
    assert isinstance(host, Graph)
    return oracles.exact_rt(_stats(payload), host, budget).value


def _compute_good_copy_count(payload: dict, budget: float | None):
    host = _host(payload)
    assert isinstance(host, ColouredGraph)
    A = payload["params"]["A"]
    B = [v for v in range(host.n) if v not in set(A)]
    return oracles.good_copy_count(host, _stats(payload), A, B, budget)


def _compute_richness(payload: dict, budget: float | None):
    host = _host(payload)
    assert isinstance(host, Graph)
    verdict = oracles.richness_decide(host, _stats(payload), int(payload["params"]["s"]), budget)
    return verdict.rich


def _compute_clique_supersat(payload: dict, budget: float | None):
    host = _host(payload)
    assert isinstance(host, Graph)
    params = payload["params"]
    report = oracles.clique_supersat_count(host, int(params["R"]), params.get("t"), budget)
    return {
        "count": report.count,
        "hypothesis_met": report.hypothesis_met,
        "meets_bound": report.meets_bound,
    }


def _compute_m2(payload: dict, budget: float | None):
    return str(m2_density(parse_graph_text(payload["pattern"])))


def _compute_alpha(payload: dict, budget: float | None):
    return independence_number(parse_graph_text(payload["pattern"]))


OPERATIONS: dict[str, Callable[[dict, float | None], object]] = {
    "rt_exact": _compute_rt_exact,
    "good_copy_count": _compute_good_copy_count,
    "richness_rich": _compute_richness,
    "clique_supersat": _compute_clique_supersat,
    "m2_density": _compute_m2,
    "independence_number": _compute_alpha,
}


def fixture_key(operation: str, host_hash: str, pattern_hash: str, params: dict) -> str:
    params_part = json.dumps(params, sort_keys=True).encode()
    import hashlib

    params_hash = hashlib.sha256(params_part).hexdigest()[:8]
    return f"{operation}__{host_hash}__{pattern_hash}__{params_hash}"


def save_fixture(
    directory: Path | str,
    operation: str,
    host: Graph | ColouredGraph,
    pattern: Graph,
    params: dict,
    budget: float | None = None,
) -> Path:
    """Compute the oracle value now and persist it with its inputs."""
    if operation not in OPERATIONS:
        raise ValueError(f"unknown fixture operation {operation!r}")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    payload = {
        "operation": operation,
        "host": write_graph_text(host),
        "pattern": write_graph_text(pattern),
        "params": params,
    }
    payload["value"] = OPERATIONS[operation](payload, budget)
    key = fixture_key(operation, host.content_hash(), pattern.content_hash(), params)
    payload["key"] = key
    path = directory / (key + FIXTURE_SUFFIX)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


@dataclass(frozen=True)
class VerifyReport:
    checked: int
    mismatches: tuple[str, ...]
    warnings: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_fixtures(directory: Path | str, budget: float | None = None) -> VerifyReport:
    """Recompute every cached value and diff; empty dirs pass with a warning."""
    directory = Path(directory)
    files = sorted(directory.glob("*" + FIXTURE_SUFFIX)) if directory.exists() else []
    if not files:
        return VerifyReport(0, (), ("no fixtures found: zero values checked",))
    mismatches = []
    checked = 0
    for path in files:
        payload = json.loads(path.read_text(encoding="utf-8"))
        op = payload.get("operation")
        key = payload.get("key", path.name)
        if op not in OPERATIONS:
            mismatches.append(f"{key}: unknown operation {op!r}")
            continue
        fresh = OPERATIONS[op](payload, budget)
        checked += 1
        if fresh != payload.get("value"):
            mismatches.append(
                f"{key}: cached {payload.get('value')!r} but recomputed {fresh!r}"
            )
    return VerifyReport(checked, tuple(mismatches), ())

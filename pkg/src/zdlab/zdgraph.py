"""Directed zero-divisor graph: vertices are proper zero-divisors, ``s -> t`` iff ``s != t`` and ``st = 0``."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

import numpy as np

from .errors import InputError
from .properties import PropertyReport, Verdict, _fails, _holds, is_eversible, zero_divisor_sets
from .structures import FiniteStructure

NOTIONS = ("weak", "semi", "strong")


@dataclass(frozen=True)
class ZdGraph:
    """``vertices`` are element indices (sorted); ``adjacency[i, j]`` is the edge ``vertices[i] -> vertices[j]``."""

    vertices: tuple[int, ...]
    adjacency: np.ndarray

    @property
    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[j]) for i, j in np.argwhere(self.adjacency).tolist()]

    def __eq__(self, other):
        return (isinstance(other, ZdGraph) and self.vertices == other.vertices
                and np.array_equal(self.adjacency, other.adjacency))

    def __hash__(self):
        return hash((self.vertices, self.adjacency.tobytes()))


def build_graph(S: FiniteStructure) -> ZdGraph:
    vertices = tuple(sorted(zero_divisor_sets(S).proper))
    idx = np.array(vertices, dtype=np.int64)
    adj = S.mul[np.ix_(idx, idx)] == 0
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return ZdGraph(vertices, adj)


def from_edges(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> ZdGraph:
    """Graph on arbitrary vertex labels; used for hand-made examples."""
    vertices = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(vertices)}
    adj = np.zeros((len(vertices), len(vertices)), dtype=bool)
    for s, t in edges:
        if s != t:
            adj[pos[s], pos[t]] = True
    adj.setflags(write=False)
    return ZdGraph(vertices, adj)


def _distances(adj: np.ndarray) -> np.ndarray:
    """All-pairs shortest directed path lengths (inf if unreachable) by breadth-first layering."""
    n = adj.shape[0]
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    step = adj.astype(np.int64)
    k = 0
    while frontier.any():
        k += 1
        frontier = ((frontier.astype(np.int64) @ step) > 0) & ~reached
        dist[frontier] = k
        reached |= frontier
    return dist


def _pair_distances(G: ZdGraph, notion: str) -> np.ndarray:
    if notion not in NOTIONS:
        raise InputError(f"unknown connectivity notion {notion!r}; use one of {NOTIONS}")
    adj = G.adjacency
    if notion == "weak":
        return _distances(adj | adj.T)
    d = _distances(adj)
    return np.minimum(d, d.T) if notion == "semi" else d


def diameter(G: ZdGraph, notion: str = "strong") -> float:
    """Largest shortest-path length over vertex pairs under ``notion``; ``inf`` if disconnected."""
    d = _pair_distances(G, notion)
    if len(G.vertices) <= 1:
        return 0
    m = d.max()
    return math.inf if math.isinf(m) else int(m)


def connectivity(G: ZdGraph, notion: str = "strong") -> bool:
    """weak: underlying undirected graph; semi: a path one way for each pair; strong: both ways."""
    return not math.isinf(diameter(G, notion))


def to_dot(G: ZdGraph) -> str:
    lines = ["digraph zd {"]
    touched = {v for e in G.edges for v in e}
    lines += [f'  "{v}";' for v in G.vertices if v not in touched]
    lines += [f'  "{s}" -> "{t}";' for s, t in sorted(G.edges)]
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------- calibration


def calibrate_connectivity_notion(corpus: Iterable[FiniteStructure]) -> dict:
    """Compare each notion's connectivity with eversibility over ``corpus``.

    Returns ``{"notions": [...100% agreeing...], "structures": n, "table": {notion: {...}}}``
    where each table row counts (connected, eversible) combinations, the
    structures with at least two vertices, and the largest finite diameter.
    """
    table = {nt: {"agree": 0, "connected_not_eversible": 0, "eversible_not_connected": 0,
                  "max_diameter_when_connected": 0, "first_disagreement": None} for nt in NOTIONS}
    count = nontrivial = 0
    for S in corpus:
        count += 1
        G = build_graph(S)
        nontrivial += len(G.vertices) >= 2
        ev = is_eversible(S).holds
        for nt in NOTIONS:
            row = table[nt]
            dia = diameter(G, nt)
            conn = not math.isinf(dia)
            if conn == ev:
                row["agree"] += 1
            else:
                row["connected_not_eversible" if conn else "eversible_not_connected"] += 1
                if row["first_disagreement"] is None:
                    row["first_disagreement"] = {"kind": S.kind, "mul": S.mul.tolist()}
            if conn:
                row["max_diameter_when_connected"] = max(row["max_diameter_when_connected"], dia)
    agreeing = [nt for nt in NOTIONS if count and table[nt]["agree"] == count]
    return {"notions": agreeing, "structures": count, "with_two_or_more_vertices": nontrivial, "table": table}


@lru_cache(maxsize=1)
def calibrated_notion() -> str:
    """Notion recorded in the shipped calibration file (first fully agreeing one, else ``strong``)."""
    text = resources.files("zdlab.data").joinpath("calibration.json").read_text(encoding="utf-8")
    data = json.loads(text)
    return data["default_notion"]


def resolve_notion(notion: str) -> str:
    return calibrated_notion() if notion == "calibrated" else notion


def connected_report(S: FiniteStructure, notion: str = "calibrated") -> PropertyReport:
    """Connectivity of the zero-divisor graph; witness is a vertex pair with no connecting path."""
    notion = resolve_notion(notion)
    G = build_graph(S)
    d = _pair_distances(G, notion)
    bad = np.argwhere(np.isinf(d))
    if len(bad):
        i, j = bad[0].tolist()
        return _fails("connected", (G.vertices[i], G.vertices[j]), detail=notion)
    return _holds("connected", detail=notion)


def diameter_report(S: FiniteStructure, limit: int = 3, notion: str = "calibrated") -> PropertyReport:
    """Diameter at most ``limit`` when the graph is connected (vacuous otherwise)."""
    notion = resolve_notion(notion)
    G = build_graph(S)
    name = f"diameter_le_{limit}"
    d = _pair_distances(G, notion)
    if np.isinf(d).any():
        return _holds(name, detail="vacuous: not connected")
    bad = np.argwhere(d > limit)
    if len(bad):
        i, j = bad[0].tolist()
        return _fails(name, (G.vertices[i], G.vertices[j]), detail=notion)
    return PropertyReport(name, Verdict.HOLDS, None, None, detail=notion)

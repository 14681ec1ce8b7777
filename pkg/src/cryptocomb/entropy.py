"""Connectedness-based information measures on simple graphs.

Each vertex gets a connectedness score psi(i) = sum over other vertices
of (1/2)^d(i, k), with unreachable vertices contributing nothing. The
scores, normalized into a probability distribution, yield a Shannon
entropy in bits; their total G_psi relative to the complete graph's
C(n, 2) gives the information-flow ratio, which is 1 exactly for
complete graphs and 0 for edgeless ones.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ZeroPsi


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("graphs here need at least 2 vertices")
        canon = set()
        for e in self.edges:
            a, b = e
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {e} outside 0..{self.n - 1}")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            canon.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def edgeless(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset())

    @classmethod
    def from_json_obj(cls, obj) -> SimpleGraph:
        try:
            n = int(obj["n"])
            edges = frozenset((int(a), int(b)) for a, b in obj["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        return cls(n, edges)

    @classmethod
    def from_json(cls, text: str) -> SimpleGraph:
        return cls.from_json_obj(json.loads(text))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def distances_from(graph: SimpleGraph, start: int) -> list[int | None]:
    """BFS distances; None marks unreachable vertices."""
    adj = graph.neighbors()
    dist: list[int | None] = [None] * graph.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def psi_values(graph: SimpleGraph) -> tuple[Fraction, ...]:
    """psi(i) = sum_{k != i} (1/2)^d(i,k), exact."""
    out = []
    for i in range(graph.n):
        dist = distances_from(graph, i)
        out.append(
            sum(
                (Fraction(1, 2 ** d) for j, d in enumerate(dist) if j != i and d is not None),
                Fraction(0),
            )
        )
    return tuple(out)


def g_psi(graph: SimpleGraph) -> Fraction:
    return sum(psi_values(graph), Fraction(0))


def info_flow(graph: SimpleGraph) -> Fraction:
    """G_psi / C(n, 2): 1 on complete graphs, 0 on edgeless ones."""
    return g_psi(graph) / math.comb(graph.n, 2)


@dataclass(frozen=True)
class EntropyReport:
    psi: tuple[Fraction, ...]
    g_psi: Fraction
    probabilities: tuple[Fraction, ...]
    entropy_bits: float
    info_flow: Fraction


def entropy_report(graph: SimpleGraph) -> EntropyReport:
    """Full report; raises ZeroPsi on graphs with no edges at all.

    info_flow is still well-defined (and zero) in that case; use
    info_flow directly when the graph may be edgeless.
    """
    psi = psi_values(graph)
    total = sum(psi, Fraction(0))
    if total == 0:
        raise ZeroPsi("all connectedness scores are zero; entropy undefined")
    probs = tuple(p / total for p in psi)
    bits = -sum(float(p) * math.log2(float(p)) for p in probs if p)
    return EntropyReport(
        psi=psi,
        g_psi=total,
        probabilities=probs,
        entropy_bits=bits,
        info_flow=total / math.comb(graph.n, 2),
    )

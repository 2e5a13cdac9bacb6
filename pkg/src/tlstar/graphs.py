"""Edge two-colored star graphs and their combinatorics.

A star has a distinguished center 0 joined to leaves 1..n by solid edges
(implicit, never stored) plus a set of dashed leaf-leaf pairs encoding
commutation relations.  This module provides parsing, dashed-component
structure, pruning of leaves untouched by dashed edges, isomorphism via a
canonical form, subgraph embeddings, and exhaustive enumeration of
configurations up to isomorphism.
"""

from __future__ import annotations

import functools
import itertools
import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Optional

__all__ = [
    "TwoColoredStar",
    "Embedding",
    "CanonicalForm",
    "parse_graph",
    "dashed_components",
    "prune_isolated_leaves",
    "canonical_form",
    "is_isomorphic",
    "contains_subgraph",
    "enumerate_graphs",
    "delete_dashed_edge",
    "relabel",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class TwoColoredStar:
    """Star with center 0, leaves 1..n and a set of dashed leaf pairs."""

    n: int
    dashed: frozenset[Pair] = field(default_factory=frozenset)

    def __init__(self, n: int, dashed: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError(f"leaf count must be nonnegative, got {n}")
        pairs = set()
        for pair in dashed:
            i, j = pair
            if i == j:
                raise ValueError(f"dashed pair ({i},{j}) joins a leaf to itself")
            if i > j:
                i, j = j, i
            if i < 1 or j > n:
                raise ValueError(f"dashed pair ({i},{j}) outside leaves 1..{n}")
            pairs.add((i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dashed", frozenset(pairs))

    def sorted_dashed(self) -> list[Pair]:
        return sorted(self.dashed)

    def dashed_degree(self, leaf: int) -> int:
        return sum(1 for (i, j) in self.dashed if leaf in (i, j))

    def covered_leaves(self) -> list[int]:
        """Leaves incident to at least one dashed edge, ascending."""
        seen = set()
        for i, j in self.dashed:
            seen.add(i)
            seen.add(j)
        return sorted(seen)

    def is_dashed(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.dashed

    def to_json_dict(self) -> dict:
        return {"n": self.n, "dashed": [[i, j] for i, j in self.sorted_dashed()]}

    def __str__(self) -> str:
        pairs = ", ".join(f"{i}-{j}" for i, j in self.sorted_dashed())
        return f"K({self.n}; {pairs})" if pairs else f"K({self.n};)"


@dataclass(frozen=True)
class Embedding:
    """Injective leaf map carrying dashed pattern pairs to dashed host pairs."""

    mapping: tuple[Pair, ...]  # sorted (pattern leaf, host leaf) pairs

    def __init__(self, mapping):
        items = tuple(sorted(dict(mapping).items()))
        object.__setattr__(self, "mapping", items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def apply(self, leaf: int) -> int:
        return dict(self.mapping)[leaf]

    def is_valid(self, host: TwoColoredStar, pattern: TwoColoredStar) -> bool:
        m = self.as_dict()
        if sorted(m) != list(range(1, pattern.n + 1)):
            return False
        values = list(m.values())
        if len(set(values)) != len(values):
            return False
        if any(v < 1 or v > host.n for v in values):
            return False
        return all(host.is_dashed(m[i], m[j]) for i, j in pattern.dashed)

    def to_json_dict(self) -> list[list[int]]:
        return [[a, b] for a, b in self.mapping]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order key identifying the isomorphism class of the dashed graph."""

    key: tuple


_GRAPH_RE = re.compile(r"^\s*K\(\s*(\d+)\s*;\s*(.*?)\s*\)\s*$")
_PAIR_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def parse_graph(text: str) -> TwoColoredStar:
    """Parse ``K(<n>; <i>-<j>, ...)`` or ``K(<n>;)``.

    Duplicate pairs (after orienting i<j) are deduplicated with a warning;
    malformed text, self-pairs and out-of-range indices raise ValueError.
    """
    m = _GRAPH_RE.match(text)
    if not m:
        raise ValueError(f"malformed graph {text!r}: expected K(<n>; <i>-<j>, ...)")
    n = int(m.group(1))
    body = m.group(2)
    pairs: list[Pair] = []
    if body:
        for chunk in body.split(","):
            pm = _PAIR_RE.match(chunk)
            if not pm:
                raise ValueError(f"malformed dashed pair {chunk.strip()!r} in {text!r}")
            i, j = int(pm.group(1)), int(pm.group(2))
            if i == j:
                raise ValueError(f"dashed pair {i}-{j} joins a leaf to itself")
            if min(i, j) < 1 or max(i, j) > n:
                raise ValueError(f"dashed pair {i}-{j} outside leaves 1..{n}")
            pair = (min(i, j), max(i, j))
            if pair in pairs:
                warnings.warn(f"duplicate dashed pair {pair[0]}-{pair[1]} in {text!r}")
            else:
                pairs.append(pair)
    return TwoColoredStar(n, pairs)


def dashed_components(g: TwoColoredStar) -> tuple[list[frozenset[int]], int]:
    """Connected components of the dashed graph on covered leaves, and their count.

    Leaves with no dashed edge do not form components, matching the
    convention that nu = 0 exactly when the dashed set is empty.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in g.dashed:
        parent.setdefault(i, i)
        parent.setdefault(j, j)
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, set[int]] = {}
    for leaf in parent:
        groups.setdefault(find(leaf), set()).add(leaf)
    partition = sorted((frozenset(s) for s in groups.values()), key=min)
    return partition, len(partition)


def prune_isolated_leaves(g: TwoColoredStar) -> tuple[TwoColoredStar, tuple[int, ...]]:
    """Drop leaves with no dashed edge, relabelling the rest 1..n' in order."""
    kept = g.covered_leaves()
    removed = tuple(leaf for leaf in range(1, g.n + 1) if leaf not in set(kept))
    newlabel = {old: k + 1 for k, old in enumerate(kept)}
    dashed = [(newlabel[i], newlabel[j]) for i, j in g.dashed]
    return TwoColoredStar(len(kept), dashed), removed


def relabel(g: TwoColoredStar, perm: dict[int, int]) -> TwoColoredStar:
    """Apply a permutation of the leaves to the dashed set."""
    return TwoColoredStar(g.n, [(perm[i], perm[j]) for i, j in g.dashed])


@functools.lru_cache(maxsize=None)
def _canonical_key(n: int, dashed: frozenset[Pair]) -> tuple:
    if n <= 1 or not dashed:
        return (n, tuple(sorted(dashed)))
    best = None
    leaves = range(1, n + 1)
    for perm in itertools.permutations(leaves):
        mapping = {old: new for old, new in zip(leaves, perm)}
        edges = tuple(sorted(
            (mapping[i], mapping[j]) if mapping[i] < mapping[j] else (mapping[j], mapping[i])
            for i, j in dashed
        ))
        if best is None or edges < best:
            best = edges
    return (n, best)


def canonical_form(g: TwoColoredStar) -> CanonicalForm:
    return CanonicalForm(_canonical_key(g.n, g.dashed))


def canonical_representative(g: TwoColoredStar) -> TwoColoredStar:
    """The lexicographically smallest relabelling of g (a class representative)."""
    n, edges = _canonical_key(g.n, g.dashed)
    return TwoColoredStar(n, edges)


def is_isomorphic(g1: TwoColoredStar, g2: TwoColoredStar) -> bool:
    if g1.n != g2.n or len(g1.dashed) != len(g2.dashed):
        return False
    deg1 = sorted(g1.dashed_degree(v) for v in range(1, g1.n + 1))
    deg2 = sorted(g2.dashed_degree(v) for v in range(1, g2.n + 1))
    if deg1 != deg2:
        return False
    return canonical_form(g1) == canonical_form(g2)


def contains_subgraph(host: TwoColoredStar, pattern: TwoColoredStar) -> Optional[Embedding]:
    """Find an injective leaf map sending every dashed pattern pair to a dashed host pair.

    Non-dashed pattern pairs are unconstrained (subgraph, not induced
    subgraph).  Returns the first embedding in deterministic search order,
    or None.
    """
    if pattern.n > host.n:
        return None
    host_deg = {v: host.dashed_degree(v) for v in range(1, host.n + 1)}
    pat_deg = {v: pattern.dashed_degree(v) for v in range(1, pattern.n + 1)}
    # Place high-degree pattern leaves first; ties by label for determinism.
    order = sorted(range(1, pattern.n + 1), key=lambda v: (-pat_deg[v], v))
    neighbors = {v: [] for v in order}
    for idx, v in enumerate(order):
        for u in order[:idx]:
            if pattern.is_dashed(u, v):
                neighbors[v].append(u)

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for w in range(1, host.n + 1):
            if w in used or host_deg[w] < pat_deg[v]:
                continue
            if all(host.is_dashed(assignment[u], w) for u in neighbors[v]):
                assignment[v] = w
                used.add(w)
                if backtrack(idx + 1):
                    return True
                used.remove(w)
                del assignment[v]
        return False

    if backtrack(0):
        return Embedding(assignment)
    return None


def delete_dashed_edge(g: TwoColoredStar, pair: Pair) -> TwoColoredStar:
    i, j = min(pair), max(pair)
    if (i, j) not in g.dashed:
        raise ValueError(f"pair {i}-{j} is not a dashed edge of {g}")
    return TwoColoredStar(g.n, g.dashed - {(i, j)})


DEFAULT_ENUMERATION_CAP = 7


@functools.lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[TwoColoredStar, ...]:
    import networkx as nx

    graphs = []
    for atlas_graph in nx.graph_atlas_g():
        if atlas_graph.number_of_nodes() != n:
            continue
        dashed = [(u + 1, v + 1) for u, v in atlas_graph.edges()]
        graphs.append(canonical_representative(TwoColoredStar(n, dashed)))
    graphs.sort(key=canonical_form)
    return tuple(graphs)


def enumerate_graphs(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[TwoColoredStar]:
    """One representative per isomorphism class of dashed configurations on n leaves.

    Representatives come from the atlas of small graphs and are returned in
    deterministic canonical-form order; the empty configuration is included.
    """
    if n < 1:
        raise ValueError(f"leaf count must be at least 1, got {n}")
    if n > cap:
        raise ValueError(f"leaf count {n} exceeds the enumeration cap {cap}")
    if n > 7:
        raise ValueError("enumeration is backed by the atlas of small graphs (n <= 7)")
    return list(_enumerate_cached(n))

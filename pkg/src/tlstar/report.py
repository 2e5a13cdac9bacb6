"""End-to-end analysis of a single graph and the exhaustive cross-validation sweep.

A full analysis runs the graph-theoretic classifier (always) and the
Groebner/automaton engine (unless asked not to), then reconciles the two:
any coarse-growth mismatch, violated component-count condition, or
truncated completion raises a discrepancy flag that drives the CLI exit
code.  The sweep applies the same reconciliation to every isomorphism
class up to a leaf bound, deduplicating engine runs by the canonical form
of the pruned graph.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .automaton import AvoidanceAutomaton, build_automaton, hilbert_prefix
from .classifier import TheoremVerdict, check_nu_conditions, classify_by_theorem
from .graphs import (
    TwoColoredStar,
    canonical_form,
    canonical_representative,
    enumerate_graphs,
    prune_isolated_leaves,
)
from .groebner import GroebnerResult, buchberger
from .growth import FreePairCertificate, GrowthClass, classify_growth, search_free_pair
from .presentation import build_presentation

__all__ = ["AnalysisReport", "SweepResult", "analyze", "cross_validate"]

DEFAULT_HILBERT_DEGREE = 12
DEFAULT_SEARCH_BLOCKS = 12


@dataclass
class AnalysisReport:
    graph: TwoColoredStar
    pruned: TwoColoredStar
    removed_leaves: tuple[int, ...]
    nu: int
    method: str
    t_mode: str
    theorem: TheoremVerdict
    nu_violations: list[str]
    groebner: Optional[GroebnerResult] = None
    automaton: Optional[AvoidanceAutomaton] = None
    hilbert: Optional[list[int]] = None
    growth: Optional[GrowthClass] = None
    free_pair: Optional[FreePairCertificate] = None
    discrepancies: list[str] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def discrepancy(self) -> bool:
        return bool(self.discrepancies)

    def to_json_dict(self, include_timings: bool = False) -> dict:
        out = {
            "graph": self.graph.to_json_dict(),
            "pruned": self.pruned.to_json_dict(),
            "removed_leaves": list(self.removed_leaves),
            "nu": self.nu,
            "method": self.method,
            "t": self.t_mode,
            "theorem": self.theorem.to_json_dict(),
            "nu_violations": list(self.nu_violations),
            "groebner": None if self.groebner is None else self.groebner.to_json_dict(),
            "hilbert": None
            if self.hilbert is None
            else {"prefix": list(self.hilbert), "cumulative": _cumulative(self.hilbert)},
            "growth": None if self.growth is None else self.growth.to_json_dict(),
            "free_pair": None if self.free_pair is None else self.free_pair.to_json_dict(),
            "discrepancies": list(self.discrepancies),
            "discrepancy": self.discrepancy,
        }
        if include_timings:
            out["timings"] = dict(self.timings)
        return out


def _cumulative(seq: list[int]) -> list[int]:
    out = []
    acc = 0
    for x in seq:
        acc += x
        out.append(acc)
    return out


def analyze(
    g: TwoColoredStar,
    method: str = "both",
    degree_bound: Optional[int] = None,
    t_mode="symbolic",
    max_degree: int = DEFAULT_HILBERT_DEGREE,
    search_blocks: int = DEFAULT_SEARCH_BLOCKS,
) -> AnalysisReport:
    """Run the requested classifiers on g and reconcile their verdicts."""
    if method not in ("both", "theorem", "groebner"):
        raise ValueError(f"unknown method {method!r}")
    t_total = time.perf_counter()
    pruned, removed = prune_isolated_leaves(g)
    verdict = classify_by_theorem(g)
    nu_violations = check_nu_conditions(g, verdict)
    report = AnalysisReport(
        graph=g,
        pruned=pruned,
        removed_leaves=removed,
        nu=verdict.nu,
        method=method,
        t_mode="symbolic" if t_mode in (None, "symbolic") else f"t={t_mode}",
        theorem=verdict,
        nu_violations=nu_violations,
    )
    report.discrepancies.extend(nu_violations)

    if method != "theorem":
        t0 = time.perf_counter()
        pres = build_presentation(g, t_mode)
        result = buchberger(pres, degree_bound)
        report.timings["groebner_s"] = time.perf_counter() - t0
        report.groebner = result

        t0 = time.perf_counter()
        aut = build_automaton(result.obstructions, pres.alphabet_size())
        report.automaton = aut
        report.hilbert = hilbert_prefix(aut, max_degree)
        growth = classify_growth(aut, complete=result.complete)
        report.growth = growth
        if growth.coarse == "exponential" and result.complete:
            report.free_pair = search_free_pair(aut, search_blocks)
        report.timings["automaton_s"] = time.perf_counter() - t0

        if not result.complete:
            report.discrepancies.append(
                f"completion truncated at degree {result.degree_bound}; engine growth is an upper bound only"
            )
        if growth.coarse != verdict.coarse_growth:
            report.discrepancies.append(
                f"engine growth {growth.coarse} disagrees with structural verdict {verdict.coarse}"
            )
        elif growth.coarse == "polynomial" and growth.gk_degree != 1:
            report.discrepancies.append(
                f"structural verdict asserts linear growth but engine found gk degree {growth.gk_degree}"
            )
    report.timings["total_s"] = time.perf_counter() - t_total
    return report


@dataclass
class SweepRow:
    graph: TwoColoredStar
    pruned: TwoColoredStar
    nu: int
    theorem: TheoremVerdict
    engine_growth: GrowthClass
    complete: bool
    nu_violations: list[str]

    @property
    def agree(self) -> bool:
        if self.theorem.coarse_growth != self.engine_growth.coarse:
            return False
        if self.engine_growth.coarse == "polynomial" and self.engine_growth.gk_degree != 1:
            return False
        return not self.nu_violations

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph.to_json_dict(),
            "text": str(self.graph),
            "pruned": str(self.pruned),
            "nu": self.nu,
            "theorem": {"coarse": self.theorem.coarse, "branch": self.theorem.branch},
            "engine": {
                "coarse": self.engine_growth.coarse,
                "gk_degree": self.engine_growth.gk_degree,
                "dimension": self.engine_growth.dimension,
                "complete": self.complete,
            },
            "witness": None
            if self.theorem.witness is None
            else str(self.theorem.witness_pattern),
            "agree": self.agree,
        }


@dataclass
class SweepResult:
    max_leaves: int
    t_mode: str
    rows: list[SweepRow]
    engine_runs: int

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    @property
    def all_complete(self) -> bool:
        return all(row.complete for row in self.rows)

    def agreement_matrix(self) -> dict:
        labels = ("finite", "polynomial", "exponential")
        matrix = {a: {b: 0 for b in labels} for a in labels}
        for row in self.rows:
            matrix[row.theorem.coarse_growth][row.engine_growth.coarse] += 1
        return matrix

    def disagreements(self) -> list[SweepRow]:
        return [row for row in self.rows if not row.agree]

    def to_json_dict(self) -> dict:
        return {
            "max_leaves": self.max_leaves,
            "t": self.t_mode,
            "class_count": len(self.rows),
            "engine_runs": self.engine_runs,
            "all_agree": self.all_agree,
            "all_complete": self.all_complete,
            "agreement_matrix": self.agreement_matrix(),
            "rows": [row.to_json_dict() for row in self.rows],
        }


def cross_validate(
    max_leaves: int,
    degree_bound: Optional[int] = None,
    t_mode="symbolic",
) -> SweepResult:
    """Compare structural and engine growth on every class with n <= max_leaves.

    Engine results are computed once per isomorphism class of the pruned
    graph (growth is invariant under pruning and relabelling, which the
    test suite checks separately) and reused across rows.
    """
    engine_cache: dict = {}
    rows: list[SweepRow] = []
    for n in range(1, max_leaves + 1):
        for g in enumerate_graphs(n):
            pruned, _ = prune_isolated_leaves(g)
            rep = canonical_representative(pruned)
            key = canonical_form(rep)
            cached = engine_cache.get(key)
            if cached is None:
                pres = build_presentation(rep, t_mode)
                result = buchberger(pres, degree_bound)
                aut = build_automaton(result.obstructions, pres.alphabet_size())
                growth = classify_growth(aut, complete=result.complete)
                cached = (growth, result.complete)
                engine_cache[key] = cached
            growth, complete = cached
            verdict = classify_by_theorem(g)
            rows.append(
                SweepRow(
                    graph=g,
                    pruned=pruned,
                    nu=verdict.nu,
                    theorem=verdict,
                    engine_growth=growth,
                    complete=complete,
                    nu_violations=check_nu_conditions(g, verdict),
                )
            )
    t_label = "symbolic" if t_mode in (None, "symbolic") else f"t={t_mode}"
    return SweepResult(max_leaves=max_leaves, t_mode=t_label, rows=rows, engine_runs=len(engine_cache))

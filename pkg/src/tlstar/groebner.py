"""Noncommutative Groebner bases by degree-truncated overlap completion.

Relations are rewriting rules oriented by the degree-lexicographic order.
Completion resolves every overlap ambiguity between leading words whose
overlap word fits under the degree bound; inserted elements are kept monic
and the live leading words always form an antichain under the factor
relation (inclusion ambiguities are handled by re-reducing any element
whose leading word absorbs a newer, smaller one).

If no overlap ever exceeds the bound the finished basis is a full Groebner
basis and the result is marked complete; otherwise it is only a truncation
and every downstream consumer must treat derived counts as upper bounds.
"""

from __future__ import annotations

import heapq
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .ncpoly import NcPolynomial, Word, word_contains, word_key
from .presentation import Presentation

__all__ = [
    "GroebnerResult",
    "Rewriter",
    "reduce",
    "buchberger",
    "obstructions",
    "minimal_antichain",
    "is_antichain",
]


def minimal_antichain(words: Iterable[Word]) -> frozenset[Word]:
    """Drop every word that contains another of the given words as a factor."""
    ordered = sorted(set(words), key=word_key)
    kept: list[Word] = []
    for w in ordered:
        if not any(word_contains(w, u) for u in kept):
            kept.append(w)
    return frozenset(kept)


def is_antichain(words: Iterable[Word]) -> bool:
    ws = list(words)
    return all(
        not word_contains(a, b)
        for i, a in enumerate(ws)
        for j, b in enumerate(ws)
        if i != j
    )


@dataclass(frozen=True)
class GroebnerResult:
    """Finished (or degree-truncated) basis together with its leading words."""

    basis: tuple[NcPolynomial, ...]
    obstructions: frozenset[Word]
    complete: bool
    degree_bound: int

    def basis_size(self) -> int:
        return len(self.basis)

    def to_json_dict(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "complete": self.complete,
            "basis_size": len(self.basis),
            "obstructions": [list(w) for w in sorted(self.obstructions, key=word_key)],
        }


def obstructions(result: GroebnerResult) -> frozenset[Word]:
    """Minimal antichain of leading words of the basis."""
    return minimal_antichain(p.leading_word() for p in result.basis)


class _Entry:
    __slots__ = ("id", "lead", "terms", "alive")

    def __init__(self, eid: int, lead: Word, terms: dict):
        self.id = eid
        self.lead = lead
        self.terms = terms
        self.alive = True


class _LeadIndex:
    """Leading words grouped by first letter, sorted by (length, id)."""

    __slots__ = ("by_letter",)

    def __init__(self):
        self.by_letter: dict[int, list[_Entry]] = defaultdict(list)

    def add(self, entry: _Entry) -> None:
        bucket = self.by_letter[entry.lead[0]]
        bucket.append(entry)
        bucket.sort(key=lambda e: (len(e.lead), e.id))

    def remove(self, entry: _Entry) -> None:
        self.by_letter[entry.lead[0]].remove(entry)

    def find(self, w: Word) -> Optional[tuple[int, _Entry]]:
        """Leftmost occurrence of any leading word inside w."""
        by_letter = self.by_letter
        lw = len(w)
        for pos in range(lw):
            bucket = by_letter.get(w[pos])
            if not bucket:
                continue
            rem = lw - pos
            for e in bucket:
                ll = len(e.lead)
                if ll > rem:
                    break
                if w[pos:pos + ll] == e.lead:
                    return pos, e
        return None

    def find_rightmost(self, w: Word) -> Optional[tuple[int, _Entry]]:
        by_letter = self.by_letter
        lw = len(w)
        for pos in range(lw - 1, -1, -1):
            bucket = by_letter.get(w[pos])
            if not bucket:
                continue
            rem = lw - pos
            for e in bucket:
                ll = len(e.lead)
                if ll > rem:
                    break
                if w[pos:pos + ll] == e.lead:
                    return pos, e
        return None


def _reduce_dict(terms: dict, index: _LeadIndex) -> dict:
    """Normal form of a term dict: repeatedly rewrite the largest reducible
    monomial at its leftmost reducible position."""
    normal: dict[Word, object] = {}
    work = dict(terms)
    find = index.find
    while work:
        w = max(work, key=word_key)
        c = work.pop(w)
        hit = find(w)
        if hit is None:
            normal[w] = c
            continue
        pos, entry = hit
        lead = entry.lead
        left = w[:pos]
        right = w[pos + len(lead):]
        for tw, tc in entry.terms.items():
            if tw == lead:
                continue
            nw = left + tw + right
            acc = work.get(nw)
            if acc is None:
                work[nw] = -(c * tc)
            else:
                acc = acc - c * tc
                if acc:
                    work[nw] = acc
                else:
                    del work[nw]
    return normal


class Rewriter:
    """Reduction modulo a fixed list of monic basis elements."""

    def __init__(self, basis: Sequence[NcPolynomial]):
        self.index = _LeadIndex()
        for k, p in enumerate(basis):
            if not p:
                continue
            q = p.monic()
            self.index.add(_Entry(k, q.leading_word(), dict(q.terms)))

    def reduce(self, p: NcPolynomial, strategy: str = "largest-leftmost") -> NcPolynomial:
        if strategy == "largest-leftmost":
            return NcPolynomial(_reduce_dict(dict(p.terms), self.index))
        return NcPolynomial(self._reduce_generic(dict(p.terms), strategy))

    def _reduce_generic(self, work: dict, strategy: str) -> dict:
        """Alternative strategies used to check confluence; slower but still
        terminating since every rewrite strictly decreases the term multiset."""
        monomial_pick, position_pick = strategy.split("-")
        while True:
            candidates = []
            for w in work:
                hit = self.index.find(w) if position_pick == "leftmost" else self.index.find_rightmost(w)
                if hit is not None:
                    candidates.append((w, hit))
            if not candidates:
                return work
            if monomial_pick == "largest":
                w, (pos, entry) = max(candidates, key=lambda it: word_key(it[0]))
            else:
                w, (pos, entry) = min(candidates, key=lambda it: word_key(it[0]))
            c = work.pop(w)
            lead = entry.lead
            left, right = w[:pos], w[pos + len(lead):]
            for tw, tc in entry.terms.items():
                if tw == lead:
                    continue
                nw = left + tw + right
                acc = work.get(nw)
                if acc is None:
                    work[nw] = -(c * tc)
                else:
                    acc = acc - c * tc
                    if acc:
                        work[nw] = acc
                    else:
                        del work[nw]


def reduce(p: NcPolynomial, basis: Sequence[NcPolynomial], strategy: str = "largest-leftmost") -> NcPolynomial:
    """Normal form of p modulo the two-sided ideal of the (monic) basis."""
    return Rewriter(basis).reduce(p, strategy=strategy)


class _Completion:
    def __init__(self, relations: Sequence[NcPolynomial], degree_bound: int):
        self.bound = degree_bound
        self.index = _LeadIndex()
        self.entries: dict[int, _Entry] = {}
        self.next_id = 0
        self.heap: list[tuple] = []
        self.pending: deque = deque(dict(r.terms) for r in relations if r)
        self.skipped: list[tuple[int, int]] = []

    def _alive(self) -> list[_Entry]:
        return [e for e in self.entries.values() if e.alive]

    def _enqueue_overlaps(self, a: _Entry, b: _Entry) -> None:
        # Overlap words u + v[l:] where a proper suffix of lead(a) is a
        # proper prefix of lead(b).  Pairs of pure monomials are skipped:
        # their S-polynomials vanish identically.
        if len(a.terms) == 1 and len(b.terms) == 1:
            return
        u, v = a.lead, b.lead
        top = min(len(u), len(v)) - 1
        for ell in range(1, top + 1):
            if u[-ell:] == v[:ell]:
                w = u + v[ell:]
                heapq.heappush(self.heap, (len(w), w, a.id, b.id, ell))

    def _insert(self, terms: dict) -> None:
        lead = max(terms, key=word_key)
        lc = terms[lead]
        if lc != 1:
            terms = {w: c / lc for w, c in terms.items()}
        # Inclusion ambiguities: any older element whose leading word
        # contains the new one is withdrawn and re-reduced later.
        doomed = [e for e in self._alive() if word_contains(e.lead, lead)]
        for e in doomed:
            e.alive = False
            self.index.remove(e)
            self.pending.append(e.terms)

        entry = _Entry(self.next_id, lead, terms)
        self.next_id += 1
        self.entries[entry.id] = entry
        self.index.add(entry)
        for other in self._alive():
            if other is entry:
                continue
            self._enqueue_overlaps(entry, other)
            self._enqueue_overlaps(other, entry)
        self._enqueue_overlaps(entry, entry)

    def _spolynomial(self, a: _Entry, b: _Entry, ell: int) -> dict:
        u, v = a.lead, b.lead
        right = v[ell:]
        left = u[:len(u) - ell]
        out: dict[Word, object] = {}
        for w, c in a.terms.items():
            if w == u:
                continue
            key = w + right
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        for w, c in b.terms.items():
            if w == v:
                continue
            key = left + w
            acc = out.get(key)
            out[key] = -c if acc is None else acc - c
        return {w: c for w, c in out.items() if c}

    def run(self) -> tuple[list[_Entry], bool]:
        while self.pending or self.heap:
            if self.pending:
                red = _reduce_dict(self.pending.popleft(), self.index)
                if red:
                    self._insert(red)
                continue
            _, _, ia, ib, ell = heapq.heappop(self.heap)
            a = self.entries[ia]
            b = self.entries[ib]
            if not (a.alive and b.alive):
                continue
            if len(a.lead) + len(b.lead) - ell > self.bound:
                self.skipped.append((ia, ib))
                continue
            red = _reduce_dict(self._spolynomial(a, b, ell), self.index)
            if red:
                self._insert(red)
        truncated = any(
            self.entries[ia].alive and self.entries[ib].alive for ia, ib in self.skipped
        )
        alive = sorted(self._alive(), key=lambda e: word_key(e.lead))
        # Final tail reduction so the returned basis is fully inter-reduced.
        for e in alive:
            tail = {w: c for w, c in e.terms.items() if w != e.lead}
            reduced_tail = _reduce_dict(tail, self.index)
            reduced_tail[e.lead] = e.terms[e.lead]
            e.terms = reduced_tail
        return alive, not truncated


def buchberger(pres: Presentation, degree_bound: Optional[int] = None) -> GroebnerResult:
    """Complete the presentation into a (possibly truncated) Groebner basis.

    The default bound 2n + 8 leaves ample room for every overlap between
    leading words of length up to n + 2, which is where all observed bases
    in this family live, so completions normally certify completeness.
    """
    if degree_bound is None:
        degree_bound = 2 * pres.n + 8
    max_rel_degree = max((len(r.leading_word()) for r in pres.relations if r), default=0)
    if degree_bound < max_rel_degree:
        raise ValueError(
            f"degree bound {degree_bound} is smaller than the largest relation degree {max_rel_degree}"
        )
    engine = _Completion(pres.relations, degree_bound)
    alive, complete = engine.run()
    basis = tuple(NcPolynomial(e.terms) for e in alive)
    obs = frozenset(e.lead for e in alive)
    return GroebnerResult(basis=basis, obstructions=obs, complete=complete, degree_bound=degree_bound)

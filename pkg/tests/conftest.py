import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tlstar.automaton import build_automaton
from tlstar.graphs import TwoColoredStar, canonical_form, canonical_representative
from tlstar.groebner import buchberger
from tlstar.growth import classify_growth
from tlstar.presentation import build_presentation


class EngineCache:
    """Session-wide memo for Groebner runs shared by property and acceptance tests."""

    def __init__(self):
        self._full = {}
        self._coarse = {}

    def full(self, g: TwoColoredStar, t_mode="symbolic"):
        """(result, automaton, growth) for this exact graph and parameter mode."""
        key = (g, str(t_mode))
        hit = self._full.get(key)
        if hit is None:
            pres = build_presentation(g, t_mode)
            result = buchberger(pres)
            aut = build_automaton(result.obstructions, pres.alphabet_size())
            growth = classify_growth(aut, complete=result.complete)
            hit = (result, aut, growth)
            self._full[key] = hit
        return hit

    def coarse(self, g: TwoColoredStar) -> str:
        """Coarse symbolic growth, memoised per isomorphism class."""
        key = canonical_form(g)
        hit = self._coarse.get(key)
        if hit is None:
            _, _, growth = self.full(canonical_representative(g))
            hit = growth.coarse
            self._coarse[key] = hit
        return hit


@pytest.fixture(scope="session")
def engine() -> EngineCache:
    return EngineCache()

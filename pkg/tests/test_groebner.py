import random
from fractions import Fraction

import pytest

from oracles import quotient_dimensions
from tlstar.automaton import build_automaton, hilbert_prefix
from tlstar.graphs import TwoColoredStar, enumerate_graphs, parse_graph
from tlstar.groebner import (
    Rewriter,
    buchberger,
    is_antichain,
    minimal_antichain,
    obstructions,
    reduce,
)
from tlstar.ncpoly import NcPolynomial
from tlstar.presentation import build_presentation
from tlstar.scalars import Polynomial, RationalFunction, T

ONE = T / T


def nc(terms):
    return NcPolynomial(terms)


class TestReduce:
    def test_center_link_rewrites(self):
        pres = build_presentation(parse_graph("K(1;)"))
        result = reduce(nc({(1, 0, 1): ONE}), list(pres.relations))
        assert result == nc({(1,): T})

    def test_hand_rewrite_chain(self):
        basis = [
            nc({(2, 1): ONE, (1, 2): -ONE}),
            nc({(1, 1): ONE, (1,): -ONE}),
        ]
        assert reduce(nc({(1, 2, 1): ONE}), basis) == nc({(1, 2): ONE})

    def test_normal_words_fixed(self):
        pres = build_presentation(parse_graph("K(2; 1-2)"))
        rewriter = Rewriter(buchberger(pres).basis)
        for w in [(), (0,), (1, 2), (1, 0, 2)]:
            assert rewriter.reduce(nc({w: ONE})) == nc({w: ONE})

    def test_zero_input(self):
        assert reduce(NcPolynomial(), []) == NcPolynomial()


class TestBuchberger:
    def test_smallest_instance_closes_immediately(self):
        pres = build_presentation(parse_graph("K(1;)"))
        res = buchberger(pres)
        assert res.complete
        assert set(res.basis) == set(pres.relations)
        assert res.obstructions == {(0, 0), (1, 1), (1, 0, 1), (0, 1, 0)}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_orthogonal_star_obstructions(self, n):
        res = buchberger(build_presentation(TwoColoredStar(n, [])))
        expected = {(i, i) for i in range(n + 1)}
        expected |= {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
        expected |= {(i, 0, i) for i in range(1, n + 1)}
        expected |= {(0, i, 0) for i in range(1, n + 1)}
        assert res.complete and res.obstructions == expected

    def test_partial_reference_words_present(self):
        res = buchberger(build_presentation(parse_graph("K(5; 1-2,2-3,4-5)")))
        assert res.complete
        assert (2, 0, 1, 2) in res.obstructions
        assert (1, 2, 0, 1) in res.obstructions

    def test_commutation_orientation_in_antichain(self):
        res = buchberger(build_presentation(parse_graph("K(2; 1-2)")))
        assert (2, 1) in res.obstructions and (1, 2) not in res.obstructions

    def test_monic_and_interreduced(self):
        res = buchberger(build_presentation(parse_graph("K(3; 1-2,2-3)")))
        for p in res.basis:
            assert p.leading_coefficient() == 1
        assert is_antichain(res.obstructions)

    def test_defining_relations_reduce_to_zero(self):
        for text in ["K(2; 1-2)", "K(3; 1-2,2-3)", "K(4; 1-2,3-4)"]:
            pres = build_presentation(parse_graph(text))
            rewriter = Rewriter(buchberger(pres).basis)
            for rel in pres.relations:
                assert rewriter.reduce(rel) == NcPolynomial()

    def test_degree_bound_too_small(self):
        with pytest.raises(ValueError):
            buchberger(build_presentation(parse_graph("K(2; 1-2)")), degree_bound=2)

    def test_truncation_reported(self):
        res = buchberger(build_presentation(parse_graph("K(5; 1-2,2-3,4-5)")), degree_bound=3)
        assert not res.complete

    def test_deterministic(self):
        pres = build_presentation(parse_graph("K(4; 1-2,2-3,3-4)"))
        r1, r2 = buchberger(pres), buchberger(pres)
        assert r1.obstructions == r2.obstructions
        assert [p.format() for p in r1.basis] == [p.format() for p in r2.basis]


class TestObstructions:
    def test_plain_leads(self):
        res = buchberger(build_presentation(parse_graph("K(1;)")))
        assert obstructions(res) == res.obstructions

    def test_factor_absorbed(self):
        assert minimal_antichain([(1, 2), (1, 2, 0)]) == {(1, 2)}

    def test_antichain_of_completion(self):
        res = buchberger(build_presentation(parse_graph("K(2; 1-2)")))
        assert is_antichain(obstructions(res))


class TestQuotientDimensionOracle:
    """Engine normal-word counts vs direct linear algebra on relation instances."""

    @pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1, 3)])
    def test_all_classes_up_to_three_leaves(self, t):
        for n in (1, 2, 3):
            for g in enumerate_graphs(n):
                res = buchberger(build_presentation(g, t))
                aut = build_automaton(res.obstructions, n + 1)
                prefix = hilbert_prefix(aut, 6)
                cumulative = [sum(prefix[: k + 1]) for k in range(7)]
                assert cumulative == quotient_dimensions(g, 6, t=t), str(g)

    def test_symbolic_matches_specialised_counts(self):
        for g in enumerate_graphs(3):
            sym = buchberger(build_presentation(g))
            special = buchberger(build_presentation(g, Fraction(1, 2)))
            assert sym.obstructions == special.obstructions


class TestTauIndependence:
    def test_obstructions_match_across_specialisations(self):
        for n in (1, 2, 3):
            for g in enumerate_graphs(n):
                sym = buchberger(build_presentation(g, "symbolic")).obstructions
                for t in ("1/2", "1/3", "2/3"):
                    assert buchberger(build_presentation(g, t)).obstructions == sym, (str(g), t)


def random_scalar(rng: random.Random) -> RationalFunction:
    coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    num = Polynomial(coeffs)
    if not num:
        num = Polynomial((Fraction(1),))
    if rng.random() < 0.25:
        return RationalFunction(num, Polynomial((Fraction(1), Fraction(1))))  # .../(t+1)
    return RationalFunction(num)


def random_polynomial(rng: random.Random, n: int, max_terms=4, max_len=5) -> NcPolynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.randint(0, n) for _ in range(rng.randint(0, max_len)))
        terms[w] = random_scalar(rng)
    return NcPolynomial(terms)


class TestReductionProperties:
    GRAPHS = ["K(2; 1-2)", "K(3; 1-2,2-3)", "K(3; 1-2,1-3,2-3)", "K(4; 1-2,3-4)"]

    def _rewriter(self, text):
        pres = build_presentation(parse_graph(text))
        return Rewriter(buchberger(pres).basis), parse_graph(text).n

    @pytest.mark.parametrize("text", GRAPHS)
    def test_idempotent(self, text):
        rewriter, n = self._rewriter(text)
        rng = random.Random(101)
        for _ in range(60):
            p = random_polynomial(rng, n)
            q = rewriter.reduce(p)
            assert rewriter.reduce(q) == q

    @pytest.mark.parametrize("text", GRAPHS)
    def test_linear(self, text):
        rewriter, n = self._rewriter(text)
        rng = random.Random(202)
        for _ in range(40):
            p, q = random_polynomial(rng, n), random_polynomial(rng, n)
            a, b = random_scalar(rng), random_scalar(rng)
            lhs = rewriter.reduce(p.scale(a) + q.scale(b))
            rhs = rewriter.reduce(p).scale(a) + rewriter.reduce(q).scale(b)
            assert lhs == rhs

    @pytest.mark.parametrize("text", GRAPHS)
    def test_confluent_across_strategies(self, text):
        rewriter, n = self._rewriter(text)
        rng = random.Random(303)
        for _ in range(40):
            p = random_polynomial(rng, n)
            forms = {
                rewriter.reduce(p, strategy=s).format()
                for s in ("largest-leftmost", "largest-rightmost",
                          "smallest-leftmost", "smallest-rightmost")
            }
            assert len(forms) == 1

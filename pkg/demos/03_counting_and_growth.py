"""Counting normal words and reading off the growth trichotomy.

Normal words (words avoiding every obstruction as a factor) form a linear
basis of the algebra.  A factor-avoidance automaton counts them per degree;
its cycle structure decides whether the algebra is finite-dimensional,
of polynomial growth, or of exponential growth.
"""

from tlstar import (
    build_automaton,
    buchberger,
    build_presentation,
    classify_growth,
    hilbert_prefix,
    parse_graph,
)


def pipeline(text):
    g = parse_graph(text)
    pres = build_presentation(g)
    result = buchberger(pres)
    aut = build_automaton(result.obstructions, pres.alphabet_size())
    return g, aut, classify_growth(aut, complete=result.complete)


# Finite: the triangle on three leaves.
g, aut, growth = pipeline("K(3; 1-2,1-3,2-3)")
print(g, "->", growth.coarse, f"(dimension {growth.dimension})")
print("  counts:", hilbert_prefix(aut, 10))

# Linear growth: two dashed components on four leaves.  The counts settle
# into a bounded periodic tail; the cumulative dimension grows linearly.
g, aut, growth = pipeline("K(4; 1-2,3-4)")
print(g, "->", growth.coarse, f"(gk degree {growth.gk_degree})")
print("  counts:", hilbert_prefix(aut, 20))

# Exponential growth: the counts keep climbing.
g, aut, growth = pipeline("K(5; 1-2,2-3,4-5)")
print(g, "->", growth.coarse)
prefix = hilbert_prefix(aut, 20)
print("  counts:", prefix)
cumulative = sum(prefix)
print(f"  cumulative dimension through degree 20: {cumulative}")

# The trichotomy is structural: acyclic live automaton = finite; disjoint
# simple cycles = polynomial; any richer strongly connected component
# = exponential.  No numerical thresholds are involved.

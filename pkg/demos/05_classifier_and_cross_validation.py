"""The graph-theoretic classifier and the exhaustive cross-validation sweep.

Growth can be read off the pruned dashed graph without any rewriting: the
all-from-one-leaf star and the triangle are finite-dimensional, every other
fully covered 4-leaf configuration has linear growth, and everything else
is exponential with an embedded minimal exponential configuration as a
witness.  The sweep checks this against the engine on every isomorphism
class, which is the package's reason to exist.
"""

from tlstar import (
    analyze,
    check_nu_conditions,
    classify_by_theorem,
    cross_validate,
    parse_graph,
)

for text in ["K(6; 1-2,1-3,1-4,1-5,1-6)", "K(4; 1-2,2-3,3-4)", "K(6; 1-6,2-3,4-5)"]:
    g = parse_graph(text)
    v = classify_by_theorem(g)
    print(f"{g}: {v.coarse}  branch {v.branch}  nu={v.nu}")
    if v.witness is not None:
        print(f"   witness: {v.witness_pattern} via {dict(v.witness.mapping)}")
    print("   component-count conditions:", check_nu_conditions(g, v) or "satisfied")

# One graph end to end: both classifiers plus reconciliation.
report = analyze(parse_graph("K(5; 1-2,1-4,1-5,2-3)"))
print(f"\nfull analysis of {report.graph}:")
print(f"  theorem {report.theorem.coarse}, engine {report.growth.coarse}, "
      f"discrepancies: {report.discrepancies or 'none'}")

# The sweep over every class with up to five leaves (six is the default for
# the command-line tool; five keeps this demo quick).
sweep = cross_validate(5)
print(f"\nsweep over {len(sweep.rows)} classes "
      f"({sweep.engine_runs} engine runs after pruning/dedup):")
print("  all agree:", sweep.all_agree, "  all complete:", sweep.all_complete)
matrix = sweep.agreement_matrix()
for a, row in matrix.items():
    print(f"  theorem {a:>11}: ", {b: c for b, c in row.items() if c})

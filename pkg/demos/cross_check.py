# Where sums of values and brute force part ways.
from pawncgt.analysis import RandomParams, cross_check, fuzz

summary = fuzz(RandomParams(), seed=7, count=200)
print("\n".join(summary.to_text().splitlines()[:8]))

# a pure race: both pawns promote in five moves and the first one wins,
# but in a sum the two promotions cancel and play goes on
cc = cross_check("8/8/3p4/8/8/8/1P6/8")
print()
print("predicted", [s.label for s in cc.predicted], "oracle", [s.label for s in cc.actual])
for w in cc.warnings:
    print(f"  {w.kind}: {w.message}")

"""
Six worked applications
=======================

Sample each model on its grid, keep the values inside the measurement
window and compare the digit frequencies with the family's prediction.
"""
from firstdigit.digitcore import counts_to_distribution
from firstdigit.report import compare, comparison_table
from firstdigit.scenarios import ScenarioId, run_scenario

for sid in ScenarioId:
    result = run_scenario(sid)
    cmp = compare(result.counts, result.reference)
    print(f"{sid.value:>10}  n={result.counts.total:3d}  max|diff|={cmp.max_abs:.4f}"
          f"  chi2={cmp.chi_square:.2f}   {result.definition.formula}")

# %%
# The bacterial colony in full: observed frequency against Benford.
bac = run_scenario("bacterial")
for row in comparison_table(bac.counts, bac.reference):
    print(" | ".join(row))

# %%
# Excluded grid points keep their value but carry no digit.
for row in bac.rows[-3:]:
    print(row.x, f"{row.y:.2E}", "excluded" if row.excluded else row.digit)

# %%
# The pool fills at a constant rate, so every digit gets exactly 22 minutes.
print(counts_to_distribution(run_scenario("pool").counts).probs)

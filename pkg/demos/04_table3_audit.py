# Recompute the published table of norms and list what disagrees.
from circnorm import report
from circnorm.verifier import reproduce_table3, scan, verify_family

grid, discrepancies = reproduce_table3()
print(report.table3_to_markdown(grid, discrepancies))

# One family, one order, every route side by side.
print(report.reports_to_markdown([verify_family("B14", 6), verify_family("B2", 7)]))

# A wider sweep; the float route is skipped once entries pass 2**53.
result = scan(range(1, 15), (1, 100), workers=4)
for family, counts in result.counts.items():
    print(family, {k: v for k, v in counts.items() if v})

# The identity catalog: which printed closed forms hold, which were repaired.
import json

from circnorm import catalog

for rec in catalog.IDENTITIES.values():
    line = f"{rec.key:18} a_i = {rec.term_label:22} {rec.status.value}"
    if rec.corrected_formula:
        line += f"   -> {rec.corrected_formula}"
    print(line)

# Printed nF_n for the sum of L_i F_{n-1-i} overshoots; n F_{n-1} is right.
for n in range(1, 9):
    print(n, catalog.direct_sum("Table2.row5", n), catalog.stated_sum("Table2.row5", n))

# B9's printed norm belongs to the row (L_2, L_4, ...), not (L_0, L_2, ...).
print("B9 row at n=4:", catalog.family_first_row("B9", 4))
print("printed norm:", catalog.family_stated_norm("B9", 4))
print("closed norm :", catalog.family_closed_norm("B9", 4))

# Every status tag is re-checked against brute-force sums for n = 1..200.
print("catalog problems:", catalog.validate_catalog())

print(json.dumps(catalog.identities_as_json()[:2], indent=2))

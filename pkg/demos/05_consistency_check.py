#!/usr/bin/env python3
"""Checking a complete choice table for consistency.

A choice function records one pick for every nonempty subset of the menu.
Contraction consistency: removing unchosen options must not change the pick.
Rationalizability: one fixed ranking explains every recorded pick. The first
table below is induced by a ranking and passes both; the second flips the
grand-menu pick and gets caught.
"""

from choicetrust import (
    ChoiceFunctionTable,
    check_contraction,
    induced_table,
    rationalizable,
)

well_behaved = induced_table(("espresso", "filter", "instant"))
print("table induced by espresso > filter > instant:")
result = check_contraction(well_behaved)
print(f"  contraction consistent: {result.consistent}")
print(f"  rationalizing order:    {' > '.join(rationalizable(well_behaved))}")

fickle = ChoiceFunctionTable(
    ground_set=("espresso", "filter", "instant"),
    choices={
        frozenset({"espresso"}): "espresso",
        frozenset({"filter"}): "filter",
        frozenset({"instant"}): "instant",
        frozenset({"espresso", "filter"}): "espresso",
        frozenset({"espresso", "instant"}): "espresso",
        frozenset({"filter", "instant"}): "filter",
        frozenset({"espresso", "filter", "instant"}): "filter",
    },
)
print("\nsame table but the full menu picks filter:")
result = check_contraction(fickle)
print(f"  contraction consistent: {result.consistent}")
for violation in result.violations:
    print(f"  violation: {violation.describe()}")
print(f"  rationalizing order:    {rationalizable(fickle)}")

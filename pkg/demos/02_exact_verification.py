"""
Exact verification end to end
=============================

Runs the full applicable check suite for a few parameter choices.  Every
verdict is exact: PASS means the residual operator is identically zero
over the rationals, not zero up to rounding.
"""

from rimealg import FamilySpec, run_suite
from rimealg.cli import format_report

for spec in [
    FamilySpec("rime-quantum", 3, beta="1/2", phi=(3, 2, 1)),
    FamilySpec("rime-quantum", 3, beta="3", phi=(0, 2, 1)),  # relaxed: one zero weight
    FamilySpec("cg", 3, q2inv="-2", p="1/3"),
    FamilySpec("boundary", 4),
]:
    print(f"--- {spec.family} n={spec.n} ---")
    for rep in run_suite(spec):
        print(" ", format_report(rep))
    print()

# a deliberately degenerate scalar: beta = 1 makes the matrix singular,
# the identities still hold
reports = run_suite(FamilySpec("rime-quantum", 2, beta=1, phi=(2, 1)))
print("--- beta = 1 (non-invertible point) ---")
for rep in reports:
    print(" ", format_report(rep))

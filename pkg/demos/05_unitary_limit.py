"""
Degeneration to the skew grid, and the exponential picture
==========================================================

Two float demonstrations on top of the exact layer: the coefficient grid
beta_ij(beta) converges to 1/(mu_i - mu_j) at first order along
phi_i = 1 + beta*mu_i, and the truncated series for exp(h r) lands on the
closed forms that idempotency and nilpotency force.
"""

from rimealg import (
    MuVector,
    PhiVector,
    classical_rime_r,
    classical_unitary_r0,
    exp_formula_check,
    unitary_limit_curve,
)

betas = [10.0**-k for k in range(1, 6)]
for mu_values in ((0, 1), (0, 1, 3), (-2, 0, 1, 3)):
    curve = unitary_limit_curve(MuVector(mu_values), betas)
    print(f"mu = {mu_values}")
    for b, d in zip(curve.betas, curve.deviations):
        print(f"  beta = {b:8.0e}   max deviation = {d:.6e}")
    print(f"  fitted log-log slope = {curve.slope:.4f}  (first-order convergence)")
    print()

r = classical_rime_r(PhiVector((2, 1)))
r0 = classical_unitary_r0(MuVector((0, 1)))
print("series vs closed form, 30 terms")
for h in (0.25, 0.5, 1.0):
    dev_r = exp_formula_check(r, h, 30)
    dev_r0 = exp_formula_check(r0, h, 30)
    print(f"  h = {h:<5} idempotent: {dev_r:.2e}   nilpotent: {dev_r0:.2e}")

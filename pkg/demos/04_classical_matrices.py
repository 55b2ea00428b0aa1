"""
The classical layer
===================

The quantum solutions are linear in beta: P Rhat = I + beta r.  This script
extracts r directly and walks through the identities it satisfies, plus the
skew-symmetric pair (r0, b) sitting at beta = 0.
"""

from fractions import Fraction

from rimealg import (
    MuVector,
    PhiVector,
    assoc_A,
    assoc_Aprime,
    beta_from_phi,
    boundary_b,
    check_braid_identities,
    check_cybe,
    classical_rime_r,
    classical_unitary_r0,
    embed,
    flip21,
    identity,
    permutation,
    rime_from_beta,
)

phi = PhiVector((3, 2, 1))
beta = Fraction(5, 2)
n = phi.n

rhat = rime_from_beta(beta_from_phi(beta, phi))
r = classical_rime_r(phi)

lhs = permutation(n) @ rhat
rhs = identity(n, 2) + beta * r
print("P Rhat == I + beta r:", lhs == rhs)

print("r + r21 == P - I:    ", r + flip21(r) == permutation(n) - identity(n, 2))
print("r^2 == -r:           ", r @ r == -r)

a = assoc_A(r)
print("A(r) == A'(r) == -r13:", a == assoc_Aprime(r) == -embed(r, 13))
print("cybe:", check_cybe(r).passed, " braid:", check_braid_identities(r).passed)

# the shifted matrix absorbs the constant terms
rt = r + Fraction(1, 2) * identity(n, 2)
print("A(rt) == I/4:        ", assoc_A(rt) == Fraction(1, 4) * identity(n, 3))
print("rt + rt21 == P:      ", rt + flip21(rt) == permutation(n))

mu = MuVector((0, 1, 3))
r0 = classical_unitary_r0(mu)
b = boundary_b(n)
print()
print("skew pair at beta = 0")
print("r0 + r0_21 == 0:", (r0 + flip21(r0)).is_zero(), " r0^2 == 0:", (r0 @ r0).is_zero())
print("A(r0) == 0:     ", assoc_A(r0).is_zero(), "          A(b) == 0:", assoc_A(b).is_zero())

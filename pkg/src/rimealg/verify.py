"""Exact verification of the identities satisfied by the matrix families.

Quantum side: the Yang-Baxter equation in braid form, the Hecke quadratic
relation with its eigenvalue multiplicities, structural classification of
the zero pattern (ice / rime / strict rime), basis equivalence with the
Cremmer-Gervais solution, and the linearity P*Rhat = I + beta*r connecting
a solution to its classical limit.  Classical side: the classical
Yang-Baxter equation together with its associative splitting, the
homogeneous and non-homogeneous associative variants, braid identities,
and the idempotent/nilpotent exponential laws.

Every check is exact: a report passes only when its residual vanishes
identically over the rationals.  Failing reports carry the
lexicographically first nonzero residual entry as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from .core import (
    Operator,
    as_rational,
    commutator,
    conjugate_pair,
    embed,
    flip21,
    identity,
    permutation,
)
from .families import (
    FamilySpec,
    GeneralRimeData,
    MuVector,
    PhiVector,
    RimeParams,
    beta_from_phi,
    boundary_b,
    build,
    classical_cg_r,
    classical_rime_r,
    classical_unitary_r0,
    describe,
    rime_from_beta,
    unitary_beta,
    x_matrix,
)

__all__ = [
    "VerificationReport",
    "StructureClass",
    "check_ybe",
    "check_hecke",
    "hecke_multiplicities",
    "assoc_A",
    "assoc_Aprime",
    "check_cybe",
    "check_nonhomogeneous_acybe",
    "check_homogeneous_acybe",
    "check_tilde_relations",
    "check_braid_identities",
    "check_idempotent_exponential",
    "check_nilpotent_exponential",
    "check_quantization",
    "check_equivalence_quantum",
    "check_equivalence_classical",
    "classify_structure",
    "check_beta_constancy",
    "run_suite",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact check.

    ``passed`` is true iff every residual involved is identically zero;
    ``max_residual`` is the largest absolute residual entry and ``witness``
    the first nonzero one as (row multi-index, column multi-index, value).
    ``metadata`` records the parameters and, for compound checks, which
    sub-relation failed.
    """

    name: str
    passed: bool
    max_residual: Fraction
    witness: Optional[tuple]
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class StructureClass:
    """Zero-pattern classification of an arity-2 operator.

    ``tag`` is one of ice (column index set equals the row index set on
    every nonzero entry), rime (column set contained in the row set),
    strict-rime (rime with alpha_ij * gamma_ij nonzero for all i != j) or
    none.  ``data`` holds the extracted coefficients whenever the pattern
    is rime.
    """

    tag: str
    data: Optional[GeneralRimeData]


def _verdict(name: str, parts, metadata=None) -> VerificationReport:
    """Combine named residual operators into one report."""
    meta = dict(metadata or {})
    max_residual = _ZERO
    witness = None
    for part_name, res in parts:
        m = res.max_abs()
        if m > max_residual:
            max_residual = m
        if m and witness is None:
            row, col, value = res.first_nonzero()
            witness = (row, col, value)
            if len(parts) > 1:
                meta["failed_part"] = part_name
    return VerificationReport(name, max_residual == 0, max_residual, witness, meta)


# -- quantum checks -------------------------------------------------------


def check_ybe(rhat: Operator) -> VerificationReport:
    """Braid-form Yang-Baxter equation: R12 R23 R12 = R23 R12 R23."""
    r12 = embed(rhat, 12)
    r23 = embed(rhat, 23)
    residual = r12 @ r23 @ r12 - r23 @ r12 @ r23
    return _verdict("ybe", [("ybe", residual)], {"n": rhat.n})


def check_hecke(rhat: Operator, beta) -> VerificationReport:
    """Quadratic relation Rhat^2 = beta*Rhat + (1 - beta)*I."""
    beta = as_rational(beta)
    eye = identity(rhat.n, 2)
    residual = rhat @ rhat - beta * rhat - (_ONE - beta) * eye
    return _verdict("hecke", [("hecke", residual)], {"beta": str(beta)})


def hecke_multiplicities(rhat: Operator, beta) -> tuple[int, int]:
    """Multiplicities of the eigenvalues 1 and beta - 1 of a Hecke operator.

    Uses the projector trace (Rhat - (beta - 1) I) / (2 - beta), which is
    exact and equals the multiplicity of eigenvalue 1 whenever the Hecke
    relation holds and beta != 2.  A non-integer trace therefore signals a
    non-Hecke input.
    """
    beta = as_rational(beta)
    if beta == 2:
        raise ValueError("multiplicities are undefined at beta = 2 (coincident eigenvalues)")
    size = rhat.size
    t = (rhat.trace() - (beta - _ONE) * size) / (2 - beta)
    if t.denominator != 1:
        raise ValueError(f"projector trace {t} is not an integer; operator is not Hecke for beta = {beta}")
    m_plus = int(t)
    return m_plus, size - m_plus


# -- classical checks -----------------------------------------------------


def assoc_A(r: Operator) -> Operator:
    """Associative combination A(r) = r13 r12 - r12 r23 + r23 r13."""
    r12 = embed(r, 12)
    r13 = embed(r, 13)
    r23 = embed(r, 23)
    return r13 @ r12 - r12 @ r23 + r23 @ r13


def assoc_Aprime(r: Operator) -> Operator:
    """Mirror combination A'(r) = r12 r13 - r23 r12 + r13 r23."""
    r12 = embed(r, 12)
    r13 = embed(r, 13)
    r23 = embed(r, 23)
    return r12 @ r13 - r23 @ r12 + r13 @ r23


def check_cybe(r: Operator) -> VerificationReport:
    """Classical Yang-Baxter equation [r12,r23] + [r12,r13] + [r13,r23] = 0.

    The residual is also recomputed as A'(r) - A(r); the two routes agree
    for every operator, and the agreement is checked on each call so the
    splitting can never silently drift from the commutator form.
    """
    r12 = embed(r, 12)
    r13 = embed(r, 13)
    r23 = embed(r, 23)
    residual = commutator(r12, r23) + commutator(r12, r13) + commutator(r13, r23)
    split = assoc_Aprime(r) - assoc_A(r)
    if split != residual:
        raise AssertionError("splitting identity A'(r) - A(r) disagrees with the commutator form")
    return _verdict("cybe", [("cybe", residual)], {"n": r.n})


def check_nonhomogeneous_acybe(r: Operator) -> VerificationReport:
    """Non-homogeneous associative equation A(r) = -r13 with companion r + r21 = P - I."""
    n = r.n
    parts = [
        ("A(r) = -r13", assoc_A(r) + embed(r, 13)),
        ("r + r21 = P - I", r + flip21(r) - (permutation(n) - identity(n, 2))),
    ]
    return _verdict("acybe", parts, {"variant": "non-homogeneous"})


def check_homogeneous_acybe(r: Operator) -> VerificationReport:
    """Homogeneous associative equation A(r) = 0 with companion skew symmetry r + r21 = 0."""
    parts = [
        ("A(r) = 0", assoc_A(r)),
        ("r + r21 = 0", r + flip21(r)),
    ]
    return _verdict("acybe", parts, {"variant": "homogeneous"})


def check_tilde_relations(r: Operator) -> VerificationReport:
    """Shifted form rt = r + I/2: A(rt) = I (x) I (x) I / 4 and rt + rt21 = P."""
    n = r.n
    rt = r + _HALF * identity(n, 2)
    parts = [
        ("A(rt) = I/4", assoc_A(rt) - Fraction(1, 4) * identity(n, 3)),
        ("rt + rt21 = P", rt + flip21(rt) - permutation(n)),
    ]
    return _verdict("tilde", parts, {"n": n})


def check_braid_identities(r: Operator) -> VerificationReport:
    """Both braid identities for an arity-2 operator.

    They hold whenever r^2 = -r and A(r) = A'(r) = -r13; those hypotheses
    are themselves verified by the idempotency and acybe checks run next to
    this one in the suites.
    """
    r12 = embed(r, 12)
    r13 = embed(r, 13)
    r23 = embed(r, 23)
    parts = [
        ("r12 r23 r12 = r23 r12 r23", r12 @ r23 @ r12 - r23 @ r12 @ r23),
        ("r12 r13 r23 = r23 r13 r12", r12 @ r13 @ r23 - r23 @ r13 @ r12),
    ]
    return _verdict("braid", parts, {"n": r.n})


def check_idempotent_exponential(r: Operator) -> VerificationReport:
    """r^2 = -r, and on success the semigroup law of the exponential.

    For such r the flow I + t*r composes as (I + t r)(I + s r) =
    I + (t + s - t s) r, the exact form of e^(h r) = I + (1 - e^(-h)) r.
    """
    parts = [("r^2 = -r", r @ r + r)]
    if parts[0][1].is_zero():
        eye = identity(r.n, 2)
        t = Fraction(1, 2)
        s = Fraction(1, 3)
        lhs = (eye + t * r) @ (eye + s * r)
        rhs = eye + (t + s - t * s) * r
        parts.append(("semigroup law", lhs - rhs))
    return _verdict("idempotent", parts, {"n": r.n})


def check_nilpotent_exponential(r0: Operator) -> VerificationReport:
    """r0^2 = 0, and on success invertibility of I + r0 with inverse I - r0."""
    parts = [("r^2 = 0", r0 @ r0)]
    if parts[0][1].is_zero():
        eye = identity(r0.n, 2)
        parts.append(("(I + r)(I - r) = I", (eye + r0) @ (eye - r0) - eye))
    return _verdict("nilpotent", parts, {"n": r0.n})


# -- bridges between the two sides ----------------------------------------


def check_quantization(rhat: Operator, beta, r: Operator) -> VerificationReport:
    """Linearity of the solution in its classical companion: P Rhat = I + beta r.

    At beta = 0 the expansion parameter is absorbed into r itself (the
    skew-symmetric family), so the relation checked becomes P Rhat = I + r.
    """
    beta = as_rational(beta)
    coeff = beta if beta else _ONE
    n = rhat.n
    residual = permutation(n) @ rhat - identity(n, 2) - coeff * r
    return _verdict("quantization", [("P Rhat = I + beta r", residual)], {"beta": str(beta)})


def check_equivalence_quantum(phi: PhiVector, beta) -> VerificationReport:
    """Conjugating the p = 1 Cremmer-Gervais solution by X(phi) gives the rime one."""
    beta = as_rational(beta)
    cg = build(FamilySpec("cg", phi.n, q2inv=_ONE - beta, p=_ONE))
    moved = conjugate_pair(cg, x_matrix(phi))
    target = rime_from_beta(beta_from_phi(beta, phi))
    meta = {"beta": str(beta), "phi": ",".join(str(v) for v in phi.phi)}
    return _verdict("equivalence-quantum", [("Ad X(phi)", moved - target)], meta)


def check_equivalence_classical(
    weights: Union[PhiVector, MuVector], which: str = "rime"
) -> VerificationReport:
    """Conjugation by X carries the classical normal forms onto the rime r-matrices."""
    if which == "rime":
        if not isinstance(weights, PhiVector):
            raise TypeError("rime equivalence expects a PhiVector")
        x = x_matrix(weights)
        residual = conjugate_pair(classical_cg_r(weights.n), x) - classical_rime_r(weights)
        meta = {"which": "rime", "phi": ",".join(str(v) for v in weights.phi)}
    elif which == "boundary":
        if not isinstance(weights, MuVector):
            raise TypeError("boundary equivalence expects a MuVector")
        x = x_matrix(PhiVector(weights.mu))
        residual = conjugate_pair(boundary_b(weights.n), x) - classical_unitary_r0(weights)
        meta = {"which": "boundary", "mu": ",".join(str(v) for v in weights.mu)}
    else:
        raise ValueError(f"unknown equivalence kind {which!r}; expected 'rime' or 'boundary'")
    return _verdict("equivalence-classical", [("Ad X", residual)], meta)


# -- structure ------------------------------------------------------------


def classify_structure(m: Operator) -> StructureClass:
    """Classify the zero pattern of an arity-2 operator.

    Scans every nonzero entry at row (i, j), column (k, l): the pattern is
    rime when always {k, l} is a subset of {i, j}, ice when the two sets are
    equal, and strict rime when additionally the extracted alpha_ij and
    gamma_ij are nonzero for every i != j.
    """
    if m.arity != 2:
        raise ValueError("classification applies to arity-2 operators")
    n = m.n
    ice = True
    for (i, j), (k, l), _v in m.nonzero_items():
        if not {k, l} <= {i, j}:
            return StructureClass("none", None)
        if {k, l} != {i, j}:
            ice = False
    alpha = [[m.entry((i, j), (j, i)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    beta = [
        [m.entry((i, j), (i, j)) if i != j else _ZERO for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    gamma = [
        [m.entry((i, j), (i, i)) if i != j else _ZERO for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    gamma_prime = [
        [m.entry((i, j), (j, j)) if i != j else _ZERO for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    data = GeneralRimeData(n, tuple(map(tuple, alpha)), tuple(map(tuple, beta)),
                           tuple(map(tuple, gamma)), tuple(map(tuple, gamma_prime)))
    if ice:
        return StructureClass("ice", data)
    strict = all(
        alpha[i][j] and gamma[i][j]
        for i in range(n)
        for j in range(n)
        if i != j
    )
    return StructureClass("strict-rime" if strict else "rime", data)


def check_beta_constancy(p: RimeParams) -> VerificationReport:
    """Re-verify that beta_ij + beta_ji equals the stored scalar for every pair."""
    max_residual = _ZERO
    witness = None
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            dev = p.entry(i, j) + p.entry(j, i) - p.beta
            if dev and witness is None:
                witness = ((i, j), (j, i), dev)
            if abs(dev) > max_residual:
                max_residual = abs(dev)
    meta = {"beta": str(p.beta)}
    return VerificationReport("beta-constancy", max_residual == 0, max_residual, witness, meta)


# -- suites ----------------------------------------------------------------


def _multiplicity_report(rhat: Operator, beta) -> VerificationReport:
    n = rhat.n
    expected = (n * (n + 1) // 2, n * (n - 1) // 2)
    meta = {"expected": str(expected)}
    try:
        observed = hecke_multiplicities(rhat, beta)
    except ValueError as exc:
        meta["error"] = str(exc)
        return VerificationReport("multiplicities", False, _ONE, None, meta)
    meta["observed"] = str(observed)
    deviation = Fraction(abs(observed[0] - expected[0]))
    return VerificationReport("multiplicities", observed == expected, deviation, None, meta)


def _classification_report(m: Operator, expected: str) -> VerificationReport:
    observed = classify_structure(m).tag
    meta = {"expected": expected, "observed": observed}
    passed = observed == expected
    return VerificationReport("classify", passed, _ZERO if passed else _ONE, None, meta)


def _expected_rime_class(params: RimeParams) -> str:
    off = [
        (params.entry(i, j), params.entry(j, i))
        for i in range(1, params.n + 1)
        for j in range(1, params.n + 1)
        if i != j
    ]
    if all(bij == 0 for bij, _ in off):
        return "ice"
    if all(bij != 0 and bji != 1 for bij, bji in off):
        return "strict-rime"
    return "rime"


def run_suite(spec: FamilySpec) -> list[VerificationReport]:
    """Run every check applicable to the family, in a fixed order.

    Quantum rime: beta constancy, YBE, Hecke, multiplicities (skipped at
    beta = 2), classification, basis equivalence (skipped at beta = 1 where
    the Cremmer-Gervais coefficient degenerates), then for strict phi the
    full classical battery on the companion r-matrix.  Cremmer-Gervais:
    YBE, Hecke, multiplicities, classification, and at p = 1 the
    quantization bridge.  Classical families: classical Yang-Baxter with
    splitting, the applicable associative variant, shifted/tilde relations,
    idempotent or nilpotent exponential law, braid identities, and basis
    equivalence where a weight vector is available.
    """
    reports: list[VerificationReport] = []
    add = reports.append
    tag = spec.family

    if tag == "rime-quantum":
        phi = PhiVector(spec.phi)
        beta = spec.beta
        params = beta_from_phi(beta, phi)
        rhat = rime_from_beta(params)
        add(check_beta_constancy(params))
        add(check_ybe(rhat))
        add(check_hecke(rhat, beta))
        if beta != 2:
            add(_multiplicity_report(rhat, beta))
        add(_classification_report(rhat, _expected_rime_class(params)))
        if beta != 1:
            add(check_equivalence_quantum(phi, beta))
        if phi.strict:
            r = classical_rime_r(phi)
            if beta != 0:
                add(check_quantization(rhat, beta, r))
            add(check_cybe(r))
            add(check_nonhomogeneous_acybe(r))
            add(check_tilde_relations(r))
            add(check_idempotent_exponential(r))
            add(check_braid_identities(r))
            add(check_equivalence_classical(phi, "rime"))
    elif tag == "rime-unitary":
        mu = MuVector(spec.mu)
        params = unitary_beta(mu)
        rhat = rime_from_beta(params)
        r0 = classical_unitary_r0(mu)
        add(check_beta_constancy(params))
        add(check_ybe(rhat))
        add(check_hecke(rhat, 0))
        add(_multiplicity_report(rhat, 0))
        add(_classification_report(rhat, _expected_rime_class(params)))
        add(check_quantization(rhat, 0, r0))
        add(check_cybe(r0))
        add(check_homogeneous_acybe(r0))
        add(check_nilpotent_exponential(r0))
        add(check_equivalence_classical(mu, "boundary"))
    elif tag == "cg":
        rhat = build(spec)
        beta = _ONE - spec.q2inv
        add(check_ybe(rhat))
        add(check_hecke(rhat, beta))
        if beta != 2:
            add(_multiplicity_report(rhat, beta))
        expected = "ice" if (spec.n <= 2 or spec.q2inv == 1) else "none"
        add(_classification_report(rhat, expected))
        if spec.p == 1 and spec.q2inv != 1:
            add(check_quantization(rhat, beta, classical_cg_r(spec.n)))
    elif tag == "classical-rime":
        phi = PhiVector(spec.phi)
        r = classical_rime_r(phi)
        add(check_cybe(r))
        add(check_nonhomogeneous_acybe(r))
        add(check_tilde_relations(r))
        add(check_idempotent_exponential(r))
        add(check_braid_identities(r))
        add(check_equivalence_classical(phi, "rime"))
    elif tag == "classical-cg":
        r = classical_cg_r(spec.n)
        add(check_cybe(r))
        add(check_nonhomogeneous_acybe(r))
        add(check_tilde_relations(r))
        add(check_idempotent_exponential(r))
        add(check_braid_identities(r))
    elif tag == "classical-unitary":
        mu = MuVector(spec.mu)
        r0 = classical_unitary_r0(mu)
        add(check_cybe(r0))
        add(check_homogeneous_acybe(r0))
        add(check_nilpotent_exponential(r0))
        add(check_equivalence_classical(mu, "boundary"))
    elif tag == "boundary":
        b = boundary_b(spec.n)
        add(check_cybe(b))
        add(check_homogeneous_acybe(b))
        add(check_nilpotent_exponential(b))
    else:  # FamilySpec already rejects unknown tags
        raise ValueError(f"unknown family {tag!r}")

    fam = describe(spec)
    return [replace(rep, metadata={**fam, **rep.metadata}) for rep in reports]

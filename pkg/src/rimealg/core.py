"""Exact operator algebra on small tensor powers of a finite-dimensional space.

Scalars are arbitrary-precision rationals (`fractions.Fraction`), so every
arithmetic operation in this module is exact: a zero residual means an
identity holds, not that it holds up to rounding.

An :class:`Operator` is a dense square matrix acting on V^(tensor k) for a
base space V of dimension ``n`` and tensor arity ``k in {1, 2, 3}``.  Rows
and columns are addressed by 1-based multi-indices ``(i1, ..., ik)`` in
lexicographic order with the leftmost factor most significant: the linear
offset of ``(i1, ..., ik)`` is ``sum((ia - 1) * n**(k - a))``.

Operators are immutable values: entry arrays are read-only and every
operation returns a fresh operator, so instances can be shared freely
between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Rational",
    "Operator",
    "as_rational",
    "linear_index",
    "multi_index",
    "identity",
    "zero",
    "matrix_unit",
    "permutation",
    "kron",
    "embed",
    "flip21",
    "wedge",
    "conjugate_pair",
    "commutator",
    "inverse",
    "LEGS",
]

#: Exact rational scalar used for all entries.  `fractions.Fraction` already
#: guarantees the invariants we need: lowest terms, positive denominator,
#: exact field arithmetic, and an error on division by zero.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

#: Valid tensor-leg tags for :func:`embed`.
LEGS = (12, 13, 23)


def as_rational(value) -> Fraction:
    """Coerce ints, strings like ``'-3/4'`` and Fractions to a Fraction.

    Floats are rejected on purpose: converting a binary float would smuggle
    rounding error into checks that are meant to be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"expected an exact rational (int, str or Fraction), got {type(value).__name__}"
    )


def linear_index(multi: Sequence[int], n: int) -> int:
    """0-based linear offset of a 1-based multi-index."""
    lin = 0
    for i in multi:
        if not 1 <= i <= n:
            raise IndexError(f"index {i} out of range 1..{n}")
        lin = lin * n + (i - 1)
    return lin


def multi_index(lin: int, n: int, arity: int) -> tuple[int, ...]:
    """1-based multi-index of a 0-based linear offset (inverse of linear_index)."""
    out = []
    for _ in range(arity):
        lin, rem = divmod(lin, n)
        out.append(rem + 1)
    return tuple(reversed(out))


class Operator:
    """Square matrix of exact rationals on V^(tensor arity), dim V = n.

    ``entries`` is a read-only numpy object array of Fractions.  ``family``
    optionally records the construction recipe for reporting and is ignored
    by equality.
    """

    __slots__ = ("n", "arity", "entries", "family")

    def __init__(self, n: int, arity: int, entries, family=None):
        if arity not in (1, 2, 3):
            raise ValueError(f"arity must be 1, 2 or 3, got {arity}")
        if n < 1:
            raise ValueError(f"dimension must be positive, got {n}")
        size = n**arity
        data = [[as_rational(v) for v in row] for row in entries]
        if len(data) != size or any(len(row) != size for row in data):
            raise ValueError(f"expected a {size}x{size} array for n={n}, arity={arity}")
        arr = np.array(data, dtype=object)
        arr.flags.writeable = False
        self.n = n
        self.arity = arity
        self.entries = arr
        self.family = family

    @classmethod
    def _wrap(cls, n: int, arity: int, arr: np.ndarray, family=None) -> "Operator":
        # trusted constructor: arr entries are already exact rationals
        op = object.__new__(cls)
        arr.flags.writeable = False
        op.n = n
        op.arity = arity
        op.entries = arr
        op.family = family
        return op

    @classmethod
    def zero(cls, n: int, arity: int) -> "Operator":
        size = n**arity
        return cls._wrap(n, arity, np.full((size, size), _ZERO, dtype=object))

    @classmethod
    def identity(cls, n: int, arity: int) -> "Operator":
        size = n**arity
        arr = np.full((size, size), _ZERO, dtype=object)
        np.fill_diagonal(arr, _ONE)
        return cls._wrap(n, arity, arr)

    @classmethod
    def from_items(cls, n: int, arity: int, items) -> "Operator":
        """Accumulate ``(row_multi, col_multi, value)`` triples into an operator.

        Repeated positions add up, matching how the matrix families are
        written as sums of elementary terms.
        """
        size = n**arity
        rows = [[_ZERO] * size for _ in range(size)]
        for row_multi, col_multi, value in items:
            r = linear_index(row_multi, n)
            c = linear_index(col_multi, n)
            rows[r][c] = rows[r][c] + as_rational(value)
        return cls._wrap(n, arity, np.array(rows, dtype=object))

    # -- basic structure ------------------------------------------------

    @property
    def size(self) -> int:
        return self.n**self.arity

    def entry(self, row, col) -> Fraction:
        """Entry at 1-based multi-indices (plain ints are allowed at arity 1)."""
        r = (row,) if isinstance(row, int) else tuple(row)
        c = (col,) if isinstance(col, int) else tuple(col)
        if len(r) != self.arity or len(c) != self.arity:
            raise IndexError(f"multi-index must have {self.arity} components")
        return self.entries[linear_index(r, self.n), linear_index(c, self.n)]

    def with_family(self, family) -> "Operator":
        return Operator._wrap(self.n, self.arity, self.entries, family)

    def nonzero_items(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Fraction]]:
        """Yield (row_multi, col_multi, value) for every nonzero entry, row-major."""
        n, k = self.n, self.arity
        for r, row in enumerate(self.entries.tolist()):
            for c, v in enumerate(row):
                if v:
                    yield multi_index(r, n, k), multi_index(c, n, k), v

    def first_nonzero(self):
        """Lexicographically first nonzero entry, or None if the operator is zero."""
        for item in self.nonzero_items():
            return item
        return None

    def is_zero(self) -> bool:
        return not any(v for row in self.entries.tolist() for v in row)

    def max_abs(self) -> Fraction:
        return max((abs(v) for row in self.entries.tolist() for v in row), default=_ZERO)

    # -- arithmetic ------------------------------------------------------

    def _check_same_space(self, other: "Operator", what: str) -> None:
        if self.n != other.n or self.arity != other.arity:
            raise ValueError(
                f"{what} requires matching operators, got n={self.n}, arity={self.arity} "
                f"vs n={other.n}, arity={other.arity}"
            )

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_same_space(other, "addition")
        return Operator._wrap(self.n, self.arity, self.entries + other.entries)

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_same_space(other, "subtraction")
        return Operator._wrap(self.n, self.arity, self.entries - other.entries)

    def __neg__(self):
        return Operator._wrap(self.n, self.arity, -self.entries)

    def __mul__(self, scalar):
        if isinstance(scalar, Operator):
            raise TypeError("use @ for operator composition, * is scalar multiplication")
        s = as_rational(scalar)
        return Operator._wrap(self.n, self.arity, self.entries * s)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_same_space(other, "composition")
        size = self.size
        # The families built here are mostly zeros, so skipping zero entries
        # beats dense object-dtype np.dot by orders of magnitude.
        brows = [[(j, v) for j, v in enumerate(row) if v] for row in other.entries.tolist()]
        out = []
        for arow in self.entries.tolist():
            orow = [_ZERO] * size
            for k, av in enumerate(arow):
                if av:
                    for j, bv in brows[k]:
                        orow[j] = orow[j] + av * bv
            out.append(orow)
        return Operator._wrap(self.n, self.arity, np.array(out, dtype=object))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("operator powers must be non-negative integers")
        result = Operator.identity(self.n, self.arity)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return (
            self.n == other.n
            and self.arity == other.arity
            and bool(np.array_equal(self.entries, other.entries))
        )

    __hash__ = None  # mutable-looking payload; exact equality is entrywise

    def __repr__(self):
        return f"Operator(n={self.n}, arity={self.arity}, size={self.size})"

    # -- linear-algebra helpers -------------------------------------------

    def trace(self) -> Fraction:
        return sum((self.entries[i, i] for i in range(self.size)), _ZERO)

    def transpose(self) -> "Operator":
        return Operator._wrap(self.n, self.arity, self.entries.T.copy())

    def to_float(self) -> np.ndarray:
        """Entrywise exact cast to double precision."""
        return np.array([[float(v) for v in row] for row in self.entries.tolist()])

    def det(self) -> Fraction:
        """Exact determinant.

        Denominators are cleared row by row and the integer matrix is reduced
        by fraction-free (Bareiss) elimination, which keeps intermediate
        values polynomially sized instead of letting rational numerators and
        denominators blow up mid-elimination.
        """
        size = self.size
        scale = 1
        m = []
        for row in self.entries.tolist():
            d = 1
            for v in row:
                d = lcm(d, v.denominator)
            scale *= d
            m.append([int(v * d) for v in row])
        sign = 1
        prev = 1
        for k in range(size - 1):
            if m[k][k] == 0:
                for i in range(k + 1, size):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return _ZERO
            pivot = m[k][k]
            rk = m[k]
            for i in range(k + 1, size):
                ri = m[i]
                mik = ri[k]
                for j in range(k + 1, size):
                    ri[j] = (ri[j] * pivot - mik * rk[j]) // prev
                ri[k] = 0
            prev = pivot
        return Fraction(sign * m[-1][-1], scale)

    def inverse(self) -> "Operator":
        """Exact inverse via Gauss-Jordan elimination; raises on singular input."""
        size = self.size
        a = [row[:] for row in self.entries.tolist()]
        inv = [[_ONE if i == j else _ZERO for j in range(size)] for i in range(size)]
        for col in range(size):
            pivot_row = next((r for r in range(col, size) if a[r][col]), None)
            if pivot_row is None:
                raise ValueError("matrix is singular, cannot invert")
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            pivot = a[col][col]
            a[col] = [v / pivot for v in a[col]]
            inv[col] = [v / pivot for v in inv[col]]
            for r in range(size):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return Operator._wrap(self.n, self.arity, np.array(inv, dtype=object))

    def charpoly(self) -> tuple[Fraction, ...]:
        """Coefficients (c0=1, c1, ..., cN) of det(x*I - A) = sum c_k x^(N-k).

        Faddeev-LeVerrier recursion; exact because the only divisions are by
        the integers 1..N.
        """
        eye = Operator.identity(self.n, self.arity)
        coeffs = [_ONE]
        m = eye
        for k in range(1, self.size + 1):
            am = self @ m
            c = -am.trace() / k
            coeffs.append(c)
            m = am + c * eye
        return tuple(coeffs)


def identity(n: int, arity: int = 1) -> Operator:
    return Operator.identity(n, arity)


def zero(n: int, arity: int = 1) -> Operator:
    return Operator.zero(n, arity)


def matrix_unit(i: int, j: int, n: int) -> Operator:
    """The matrix unit e^i_j sending basis vector j to basis vector i (1-based)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"matrix unit indices must lie in 1..{n}, got ({i}, {j})")
    return Operator.from_items(n, 1, [((i,), (j,), _ONE)])


def permutation(n: int) -> Operator:
    """The flip P on V tensor V: P (x tensor y) = y tensor x."""
    return Operator.from_items(
        n, 2, (((i, j), (j, i), _ONE) for i in range(1, n + 1) for j in range(1, n + 1))
    )


def kron(a: Operator, b: Operator) -> Operator:
    """Tensor (Kronecker) product, leftmost factor most significant."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch in tensor product: {a.n} vs {b.n}")
    arity = a.arity + b.arity
    if arity > 3:
        raise ValueError(f"arity overflow: {a.arity} + {b.arity} exceeds the supported maximum 3")
    bsize = b.size
    size = a.size * bsize
    rows = [[_ZERO] * size for _ in range(size)]
    bitems = [
        (r, c, v)
        for r, row in enumerate(b.entries.tolist())
        for c, v in enumerate(row)
        if v
    ]
    for ra, rowa in enumerate(a.entries.tolist()):
        for ca, va in enumerate(rowa):
            if va:
                base_r = ra * bsize
                base_c = ca * bsize
                for rb, cb, vb in bitems:
                    rows[base_r + rb][base_c + cb] = va * vb
    return Operator._wrap(a.n, arity, np.array(rows, dtype=object))


def embed(r: Operator, legs) -> Operator:
    """Place an arity-2 operator on two factors of V^(tensor 3).

    ``legs`` is 12, 13 or 23 (int or string); the remaining factor carries
    the identity.  For legs 13 the identity sits in the middle slot.
    """
    if r.arity != 2:
        raise ValueError("embed expects an arity-2 operator")
    try:
        leg = int(legs)
    except (TypeError, ValueError):
        raise ValueError(f"invalid leg tag {legs!r}; expected one of {LEGS}") from None
    n = r.n
    if leg == 12:
        return kron(r, Operator.identity(n, 1))
    if leg == 23:
        return kron(Operator.identity(n, 1), r)
    if leg == 13:
        items = []
        for (i, j), (k, l), v in r.nonzero_items():
            for a in range(1, n + 1):
                items.append(((i, a, j), (k, a, l), v))
        return Operator.from_items(n, 3, items)
    raise ValueError(f"invalid leg tag {legs!r}; expected one of {LEGS}")


def flip21(r: Operator) -> Operator:
    """Conjugate an arity-2 operator by the flip: r21 = P r P."""
    if r.arity != 2:
        raise ValueError("flip21 expects an arity-2 operator")
    n = r.n
    # (r21)^{(i,j)}_{(k,l)} = r^{(j,i)}_{(l,k)}: swap the two factors on both
    # sides by reindexing, no arithmetic needed.
    four = r.entries.reshape(n, n, n, n).transpose(1, 0, 3, 2)
    arr = np.ascontiguousarray(four).reshape(n * n, n * n)
    return Operator._wrap(n, 2, arr)


def wedge(x: Operator, y: Operator) -> Operator:
    """x wedge y = x tensor y - y tensor x for arity-1 operators."""
    if x.arity != 1 or y.arity != 1:
        raise ValueError("wedge expects arity-1 operators")
    if x.n != y.n:
        raise ValueError(f"dimension mismatch in wedge: {x.n} vs {y.n}")
    return kron(x, y) - kron(y, x)


def conjugate_pair(a: Operator, x: Operator) -> Operator:
    """Change of basis on both tensor factors: (X tensor X) a (X^-1 tensor X^-1)."""
    if a.arity != 2:
        raise ValueError("conjugate_pair expects an arity-2 operator")
    if x.arity != 1:
        raise ValueError("conjugate_pair expects an arity-1 basis-change matrix")
    if a.n != x.n:
        raise ValueError(f"dimension mismatch in conjugation: {a.n} vs {x.n}")
    xinv = x.inverse()
    return kron(x, x) @ a @ kron(xinv, xinv)


def commutator(a: Operator, b: Operator) -> Operator:
    """[a, b] = a b - b a."""
    return a @ b - b @ a


def inverse(x: Operator) -> Operator:
    """Exact inverse; raises ValueError on singular input."""
    return x.inverse()

"""Exact scalar arithmetic, dense matrix rank/kernel, and sparse multivariate polynomials.

Two ground fields are supported: arbitrary-precision rationals and prime
fields GF(p).  All values are immutable after construction and every
operation is pure, so everything here is safe to share across threads.

Rank computation is deliberately boring: deterministic first-nonzero
pivoting, fraction-free (Bareiss) elimination over the rationals, ordinary
elimination over prime fields (vectorised with int64 numpy when p < 2^31,
pure Python above).  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "FieldMismatchError",
    "QQ",
    "PrimeField",
    "RationalField",
    "Scalar",
    "Matrix",
    "MPoly",
    "monomials",
    "binomial",
    "rank",
    "kernel_dim",
    "poly_eval",
    "poly_diff",
]

# numpy elimination needs p*p to fit in int64.
_NUMPY_PRIME_LIMIT = 1 << 31
_PRIME_LIMIT = 1 << 62
_PRIMALITY_CHECK_LIMIT = 1 << 31


class FieldMismatchError(ValueError):
    """Raised when scalars from different fields meet in one operation."""


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with C(a,b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of arbitrary-precision rationals (a singleton, use QQ)."""

    is_prime_field = False

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.raw(value))

    def raw(self, value) -> Fraction:
        """Coerce to the internal representation (Fraction keeps lowest
        terms and a positive denominator)."""
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatchError("scalar belongs to a different field")
            return value.value
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, Fraction(0))

    @property
    def one(self) -> "Scalar":
        return Scalar(self, Fraction(1))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


class PrimeField:
    """GF(p) with residues stored in [0, p).

    Primality is verified at construction for p < 2^31; larger moduli (up
    to 62 bits) must be vouched for with ``trust_prime=True``.
    """

    is_prime_field = True

    def __init__(self, p: int, trust_prime: bool = False):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        if p >= _PRIME_LIMIT:
            raise ValueError(f"modulus {p} exceeds the 62-bit cap")
        if p < _PRIMALITY_CHECK_LIMIT:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        elif not trust_prime:
            raise ValueError(
                f"modulus {p} is above the primality-check limit; "
                "pass trust_prime=True to accept it unverified"
            )
        self.p = p

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.raw(value))

    def raw(self, value) -> int:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError("scalar belongs to a different field")
            return value.value
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.raw(value.numerator) * self.inv(self.raw(value.denominator)) % self.p
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, 0)

    @property
    def one(self) -> "Scalar":
        return Scalar(self, 1 % self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))


Field = Union[RationalField, PrimeField]


def _same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"mixed fields {a!r} and {b!r}")


@dataclass(frozen=True)
class Scalar:
    """A single exact field element: a Fraction over QQ, a residue in GF(p)."""

    field: Field
    value: Union[Fraction, int]

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            _same_field(self.field, other.field)
            return other
        return Scalar(self.field, self.field.raw(other))

    def __add__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field.sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(o.value)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.raw(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.value}"


class Matrix:
    """Dense matrix over one exact field, row-major and immutable.

    Entries are stored raw (ints or Fractions); the ``entries`` property
    exposes them as Scalars.
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"entry count {len(entries)} does not match {rows}x{cols}"
            )
        data = []
        for e in entries:
            if isinstance(e, Scalar):
                _same_field(field, e.field)
                data.append(e.value)
            else:
                data.append(field.raw(e))
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(field, nrows, ncols, flat)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        flat = [field.one if i == j else field.zero for i in range(n) for j in range(n)]
        return cls(field, n, n, flat)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [0] * (rows * cols))

    @property
    def entries(self) -> list:
        return [Scalar(self.field, v) for v in self._data]

    def at(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self._data[i * self.cols + j])

    def raw_rows(self) -> list:
        c = self.cols
        return [list(self._data[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        flat = [self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.field, self.cols, self.rows, flat)

    def rank(self) -> int:
        return rank(self)

    def kernel_dim(self) -> int:
        return kernel_dim(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"


def _rank_modp_numpy(rows: list, p: int) -> int:
    """Row rank over GF(p) by vectorised elimination; needs p < 2^31."""
    if not rows or not rows[0]:
        return 0
    a = np.array(rows, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])  # first nonzero in column order
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = a[r + 1 :, c]
        mask = below != 0
        if mask.any():
            a[r + 1 :, c:][mask] = (
                a[r + 1 :, c:][mask] - np.outer(below[mask], a[r, c:])
            ) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_modp_python(rows: list, p: int) -> int:
    """Row rank over GF(p), pure Python (used for 62-bit moduli)."""
    m = [[v % p for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        prow = [v * inv % p for v in m[r]]
        m[r] = prow
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                mi = m[i]
                for j in range(c, ncols):
                    mi[j] = (mi[j] - f * prow[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_bareiss(rows: list) -> int:
    """Row rank of an integer matrix by fraction-free elimination.

    Intermediate entries stay integers (each is a minor of the input), so
    there is no rational blowup and no precision loss.
    """
    m = [list(map(int, row)) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            for j in range(c + 1, ncols):
                mi[j] = (mi[j] * pivot - f * mr[j]) // prev
            mi[c] = 0
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def _rows_to_integers(rows: list) -> list:
    """Clear denominators row by row (rank is unchanged)."""
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def rank(m: Matrix) -> int:
    """Row rank of `m` over its field."""
    rows = m.raw_rows()
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.is_prime_field:
        p = m.field.p
        if p < _NUMPY_PRIME_LIMIT:
            return _rank_modp_numpy(rows, p)
        return _rank_modp_python(rows, p)
    return _rank_bareiss(_rows_to_integers(rows))


def kernel_dim(m: Matrix) -> int:
    """Dimension of the right kernel: cols - rank."""
    return m.cols - rank(m)


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form (exact), returned as (rows, pivot_columns).

    Used for canonical null spaces and small inversions; not a performance
    path, so it runs in plain field arithmetic for every field.
    """
    f = m.field
    a = m.raw_rows()
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(v, inv) for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                fct = a[i][c]
                a[i] = [f.sub(v, f.mul(fct, w)) for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def null_space(m: Matrix) -> list:
    """Canonical basis of the right kernel {x : m x = 0}, as raw row vectors.

    One basis vector per free column, in increasing column order; entry at
    the free column is 1.  Deterministic, so downstream constructions that
    depend on the choice of complement are reproducible.
    """
    f = m.field
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    one = f.raw(1)
    zero = f.raw(0)
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(a[r][fc])
        basis.append(v)
    return basis


def invert(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    f = m.field
    n = m.rows
    aug_rows = []
    for i, row in enumerate(m.raw_rows()):
        ident = [f.raw(1) if j == i else f.raw(0) for j in range(n)]
        aug_rows.append(row + ident)
    aug = Matrix.from_rows(f, aug_rows)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv_rows = [row[n:] for row in red[:n]]
    return Matrix.from_rows(f, inv_rows)


def monomials(v: int, m: int) -> list:
    """All degree-m exponent vectors in v variables, graded-lex order.

    Within the fixed degree m the order is lexicographic descending on the
    exponent vector, e.g. (3,0), (2,1), (1,2), (0,3) for v=2, m=3; the list
    has length C(v-1+m, m).  This order is the single global convention for
    evaluation-matrix columns and quadratic-embedding coordinates.
    """
    if v < 1:
        raise ValueError("need at least one variable")
    if m < 0:
        raise ValueError("degree must be nonnegative")
    out = []

    def rec(prefix: tuple, remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), m, v)
    return out


def monomial_values(field: Field, point: Sequence, m: int) -> list:
    """Values of all degree-m monomials at `point`, aligned with monomials().

    Computed level by level (each monomial is a variable times a lower-degree
    one), so the cost is one multiplication per table entry.
    """
    v = len(point)
    pt = [field.raw(x) for x in point]
    mul = field.mul
    level = {(0,) * v: field.raw(1)}
    for deg in range(1, m + 1):
        nxt = {}
        for e in monomials(v, deg):
            i = next(k for k, ek in enumerate(e) if ek > 0)
            parent = e[:i] + (e[i] - 1,) + e[i + 1 :]
            nxt[e] = mul(level[parent], pt[i])
        level = nxt
    return [level[e] for e in monomials(v, m)]


class MPoly:
    """Sparse multivariate polynomial with exact coefficients.

    Terms map exponent tuples (length nvars) to nonzero raw coefficients.
    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, coeff in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp}")
                c = field.raw(coeff)
                if c != 0:
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "MPoly":
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: Field, nvars: int, c) -> "MPoly":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(field, nvars, {exp: 1})

    @classmethod
    def monomial(cls, field: Field, exp: Sequence[int], coeff=1) -> "MPoly":
        exp = tuple(exp)
        return cls(field, len(exp), {exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other: "MPoly") -> None:
        _same_field(self.field, other.field)
        if self.nvars != other.nvars:
            raise ValueError("operand variable counts differ")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(terms.get(e, f.raw(0)), c)
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        out = MPoly.zero(f, self.nvars)
        out.terms = terms
        return out

    def __neg__(self) -> "MPoly":
        f = self.field
        out = MPoly.zero(f, self.nvars)
        out.terms = {e: f.neg(c) for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        f = self.field
        if not isinstance(other, MPoly):
            c = f.raw(other)
            out = MPoly.zero(f, self.nvars)
            if c != 0:
                out.terms = {e: f.mul(v, c) for e, v in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(terms.get(e, f.raw(0)), f.mul(c1, c2))
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = MPoly.zero(f, self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        return self * c

    def eval(self, point: Sequence) -> Scalar:
        return poly_eval(self, point)

    def diff(self, var: int) -> "MPoly":
        return poly_diff(self, var)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MPoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            mono = "*".join(
                f"x{i}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k > 0
            )
            bits.append(f"{self.terms[e]}{'*' + mono if mono else ''}")
        return "MPoly(" + " + ".join(bits) + ")"


def poly_eval(f: MPoly, point: Sequence) -> Scalar:
    """Exact evaluation of f at `point` (length must equal nvars)."""
    if len(point) != f.nvars:
        raise ValueError(f"point length {len(point)} != nvars {f.nvars}")
    fld = f.field
    pt = [fld.raw(x) for x in point]
    total = fld.raw(0)
    for exp, coeff in f.terms.items():
        v = coeff
        for x, e in zip(pt, exp):
            if e:
                v = fld.mul(v, pow(x, e) if not fld.is_prime_field else pow(x, e, fld.p))
        total = fld.add(total, v)
    return Scalar(fld, total)


def poly_diff(f: MPoly, var: int) -> MPoly:
    """Formal partial derivative of f with respect to variable `var`."""
    if not 0 <= var < f.nvars:
        raise ValueError("variable index out of range")
    fld = f.field
    terms = {}
    for exp, coeff in f.terms.items():
        e = exp[var]
        if e == 0:
            continue
        nexp = exp[:var] + (e - 1,) + exp[var + 1 :]
        c = fld.mul(coeff, fld.raw(e))
        if c != 0:
            terms[nexp] = fld.add(terms.get(nexp, fld.raw(0)), c)
    out = MPoly.zero(fld, f.nvars)
    out.terms = {e: c for e, c in terms.items() if c != 0}
    return out

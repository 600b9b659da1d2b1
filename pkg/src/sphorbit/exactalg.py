"""Exact scalar arithmetic and exact linear algebra over Q[i][pi, 1/pi].

Everything downstream (Lie brackets, stabilizer solves, Weyl-algebra
coefficients) runs on the scalars defined here.  A scalar is a Laurent
polynomial in a formal transcendental ``pi`` whose coefficients are
Gaussian rationals a + b*i with a, b in Q.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational, got %r" % (x,))


class ExactScalar:
    """An element of Q[i][pi, 1/pi] in canonical form.

    Stored as a sorted tuple of terms (degree, re, im) with (re, im) != (0, 0);
    ``degree`` is the power of the formal pi (negative powers arise only from
    the inverse Fourier scaling 1/(2*i*pi)).  Equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[int, Fraction, Fraction]] = ()):
        # canonicalize: merge duplicate degrees, drop zero terms, sort
        acc: dict[int, tuple[Fraction, Fraction]] = {}
        for d, re, im in terms:
            ore, oim = acc.get(d, (_F0, _F0))
            acc[d] = (ore + re, oim + im)
        clean = tuple(
            (d, re, im) for d, (re, im) in sorted(acc.items()) if re or im
        )
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, x) -> "ExactScalar":
        x = _as_fraction(x)
        return cls(((0, x, _F0),)) if x else ZERO

    @classmethod
    def gaussian(cls, re, im) -> "ExactScalar":
        return cls(((0, _as_fraction(re), _as_fraction(im)),))

    @classmethod
    def pi_power(cls, degree: int, re=1, im=0) -> "ExactScalar":
        return cls(((degree, _as_fraction(re), _as_fraction(im)),))

    @staticmethod
    def coerce(x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        return ExactScalar.rational(x)

    # -- predicates --------------------------------------------------------

    @property
    def terms(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        if not self._terms:
            return True
        if len(self._terms) != 1:
            return False
        d, _re, im = self._terms[0]
        return d == 0 and not im

    def rational_value(self) -> Fraction:
        if self.is_zero():
            return _F0
        if not self.is_rational():
            raise ValueError("scalar %s is not rational" % self)
        return self._terms[0][1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = ExactScalar.coerce(other)
        return ExactScalar(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(tuple((d, -re, -im) for d, re, im in self._terms))

    def __sub__(self, other):
        return self + (-ExactScalar.coerce(other))

    def __rsub__(self, other):
        return ExactScalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = ExactScalar.coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        out = []
        for d1, a, b in self._terms:
            for d2, c, dd in other._terms:
                # (a+bi)(c+di)
                out.append((d1 + d2, a * c - b * dd, a * dd + b * c))
        return ExactScalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        """Invert a single-term scalar (a+bi)*pi^d; general Laurent
        polynomials are not units of the coefficient ring."""
        if len(self._terms) != 1:
            raise ZeroDivisionError("cannot invert %s" % self)
        d, a, b = self._terms[0]
        nrm = a * a + b * b
        return ExactScalar(((-d, a / nrm, -b / nrm),))

    def __truediv__(self, other):
        return self * ExactScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = ONE
        for _ in range(exponent):
            out = out * self
        return out

    # -- equality / hashing / display -------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.rational(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return "ExactScalar(%s)" % self.serialize()

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, re, im in self._terms:
            if im == 0:
                coef = str(re)
            elif re == 0:
                coef = "(%s)i" % im
            else:
                coef = "(%s+(%s)i)" % (re, im)
            if d == 0:
                parts.append(coef)
            elif d == 1:
                parts.append("%s·π" % coef)
            else:
                parts.append("%s·π^%d" % (coef, d))
        return " + ".join(parts)

    def serialize(self) -> str:
        """Bit-exact text form: ';'-joined terms 'deg:re:im'."""
        if not self._terms:
            return "0"
        return ";".join("%d:%s:%s" % (d, re, im) for d, re, im in self._terms)

    @classmethod
    def deserialize(cls, text: str) -> "ExactScalar":
        if text == "0":
            return ZERO
        terms = []
        for chunk in text.split(";"):
            d, re, im = chunk.split(":")
            terms.append((int(d), Fraction(re), Fraction(im)))
        return cls(terms)


ZERO = ExactScalar(())
ONE = ExactScalar(((0, _F1, _F0),))
I = ExactScalar(((0, _F0, _F1),))
PI = ExactScalar(((1, _F1, _F0),))
TWO_I_PI = ExactScalar(((1, _F0, Fraction(2)),))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class ExactMatrix:
    """Dense matrix over ExactScalar with exact rank / kernel / determinant.

    A fast path keeps all-rational matrices on plain Fractions; the generic
    path pivots on invertible (single-term) scalars.
    """

    __slots__ = ("rows", "nrows", "ncols", "_frac")

    def __init__(self, rows: Sequence[Sequence]):
        normalized = tuple(
            tuple(ExactScalar.coerce(e) for e in row) for row in rows
        )
        self.rows = normalized
        self.nrows = len(normalized)
        self.ncols = len(normalized[0]) if normalized else 0
        for row in normalized:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")
        self._frac = None

    # -- construction helpers ---------------------------------------------

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> ExactScalar:
        return self.rows[i][j]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def fraction_rows(self):
        """All-rational view as Fractions; raises on pi or i entries."""
        if self._frac is None:
            self._frac = tuple(
                tuple(e.rational_value() for e in row) for row in self.rows
            )
        return self._frac

    def is_rational(self) -> bool:
        return all(e.is_rational() for row in self.rows for e in row)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        self._check(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "ExactMatrix":
        c = ExactScalar.coerce(c)
        return ExactMatrix([[a * c for a in row] for row in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        if self.is_rational() and other.is_rational():
            a = self.fraction_rows()
            b = other.fraction_rows()
            bcols = list(zip(*b))
            out = []
            for arow in a:
                nz = [(j, v) for j, v in enumerate(arow) if v]
                out.append(
                    [
                        sum((v * bcols[jc][j] for j, v in nz), _F0)
                        for jc in range(other.ncols)
                    ]
                )
            return ExactMatrix(out)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = ZERO
                for l in range(self.ncols):
                    a = self.rows[i][l]
                    if a:
                        acc = acc + a * other.rows[l][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def trace(self) -> ExactScalar:
        acc = ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "ExactMatrix(%d×%d)" % (self.nrows, self.ncols)

    def _check(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    # -- exact linear algebra ---------------------------------------------

    def rank(self) -> int:
        return len(_rref(self._work_rows())[0])

    def rref(self):
        """Reduced rows (list of Fraction tuples) and pivot column list."""
        pivots, rows = _rref(self._work_rows())
        return rows, pivots

    def right_kernel(self) -> list[tuple]:
        """Basis of {v : M v = 0}, vectors as tuples of Fractions."""
        pivots, rows = _rref(self._work_rows())
        n = self.ncols
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            v = [_F0] * n
            v[f] = _F1
            for r, p in zip(rows, pivots):
                v[p] = -r[f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = [
            list(row) + [_F1 if i == j else _F0 for j in range(n)]
            for i, row in enumerate(self.fraction_rows())
        ]
        pivots, rows = _rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix not invertible")
        return ExactMatrix([row[n:] for row in rows])

    def det_sign(self) -> int:
        return det_sign_rational(self)

    def _work_rows(self):
        if self.is_rational():
            return [list(r) for r in self.fraction_rows()]
        raise NotImplementedError(
            "elimination over non-rational scalars is not needed by any caller"
        )


def _rref(rows):
    """In-place fraction Gauss-Jordan with zero-skipping; returns
    (pivot columns, reduced nonzero rows)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [e * inv for e in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor:
                rows[i] = [e - factor * p for e, p in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, rows[:r]


def nullspace(m: ExactMatrix) -> list[tuple[ExactScalar, ...]]:
    """Right kernel of m, as vectors of ExactScalar."""
    return [
        tuple(ExactScalar.rational(x) for x in v) for v in m.right_kernel()
    ]


def det_sign_rational(m: ExactMatrix) -> int:
    """Sign of det(m) by fraction-free (Bareiss) elimination on an
    integer-scaled copy.  Requires square, rational entries."""
    if m.nrows != m.ncols:
        raise ValueError("determinant needs a square matrix")
    if not m.is_rational():
        raise ValueError("det_sign_rational needs rational entries")
    n = m.nrows
    if n == 0:
        return 1
    # scale each row to integers; positive scaling preserves the sign
    work = []
    for row in m.fraction_rows():
        lcm = 1
        for e in row:
            lcm = lcm * e.denominator // _gcd(lcm, e.denominator)
        work.append([int(e * lcm) for e in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        if not work[c][c]:
            for i in range(c + 1, n):
                if work[i][c]:
                    work[c], work[i] = work[i], work[c]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                work[i][j] = (work[i][j] * work[c][c] - work[i][c] * work[c][j]) // prev
            work[i][c] = 0
        prev = work[c][c]
    d = work[n - 1][n - 1]
    if d == 0:
        return 0
    return sign if d > 0 else -sign


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# subspaces of Q^N
# ---------------------------------------------------------------------------


class Subspace:
    """A rational subspace of Q^N held in reduced row echelon form, so
    equality of subspaces is equality of representations."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        rows = []
        for v in vectors:
            row = [
                e.rational_value() if isinstance(e, ExactScalar) else _as_fraction(e)
                for e in v
            ]
            if len(row) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
            rows.append(row)
        pivots, reduced = _rref(rows) if rows else ([], [])
        self.basis = tuple(tuple(r) for r in reduced)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v) -> bool:
        row = [
            e.rational_value() if isinstance(e, ExactScalar) else _as_fraction(e)
            for e in v
        ]
        for brow, p in zip(self.basis, self.pivots):
            coef = row[p]
            if coef:
                row = [x - coef * b for x, b in zip(row, brow)]
        return not any(row)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        # columns = our basis then other's basis; kernel rows give relations
        stacked = ExactMatrix(
            [
                [
                    (self.basis[i][c] if i < self.dim else -other.basis[i - self.dim][c])
                    for i in range(self.dim + other.dim)
                ]
                for c in range(self.ambient_dim)
            ]
        )
        vecs = []
        for rel in stacked.right_kernel():
            coefs = rel[: self.dim]
            v = [_F0] * self.ambient_dim
            for c, brow in zip(coefs, self.basis):
                if c:
                    v = [x + c * b for x, b in zip(v, brow)]
            vecs.append(v)
        return Subspace(self.ambient_dim, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of Q^%d)" % (self.dim, self.ambient_dim)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Sum, intersection, mutual containment and dimensions in one report."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    s = a.sum(b)
    i = a.intersection(b)
    return {
        "sum": s,
        "intersection": i,
        "contains": a.contains(b),
        "dim": (a.dim, b.dim, s.dim, i.dim),
    }

"""The sl_n(R) Chevalley system: roots, root vectors, brackets, the trace
form, composite roots beta_{i,j}, the order-4 elements w_alpha^2, and
unipotent exponentials.

Concrete model: sl_n is the space of traceless n x n matrices, the root
eps_i - eps_j corresponds to the elementary matrix E_{ij}, and
H_{alpha_k} = E_{kk} - E_{k+1,k+1}.  Group elements live in SL_n(R); the
two-fold cover is carried as character data elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import ExactMatrix, ExactScalar, Subspace, ZERO, ONE

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class Root:
    """The root eps_i - eps_j (1-based indices, i != j)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise ValueError("bad root indices (%d, %d)" % (self.i, self.j))

    @property
    def positive(self) -> bool:
        return self.i < self.j

    @property
    def simple(self) -> bool:
        return self.j == self.i + 1

    def __neg__(self) -> "Root":
        return Root(self.j, self.i)

    def __str__(self):
        return "e%d-e%d" % (self.i, self.j)


def simple_root(k: int) -> Root:
    """alpha_k = eps_k - eps_{k+1}."""
    return Root(k, k + 1)


def composite_root(i: int, j: int) -> Root:
    """beta_{i,j} = alpha_i + ... + alpha_j = eps_i - eps_{j+1}, i <= j."""
    if not 1 <= i <= j:
        raise ValueError("need 1 <= i <= j")
    return Root(i, j + 1)


def beta(i: int, n: int) -> Root:
    """beta_i = beta_{i,n-i} = eps_i - eps_{n-i+1}."""
    return composite_root(i, n - i)


def cartan_pairing(r: Root, k: int) -> int:
    """<r, alpha_k^v> = r(H_{alpha_k}), the Cartan integer."""

    def coef(idx):
        if idx == r.i:
            return 1
        if idx == r.j:
            return -1
        return 0

    return coef(k) - coef(k + 1)


class LieElement:
    """Traceless n x n matrix, an element of sl_n."""

    __slots__ = ("n", "matrix")

    def __init__(self, n: int, matrix: ExactMatrix):
        if matrix.shape != (n, n):
            raise ValueError("matrix shape does not match n")
        if not matrix.trace().is_zero():
            raise ValueError("matrix has nonzero trace")
        self.n = n
        self.matrix = matrix

    @classmethod
    def from_rows(cls, rows) -> "LieElement":
        m = ExactMatrix(rows)
        return cls(m.nrows, m)

    @classmethod
    def zero(cls, n: int) -> "LieElement":
        return cls(n, ExactMatrix.zero(n, n))

    def __add__(self, other):
        self._check(other)
        return LieElement(self.n, self.matrix + other.matrix)

    def __sub__(self, other):
        self._check(other)
        return LieElement(self.n, self.matrix - other.matrix)

    def __neg__(self):
        return LieElement(self.n, -self.matrix)

    def scale(self, c) -> "LieElement":
        return LieElement(self.n, self.matrix.scale(c))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_nilpotent(self) -> bool:
        p = self.matrix
        for _ in range(self.n - 1):
            if p.is_zero():
                return True
            p = p @ self.matrix
        return p.is_zero()

    def flat(self):
        """Coordinates in the n^2 matrix-entry basis, as Fractions."""
        return tuple(e for row in self.matrix.fraction_rows() for e in row)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.n, self.matrix))

    def __repr__(self):
        return "LieElement(n=%d, %s)" % (self.n, format_element(self))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch")


def root_vector(n: int, r: Root) -> LieElement:
    """X_{eps_i - eps_j} = E_{ij}."""
    if r.i > n or r.j > n:
        raise ValueError("root out of range for sl_%d" % n)
    rows = [[ZERO] * n for _ in range(n)]
    rows[r.i - 1][r.j - 1] = ONE
    return LieElement(n, ExactMatrix(rows))


def E(n: int, i: int, j: int) -> LieElement:
    return root_vector(n, Root(i, j))


def cartan_element(n: int, k: int) -> LieElement:
    """H_{alpha_k} = E_{kk} - E_{k+1,k+1}."""
    if not 1 <= k <= n - 1:
        raise ValueError("k out of range")
    rows = [[ZERO] * n for _ in range(n)]
    rows[k - 1][k - 1] = ONE
    rows[k][k] = -ONE
    return LieElement(n, ExactMatrix(rows))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    x._check(y)
    return LieElement(x.n, (x.matrix @ y.matrix) - (y.matrix @ x.matrix))


def trace_form(x: LieElement, y: LieElement) -> ExactScalar:
    """tr(xy); the Killing form of sl_n is 2n times this."""
    x._check(y)
    return (x.matrix @ y.matrix).trace()


KILLING_SCALE = "Killing = 2n * trace_form on sl_n"


def format_element(x: LieElement) -> str:
    """Basis-name rendering: X[i,j] for E_{ij}, H[k] for H_{alpha_k}."""
    rows = x.matrix.fraction_rows()
    n = x.n
    parts = []
    diag = [rows[i][i] for i in range(n)]
    # express the diagonal over the H[k] if possible: H_k has +1 at k, -1 at k+1
    partial = _F0
    hcoefs = []
    for k in range(n - 1):
        partial += diag[k]
        hcoefs.append(partial)
    for k, c in enumerate(hcoefs, start=1):
        if c:
            parts.append(_coef_name(c, "H[%d]" % k))
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j]:
                parts.append(_coef_name(rows[i][j], "X[%d,%d]" % (i + 1, j + 1)))
    return " + ".join(parts) if parts else "0"


def _coef_name(c: Fraction, name: str) -> str:
    if c == 1:
        return name
    if c == -1:
        return "-" + name
    return "%s·%s" % (c, name)


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------


class GroupElement:
    """Element of SL_n(R) as an exact matrix of determinant 1."""

    __slots__ = ("n", "matrix")

    def __init__(self, n: int, matrix: ExactMatrix):
        if matrix.shape != (n, n):
            raise ValueError("bad shape")
        self.n = n
        self.matrix = matrix

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(n, ExactMatrix.identity(n))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.n, self.matrix @ other.matrix)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.n, self.matrix.inverse())

    def conjugate(self, x: LieElement) -> LieElement:
        """Ad(g) x = g x g^{-1}."""
        return LieElement(
            self.n, (self.matrix @ x.matrix) @ self.matrix.inverse()
        )

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __repr__(self):
        return "GroupElement(n=%d)" % self.n


def w_squared(n: int, alpha: Root) -> GroupElement:
    """Image of w_alpha^2 = exp(pi W_alpha) in SL_n: the rotation by pi in
    the (i, j) coordinate plane, i.e. identity with -1 at positions i and j."""
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[alpha.i - 1][alpha.i - 1] = -ONE
    rows[alpha.j - 1][alpha.j - 1] = -ONE
    return GroupElement(n, ExactMatrix(rows))


def unipotent_exp(x: LieElement) -> GroupElement:
    """exp of a nilpotent matrix: finite polynomial series, exact."""
    if not x.is_nilpotent():
        raise ValueError("exp needs a nilpotent argument")
    n = x.n
    acc = ExactMatrix.identity(n)
    term = ExactMatrix.identity(n)
    fact = 1
    for m in range(1, n):
        term = term @ x.matrix
        if term.is_zero():
            break
        fact *= m
        acc = acc + term.scale(Fraction(1, fact))
    return GroupElement(n, acc)


def unipotent_log(g: GroupElement) -> LieElement:
    """log of a unipotent matrix: finite series sum (-1)^(m+1) (g-1)^m / m."""
    n = g.n
    delta = g.matrix - ExactMatrix.identity(n)
    p = delta
    for _ in range(n):
        if p.is_zero():
            break
        p = p @ delta
    if not p.is_zero():
        raise ValueError("log needs a unipotent argument")
    acc = ExactMatrix.zero(n, n)
    term = ExactMatrix.identity(n)
    for m in range(1, n):
        term = term @ delta
        if term.is_zero():
            break
        acc = acc + term.scale(Fraction((-1) ** (m + 1), m))
    return LieElement(n, acc)


# ---------------------------------------------------------------------------
# subalgebras
# ---------------------------------------------------------------------------


class Subalgebra:
    """A list of basis elements of sl_n plus the rational span they generate.

    The originally supplied elements are kept (printed generator lists from
    the source construction matter for reports); the span is used for all
    membership and dimension questions.  The bracket-closure flag is computed
    lazily and cached.
    """

    def __init__(self, n: int, elements, name: str = ""):
        self.n = n
        elems = list(elements)
        for e in elems:
            if e.n != n:
                raise ValueError("mixed ranks in subalgebra")
        self.span = Subspace(n * n, [e.flat() for e in elems])
        # keep an independent subset of the given elements, in order
        self.basis = []
        seen = Subspace(n * n)
        for e in elems:
            if not seen.contains_vector(e.flat()):
                self.basis.append(e)
                seen = seen.sum(Subspace(n * n, [e.flat()]))
        self.name = name
        self._closed = None

    @property
    def dim(self) -> int:
        return self.span.dim

    def contains(self, x: LieElement) -> bool:
        return self.span.contains_vector(x.flat())

    def contains_subalgebra(self, other: "Subalgebra") -> bool:
        return self.span.contains(other.span)

    def is_bracket_closed(self) -> bool:
        if self._closed is None:
            self._closed = all(
                self.contains(bracket(a, b))
                for i, a in enumerate(self.basis)
                for b in self.basis[i + 1 :]
            )
        return self._closed

    def sum(self, other: "Subalgebra", name: str = "") -> "Subalgebra":
        return Subalgebra(self.n, self.basis + other.basis, name)

    def intersection(self, other: "Subalgebra", name: str = "") -> "Subalgebra":
        inter = self.span.intersection(other.span)
        elems = [_unflatten(self.n, v) for v in inter.basis]
        return Subalgebra(self.n, elems, name)

    def same_span(self, other: "Subalgebra") -> bool:
        return self.span == other.span

    def coordinates(self, x: LieElement):
        """Coefficients of x on self.basis; raises if x is outside."""
        cols = [e.flat() for e in self.basis] + [x.flat()]
        mat = ExactMatrix([[col[r] for col in cols] for r in range(self.n * self.n)])
        for v in mat.right_kernel():
            if v[-1]:
                s = -1 / v[-1]
                return tuple(c * s for c in v[:-1])
        raise ValueError("element outside subalgebra")

    def __repr__(self):
        label = self.name or "Subalgebra"
        return "%s(n=%d, dim %d)" % (label, self.n, self.dim)


def _unflatten(n: int, v) -> LieElement:
    rows = [list(v[i * n : (i + 1) * n]) for i in range(n)]
    return LieElement.from_rows(rows)


def span_of(n: int, elements, name: str = "") -> Subalgebra:
    return Subalgebra(n, elements, name)


def bracket_closure(n: int, generators, name: str = "") -> Subalgebra:
    """Smallest subalgebra containing the generators (span-saturation)."""
    current = Subalgebra(n, generators, name)
    while True:
        new = []
        basis = current.basis
        for i, a in enumerate(basis):
            for b in basis[i + 1 :]:
                c = bracket(a, b)
                if not c.is_zero() and not current.contains(c):
                    new.append(c)
        if not new:
            return current
        current = Subalgebra(n, basis + new, name)


# standard subalgebras ------------------------------------------------------


def full_sl(n: int) -> Subalgebra:
    elems = [E(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    elems += [cartan_element(n, k) for k in range(1, n)]
    return Subalgebra(n, elems, "sl_%d" % n)


def cartan_subalgebra(n: int) -> Subalgebra:
    return Subalgebra(n, [cartan_element(n, k) for k in range(1, n)], "h")


def upper_nilpotent(n: int) -> Subalgebra:
    return Subalgebra(
        n,
        [E(n, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)],
        "n",
    )


def lower_nilpotent(n: int) -> Subalgebra:
    return Subalgebra(
        n,
        [E(n, j, i) for i in range(1, n + 1) for j in range(i + 1, n + 1)],
        "n-",
    )


def borel(n: int) -> Subalgebra:
    return Subalgebra(
        n, cartan_subalgebra(n).basis + upper_nilpotent(n).basis, "b"
    )


def sl_window(n: int, lo: int, hi: int, name: str = "") -> Subalgebra:
    """sl_{hi-lo+1} embedded on rows/columns lo..hi (1-based, inclusive);
    this is sl_m(alpha_lo, ..., alpha_{hi-1}).  Empty for hi <= lo."""
    if hi - lo + 1 < 2:
        return Subalgebra(n, [], name or "0")
    elems = [
        E(n, i, j)
        for i in range(lo, hi + 1)
        for j in range(lo, hi + 1)
        if i != j
    ]
    elems += [cartan_element(n, k) for k in range(lo, hi)]
    return Subalgebra(n, elems, name or "sl(%d..%d)" % (lo, hi))

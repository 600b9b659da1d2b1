"""Stabilizers of spherical nilpotent elements and their admissibility data.

Contains the centralizer solver, stabilizers of restricted linear forms,
the explicit four-piece decomposition of g(X_{k,eps}) into printed
generator lists, openness of the B-orbit, the Lagrangian/orientation sign
machinery, and the two-element admissibility character sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import ExactMatrix, Subspace
from .liecore import (
    E,
    LieElement,
    Subalgebra,
    beta,
    borel,
    bracket,
    bracket_closure,
    cartan_element,
    full_sl,
    root_vector,
    simple_root,
    sl_window,
    trace_form,
    w_squared,
)
from .orbitcat import OrbitDescriptor, orbit_dimension, representative_X

_F0 = Fraction(0)


class LinearForm:
    """Linear form Z -> tr(defining * Z), optionally restricted to a
    subalgebra domain."""

    __slots__ = ("n", "defining", "domain")

    def __init__(self, defining: LieElement, domain: Subalgebra | None = None):
        self.n = defining.n
        self.defining = defining
        self.domain = domain

    def __call__(self, z: LieElement):
        if self.domain is not None and not self.domain.contains(z):
            raise ValueError("argument outside the form's domain")
        return trace_form(self.defining, z)

    def value(self, z: LieElement):
        """Evaluate without the domain membership check."""
        return trace_form(self.defining, z)

    def restrict(self, sub: Subalgebra) -> "LinearForm":
        return LinearForm(self.defining, sub)

    def vanishes_on(self, sub: Subalgebra) -> bool:
        return all(self.value(e).is_zero() for e in sub.basis)

    def truncate_support(self, positions) -> "LinearForm":
        """New form keeping only the matrix entries of the defining element
        at the given (row, col) 1-based positions; used to express forms
        that are declared zero outside a coordinate block."""
        keep = set(positions)
        rows = self.defining.matrix.fraction_rows()
        n = self.n
        new_rows = [
            [rows[i][j] if (i + 1, j + 1) in keep else _F0 for j in range(n)]
            for i in range(n)
        ]
        return LinearForm(LieElement.from_rows(new_rows))


def orbit_form(d: OrbitDescriptor) -> LinearForm:
    """f_{k,eps} = tr(X_{k,eps} * .)."""
    return LinearForm(representative_X(d))


def centralizer(x: LieElement) -> Subalgebra:
    """{Z in sl_n : [Z, x] = 0}."""
    n = x.n
    ambient = full_sl(n)
    cols = [bracket(e, x).flat() for e in ambient.basis]
    mat = ExactMatrix([[cols[a][r] for a in range(len(cols))] for r in range(n * n)])
    elems = []
    for v in mat.right_kernel():
        acc = LieElement.zero(n)
        for c, e in zip(v, ambient.basis):
            if c:
                acc = acc + e.scale(c)
        elems.append(acc)
    return Subalgebra(n, elems, "g(x)")


def form_stabilizer(
    f: LinearForm,
    ambient: Subalgebra,
    test: Subalgebra | None = None,
) -> Subalgebra:
    """{Z in ambient : f([Z, Y]) = 0 for all Y in test}; test defaults to
    the ambient algebra itself."""
    if test is None:
        test = ambient
    n = ambient.n
    rows = []
    for y in test.basis:
        rows.append([f.value(bracket(z, y)) for z in ambient.basis])
    if not rows:
        return ambient
    mat = ExactMatrix(rows)
    elems = []
    for v in mat.right_kernel():
        acc = LieElement.zero(n)
        for c, e in zip(v, ambient.basis):
            if c:
                acc = acc + e.scale(c)
        elems.append(acc)
    return Subalgebra(n, elems, "stab")


@dataclass
class StabilizerDecomposition:
    full: Subalgebra
    reductive: Subalgebra
    nilradical: Subalgebra
    l_part: Subalgebra
    v_twisted: Subalgebra
    u_part: Subalgebra
    v_part: Subalgebra


def l_piece(n: int, j: int) -> Subalgebra:
    """sl_{n-2j} on the simple roots alpha_{j+1}..alpha_{n-j-1}, or 0 when
    j > n/2 - 1."""
    if j > n // 2 - 1 or n - 2 * j < 2:
        return Subalgebra(n, [], "l_%d" % j)
    return sl_window(n, j + 1, n - j, "l_%d" % j)


def v_twisted_piece(n: int, j: int, eps: int) -> Subalgebra:
    """Diagonally embedded copy of sl_j generated by
    X_{alpha_i} + X_{-alpha_{n-i}} (i < j-1) and
    X_{alpha_{j-1}} + eps X_{-alpha_{n-j+1}}, plus H_{alpha_j} - H_{alpha_{n-j}}."""
    gens = []
    for i in range(1, j):
        sign = eps if i == j - 1 else 1
        # raising generator as printed, plus its lowering partner with the
        # same sign (the sl_j(...) notation includes both, as for sl_m(alpha))
        gens.append(
            root_vector(n, simple_root(i))
            + root_vector(n, -simple_root(n - i)).scale(sign)
        )
        gens.append(
            root_vector(n, -simple_root(i))
            + root_vector(n, simple_root(n - i)).scale(sign)
        )
    closed = bracket_closure(n, gens)
    extra = cartan_element(n, j) - cartan_element(n, n - j) if j != n - j else None
    elems = list(closed.basis)
    if extra is not None and not extra.is_zero():
        elems.append(extra)
    return Subalgebra(n, elems, "v_%d" % j)


def u_piece(d: OrbitDescriptor) -> Subalgebra:
    """<X_{-beta_{i,j}} : 1 <= i <= k <= j <= n-1>; X_{-beta_{i,j}} = E_{j+1,i}."""
    n, k = d.n, d.k
    elems = [E(n, j + 1, i) for i in range(1, k + 1) for j in range(k, n)]
    return Subalgebra(n, elems, "u(X)")


def v_piece(d: OrbitDescriptor) -> Subalgebra:
    """<X_{-beta_{i,j}} : k+1 <= i <= n-k <= j <= n-1> for k < n/2, else 0."""
    n, k = d.n, d.k
    if 2 * k == n:
        return Subalgebra(n, [], "v(X)")
    elems = [E(n, j + 1, i) for i in range(k + 1, n - k + 1) for j in range(n - k, n)]
    return Subalgebra(n, elems, "v(X)")


def verify_stabilizer_decomposition(d: OrbitDescriptor) -> StabilizerDecomposition:
    n, k, eps = d.n, d.k, d.epsilon
    x = representative_X(d)
    cent = centralizer(x)

    u = u_piece(d)
    v = v_piece(d)
    l_k = l_piece(n, k)
    vt = v_twisted_piece(n, k, eps)

    assert u.dim == k * (n - k), "u(X) has wrong dimension"
    assert v.dim == (0 if 2 * k == n else k * (n - 2 * k)), "v(X) wrong dim"

    nil = u.sum(v, "u+v")
    assert nil.dim == u.dim + v.dim, "u and v are not independent"
    red = l_k.sum(vt, "r")
    assert red.dim == l_k.dim + vt.dim, "l_k and v_{k,eps} are not independent"

    full = red.sum(nil, "g(X)")
    assert full.dim == red.dim + nil.dim, "reductive/nilpotent overlap"
    assert full.same_span(cent), "decomposition does not span the centralizer"

    assert red.is_bracket_closed(), "reductive factor not a subalgebra"
    assert nil.is_bracket_closed(), "nilpotent part not a subalgebra"
    for e in nil.basis:
        assert e.is_nilpotent(), "non-nilpotent element in the radical"
    for a in full.basis:
        for b in nil.basis:
            assert nil.contains(bracket(a, b)), "radical is not an ideal"

    # nondegenerate trace form on the reductive factor
    gram = ExactMatrix(
        [[trace_form(a, b) for b in red.basis] for a in red.basis]
    )
    if red.dim:
        assert gram.rank() == red.dim, "degenerate trace form on reductive factor"

    # b(X) = b cap r
    b = borel(n)
    b_cap_cent = b.intersection(cent)
    b_cap_red = b.intersection(red)
    assert b_cap_cent.same_span(b_cap_red), "b(X) != b cap r"

    return StabilizerDecomposition(full, red, nil, l_k, vt, u, v)


def borel_form_stabilizer(d: OrbitDescriptor) -> Subalgebra:
    """b(b_{k,eps}): stabilizer in b of the restriction of f_{k,eps} to b."""
    b = borel(d.n)
    return form_stabilizer(orbit_form(d).restrict(b), b)


def borel_stabilizer_dimension(d: OrbitDescriptor) -> int:
    """Closed formula (n-2k-1)(n-2k+2)/2 + k."""
    n, k = d.n, d.k
    return (n - 2 * k - 1) * (n - 2 * k + 2) // 2 + k


def b_orbit_open(d: OrbitDescriptor) -> bool:
    b = borel(d.n)
    stab = borel_form_stabilizer(d)
    return b.dim - stab.dim == orbit_dimension(d)


def lagrangian_subspace(d: OrbitDescriptor) -> Subalgebra:
    """L = span{E_{ij} : 1 <= i <= k < j <= n}."""
    n, k = d.n, d.k
    return Subalgebra(
        n,
        [E(n, i, j) for i in range(1, k + 1) for j in range(k + 1, n + 1)],
        "L",
    )


def lagrangian_check(d: OrbitDescriptor) -> Subspace:
    n, k = d.n, d.k
    lag = lagrangian_subspace(d)
    assert lag.dim == k * (n - k) == orbit_dimension(d) // 2, "dim L wrong"
    cent = centralizer(representative_X(d))
    assert lag.intersection(cent).dim == 0, "L meets the stabilizer"
    f = orbit_form(d)
    for a in lag.basis:
        for b in lag.basis:
            assert f.value(bracket(a, b)).is_zero(), "L not isotropic"
    return lag.span


def orientation_sign(d: OrbitDescriptor) -> int:
    """Determinant sign of Ad(w_{beta_1}^2) acting on L."""
    n = d.n
    lag = lagrangian_subspace(d)
    g = w_squared(n, beta(1, n))
    sign = 1
    for e in lag.basis:
        img = g.conjugate(e)
        if not lag.contains(img):
            raise ValueError("w^2 does not preserve L")
        # basis elements are E_{ij}; conjugation by a diagonal sign matrix
        # sends each to +-itself, so the determinant is the product of signs
        if img == e:
            continue
        if img == -e:
            sign = -sign
        else:
            raise ValueError("unexpected non-monomial action on L")
    return sign


@dataclass(frozen=True)
class CharacterSet:
    group_order: int  # order of the cyclic group generated by w^2
    values: tuple  # character values at w^2, as exact complex units
    filtered: bool  # whether the order-4 admissibility filter was applied


def admissibility_set(n: int, k: int) -> CharacterSet:
    """Adm_k: two characters for every catalog entry.  For n even the group
    generated by w^2 has order 2 and both of its characters are admissible
    (values +-1 at w^2).  For n odd it has order 4 and admissibility keeps
    the two characters with value squared = -1 at w^2, i.e. values +-i."""
    if not 2 <= k <= n // 2:
        raise ValueError("(k, .) outside the catalog index set")
    if n % 2 == 0:
        return CharacterSet(2, (complex(1), complex(-1)), False)
    # characters of Z/4 at the generator: i^m, m = 0..3; keep zeta^2 = -1
    units = [1j ** m for m in range(4)]
    kept = tuple(z for z in units if z * z == -1)
    return CharacterSet(4, kept, True)

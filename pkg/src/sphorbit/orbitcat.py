"""Catalog of the non-minimal spherical nilpotent orbits of sl_n(R).

These are the orbits with Jordan type (2^k, 1^{n-2k}), 2 <= k <= n/2.
For k < n/2 there is a single real orbit; for n = 2p the type (2^p)
splits into two real orbits distinguished by an exact sign invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import ExactMatrix, det_sign_rational
from .liecore import E, LieElement, full_sl

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class OrbitDescriptor:
    """Index (k, epsilon) of a non-minimal spherical orbit in sl_n."""

    n: int
    k: int
    epsilon: int = 1

    def __post_init__(self):
        if not 2 <= self.k <= self.n // 2 or 2 * self.k > self.n:
            raise ValueError("need 2 <= k <= n/2")
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.epsilon == -1 and 2 * self.k < self.n:
            # the two signs label the same orbit below the split point
            object.__setattr__(self, "epsilon", 1)

    def __str__(self):
        return "O(%d; k=%d, eps=%+d)" % (self.n, self.k, self.epsilon)


def catalog(n: int):
    """All descriptors in I_n, (k, +1) for 2 <= k <= n/2 plus (n/2, -1)
    when n is even."""
    out = [OrbitDescriptor(n, k, 1) for k in range(2, n // 2 + 1)]
    if n % 2 == 0 and n >= 4:
        out.append(OrbitDescriptor(n, n // 2, -1))
    return out


def spherical_partition(k: int, n: int):
    if not 1 <= k <= n // 2:
        raise ValueError("need 1 <= k <= n/2")
    return (2,) * k + (1,) * (n - 2 * k)


def orbit_dimension(d: OrbitDescriptor) -> int:
    return 2 * d.k * (d.n - d.k)


def representative_Y(d: OrbitDescriptor) -> LieElement:
    """Sum of simple root vectors X_{alpha_1}, X_{alpha_3}, ...,
    X_{alpha_{2k-3}} plus epsilon X_{alpha_{2k-1}}."""
    n, k, eps = d.n, d.k, d.epsilon
    x = LieElement.zero(n)
    for i in range(k - 1):
        x = x + E(n, 2 * i + 1, 2 * i + 2)
    return x + E(n, 2 * k - 1, 2 * k).scale(eps)


def representative_X(d: OrbitDescriptor) -> LieElement:
    """Sum of negative composite root vectors X_{-beta_1}, ...,
    X_{-beta_{k-1}} plus epsilon X_{-beta_k}: lower-corner matrix with ones
    at (n-i+1, i) and epsilon at (n-k+1, k)."""
    n, k, eps = d.n, d.k, d.epsilon
    x = LieElement.zero(n)
    for i in range(1, k):
        x = x + E(n, n - i + 1, i)
    return x + E(n, n - k + 1, k).scale(eps)


def jordan_type(x: LieElement):
    """Partition of n from ranks of powers; multiplicity of parts >= j is
    rank(x^{j-1}) - rank(x^j)."""
    n = x.n
    if not x.is_nilpotent():
        raise ValueError("jordan_type needs a nilpotent matrix")
    ranks = [n]
    p = ExactMatrix.identity(n)
    while ranks[-1] > 0:
        p = p @ x.matrix
        ranks.append(p.rank())
    parts = []
    for j in range(1, len(ranks)):
        ge_j = ranks[j - 1] - ranks[j]  # number of blocks of size >= j
        gt_j = ranks[j] - ranks[j + 1] if j + 1 < len(ranks) else 0
        parts.extend([j] * (ge_j - gt_j))
    return tuple(sorted(parts, reverse=True))


def epsilon_invariant(x: LieElement) -> int:
    """Sign invariant separating the two real orbits of type (2^p), n = 2p.

    x maps R^n onto ker x; pick a complement C of the kernel and a kernel
    basis K with [C|K] positively oriented, and return the sign of the
    determinant of x: span C -> ker x written in those bases.  The result
    does not depend on the choices and is constant on SL_n(R)-orbits.
    """
    n = x.n
    if n % 2 != 0 or jordan_type(x) != (2,) * (n // 2):
        raise ValueError("invariant defined only for type (2^p) in sl_2p")
    p = n // 2
    kernel = x.matrix.right_kernel()  # p Fraction tuples
    # greedily extend the kernel to a basis of R^n with standard vectors
    rows = [list(v) for v in kernel]
    comp = []
    for idx in range(n):
        cand = [_F0] * n
        cand[idx] = _F1
        trial = rows + [list(c) for c in comp] + [cand]
        if _frac_rank(trial) == len(trial):
            comp.append(tuple(cand))
        if len(comp) == p:
            break
    xr = x.matrix.fraction_rows()
    images = []
    for c in comp:
        images.append(tuple(sum(xr[i][j] * c[j] for j in range(n)) for i in range(n)))
    # coordinates of each image on the kernel basis: solve K^T a = image
    kmat = ExactMatrix([[kernel[b][i] for b in range(p)] for i in range(n)])
    coords = []
    for img in images:
        aug = ExactMatrix(
            [[kernel[b][i] for b in range(p)] + [img[i]] for i in range(n)]
        )
        sol = None
        for v in aug.right_kernel():
            if v[-1]:
                s = -1 / v[-1]
                sol = tuple(c * s for c in v[:-1])
                break
        if sol is None:
            raise ValueError("image escaped the kernel; not type (2^p)")
        coords.append(sol)
    m_map = ExactMatrix([[coords[c][r] for c in range(p)] for r in range(p)])
    basis_mat = ExactMatrix(
        [[comp[c][r] for c in range(p)] + [kernel[c][r] for c in range(p)]
         for r in range(n)]
    )
    s1 = det_sign_rational(m_map)
    s2 = det_sign_rational(basis_mat)
    if s1 == 0 or s2 == 0:
        raise ValueError("degenerate basis choice")
    return s1 * s2


def _frac_rank(rows) -> int:
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col]
        work[rank] = [v / inv for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def same_real_orbit(x: LieElement, y: LieElement) -> bool:
    if x.n != y.n:
        return False
    tx, ty = jordan_type(x), jordan_type(y)
    if tx != ty:
        return False
    n = x.n
    if n % 2 == 0 and tx == (2,) * (n // 2):
        return epsilon_invariant(x) == epsilon_invariant(y)
    return True


def classify(x: LieElement):
    """Return the OrbitDescriptor of a spherical nilpotent x, or None if
    the Jordan type is not of the form (2^k, 1^{n-2k}) with k >= 2."""
    t = jordan_type(x)
    n = x.n
    k = sum(1 for part in t if part == 2)
    if k < 2 or t != spherical_partition(k, n):
        return None
    if 2 * k == n:
        # match against the invariant of each labeled representative; the
        # constructor sign and the invariant value need not coincide
        target = epsilon_invariant(x)
        for eps in (1, -1):
            d = OrbitDescriptor(n, k, eps)
            if epsilon_invariant(representative_X(d)) == target:
                return d
        return None
    return OrbitDescriptor(n, k, 1)


def catalog_rows(n: int):
    """Rows for the `orbits` CLI table."""
    from .liecore import format_element

    rows = []
    for d in catalog(n):
        rows.append(
            {
                "k": d.k,
                "epsilon": d.epsilon,
                "partition": spherical_partition(d.k, n),
                "dimension": orbit_dimension(d),
                "Y": format_element(representative_Y(d)),
                "X": format_element(representative_X(d)),
            }
        )
    return rows


def centralizer_dimension_expected(d: OrbitDescriptor) -> int:
    return (d.n * d.n - 1) - orbit_dimension(d)

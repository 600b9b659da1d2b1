"""Differential-operator realizations of the parabolic induced models.

A small Weyl-algebra engine: noncommutative polynomials in commuting
coordinate symbols and their derivations, with exact scalar coefficients
and opaque group-function atoms.  On top of it: the partial Fourier
transform pairing the two unipotent coordinate patches, the explicit
operators realizing the parabolic generators, matching and bracket
verification, the SL_2 lowest-weight relation, the Gelfand-Kirillov
dimension bookkeeping, and the Bernoulli-type series coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct
from math import comb, factorial

from .exactalg import ExactScalar, ONE, TWO_I_PI
from .liecore import (
    E,
    LieElement,
    bracket,
    cartan_element,
    root_vector,
    simple_root,
    trace_form,
)
from .orbitcat import OrbitDescriptor, orbit_dimension, representative_X
from .stab import centralizer

_F1 = Fraction(1)


def _coeff(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    return ExactScalar.rational(Fraction(x))


# ---------------------------------------------------------------------------
# the operator algebra
# ---------------------------------------------------------------------------


class WeylOp:
    """Normal-form element of the Weyl algebra with opaque atoms.

    A term is keyed by (coords, ders, atoms): coords and ders are sorted
    tuples of symbol names (with multiplicity), atoms an ordered tuple of
    opaque atom names.  Atoms commute with every coordinate and derivation
    but keep their mutual written order; [d_v, v] = 1 and distinct symbols
    commute.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = _coeff(c)
                if not c.is_zero():
                    cur = self.terms.get(key)
                    new = c if cur is None else cur + c
                    if new.is_zero():
                        self.terms.pop(key, None)
                    else:
                        self.terms[key] = new

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "WeylOp":
        return cls()

    @classmethod
    def scalar(cls, c) -> "WeylOp":
        return cls({((), (), ()): _coeff(c)})

    @classmethod
    def coord(cls, name: str) -> "WeylOp":
        return cls({((name,), (), ()): ONE})

    @classmethod
    def deriv(cls, name: str) -> "WeylOp":
        return cls({((), (name,), ()): ONE})

    @classmethod
    def atom(cls, name: str) -> "WeylOp":
        return cls({((), (), (name,)): ONE})

    # -- ring structure -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, WeylOp):
            other = WeylOp.scalar(other)
        out = dict(self.terms)
        merged = WeylOp()
        merged.terms = out
        for key, c in other.terms.items():
            cur = out.get(key)
            new = c if cur is None else cur + c
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
        return merged

    __radd__ = __add__

    def __neg__(self):
        out = WeylOp()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, WeylOp):
            other = WeylOp.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return WeylOp.scalar(other) + (-self)

    def scale(self, c) -> "WeylOp":
        c = _coeff(c)
        out = WeylOp()
        if c.is_zero():
            return out
        out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, WeylOp):
            return self.scale(other)
        out = {}
        for (c1, d1, a1), s1 in self.terms.items():
            for (c2, d2, a2), s2 in other.terms.items():
                base = s1 * s2
                for coords, ders, extra in _reorder(d1, c2):
                    key = (
                        tuple(sorted(c1 + coords)),
                        tuple(sorted(ders + d2)),
                        a1 + a2,
                    )
                    val = base * extra
                    cur = out.get(key)
                    new = val if cur is None else cur + val
                    if new.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = new
        res = WeylOp()
        res.terms = out
        return res

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            other = WeylOp.scalar(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def symbols(self):
        """All coordinate/derivation symbol names mentioned."""
        out = set()
        for coords, ders, _atoms in self.terms:
            out.update(coords)
            out.update(ders)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coords, ders, atoms = key
            word = (
                list(atoms)
                + list(coords)
                + ["D%s" % v for v in ders]
            )
            body = "*".join(word) if word else "1"
            parts.append("(%s)%s" % (self.terms[key], "*" + body if word else ""))
        return " + ".join(parts)


def _reorder(ders, coords):
    """Expansion of the product (prod of derivations)(prod of coordinates)
    into normal order.  Yields (coords, ders, scalar) triples using
    d^a y^b = sum_j C(a,j) C(b,j) j! y^{b-j} d^{a-j} per symbol."""
    d_count = {}
    for v in ders:
        d_count[v] = d_count.get(v, 0) + 1
    c_count = {}
    for v in coords:
        c_count[v] = c_count.get(v, 0) + 1
    shared = sorted(set(d_count) & set(c_count))
    if not shared:
        yield tuple(coords), tuple(ders), ONE
        return
    per_symbol = []
    for v in shared:
        a, b = d_count[v], c_count[v]
        opts = []
        for j in range(min(a, b) + 1):
            opts.append((v, b - j, a - j, comb(a, j) * comb(b, j) * factorial(j)))
        per_symbol.append(opts)
    fixed_c = [v for v in coords if v not in d_count]
    fixed_d = [v for v in ders if v not in c_count]
    for choice in _iproduct(*per_symbol):
        cs = list(fixed_c)
        ds = list(fixed_d)
        mult = 1
        for v, yb, da, m in choice:
            cs.extend([v] * yb)
            ds.extend([v] * da)
            mult *= m
        yield tuple(cs), tuple(ds), _coeff(mult)


def weyl_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    return a * b


def weyl_commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return a * b - b * a


# ---------------------------------------------------------------------------
# realization coordinate patches
# ---------------------------------------------------------------------------


def _yname(i, j):
    return "y%d_%d" % (i, j)


def _xname(i, j):
    return "x%d_%d" % (i, j)


@dataclass(frozen=True)
class RealizationSpec:
    """Variable bookkeeping for one orbit realization.

    case "generic": 2 <= k < n/2; the two coordinate patches sit on the
    upper root spaces dual to the printed unipotent pieces.
    case "even_max": n = 2p, k = p; an extra positive scale coordinate t.
    case "odd_max": n = 2p+1, k = p; extra coordinates t and a (only the
    pairing and the dimension audit are in scope for this case).
    """

    descriptor: OrbitDescriptor

    @property
    def n(self):
        return self.descriptor.n

    @property
    def k(self):
        return self.descriptor.k

    @property
    def case(self) -> str:
        n, k = self.n, self.k
        if 2 * k < n - 1:
            return "generic"
        return "even_max" if n == 2 * k else "odd_max"

    def target_positions(self):
        """(i, j) labels of the y-side coordinates: y_{ij} is the
        coefficient of the root vector E_{i,j+1}."""
        n, k = self.n, self.k
        if self.case == "generic":
            return [
                (i, j)
                for i in range(k + 1, n - k + 1)
                for j in range(n - k, n)
            ]
        p = k
        if self.case == "even_max":
            return [(i, p - 1) for i in range(1, p)] + [
                (p + 1, j) for j in range(p + 1, 2 * p)
            ]
        return (
            [(i, p - 1) for i in range(1, p)]
            + [(p + 1, j) for j in range(p + 2, 2 * p + 1)]
            + [(p + 2, j) for j in range(p + 2, 2 * p + 1)]
        )

    def source_positions(self):
        """(i, j) labels of the x-side coordinates."""
        n, k = self.n, self.k
        if self.case == "generic":
            return [(i, k) for i in range(1, k + 1)] + [
                (i, j)
                for i in range(k + 2, n - k + 1)
                for j in range(n - k, n)
            ]
        p = k
        if self.case == "even_max":
            return [(p, j) for j in range(p + 1, 2 * p)] + [
                (p + 1, j) for j in range(p + 1, 2 * p)
            ]
        return [
            (i, j)
            for i in (p, p + 1, p + 2)
            for j in range(p + 2, 2 * p + 1)
        ]

    def extra_coordinates(self):
        if self.case == "generic":
            return []
        return ["t"] if self.case == "even_max" else ["t", "a"]

    def base_factor_dimension(self) -> int:
        """dim of the reductive coordinate factor (the group R_{Q,.})."""
        k = self.k if self.case == "generic" else self.k - 1
        # sl_k plus the torus direction H_{alpha_k} in the generic case;
        # the maximal cases use sl_{p-1} + R H alone or with the extra
        # coordinates counted separately
        if self.case == "generic":
            return (k * k - 1) + 1
        return (k * k - 1) + 1 if k >= 1 else 0

    def realization_dimension(self) -> int:
        if self.case == "generic":
            return self.base_factor_dimension() + len(self.target_positions())
        p = self.k
        base = (p - 1) * (p - 1)  # sl_{p-1} + R H_{alpha_{p-1}}... see audit
        return base + len(self.extra_coordinates()) + len(self.target_positions())


def realization_spec(d: OrbitDescriptor) -> RealizationSpec:
    return RealizationSpec(d)


# ---------------------------------------------------------------------------
# partial Fourier transform
# ---------------------------------------------------------------------------


@dataclass
class FourierMap:
    """Partial Fourier transform between the two coordinate patches.

    pairs: x-name -> (y-name, pairing value c), giving the rules
    F(d/dx) = 2 i pi c y and 2 i pi c F(x) = -d/dy; shared: x-name ->
    y-name for variables fixed by the transform (identical labels)."""

    pairs: dict
    shared: dict

    def image_coord(self, name: str) -> WeylOp:
        if name in self.shared:
            return WeylOp.coord(self.shared[name])
        yname, c = self.pairs[name]
        return WeylOp.deriv(yname).scale(-(TWO_I_PI * c).inverse())

    def image_deriv(self, name: str) -> WeylOp:
        if name in self.shared:
            return WeylOp.deriv(self.shared[name])
        yname, c = self.pairs[name]
        return WeylOp.coord(yname).scale(TWO_I_PI * c)


def build_fourier(d: OrbitDescriptor) -> FourierMap:
    """Pairing computed from f([X, Y]) on the two unipotent patches, then
    validated against the printed dual-pair pattern."""
    spec = RealizationSpec(d)
    n = d.n
    f = representative_X(d)
    src = spec.source_positions()
    tgt = spec.target_positions()
    pairs = {}
    shared = {}
    for (a, b) in src:
        xv = E(n, a, b + 1)  # root vector for beta_{a,b}
        hits = []
        for (i, j) in tgt:
            yv = E(n, i, j + 1)
            val = trace_form(f, bracket(xv, yv))
            if not val.is_zero():
                hits.append(((i, j), val))
        name = _xname(a, b)
        if not hits:
            shared[name] = _yname(a, b)
            if (a, b) not in tgt:
                raise ValueError("unpaired source variable has no twin")
        elif len(hits) == 1:
            (i, j), val = hits[0]
            pairs[name] = (_yname(i, j), val)
        else:
            raise ValueError("source variable pairs with several targets")
    for extra in spec.extra_coordinates():
        shared[extra] = extra
    # printed pattern check
    if spec.case == "generic":
        k = d.k
        expected = {
            _xname(i, k): (_yname(k + 1, n - i), ONE) for i in range(1, k + 1)
        }
        if pairs != expected:
            raise ValueError("pairing disagrees with the printed dual pairs")
    elif spec.case == "even_max":
        p = d.k
        expected = {
            _xname(p, j): (_yname(2 * p - j, p - 1), -ONE)
            for j in range(p + 1, 2 * p)
        }
        if pairs != expected:
            raise ValueError("pairing disagrees with the printed dual pairs")
    return FourierMap(pairs, shared)


def fourier_conjugate(op: WeylOp, fm: FourierMap) -> WeylOp:
    """Algebra homomorphism determined by the variable rules; every source
    monomial is mapped factor by factor in normal order."""
    known = set(fm.pairs) | set(fm.shared)
    out = WeylOp.zero()
    for (coords, ders, atoms), c in op.terms.items():
        for v in coords + ders:
            if v not in known:
                raise ValueError("operator mentions non-source variable %r" % v)
        acc = WeylOp.scalar(c)
        for v in coords:
            acc = acc * fm.image_coord(v)
        for v in ders:
            acc = acc * fm.image_deriv(v)
        if atoms:
            acc = acc * WeylOp({((), (), atoms): ONE})
        out = out + acc
    return out


# ---------------------------------------------------------------------------
# printed generator operators
# ---------------------------------------------------------------------------


def _euler(name) -> WeylOp:
    return WeylOp.coord(name) * WeylOp.deriv(name)


def _b_atom(i, k):
    return "b%d_%d" % (i, k)


def _a_atom(i, j):
    return "a%d_%d" % (i, j)


def _d_atom(label):
    return "d[%s]" % label


def phi_generator(Z, spec: RealizationSpec) -> WeylOp:
    """The printed realization of the generator Z on the y-side patch.

    Z is ("Xalpha", j), ("Xmalpha", j), ("H", j) or ("Xbeta", i, j).
    Terms whose indices fall outside the coordinate patch are dropped
    (they denote variables absent from the chart)."""
    n, k = spec.n, spec.k
    case = spec.case
    if case == "odd_max":
        raise ValueError("no printed operators for the odd maximal case")
    if case == "even_max":
        p = k
        if Z == ("H", p):
            op = WeylOp.scalar(Fraction(2 * p - 1, 2))
            for i in range(1, p):
                op = op + _euler(_yname(i, p - 1))
            for j in range(p + 1, 2 * p):
                op = op + _euler(_yname(p + 1, j))
            return op + _euler("t")
        if Z == ("Xalpha", p):
            eps = spec.descriptor.epsilon
            quad = WeylOp.coord("t") * WeylOp.coord("t") * eps
            for j in range(p + 1, 2 * p):
                i = 2 * p - j
                quad = quad - WeylOp.coord(_yname(i, p - 1)) * WeylOp.coord(
                    _yname(p + 1, j)
                )
            return quad.scale(TWO_I_PI * Fraction(1, 2))
        raise ValueError("generator outside the printed even-maximal list")
    valid = set(spec.target_positions())

    def y(i, j):
        return WeylOp.coord(_yname(i, j)) if (i, j) in valid else None

    def euler(i, j):
        return _euler(_yname(i, j)) if (i, j) in valid else None

    if Z == ("Xalpha", k):
        op = WeylOp.zero()
        for i in range(1, k + 1):
            op = op + WeylOp.atom(_b_atom(i, k)) * WeylOp.coord(
                _yname(k + 1, n - i)
            )
        return op.scale(TWO_I_PI)
    if Z[0] == "Xmalpha" and Z[1] in [n - i for i in range(1, k)]:
        i = n - Z[1]
        op = WeylOp.atom(_d_atom("Xalpha%d" % i))
        for s in range(k + 1, n - k + 1):
            op = op + WeylOp.coord(_yname(s, n - i)) * WeylOp.deriv(
                _yname(s, n - i - 1)
            )
        return op
    if Z == ("H", k + 1):
        op = WeylOp.zero()
        for i in range(1, k + 1):
            op = op - _euler(_yname(k + 1, n - i))
            e = euler(k + 2, n - i)
            if e is not None:
                op = op + e
        return op
    if Z[0] == "H" and k + 2 <= Z[1] <= n - 1:
        j = Z[1]
        op = WeylOp.scalar(Fraction(-(n - 1), 2))
        for i in range(k + 1, j):
            e = euler(i, j)
            if e is not None:
                op = op - e
        e = euler(j, j)
        if e is not None:
            op = op - e.scale(2)
        for i in range(j + 1, n):
            e = euler(j + 1, i)
            if e is not None:
                op = op - e
        return op
    if Z == ("Xmalpha", n - k):
        op = WeylOp.coord(_yname(n - k, n - k)).scale(Fraction(n - k, 2))
        for i in range(k + 1, n - k + 1):
            for j in range(n - k, n):
                op = op + WeylOp.coord(_yname(i, n - k)) * WeylOp.coord(
                    _yname(n - k, j)
                ) * WeylOp.deriv(_yname(i, j))
        return op
    if Z[0] == "Xbeta" and Z[1] == k + 1 and n - k <= Z[2] <= n - 1:
        j = Z[2]
        return -(WeylOp.atom(_a_atom(k + 1, j)) * WeylOp.deriv(_yname(k + 1, j)))
    raise ValueError("generator outside the printed list: %r" % (Z,))


def psi_generator(Z, spec: RealizationSpec) -> WeylOp:
    """The printed x-side intermediates from the matching proofs."""
    n, k = spec.n, spec.k
    case = spec.case
    if case == "even_max":
        p = k
        if Z == ("H", p):
            op = WeylOp.scalar(Fraction(1, 2)) + _euler("t")
            for j in range(p + 1, 2 * p):
                op = op - _euler(_xname(p, j))
                op = op + _euler(_xname(p + 1, j))
            return op
        raise ValueError("no printed x-side operator for %r" % (Z,))
    if case != "generic":
        raise ValueError("no printed x-side operators for this case")
    if Z == ("Xalpha", k):
        op = WeylOp.zero()
        for i in range(1, k + 1):
            op = op + WeylOp.atom(_b_atom(i, k)) * WeylOp.deriv(_xname(i, k))
        return op
    if Z[0] == "Xmalpha" and Z[1] in [n - i for i in range(1, k)]:
        i = n - Z[1]
        op = WeylOp.atom(_d_atom("Xalpha%d" % i))
        op = op - WeylOp.coord(_xname(i + 1, k)) * WeylOp.deriv(_xname(i, k))
        for s in range(k + 2, n - k + 1):
            op = op + WeylOp.coord(_xname(s, n - i)) * WeylOp.deriv(
                _xname(s, n - i - 1)
            )
        return op
    raise ValueError("no printed x-side operator for %r" % (Z,))


def matching_generators(spec: RealizationSpec):
    """Generators with both a printed x-side operator and a printed y-side
    operator."""
    n, k = spec.n, spec.k
    if spec.case == "generic":
        return [("Xalpha", k)] + [("Xmalpha", n - i) for i in range(1, k)]
    if spec.case == "even_max":
        return [("H", k)]
    return []


def verify_matching(Z, spec: RealizationSpec):
    """fourier_conjugate(psi(Z)) == phi(Z); returns (bool, difference)."""
    fm = build_fourier(spec.descriptor)
    lhs = fourier_conjugate(psi_generator(Z, spec), fm)
    rhs = phi_generator(Z, spec)
    diff = lhs - rhs
    return diff.is_zero(), diff


def printed_fourier_rules(d: OrbitDescriptor):
    """The four printed transform laws, as (lhs operator, printed rhs)
    pairs; the last two must also coincide with the homomorphic images of
    the first two."""
    spec = RealizationSpec(d)
    if spec.case != "generic":
        raise ValueError("printed rules are stated for the generic case")
    n, k = d.n, d.k
    out = []
    for i in range(1, k + 1):
        x = _xname(i, k)
        y = _yname(k + 1, n - i)
        out.append((WeylOp.deriv(x), WeylOp.coord(y).scale(TWO_I_PI)))
        out.append(
            (WeylOp.coord(x), WeylOp.deriv(y).scale(-TWO_I_PI.inverse()))
        )
        out.append(
            (
                WeylOp.coord(x) * WeylOp.deriv(x),
                WeylOp.scalar(-1) - _euler(y),
            )
        )
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            out.append(
                (
                    WeylOp.coord(_xname(j, k)) * WeylOp.deriv(_xname(i, k)),
                    -(
                        WeylOp.coord(_yname(k + 1, n - i))
                        * WeylOp.deriv(_yname(k + 1, n - j))
                    ),
                )
            )
    return out


def verify_fourier_rules(d: OrbitDescriptor) -> bool:
    fm = build_fourier(d)
    for lhs, printed in printed_fourier_rules(d):
        if fourier_conjugate(lhs, fm) != printed:
            return False
    return True


# ---------------------------------------------------------------------------
# bracket verification
# ---------------------------------------------------------------------------


def _generator_matrix(Z, n: int) -> LieElement:
    kind = Z[0]
    if kind == "Xalpha":
        return root_vector(n, simple_root(Z[1]))
    if kind == "Xmalpha":
        return root_vector(n, -simple_root(Z[1]))
    if kind == "H":
        return cartan_element(n, Z[1])
    if kind == "Xbeta":
        return E(n, Z[1], Z[2] + 1)
    raise ValueError("unknown generator label %r" % (Z,))


def opaque_free_generators(spec: RealizationSpec):
    """Printed generators whose y-side operator carries no opaque atom."""
    n, k = spec.n, spec.k
    if spec.case == "generic":
        return [("H", j) for j in range(k + 1, n)] + [("Xmalpha", n - k)]
    if spec.case == "even_max":
        return [("H", k), ("Xalpha", k)]
    return []


def verify_bracket_relations(spec: RealizationSpec):
    """For every pair of opaque-free printed generators whose matrix
    bracket is a multiple of an opaque-free printed generator (or zero):
    compare the operator commutator with the image of the bracket.

    Returns a report dict with 'checked' and 'failures' (list of
    (Z1, Z2, difference repr))."""
    n = spec.n
    gens = opaque_free_generators(spec)
    mats = {Z: _generator_matrix(Z, n) for Z in gens}
    ops = {Z: phi_generator(Z, spec) for Z in gens}
    checked = 0
    failures = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            Z1, Z2 = gens[a], gens[b]
            br = bracket(mats[Z1], mats[Z2])
            expected = _expand_on(br, mats, ops)
            if expected is None:
                continue
            checked += 1
            got = weyl_commutator(ops[Z1], ops[Z2])
            if got != expected:
                failures.append((Z1, Z2, repr(got - expected)))
    return {"checked": checked, "failures": failures}


def _expand_on(x: LieElement, mats, ops):
    """Write x as a rational combination of the generator matrices, if
    possible, and return the matching operator combination."""
    if x.is_zero():
        return WeylOp.zero()
    # the opaque-free generators are root vectors/cartan elements with
    # disjoint supports, so matching is entry-by-entry
    remaining = x
    combo = WeylOp.zero()
    for Z, m in mats.items():
        c = _proportion(remaining, m)
        if c is not None and c != 0:
            combo = combo + ops[Z].scale(c)
            remaining = remaining - m.scale(c)
    return combo if remaining.is_zero() else None


def _proportion(x: LieElement, m: LieElement):
    """Coefficient of m inside x read off the first nonzero entry of m."""
    xr = x.matrix.fraction_rows()
    mr = m.matrix.fraction_rows()
    for i in range(x.n):
        for j in range(x.n):
            if mr[i][j]:
                return xr[i][j] / mr[i][j]
    return None


# ---------------------------------------------------------------------------
# the SL2 lowest-weight relation of the discrete-series model
# ---------------------------------------------------------------------------


def sl2_series_check(eps: int, with_sanity: bool = True) -> bool:
    """With H = t d/dt + 1/2 and X = -i eps pi t^2 (the u-derivatives at 0
    of the printed flows), verify [H, X] = 2X exactly."""
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    H = _euler("t") + WeylOp.scalar(Fraction(1, 2))
    X = (WeylOp.coord("t") * WeylOp.coord("t")).scale(
        TWO_I_PI * Fraction(-eps, 2)
    )
    ok = weyl_commutator(H, X) == X.scale(2)
    if with_sanity:
        ok = ok and weyl_commutator(H, -X) == X.scale(-2)
    return ok


# ---------------------------------------------------------------------------
# Gelfand-Kirillov dimension bookkeeping
# ---------------------------------------------------------------------------


def gk_dimension_audit(d: OrbitDescriptor):
    """Three exact integer identities tying the realization size to the
    orbit dimension."""
    n, k = d.n, d.k
    spec = RealizationSpec(d)
    dim_o = orbit_dimension(d)

    # (a) dim p_k - dim p_k(f) = dim O, with p_k(f) = p_k cap g(X)
    from .parab import build_parabolic

    par = build_parabolic(k, n)
    cent = centralizer(representative_X(d))
    stab = par.p.intersection(cent)
    a_ok = par.p.dim - stab.dim == dim_o

    # (b) the x/y coordinate patches both have dim O / 2 - dim R_{Q} many
    # variables; total patch dimension is half the orbit dimension
    n_src = len(spec.source_positions()) + len(spec.extra_coordinates())
    n_tgt = len(spec.target_positions()) + len(spec.extra_coordinates())
    b_ok = n_src == n_tgt

    # (c) 2 dim X_k = dim O
    if spec.case == "generic":
        base = (k * k - 1) + 1  # sl_k + R H_{alpha_k}
    else:
        p = k
        base = ((p - 1) * (p - 1) - 1) + 1 if p >= 2 else 0
    dim_x = base + n_tgt
    c_ok = 2 * dim_x == dim_o

    return {
        "induced_codim": a_ok,
        "patch_duality": b_ok,
        "half_dimension": c_ok,
        "dim_X": dim_x,
        "orbit_dim": dim_o,
        "ok": a_ok and b_ok and c_ok,
    }


# ---------------------------------------------------------------------------
# series coefficients
# ---------------------------------------------------------------------------


def series_coefficients(r_max: int):
    """Exact Taylor coefficients of T/(1 - exp(-T)) (the b_r) and of
    T/(exp(T) - 1) (the c_r) up to order r_max."""
    if r_max < 1:
        raise ValueError("need r_max >= 1")
    # (1 - exp(-T))/T has coefficients (-1)^r / (r+1)!
    denom_b = [Fraction((-1) ** r, factorial(r + 1)) for r in range(r_max + 1)]
    denom_c = [Fraction(1, factorial(r + 1)) for r in range(r_max + 1)]

    def invert(series):
        out = [Fraction(1) / series[0]]
        for r in range(1, len(series)):
            acc = Fraction(0)
            for s in range(1, r + 1):
                acc += series[s] * out[r - s]
            out.append(-acc / series[0])
        return out

    return {"b": invert(denom_b), "c": invert(denom_c)}

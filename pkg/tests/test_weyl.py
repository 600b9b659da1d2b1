import random
from fractions import Fraction

import pytest

from sphorbit.exactalg import ONE, TWO_I_PI, ExactScalar
from sphorbit.orbitcat import OrbitDescriptor, catalog, orbit_dimension
from sphorbit.weyl import (
    FourierMap,
    RealizationSpec,
    WeylOp,
    build_fourier,
    fourier_conjugate,
    gk_dimension_audit,
    matching_generators,
    opaque_free_generators,
    phi_generator,
    printed_fourier_rules,
    psi_generator,
    realization_spec,
    series_coefficients,
    sl2_series_check,
    verify_bracket_relations,
    verify_fourier_rules,
    verify_matching,
    weyl_commutator,
    weyl_mul,
)


# ---------------------------------------------------------------------------
# an independent oracle: polynomials with exact coefficients, on which
# atom-free operators act by differentiation/multiplication
# ---------------------------------------------------------------------------


def _apply(op, poly):
    """Apply an atom-free WeylOp to a polynomial keyed by sorted tuples of
    (variable, exponent) items."""
    out = {}
    for (coords, ders, atoms), c in op.terms.items():
        assert not atoms
        for mono, pc in poly.items():
            work = [(dict(mono), ExactScalar.coerce(pc))]
            for v in ders:
                nxt = []
                for m, q in work:
                    e = m.get(v, 0)
                    if e:
                        m2 = dict(m)
                        m2[v] = e - 1
                        if m2[v] == 0:
                            del m2[v]
                        nxt.append((m2, q * e))
                work = nxt
            for m, q in work:
                m2 = dict(m)
                for v in coords:
                    m2[v] = m2.get(v, 0) + 1
                key = tuple(sorted(m2.items()))
                cur = out.get(key, ExactScalar.rational(0))
                out[key] = cur + c * q
    return {k: v for k, v in out.items() if not v.is_zero()}


def _random_op(rng, variables, nterms=3, atom_free=True):
    op = WeylOp.zero()
    for _ in range(nterms):
        coords = tuple(rng.choice(variables) for _ in range(rng.randint(0, 2)))
        ders = tuple(rng.choice(variables) for _ in range(rng.randint(0, 2)))
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        op = op + WeylOp({(tuple(sorted(coords)), tuple(sorted(ders)), ()): c})
    return op


def _random_poly(rng, variables):
    poly = {}
    for _ in range(3):
        mono = {}
        for v in variables:
            e = rng.randint(0, 2)
            if e:
                mono[v] = e
        poly[tuple(sorted(mono.items()))] = Fraction(rng.randint(-3, 3))
    return {k: v for k, v in poly.items() if v}


def test_canonical_relations():
    t, dt = WeylOp.coord("t"), WeylOp.deriv("t")
    u, du = WeylOp.coord("u"), WeylOp.deriv("u")
    assert weyl_commutator(dt, t) == WeylOp.scalar(1)
    assert weyl_commutator(dt, u).is_zero()
    assert weyl_commutator(du, t).is_zero()
    b = WeylOp.atom("b1_2")
    assert weyl_commutator(b, t).is_zero()
    assert weyl_commutator(b, dt).is_zero()
    # distinct atoms keep written order
    a = WeylOp.atom("a3_7")
    assert (b * a).terms != (a * b).terms
    assert weyl_commutator(t * dt + Fraction(1, 2), t * t) == (t * t).scale(2)


def test_product_against_polynomial_action():
    rng = random.Random(7)
    variables = ["t", "y1_2", "y2_3"]
    for _ in range(40):
        a = _random_op(rng, variables)
        b = _random_op(rng, variables)
        poly = _random_poly(rng, variables)
        via_product = _apply(weyl_mul(a, b), poly)
        via_stages = _apply(a, _apply(b, poly))
        assert via_product == via_stages


def test_associativity_randomized():
    rng = random.Random(11)
    variables = ["t", "u", "v"]
    for _ in range(30):
        a = _random_op(rng, variables)
        b = _random_op(rng, variables)
        c = _random_op(rng, variables)
        assert (a * b) * c == a * (b * c)


def test_fourier_pairing_pattern():
    fm = build_fourier(OrbitDescriptor(6, 2, 1))
    assert fm.pairs == {
        "x1_2": ("y3_5", ONE),
        "x2_2": ("y3_4", ONE),
    }
    assert fm.shared == {"x4_4": "y4_4", "x4_5": "y4_5"}
    fme = build_fourier(OrbitDescriptor(8, 4, 1))
    assert fme.pairs == {
        "x4_5": ("y3_3", -ONE),
        "x4_6": ("y2_3", -ONE),
        "x4_7": ("y1_3", -ONE),
    }
    assert "t" in fme.shared


def test_fourier_rule_emergence():
    # rules for x d/dx and for the mixed products must come out of the
    # homomorphism, not be separately encoded
    for n in (6, 7, 8, 9, 10):
        for d in catalog(n):
            if realization_spec(d).case == "generic":
                assert verify_fourier_rules(d)


def test_fourier_homomorphism_random_pairs():
    rng = random.Random(23)
    d = OrbitDescriptor(7, 2, 1)
    fm = build_fourier(d)
    variables = sorted(set(fm.pairs) | set(fm.shared))
    for _ in range(60):
        a = _random_op(rng, variables)
        b = _random_op(rng, variables)
        lhs = fourier_conjugate(weyl_mul(a, b), fm)
        rhs = weyl_mul(fourier_conjugate(a, fm), fourier_conjugate(b, fm))
        assert lhs == rhs


def test_fourier_rejects_target_variables():
    fm = build_fourier(OrbitDescriptor(6, 2, 1))
    with pytest.raises(ValueError):
        fourier_conjugate(WeylOp.coord("y3_5"), fm)


def test_generator_transcriptions():
    spec = realization_spec(OrbitDescriptor(6, 2, 1))
    op = phi_generator(("Xalpha", 2), spec)
    expected = (
        WeylOp.atom("b1_2") * WeylOp.coord("y3_5")
        + WeylOp.atom("b2_2") * WeylOp.coord("y3_4")
    ).scale(TWO_I_PI)
    assert op == expected
    side = psi_generator(("Xalpha", 2), spec)
    assert side == WeylOp.atom("b1_2") * WeylOp.deriv("x1_2") + WeylOp.atom(
        "b2_2"
    ) * WeylOp.deriv("x2_2")
    with pytest.raises(ValueError):
        phi_generator(("H", 1), spec)


def test_matching_all_printed_generators():
    for n in (5, 6, 7, 8):
        for d in catalog(n):
            spec = realization_spec(d)
            for Z in matching_generators(spec):
                ok, diff = verify_matching(Z, spec)
                assert ok, (n, d.k, d.epsilon, Z, repr(diff))


def test_bracket_report():
    # the scalar-weight pattern of the Cartan operators is inconsistent
    # with the quadratic operator exactly when the Cartan index sits next
    # to the distinguished column; those pairs are reported as failures.
    for n in (6, 7, 8):
        for d in catalog(n):
            spec = realization_spec(d)
            rep = verify_bracket_relations(spec)
            if spec.case == "generic":
                k = d.k
                bad = {
                    j
                    for j in (n - k - 1, n - k, n - k + 1)
                    if k + 2 <= j <= n - 1
                }
                got = {z1[1] for z1, z2, _ in rep["failures"]}
                assert all(
                    z1[0] == "H" and z2 == ("Xmalpha", n - k)
                    for z1, z2, _ in rep["failures"]
                )
                assert got == bad, (n, k, got, bad)
            else:
                assert rep["failures"] == []


def test_even_maximal_bracket():
    for n in (6, 8, 10):
        for eps in (1, -1):
            d = OrbitDescriptor(n, n // 2, eps)
            spec = realization_spec(d)
            H = phi_generator(("H", n // 2), spec)
            X = phi_generator(("Xalpha", n // 2), spec)
            assert weyl_commutator(H, X) == X.scale(2)


def test_sl2_series():
    assert sl2_series_check(1)
    assert sl2_series_check(-1)
    with pytest.raises(ValueError):
        sl2_series_check(0)


def test_gk_dimension_audit():
    for n in range(4, 13):
        for d in catalog(n):
            rep = gk_dimension_audit(d)
            assert rep["ok"], (n, d.k, d.epsilon, rep)
            assert 2 * rep["dim_X"] == orbit_dimension(d)


def test_series_coefficients():
    s = series_coefficients(12)
    assert s["b"][0] == 1 and s["c"][0] == 1
    assert s["b"][1] == Fraction(1, 2) and s["c"][1] == Fraction(-1, 2)
    assert s["b"][2] == Fraction(1, 12)
    assert all(s["b"][r] == s["c"][r] for r in range(2, 13))
    assert all(s["b"][r] == 0 for r in range(3, 13, 2))
    with pytest.raises(ValueError):
        series_coefficients(0)

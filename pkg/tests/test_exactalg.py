import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from sphorbit.exactalg import (
    ExactMatrix,
    ExactScalar,
    I,
    ONE,
    PI,
    Subspace,
    TWO_I_PI,
    ZERO,
    det_sign_rational,
    nullspace,
    subspace_ops,
)


def rand_scalar(rng):
    terms = []
    for _ in range(rng.randrange(0, 3)):
        d = rng.randrange(-2, 3)
        re = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        im = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        terms.append((d, re, im))
    return sum(
        (ExactScalar.gaussian(re, im) * PI ** d for d, re, im in terms),
        ZERO,
    )


def test_ring_axioms_randomized():
    rng = random.Random(20260826)
    for _ in range(200):
        a, b, c = (rand_scalar(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO


def test_inverse_single_term():
    x = ExactScalar.gaussian(Fraction(3), Fraction(-2)) * PI ** 3
    assert x * x.inverse() == ONE
    assert TWO_I_PI * TWO_I_PI.inverse() == ONE
    assert I * I == ExactScalar.rational(-1)


@given(
    st.lists(
        st.tuples(
            st.integers(-3, 3),
            st.fractions(max_denominator=7),
            st.fractions(max_denominator=7),
        ),
        max_size=4,
    )
)
@settings(max_examples=150)
def test_serialize_round_trip(terms):
    x = sum(
        (ExactScalar.gaussian(re, im) * PI ** d for d, re, im in terms),
        ZERO,
    )
    assert ExactScalar.deserialize(x.serialize()) == x


def test_canonical_zero_and_equality():
    a = ExactScalar.rational(Fraction(1, 2))
    b = ExactScalar.rational(Fraction(2, 4))
    assert a == b
    assert hash(a) == hash(b)
    assert (a - b).is_zero()
    assert a == Fraction(1, 2)
    assert ExactScalar.rational(3) == 3


def test_nullspace_zero_and_identity():
    z = ExactMatrix.zero(3, 3)
    assert len(nullspace(z)) == 3
    assert nullspace(ExactMatrix.identity(4)) == []


def test_nullspace_postcondition():
    rng = random.Random(7)
    for _ in range(25):
        rows = [
            [ExactScalar.rational(rng.randrange(-3, 4)) for _ in range(5)]
            for _ in range(3)
        ]
        m = ExactMatrix(rows)
        vecs = nullspace(m)
        assert m.rank() + len(vecs) == 5
        for v in vecs:
            col = ExactMatrix([[c] for c in v])
            assert (m @ col).is_zero()


def test_det_sign():
    def diag(*vals):
        n = len(vals)
        return ExactMatrix(
            [
                [ExactScalar.rational(vals[i]) if i == j else ZERO for j in range(n)]
                for i in range(n)
            ]
        )

    assert det_sign_rational(diag(-1, 1, 1, -1)) == 1
    assert det_sign_rational(diag(-1, 1, 1)) == -1
    assert det_sign_rational(diag(1, 0, 1)) == 0
    m = ExactMatrix(
        [
            [ExactScalar.rational(v) for v in row]
            for row in [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        ]
    )
    assert det_sign_rational(m) == -1


def test_subspace_dimension_identity():
    rng = random.Random(99)
    for _ in range(20):
        va = [
            tuple(Fraction(rng.randrange(-2, 3)) for _ in range(6))
            for _ in range(3)
        ]
        vb = [
            tuple(Fraction(rng.randrange(-2, 3)) for _ in range(6))
            for _ in range(3)
        ]
        a = Subspace(6, va)
        b = Subspace(6, vb)
        ops = subspace_ops(a, b)
        da, db, ds, di = ops["dim"]
        assert da + db == ds + di
        assert ops["sum"].contains(a) and ops["sum"].contains(b)
        assert a.contains(ops["intersection"])
        assert b.contains(ops["intersection"])


def test_subspace_canonical_equality():
    a = Subspace(3, [(Fraction(1), Fraction(1), Fraction(0)),
                     (Fraction(0), Fraction(0), Fraction(1))])
    b = Subspace(3, [(Fraction(2), Fraction(2), Fraction(2)),
                     (Fraction(0), Fraction(0), Fraction(-5))])
    assert a == b
    assert hash(a) == hash(b)


def test_matrix_inverse():
    m = ExactMatrix(
        [
            [ExactScalar.rational(v) for v in row]
            for row in [[2, 1], [1, 1]]
        ]
    )
    assert m @ m.inverse() == ExactMatrix.identity(2)

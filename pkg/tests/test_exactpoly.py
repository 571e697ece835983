import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from math import comb

from gammapos.errors import (
    DegreeBoundError,
    PalindromicityError,
    ValidationError,
)
from gammapos.exactpoly import (
    PLAIN,
    QDIV,
    GammaVector,
    IntPoly1,
    QTPoly,
    QTRPoly,
    TruncSeries,
    gamma_contract,
    gamma_expand,
    is_b_unimodal,
    is_palindromic,
    q_binomial,
    q_factorial,
    q_int,
)

A5 = IntPoly1((1, 26, 66, 26, 1))
A4_QT_COEFF = IntPoly1((3, 2, 3, 2, 1))
A4_QT = QTPoly((IntPoly1.one(), A4_QT_COEFF, A4_QT_COEFF, IntPoly1.one()))


class TestIntPoly1:
    def test_trims_trailing_zeros(self):
        assert IntPoly1((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly1((0, 0)).coeffs == ()
        assert IntPoly1().degree == -1

    def test_arithmetic(self):
        p = IntPoly1((1, 1))
        assert p * p == IntPoly1((1, 2, 1))
        assert p - p == IntPoly1.zero()
        assert p + 2 == IntPoly1((3, 1))
        assert 3 * p == IntPoly1((3, 3))
        assert p ** 3 == IntPoly1((1, 3, 3, 1))
        assert (-p).coeffs == (-1, -1)

    def test_evaluate(self):
        assert A5(1) == 120
        assert IntPoly1((0, 1))(7) == 7

    def test_shifted(self):
        assert IntPoly1((1, 2)).shifted(2) == IntPoly1((0, 0, 1, 2))
        assert IntPoly1((0, 0, 5)).shifted(-2) == IntPoly1((5,))
        with pytest.raises(ValidationError):
            IntPoly1((1,)).shifted(-1)

    def test_text(self):
        assert A5.to_text("t") == "1 + 26*t + 66*t^2 + 26*t^3 + t^4"
        assert IntPoly1((1, -1)).to_text("t") == "1 - t"
        assert IntPoly1().to_text() == "0"
        assert IntPoly1((0, 0, -2)).to_text("q") == "-2*q^2"

    def test_json_round_trip(self):
        assert IntPoly1.from_json(A5.to_json()) == A5


class TestQHelpers:
    def test_q_int_and_factorial(self):
        assert q_int(2) == IntPoly1((1, 1))
        assert q_factorial(3) == IntPoly1((1, 2, 2, 1))

    def test_q_binomial_small(self):
        assert q_binomial(2, 1) == IntPoly1((1, 1))
        # oracle: q-binomial times the two factorials is the big factorial
        assert q_binomial(4, 2) * q_factorial(2) * q_factorial(2) == q_factorial(4)
        assert q_binomial(4, 2) == IntPoly1((1, 1, 2, 1, 1))
        assert q_binomial(3, 5) == IntPoly1.zero()
        assert q_binomial(-1, 0) == IntPoly1.zero()

    def test_q_binomial_specializes_to_binomial(self):
        for n in range(13):
            for k in range(n + 1):
                assert q_binomial(n, k)(1) == comb(n, k)

    def test_q_binomial_symmetry(self):
        for n in range(13):
            for k in range(n + 1):
                assert q_binomial(n, k) == q_binomial(n, n - k)


class TestPalindromic:
    def test_examples(self):
        assert is_palindromic(A5, 4)
        assert is_palindromic(IntPoly1((1,)), 0)
        assert not is_palindromic(IntPoly1((1, 2)), 1)

    def test_degree_bound_error(self):
        with pytest.raises(DegreeBoundError):
            is_palindromic(A5, 3)

    def test_padding(self):
        # degree 1 polynomial against bound 2: coefficient of t^2 is zero
        assert not is_palindromic(IntPoly1((1, 1)), 2)
        assert is_palindromic(IntPoly1((0, 1)), 2)


class TestGamma:
    def test_expand_a5(self):
        assert gamma_expand(A5, 4) == GammaVector(4, (1, 22, 16))

    def test_expand_binomial_power(self):
        assert gamma_expand(IntPoly1((1, 3, 3, 1)), 3) == GammaVector(3, (1, 0))

    def test_expand_qtpoly(self):
        p = QTPoly((IntPoly1.one(), IntPoly1((2, 1)), IntPoly1.one()))
        vec = gamma_expand(p, 2)
        assert vec.gammas == (IntPoly1((1,)), IntPoly1((0, 1)))

    def test_expand_rejects_non_palindromic(self):
        with pytest.raises(PalindromicityError):
            gamma_expand(IntPoly1((1, 2)), 1)

    def test_contract_examples(self):
        assert gamma_contract(GammaVector(4, (1, 22, 16))) == A5
        assert gamma_contract(GammaVector(3, (1, 0))) == IntPoly1((1, 3, 3, 1))
        assert gamma_contract(GammaVector(3, (0, 1))) == IntPoly1((0, 1, 1))

    def test_contract_builds_qtpoly(self):
        q = IntPoly1((0, 1))
        vec = GammaVector(2, (IntPoly1.one(), q))
        assert gamma_contract(vec) == QTPoly((IntPoly1.one(), IntPoly1((2, 1)), IntPoly1.one()))

    def test_vector_length_checked(self):
        with pytest.raises(ValidationError):
            GammaVector(4, (1, 2))

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
    def test_round_trip_integer(self, gammas):
        d = 2 * (len(gammas) - 1) + 1
        vec = GammaVector(d, tuple(gammas))
        poly = gamma_contract(vec)
        if poly:
            assert gamma_expand(poly, d) == vec

    @given(st.lists(st.lists(st.integers(-9, 9), min_size=1, max_size=3),
                    min_size=1, max_size=4))
    def test_round_trip_q_level(self, raw):
        gammas = tuple(IntPoly1(c) for c in raw)
        d = 2 * (len(gammas) - 1)
        vec = GammaVector(d, gammas)
        poly = gamma_contract(vec)
        assert is_palindromic(poly, d)
        assert gamma_expand(poly, d).gammas == gammas


class TestUnimodal:
    def test_numeric(self):
        assert is_b_unimodal(A5)
        assert not is_b_unimodal(IntPoly1((1, 0, 1)))

    def test_q_level(self):
        assert is_b_unimodal(A4_QT)
        spike = QTPoly((IntPoly1.one(), IntPoly1((0, 1)), IntPoly1.one()))
        assert not is_b_unimodal(spike)

    def test_custom_predicate(self):
        # with a vacuous order everything is unimodal
        assert is_b_unimodal(IntPoly1((1, 0, 1)), lambda c: True)


class TestQTPoly:
    def test_text_rendering(self):
        p = QTPoly((IntPoly1.one(), IntPoly1((2, 1, 1)), IntPoly1.one()))
        assert p.to_text() == "1 + (2 + q + q^2)*t + t^2"
        assert QTPoly((1, -1)).to_text() == "1 - t"
        assert QTPoly.zero().to_text() == "0"
        assert QTPoly((0, IntPoly1((0, 0, 1)))).to_text() == "q^2*t"

    def test_at_q1(self):
        assert A4_QT.at_q1() == IntPoly1((1, 11, 11, 1))

    def test_t_shift(self):
        p = QTPoly((0, 1, 2))
        assert p.t_shifted(-1) == QTPoly((1, 2))
        with pytest.raises(ValidationError):
            QTPoly((1, 1)).t_shifted(-1)

    def test_scalar_kinds(self):
        q = IntPoly1((0, 1))
        p = QTPoly((1, 1))
        assert p * q == QTPoly((q, q))
        assert p * 2 == QTPoly((2, 2))

    def test_json_round_trip(self):
        assert QTPoly.from_json(A4_QT.to_json()) == A4_QT


class TestQTRPoly:
    def test_basicops(self):
        r2 = QTRPoly.monomial(r=2)
        t = QTRPoly.monomial(t=1)
        p = r2 + t
        assert p.to_text() == "r^2 + t"
        assert p.specialize_r(1) == QTPoly((1, 1))
        assert p.specialize_r(0) == QTPoly((0, 1))
        assert p.r_to_t() == QTPoly((0, 1, 1))

    def test_embedding(self):
        qt = QTPoly((IntPoly1((1, 1)), IntPoly1.one()))
        assert QTRPoly.from_qt(qt).specialize_r(1) == qt

    def test_json_round_trip(self):
        p = QTRPoly({(1, 2, 3): 4, (0, 0, 0): -1})
        assert QTRPoly.from_json(p.to_json()) == p


def _random_qtpoly(row):
    # ints become constant q-polynomials indexed by t-exponent
    return QTPoly(row)


class TestTruncSeries:
    def _series(self, data, convention):
        coeffs = tuple(QTPoly([IntPoly1((c,)) for c in row]) for row in data)
        return TruncSeries(len(data) - 1, coeffs, convention)

    @settings(max_examples=40)
    @given(st.integers(2, 10).flatmap(lambda order: st.tuples(
        st.just(order),
        *[st.lists(st.lists(st.integers(-4, 4), min_size=1, max_size=2),
                   min_size=order + 1, max_size=order + 1) for _ in range(3)])))
    def test_product_associative_commutative(self, payload):
        order, a_rows, b_rows, c_rows = payload
        for convention in (PLAIN, QDIV):
            a = TruncSeries(order, tuple(_random_qtpoly(r) for r in a_rows), convention)
            b = TruncSeries(order, tuple(_random_qtpoly(r) for r in b_rows), convention)
            c = TruncSeries(order, tuple(_random_qtpoly(r) for r in c_rows), convention)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_qdiv_weights(self):
        # product of two copies of the q-exponential: coefficient n is the
        # row sum of Gaussian binomials
        order = 5
        e = TruncSeries.build(order, lambda n: QTPoly.one(), QDIV)
        sq = e * e
        for n in range(order + 1):
            expected = IntPoly1.zero()
            for k in range(n + 1):
                expected = expected + q_binomial(n, k)
            assert sq.coeff(n) == QTPoly((expected,))

    def test_order_mismatch(self):
        a = TruncSeries.build(2, lambda n: QTPoly.one())
        b = TruncSeries.build(3, lambda n: QTPoly.one())
        with pytest.raises(ValidationError):
            _ = a * b

"""Scalar, series, and symbolic-polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from troplift.errors import (
    NegativeLeading,
    NotQuadratic,
    ValuationUnknown,
)
from troplift.mpoly import (
    MPoly,
    mpoly_det,
    mpoly_disc,
    mpoly_exact_div,
    sym_matrix_polys,
)
from troplift.puiseux import (
    PuiseuxSeries,
    ps_add,
    ps_eq_to_trunc,
    ps_inv,
    ps_lead_sign,
    ps_mul,
    ps_sqrt,
    ps_val,
    quad_roots,
)
from troplift.quadext import QuadExt

F = Fraction


def series(*pairs, trunc=None):
    return PuiseuxSeries.make(pairs, trunc=trunc)


ONE = PuiseuxSeries.constant(F(1))


class TestSeriesBasics:
    def test_add_cancels_leading_term(self):
        x = series((0, 1), (1, 1))
        y = series((0, -1), (2, 1))
        assert ps_add(x, y) == series((1, 1), (2, 1))

    def test_add_fractional_exponents(self):
        half = series((F(1, 2), 1))
        assert ps_add(half, half) == series((F(1, 2), 2))

    def test_add_zero_identity(self):
        x = series((-1, 3), (F(3, 2), F(2, 7)))
        assert ps_add(x, PuiseuxSeries.zero()) == x

    def test_mul(self):
        assert ps_mul(series((0, 1), (1, 1)), series((0, 1), (1, -1))) == series(
            (0, 1), (2, -1)
        )

    def test_mul_fractional(self):
        assert ps_mul(series((F(1, 3), 1)), series((F(2, 3), 1))) == series((1, 1))

    def test_inv_geometric(self):
        inv = ps_inv(series((0, 1), (1, 1)), trunc=4)
        assert inv == series((0, 1), (1, -1), (2, 1), (3, -1), trunc=4)

    def test_inv_times_self_is_one(self):
        rng = random.Random(20240901)
        for _ in range(200):
            nterms = rng.randint(1, 4)
            val = F(rng.randint(-3, 3))
            exps = sorted({val + F(rng.randint(0, 12), rng.randint(1, 3)) for _ in range(nterms)})
            exps[0] = val
            coeffs = [F(rng.randint(1, 30), rng.randint(1, 5)) * rng.choice((1, -1)) for _ in exps]
            x = series(*zip(exps, coeffs))
            assert ps_eq_to_trunc(ps_mul(ps_inv(x), x), ONE)

    def test_val_and_sign(self):
        x = series((2, 3), (5, 1))
        assert ps_val(x) == 2
        assert ps_lead_sign(x) == 1

    def test_negative_leading_sign(self):
        x = series((2, -8), (3, 5))
        assert ps_val(x) == 2
        assert ps_lead_sign(x) == -1

    def test_unknown_valuation(self):
        x = series(trunc=10)
        with pytest.raises(ValuationUnknown):
            ps_val(x)

    def test_exact_zero_valuation_is_infinite(self):
        assert ps_val(PuiseuxSeries.zero()) is None


class TestSqrt:
    def test_sqrt_monomial(self):
        assert ps_sqrt(series((2, 1))) == series((1, 1))

    def test_sqrt_binomial_series(self):
        got = ps_sqrt(series((0, 4), (1, 4)), trunc=3)
        want = series((0, 2), (1, 1), (2, F(-1, 4)), (3, F(1, 8)), trunc=3)
        assert ps_eq_to_trunc(got, want)

    def test_sqrt_irrational_leading(self):
        got = ps_sqrt(series((4, 2)))
        assert got.val() == 2
        lead = got.lead_coeff()
        assert isinstance(lead, QuadExt)
        assert lead == QuadExt(F(0), F(1), F(2))

    def test_sqrt_squares_back(self):
        rng = random.Random(7)
        for _ in range(50):
            val = 2 * F(rng.randint(-2, 2))
            exps = sorted({val + k for k in range(rng.randint(1, 4))})
            exps[0] = val
            coeffs = [F(rng.randint(1, 20), rng.randint(1, 4)) for _ in exps]
            x = series(*zip(exps, coeffs))
            y = ps_sqrt(x)
            assert ps_eq_to_trunc(ps_mul(y, y), x)

    def test_sqrt_negative_leading(self):
        with pytest.raises(NegativeLeading):
            ps_sqrt(series((0, -1)))


class TestSerialization:
    def test_series_json_roundtrip(self):
        from troplift import jsonio

        x = series((F(-3, 2), 5), (0, F(7, 3)), (F(1, 2), -2), trunc=F(19, 2))
        assert jsonio.decode_series(jsonio.encode_series(x)) == x

    def test_series_with_radical_coefficient_roundtrip(self):
        from troplift import jsonio

        y = ps_sqrt(series((4, 2)))  # sqrt(2) t^2
        back = jsonio.decode_series(jsonio.encode_series(y))
        assert back == y
        assert isinstance(back.lead_coeff(), QuadExt)

    def test_exact_series_roundtrip(self):
        from troplift import jsonio

        z = series((0, 1), (2, -1))
        assert jsonio.decode_series(jsonio.encode_series(z)) == z
        assert jsonio.encode_series(z)["trunc"] == "inf"


class TestQuadExt:
    def test_field_operations(self):
        x = QuadExt(F(1), F(2), F(3))  # 1 + 2*sqrt(3)
        y = QuadExt(F(-2), F(1), F(3))
        assert x + y == QuadExt(F(-1), F(3), F(3))
        assert x * y == QuadExt(F(4), F(-3), F(3))
        assert (x / y) * y == x
        assert x - x == 0

    def test_rational_values_fold(self):
        assert QuadExt.make(F(2), F(0), F(3)) == F(2)
        assert QuadExt.make(F(1), F(2), F(4)) == F(5)  # sqrt(4) = 2

    def test_exact_sign_with_opposite_parts(self):
        # 7 - 4*sqrt(3) > 0 since 49 > 48; 7 - 5*sqrt(2) < 0 since 49 < 50
        assert QuadExt(F(7), F(-4), F(3)).sign() == 1
        assert QuadExt(F(7), F(-5), F(2)).sign() == -1
        assert QuadExt(F(-7), F(4), F(3)).sign() == -1
        assert QuadExt(F(2), F(-1), F(4)).sign() == 0  # 2 - sqrt(4)


class TestQuadRoots:
    def test_rational_roots(self):
        x1, x2, sign = quad_roots(ONE, PuiseuxSeries.constant(F(-3)), PuiseuxSeries.constant(F(2)))
        assert sign == 1
        got = {tuple(x1.terms), tuple(x2.terms)}
        assert got == {((F(0), F(2)),), ((F(0), F(1)),)}

    def test_negative_discriminant(self):
        x1, x2, sign = quad_roots(ONE, PuiseuxSeries.zero(), series((2, 1)))
        assert sign == -1 and x1 is None and x2 is None

    def test_vieta(self):
        rng = random.Random(11)
        for _ in range(40)        :
            a = series((0, F(rng.randint(1, 9))), (1, F(rng.randint(-9, 9))))
            b = series((0, F(rng.randint(1, 9)) * rng.choice((1, -1))), (2, 1))
            c = series((rng.randint(0, 2), F(rng.randint(1, 9))))
            x1, x2, sign = quad_roots(a, b, c)
            if sign < 0:
                continue
            assert ps_eq_to_trunc(a * x1 * x2, c)
            assert ps_eq_to_trunc(a * (x1 + x2), -b)

    def test_glued_block_quadratic_valuations(self):
        # Bordered 3x3 completion: x^2 + b x + c with val(b) = 0 and
        # val(c) >= 0 has one root of valuation zero, the other nonnegative.
        b = series((0, 3), (1, 2))
        c = series((1, 5))
        x1, x2, sign = quad_roots(ONE, b, c)
        assert sign == 1
        roots = sorted((x1, x2), key=lambda r: r.val())
        assert roots[0].val() == 0
        assert roots[1].val() >= 0


def _delete_rc(mat, i, j):
    return [[e for jj, e in enumerate(row) if jj != j] for ii, row in enumerate(mat) if ii != i]


class TestMPoly:
    def test_det_2x2(self):
        nvars = 4
        m = [[MPoly.var(nvars, 0), MPoly.var(nvars, 1)], [MPoly.var(nvars, 2), MPoly.var(nvars, 3)]]
        det = mpoly_det(m)
        a, b, c, d = (MPoly.var(nvars, k) for k in range(4))
        assert det == a * d - b * c

    def test_exact_div(self):
        nvars = 2
        x, y = MPoly.var(nvars, 0), MPoly.var(nvars, 1)
        p = (x + y) * (x - y) * (x + 3)
        assert mpoly_exact_div(p, x + y) == (x - y) * (x + 3)

    def test_bareiss_matches_cofactor(self):
        rng = random.Random(3)
        nvars = 1
        for _ in range(10):
            n = 4
            m = [
                [MPoly.const(nvars, rng.randint(-5, 5)) + MPoly.var(nvars, 0) * rng.randint(-2, 2) for _ in range(n)]
                for _ in range(n)
            ]
            # cofactor expansion along the first row as the oracle
            def cof(mat):
                if len(mat) == 1:
                    return mat[0][0]
                out = MPoly.const(nvars, 0)
                for j, e in enumerate(mat[0]):
                    sub = cof(_delete_rc(mat, 0, j))
                    term = e * sub
                    out = out + (term if j % 2 == 0 else -term)
                return out

            assert mpoly_det(m) == cof(m)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symmetric_discriminant_identity(self, n):
        # Disc_{m_ij}(det M) = 4 M_i M_j for every i < j, exactly.
        mat, index, nvars = sym_matrix_polys(n)
        det = mpoly_det(mat)
        for i in range(n):
            for j in range(i + 1, n):
                disc = mpoly_disc(det, index[(i, j)])
                mi = mpoly_det(_delete_rc(mat, i, i)) if n > 1 else MPoly.const(nvars, 1)
                mj = mpoly_det(_delete_rc(mat, j, j))
                assert disc == 4 * mi * mj

    def test_disc_requires_quadratic(self):
        nvars = 2
        x = MPoly.var(nvars, 0)
        with pytest.raises(NotQuadratic):
            mpoly_disc(x * x * x, 0)

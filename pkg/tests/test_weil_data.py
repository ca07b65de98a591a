import pytest

from phinmod.errors import ValidationError, WeilValidationError
from phinmod.exact_linalg import QMatrix, char_poly, newton_polygon
from phinmod.weil_data import (
    EllipticCurveSpec,
    count_points,
    direct_sum,
    frobenius_of_elliptic,
    validate_weil,
)

from oracles import count_points_xy


class TestEllipticSpec:
    def test_singular_rejected(self):
        with pytest.raises(ValidationError):
            EllipticCurveSpec(5, 0, 0)

    def test_even_p_rejected(self):
        with pytest.raises(ValidationError):
            EllipticCurveSpec(2, 1, 1)

    def test_composite_p_rejected(self):
        with pytest.raises(ValidationError):
            EllipticCurveSpec(15, 1, 1)

    def test_coefficients_reduced(self):
        e = EllipticCurveSpec(5, 6, -1)
        assert (e.a4, e.a6) == (1, 4)


class TestCountPoints:
    def test_spot_values(self):
        assert count_points(EllipticCurveSpec(5, 1, 0)) == (4, 2)
        assert count_points(EllipticCurveSpec(7, -1, 0)) == (8, 0)
        assert count_points(EllipticCurveSpec(3, 1, 0)) == (4, 0)

    def test_against_xy_oracle(self):
        for p in (3, 5, 7, 11, 13):
            for a4 in range(p):
                for a6 in range(p):
                    if (4 * a4 ** 3 + 27 * a6 ** 2) % p == 0:
                        continue
                    n, a = count_points(EllipticCurveSpec(p, a4, a6))
                    assert n == count_points_xy(p, a4, a6)
                    assert a * a <= 4 * p

    def test_bound_enforced(self):
        with pytest.raises(ValidationError):
            count_points(EllipticCurveSpec(10007, 1, 1), bound=10 ** 4)


class TestFrobeniusOfElliptic:
    def test_companion_shape(self):
        w = frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0))
        assert w.matrix.to_rows() == [[0, -5], [1, 2]]
        assert (w.p, w.f, w.fil_dim, w.g) == (5, 1, 1, 1)

    def test_char_poly_is_weil(self):
        for p, a4, a6 in [(5, 1, 0), (7, 6, 0), (3, 1, 0), (11, 1, 3)]:
            w = frobenius_of_elliptic(EllipticCurveSpec(p, a4, a6))
            _, a = count_points(EllipticCurveSpec(p, a4, a6))
            assert char_poly(w.matrix) == [p, -a, 1]


class TestValidateWeil:
    def test_accepts_companion(self):
        w = validate_weil([[0, -5], [1, 2]], 5)
        assert w.q == 5 and w.g == 1

    def test_rejects_identity(self):
        with pytest.raises(WeilValidationError, match="det"):
            validate_weil(QMatrix.identity(2), 5)

    def test_rejects_archimedean_violation(self):
        # roots 1 and 5 have moduli 1 and 5, not sqrt(5)
        with pytest.raises(WeilValidationError, match="archimedean"):
            validate_weil([[0, -5], [1, 6]], 5)

    def test_rejects_odd_size(self):
        with pytest.raises(WeilValidationError, match="odd"):
            validate_weil([[5]], 5)

    def test_rejects_functional_equation_violation(self):
        # det = 25 = q^2 but coefficients are not q-symmetric:
        # char poly (T-25)(T-1)(T^2+T+1) has det 25 at q=5, g=2
        m = QMatrix.block_diag(
            [
                QMatrix.from_rows([[25]]),
                QMatrix.from_rows([[1]]),
                QMatrix.from_rows([[0, -1], [1, -1]]),
            ]
        )
        with pytest.raises(WeilValidationError):
            validate_weil(m, 5)

    def test_rejects_non_integer(self):
        from fractions import Fraction

        with pytest.raises(WeilValidationError, match="integer"):
            validate_weil(QMatrix.from_rows([[Fraction(1, 2), 0], [0, 10]]), 5)

    def test_q_eigenvalue_rejected(self):
        # diag(5, 1) + an honest elliptic block: det and functional equation
        # pass, the 4x4 modulus check is only advisory, but q is an exact
        # eigenvalue and must be excluded
        m = QMatrix.block_diag(
            [
                QMatrix.from_rows([[5, 0], [0, 1]]),
                QMatrix.from_rows([[0, -5], [1, 2]]),
            ]
        )
        with pytest.raises(WeilValidationError, match="eigenvalue"):
            validate_weil(m, 5)

    def test_archimedean_advisory_flag(self):
        # (5 +/- sqrt(5))/2 are real of the wrong modulus but multiply to q;
        # above 2x2 the modulus check records a violation instead of raising
        good = frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0)).matrix
        bad = QMatrix.from_rows([[0, -5], [1, 5]])
        w = validate_weil(QMatrix.block_diag([bad, good]), 5)
        assert not w.archimedean_verified
        ok = validate_weil(QMatrix.block_diag([good, good]), 5)
        assert ok.archimedean_verified

    def test_f_greater_than_one(self):
        # companion of T^2 - 3T + 9 at q = 3^2
        w = validate_weil([[0, -9], [1, 3]], 3, f=2)
        assert w.q == 9 and w.g == 1


class TestDirectSum:
    def test_empty(self):
        w = direct_sum([], 5, 1)
        assert w.size == 0 and w.g == 0 and w.fil_dim == 0

    def test_single(self):
        b = frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0))
        assert direct_sum([b], 5, 1).matrix == b.matrix

    def test_two_blocks(self):
        b1 = frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0))   # a = 2
        b2 = frobenius_of_elliptic(EllipticCurveSpec(5, 0, 1))   # a = 0
        w = direct_sum([b1, b2], 5, 1)
        assert w.size == 4 and w.fil_dim == 2
        from phinmod.exact_linalg import det

        assert det(w.matrix) == 25

    def test_revalidation_accepts_generated_data(self):
        w = direct_sum(
            [
                frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0)),
                frobenius_of_elliptic(EllipticCurveSpec(5, 0, 1)),
            ],
            5,
            1,
        )
        again = validate_weil(w.matrix, 5, 1)
        assert again.matrix == w.matrix and again.fil_dim == w.fil_dim

    def test_mixed_q_rejected(self):
        b1 = frobenius_of_elliptic(EllipticCurveSpec(5, 1, 0))
        b2 = frobenius_of_elliptic(EllipticCurveSpec(7, -1, 0))
        with pytest.raises(WeilValidationError):
            direct_sum([b1, b2], 5, 1)


class TestSlopeSymmetry:
    def test_newton_symmetry_of_generated_instances(self):
        specs = [(5, 1, 0), (5, 0, 1), (7, -1, 0), (13, 4, 4), (3, 1, 0)]
        blocks = {}
        for p, a4, a6 in specs:
            w = frobenius_of_elliptic(EllipticCurveSpec(p, a4, a6))
            blocks.setdefault(p, []).append(w)
        for p, ws in blocks.items():
            w = direct_sum(ws, p, 1)
            np_ = newton_polygon(char_poly(w.matrix), p).scaled(1)
            assert np_.is_symmetric()

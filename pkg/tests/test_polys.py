import random

import pytest

from avoidpair.polys import VARS, MultiPoly, RationalGF, SeriesTable, expand

X, P, Q, U, V, S, T, Y, Z = (MultiPoly.var(name) for name in "xpquvstyz")


def random_poly(rng, max_terms=4, max_exp=3, max_coeff=9):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) if rng.random() < 0.4 else 0 for _ in VARS)
        terms[exps] = rng.randint(-max_coeff, max_coeff)
    return MultiPoly(terms)


def random_point(rng):
    return {name: rng.randint(-5, 5) for name in VARS}


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (1 + X) * (1 - X) == 1 - X**2

    def test_additive_inverse_gives_empty_term_set(self):
        a = 3 * P * Q - X**2
        assert (a + (-a)).is_zero()
        assert a - a == MultiPoly.zero()

    def test_hand_multiplied_product(self):
        # (1 - qx)(1 - x - qx), multiplied out by hand
        lhs = (1 - Q * X) * (1 - X - Q * X)
        rhs = 1 - X - 2 * Q * X + Q * X**2 + Q**2 * X**2
        assert lhs == rhs

    def test_int_coercion_both_sides(self):
        assert 1 + P == P + 1
        assert 2 * P == P + P
        assert 1 - P == -(P - 1)

    def test_pow(self):
        assert (1 - X) ** 3 == 1 - 3 * X + 3 * X**2 - X**3
        assert P**0 == MultiPoly.one()

    def test_ring_laws_at_random_integer_points(self):
        rng = random.Random(20240731)
        for _ in range(1000):
            a, b, c = (random_poly(rng) for _ in range(3))
            point = random_point(rng)
            ab = a.evaluate(point) * b.evaluate(point)
            assert (a * b).evaluate(point) == ab
            assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)
            assert (a * (b + c)).evaluate(point) == (a * b + a * c).evaluate(point)
            assert ((a * b) * c).evaluate(point) == (a * (b * c)).evaluate(point)

    def test_structural_ring_laws(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            MultiPoly({(1, 2): 1})
        with pytest.raises(ValueError):
            MultiPoly({(0,) * 9: 1.5})
        with pytest.raises(ValueError):
            MultiPoly.var("w")


class TestSubstituteAndRename:
    def test_substitute_one_merges_like_terms(self):
        # joint distribution at n = 3 for the layered class, specialized
        poly = P**2 * Y + 2 * P * Q * Y * Z + Q**2 * Z
        assert poly.substitute_one("y").substitute_one("z") == P**2 + 2 * P * Q + Q**2

    def test_substitute_absent_variable_is_identity(self):
        poly = 1 + X * P
        assert poly.substitute_one("z") == poly

    def test_substitute_to_plain_variable(self):
        assert (X * P).substitute_one("p") == X

    def test_rename_swap(self):
        poly = P**2 * Y + Q * Z
        assert poly.rename({"p": "q", "q": "p", "y": "z", "z": "y"}) == Q**2 * Z + P * Y

    def test_rename_rejects_collisions(self):
        with pytest.raises(ValueError):
            (P + Q).rename({"p": "q", "q": "q"})

    def test_x_slices_roundtrip(self):
        poly = 1 - 2 * Q**2 * X**2 * Z + Q**4 * X**4 * Z**2
        slices = poly.x_slices()
        assert sorted(slices) == [0, 2, 4]
        rebuilt = sum((part * X**d for d, part in slices.items()), MultiPoly.zero())
        assert rebuilt == poly


class TestRendering:
    def test_str_ordering_matches_fixed_layout(self):
        poly = Q**2 * Z + 2 * P * Q * Y * Z + P**2 * Y
        assert str(poly) == "p^2 y + 2 p q y z + q^2 z"

    def test_str_signs_and_constants(self):
        assert str(MultiPoly.zero()) == "0"
        assert str(MultiPoly.one()) == "1"
        # within one x-degree the bare x power leads, then descending-lex markers
        assert str(1 - X - 2 * Q * X) == "1 - x - 2 q x"
        assert str(-P + 1) == "1 - p"
        assert str(-(P * X)) == "-p x"
        assert str(3 * Q**2 * X**2 * Z) == "3 q^2 x^2 z"

    def test_json_roundtrip(self):
        rng = random.Random(99)
        for _ in range(100):
            poly = random_poly(rng)
            assert MultiPoly.from_json_terms(poly.to_json_terms()) == poly

    def test_json_shape(self):
        poly = 2 * P * Q * Y * Z
        assert poly.to_json_terms() == [
            {"exponents": {"p": 1, "q": 1, "y": 1, "z": 1}, "coeff": "2"}
        ]


class TestExpand:
    def test_geometric_series(self):
        table = expand(RationalGF(MultiPoly.one(), 1 - X), 3)
        assert list(table.coeffs) == [MultiPoly.one()] * 4

    def test_descent_series_for_layered_class(self):
        # (1 - qx)/(1 - x - qx): coefficient of x^n sums q^des over the class;
        # at n = 3 the members 123, 132, 213, 321 have descent counts 0, 1, 1, 2.
        table = expand(RationalGF(1 - Q * X, 1 - X - Q * X), 3)
        assert list(table.coeffs) == [
            MultiPoly.one(),
            MultiPoly.one(),
            1 + Q,
            1 + 2 * Q + Q**2,
        ]

    def test_rejects_nonunit_constant_term(self):
        with pytest.raises(ValueError):
            RationalGF(MultiPoly.one(), X + 2)
        with pytest.raises(ValueError):
            # constant term is 1 but the x-free slice is not, so the
            # convolution recurrence does not apply
            expand(RationalGF(MultiPoly.one(), 1 + V - X), 3)

    def test_linearity_with_common_denominator(self):
        den = 1 - X - Q * X
        num1, num2 = 1 - Q * X, Q * X**2
        joint = expand(RationalGF(num1 + num2, den), 8)
        left = expand(RationalGF(num1, den), 8)
        right = expand(RationalGF(num2, den), 8)
        for k in range(9):
            assert joint.coeffs[k] == left.coeffs[k] + right.coeffs[k]

    def test_residual_multiplication_recovers_numerator(self):
        # expand(gf) * den, truncated, equals num truncated: checked through
        # the full polynomial product rather than the recurrence itself.
        gf = RationalGF(1 - Q * X, 1 - X - Q * X)
        n = 9
        table = expand(gf, n)
        series = sum((c * X**k for k, c in enumerate(table.coeffs)), MultiPoly.zero())
        product = series * gf.den
        truncated = MultiPoly(
            {e: c for e, c in dict(product.terms()).items() if e[0] <= n}
        )
        assert truncated == gf.num

    def test_series_table_validates_length(self):
        with pytest.raises(ValueError):
            SeriesTable(2, (MultiPoly.one(),))

    def test_series_table_json(self):
        table = expand(RationalGF(MultiPoly.one(), 1 - X), 1)
        assert table.to_json_obj() == {
            "n_max": 1,
            "coeffs": [
                [{"exponents": {}, "coeff": "1"}],
                [{"exponents": {}, "coeff": "1"}],
            ],
        }

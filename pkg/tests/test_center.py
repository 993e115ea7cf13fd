from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wblow.arith import INF, Polynomial, parse_polynomial
from wblow.center import (
    FrameEntry,
    TransportedCenter,
    TriangularizationError,
    WeightedCenter,
    center_equal,
    divide_by_monic_linear,
    format_rational,
    frame_from_parameters,
    graph_normalize,
)
from wblow.ideals import LocalIdeal

VS = ("x", "y")


def P(text, vs=VS):
    return parse_polynomial(text, vs)


def C(params, vs=VS):
    return frame_from_parameters(
        vs, [(parse_polynomial(t, vs), Fraction(d)) for t, d in params]
    )


CUSP = C([("x", 2), ("y", 3)])
SHIFTED = C([("x + 1/2*y^2", 2), ("y", 4)])

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
monos2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(monos2, coeffs, max_size=5).map(lambda d: Polynomial(VS, d))


class TestFrameValidation:
    def test_weights(self):
        assert CUSP.weight_lcm == 6
        assert CUSP.weights == (3, 2)
        half = C([("x", Fraction(3, 2)), ("y", 2)])
        assert half.weight_lcm == 6
        assert half.weights == (4, 3)

    def test_exponents_must_increase(self):
        with pytest.raises(ValueError):
            C([("x", 3), ("y", 2)])
        with pytest.raises(ValueError):
            C([("x", 0)])

    def test_tail_constraints(self):
        x_tail_y = FrameEntry("x", P("y^2"))
        WeightedCenter(VS, [x_tail_y], [Fraction(2)])
        with pytest.raises(ValueError):
            WeightedCenter(VS, [FrameEntry("x", P("1 + y"))], [Fraction(2)])
        with pytest.raises(ValueError):
            WeightedCenter(VS, [FrameEntry("x", P("x*y"))], [Fraction(2)])
        with pytest.raises(ValueError):
            # second tail may not use the first frame variable
            WeightedCenter(
                VS,
                [FrameEntry("y", Polynomial.zero(VS)), FrameEntry("x", P("y"))],
                [Fraction(2), Fraction(2)],
            )

    def test_interleaved_tail_is_allowed(self):
        # the first tail may use the second frame variable
        c = WeightedCenter(
            VS,
            [FrameEntry("x", P("y^2")), FrameEntry("y", Polynomial.zero(VS))],
            [Fraction(2), Fraction(4)],
        )
        assert c.nu(P("x")) == Fraction(1, 2)
        assert c.nu(P("x - y^2")) == Fraction(1, 2)


class TestValuation:
    def test_cusp_values(self):
        assert CUSP.nu(P("x^2 + y^3")) == 1
        assert CUSP.nu(P("x*y")) == Fraction(5, 6)
        assert CUSP.nu(P("1 + x")) == 0
        assert CUSP.nu(Polynomial.zero(VS)) == INF

    def test_own_parameters(self):
        for center in (CUSP, SHIFTED):
            for p, d in center.parameters():
                assert center.nu(p) == Fraction(1) / d

    def test_complement_weighs_nothing(self):
        vs3 = ("x", "y", "z")
        c = C([("x", 2), ("y", 3)], vs=vs3)
        assert c.nu(parse_polynomial("z", vs3)) == 0
        assert c.nu(parse_polynomial("z*x", vs3)) == Fraction(1, 2)

    def test_admissibility(self):
        assert CUSP.admissible(LocalIdeal(VS, [P("x^2 + y^3")]))
        x3 = C([("x", 3)])
        assert x3.nu(P("x^2")) == Fraction(2, 3)
        assert not x3.admissible(LocalIdeal(VS, [P("x^2")]))
        assert CUSP.admissible(LocalIdeal.zero(VS))

    @given(polys2, polys2)
    @settings(max_examples=50)
    def test_multiplicative(self, f, g):
        nu = SHIFTED.nu
        if f.is_zero() or g.is_zero():
            assert nu(f * g) == INF
        else:
            assert nu(f * g) == nu(f) + nu(g)

    @given(polys2, polys2)
    @settings(max_examples=50)
    def test_superadditive_on_sums(self, f, g):
        nu = SHIFTED.nu
        assert nu(f + g) >= min(nu(f), nu(g))


class TestRounding:
    def test_cusp(self):
        assert [str(g) for g in CUSP.rounding()] == ["x^2", "x*y^2", "y^3"]

    def test_shifted_frame(self):
        assert [str(g) for g in SHIFTED.rounding()] == ["x^2", "x*y^2", "y^4"]

    def test_three_variables(self):
        vs3 = ("x", "y", "z")
        c = C([("x", 2), ("y", 3), ("z", 3)], vs=vs3)
        assert [str(g) for g in c.rounding()] == [
            "x^2",
            "x*y^2",
            "x*y*z",
            "x*z^2",
            "y^3",
            "y^2*z",
            "y*z^2",
            "z^3",
        ]

    def test_rounding_is_admissible(self):
        for center in (CUSP, SHIFTED):
            for g in center.rounding():
                assert center.nu(g) >= 1


class TestCenterEqual:
    def test_shifted_presentation_matches_plain(self):
        plain = C([("x", 2), ("y", 4)])
        assert center_equal(plain, SHIFTED)
        assert center_equal(SHIFTED, plain)

    def test_different_multiorder(self):
        assert not center_equal(C([("x", 2), ("y", 3)]), C([("x", 2), ("y", 4)]))

    def test_same_multiorder_different_locus(self):
        assert not center_equal(C([("x", 2), ("y", 4)]), C([("y", 2), ("x", 4)]))

    def test_transported_swap(self):
        swap = {
            "x": Polynomial.variable(VS, "y"),
            "y": Polynomial.variable(VS, "x"),
        }
        moved = TransportedCenter(CUSP, to_base=swap, from_base=swap)
        direct = C([("y", 2), ("x", 3)])
        assert center_equal(moved, direct)
        assert not center_equal(moved, CUSP)

    def test_transported_shear(self):
        # x -> x + y is its own inverse composed with negation fixed up
        fwd = {"x": P("x + y"), "y": P("y")}
        back = {"x": P("x - y"), "y": P("y")}
        moved = TransportedCenter(CUSP, to_base=back, from_base=fwd)
        direct = frame_from_parameters(
            VS, [(P("x + y"), Fraction(2)), (P("y"), Fraction(3))]
        )
        assert center_equal(moved, direct)


class TestGraphNormalize:
    def test_unit_factor_is_stripped(self):
        assert graph_normalize(P("x + x*y"), "x") == Polynomial.zero(VS)

    def test_scaling(self):
        assert graph_normalize(P("2*x + y^2"), "x") == P("1/2*y^2")

    def test_series_graph_rejected(self):
        assert graph_normalize(P("x - y^2 + x^2"), "x") is None

    def test_nonvanishing_rejected(self):
        assert graph_normalize(P("1 + x"), "x") is None

    def test_no_linear_part_rejected(self):
        assert graph_normalize(P("x^2 + y"), "x") is None

    @given(polys2.filter(lambda t: not t.uses_variable("x")), polys2)
    @settings(max_examples=40)
    def test_division_identity(self, psi, p):
        psi = psi.truncate_degree(2)
        q, r = divide_by_monic_linear(p, "x", psi)
        divisor = Polynomial.variable(VS, "x") - psi
        assert q * divisor + r == p
        assert not r.uses_variable("x")


class TestFrameFromParameters:
    def test_rejects_non_coordinate(self):
        with pytest.raises(TriangularizationError):
            frame_from_parameters(VS, [(P("y^2"), Fraction(2))])

    def test_rejects_dependent_pair(self):
        with pytest.raises(TriangularizationError):
            frame_from_parameters(
                VS, [(P("x + y"), Fraction(2)), (P("y + x"), Fraction(2))]
            )

    def test_lowest_linear_variable_wins(self):
        c = frame_from_parameters(VS, [(P("y + x"), Fraction(2))])
        assert c.entries[0].variable == "x"
        assert c.entries[0].tail == P("y")


def test_format_rational():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(INF) == "inf"

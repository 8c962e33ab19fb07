"""Tests for hypersurface counts, deficiency profiles and classifications."""

import pytest
from helpers import symbolic_a_m

from hypersurfaces import formulas
from hypersurfaces.cohomology import (
    AmResult,
    a_m,
    a_m_detailed,
    classify_a2_curve,
    bound_check,
    deficiency_profile,
    h1_ideal,
    hyperplane_section_points,
    profile_csv,
    verify_monotonic,
    verify_reg_bound,
)
from hypersurfaces.exactcore import PrimeField, binomial
from hypersurfaces.varieties import (
    FieldTooSmallError,
    elliptic_normal_curve,
    hyperelliptic_g2_curve,
    multisecant_projection,
    project_from_general_point,
    rational_normal_curve,
    scroll_section_curve,
    scroll_surface,
    veronese_surface,
)

GF = PrimeField(10007)


# ---------------------------------------------------------------- a_m


def test_a2_twisted_cubic():
    assert a_m(rational_normal_curve(3, GF), 2) == 3


def test_a2_elliptic_quartic():
    assert a_m(elliptic_normal_curve(2, 10007), 2) == 2


def test_a2_scroll_12_stabilized():
    res = a_m_detailed(scroll_surface(1, 2, GF), 2)
    assert res == AmResult(value=3, exact=False, batches=res.batches)
    assert res.value == formulas.F(2, 2, 2)


def test_am_matches_symbolic_oracle_curves():
    # the oracle expands the parametrization symbolically: no sampling at all
    for r in (3, 4, 5):
        v = rational_normal_curve(r, GF)
        for m in (2, 3):
            assert a_m(v, m) == symbolic_a_m(v, m)
    v = scroll_section_curve(1, 3, 5, GF, seed=7)
    for m in (1, 2, 3):
        assert a_m(v, m) == symbolic_a_m(v, m)
    v = project_from_general_point(rational_normal_curve(4, GF), seed=3)
    for m in (2, 3):
        assert a_m(v, m) == symbolic_a_m(v, m)


def test_am_matches_symbolic_oracle_weierstrass():
    ell = elliptic_normal_curve(3, 10007)
    g2 = hyperelliptic_g2_curve(3, 10007)
    for m in (1, 2, 3):
        assert a_m(ell, m) == symbolic_a_m(ell, m)
        assert a_m(g2, m) == symbolic_a_m(g2, m)


def test_am_matches_symbolic_oracle_surfaces():
    for v in (scroll_surface(1, 2, GF), scroll_surface(2, 2, GF), veronese_surface(GF)):
        for m in (2, 3):
            assert a_m(v, m) == symbolic_a_m(v, m)


def test_am_seed_independent():
    v = rational_normal_curve(4, GF)
    assert a_m(v, 2, seed=1) == a_m(v, 2, seed=2024) == 6
    ms = multisecant_projection(4, 4, 0, 10007, seed=5)
    assert a_m(ms, 2, seed=3) == a_m(ms, 2, seed=4)


def test_am_field_too_small():
    v = rational_normal_curve(3, PrimeField(11))
    with pytest.raises(FieldTooSmallError):
        a_m(v, 4)  # needs 13 points, only 12 available


def test_am_validates_degree():
    with pytest.raises(ValueError):
        a_m(rational_normal_curve(3, GF), 0)


# ---------------------------------------------------------------- h1


def test_h1_linearly_normal_curves_vanish():
    ell = elliptic_normal_curve(3, 10007)
    for m in (1, 2, 3):
        assert h1_ideal(ell, m) == 0
    g2 = hyperelliptic_g2_curve(4, 10007)
    for m in (1, 2):
        assert h1_ideal(g2, m) == 0


def test_h1_projected_rnc():
    v = project_from_general_point(rational_normal_curve(6, GF), seed=3)
    assert h1_ideal(v, 1) == 1


def test_h1_scroll_example_value():
    # degree 2c+1 curve on S(1, c-1), c = 4: deficiency c in degrees 1 and 2
    c = 4
    v = scroll_section_curve(1, c - 1, c + 1, GF, seed=7)
    assert h1_ideal(v, 1) == c
    assert h1_ideal(v, 2) == c


def test_h1_refuses_large_degree():
    v = scroll_section_curve(1, 2, 5, GF, seed=1)  # d = 8 > 2c+1 = 7
    with pytest.raises(ValueError):
        h1_ideal(v, 1)


# ---------------------------------------------------------------- profiles


def test_profile_scroll_sharpness_example():
    # h1 = c, c, c-m+1 for 3 <= m <= c, then 0; regularity c+2
    for c in (4, 5):
        v = scroll_section_curve(1, c - 1, c + 1, GF, seed=7)
        prof = deficiency_profile(v)
        expected = (c, c) + tuple(c - m + 1 for m in range(3, c + 1))
        assert prof.nonzero_h1() == expected
        assert prof.reg == c + 2
        assert prof.h1[1] == prof.h1[2]  # the non-strict step at d = 2c+1


def test_profile_multisecant_extremal():
    v = multisecant_projection(4, 4, 0, 10007, seed=5)
    prof = deficiency_profile(v)
    assert prof.nonzero_h1() == (2, 1)
    assert prof.reg == 4 == v.d - v.c + 1 - v.g
    assert verify_monotonic(prof)
    assert verify_reg_bound(prof)


def test_profile_linearly_normal_zero():
    prof = deficiency_profile(hyperelliptic_g2_curve(3, 10007))
    assert prof.nonzero_h1() == ()
    assert prof.linearly_normal
    assert prof.reg == 3  # genus forces the structure-sheaf term
    prof0 = deficiency_profile(rational_normal_curve(4, GF))
    assert prof0.reg == 2


def test_ledger_identity_everywhere():
    # a_m = u + h1 with h1 >= 0 for every constructed curve with d <= 2c+1
    curves = [
        rational_normal_curve(4, GF),
        elliptic_normal_curve(3, 10007),
        hyperelliptic_g2_curve(3, 10007),
        multisecant_projection(4, 4, 1, 10007, seed=5),
        scroll_section_curve(1, 3, 5, GF, seed=7),
    ]
    for v in curves:
        for m in (1, 2, 3):
            h1 = h1_ideal(v, m)
            assert h1 >= 0
            assert a_m(v, m) == formulas.u(v.c, v.g, v.d, m) + h1


def test_verify_monotonic_rejects_out_of_range():
    c = 4
    v = scroll_section_curve(1, c - 1, c + 1, GF, seed=7)  # d = 2c+1
    prof = deficiency_profile(v)
    with pytest.raises(ValueError, match="d <= 2c violated"):
        verify_monotonic(prof)


def test_verify_monotonic_all_small_curves():
    witnesses = [
        multisecant_projection(4, 3, 0, 10007, seed=5),
        multisecant_projection(4, 4, 0, 10007, seed=5),
        multisecant_projection(4, 4, 1, 10007, seed=5),
        multisecant_projection(5, 5, 2, 10007, seed=5),
    ]
    for v in witnesses:
        prof = deficiency_profile(v)
        assert verify_monotonic(prof)
        assert verify_reg_bound(prof)
        # the multisecant construction achieves the extremal profile
        assert prof.reg == v.d - v.c + 1 - v.g


def test_profile_csv_shape():
    v = multisecant_projection(4, 4, 0, 10007, seed=5)
    csv = profile_csv(deficiency_profile(v))
    lines = csv.strip().splitlines()
    assert lines[0] == "m,a_m,u,h1"
    assert lines[1].startswith("1,")
    assert len(lines) == 4  # m = 1, 2 nonzero then the closing zero at m = 3


# ---------------------------------------------------------------- classification


def test_classify_four_cases():
    assert classify_a2_curve(rational_normal_curve(3, GF)).case == "rational_normal_curve"
    assert (
        classify_a2_curve(elliptic_normal_curve(3, 10007)).case
        == "linearly_normal_genus_1"
    )
    g2 = classify_a2_curve(hyperelliptic_g2_curve(3, 10007))
    assert g2.case == "linearly_normal_genus_2" and g2.k == 3
    proj = classify_a2_curve(multisecant_projection(4, 3, 0, 10007, seed=5))
    assert proj.case == "projected_rational_normal_curve" and proj.k == 3
    sec4 = classify_a2_curve(multisecant_projection(4, 4, 0, 10007, seed=5))
    assert sec4.case == "rational_4secant_line" and sec4.k == 4
    pell = classify_a2_curve(multisecant_projection(4, 4, 1, 10007, seed=5))
    assert pell.case == "projected_elliptic_curve" and pell.k == 4
    for record in (g2, proj, sec4, pell):
        assert record.h1_identity_ok
        assert record.witness_consistent


def test_classify_out_of_range():
    # for c = 2 a projected quartic already has k = 3 > c
    v = project_from_general_point(rational_normal_curve(4, GF), seed=3)
    with pytest.raises(ValueError, match="outside the classified range"):
        classify_a2_curve(v)


# ---------------------------------------------------------------- bounds


def test_bound_check_examples():
    pq = project_from_general_point(rational_normal_curve(4, GF), seed=3)
    assert a_m(pq, 2) == 1
    assert bound_check(pq, 2, 2)  # 1 <= H(2,1,2,2) = 2
    assert bound_check(rational_normal_curve(3, GF), 2, 1)  # equality case
    big = scroll_section_curve(1, 3, 5, GF, seed=7)  # d = 9 = c+5, c = 4
    assert bound_check(big, 2, 5)


def test_bound_check_validation():
    v = rational_normal_curve(3, GF)
    with pytest.raises(ValueError):
        bound_check(v, 2, 2)  # d = c+1 < c+2


# ---------------------------------------------------------------- sections


def test_section_inequality_chain():
    # the quadric count of the variety is bounded by that of the points of a
    # generic linear section
    witnesses = [
        rational_normal_curve(3, GF),
        elliptic_normal_curve(3, 10007),
        scroll_surface(1, 2, GF),
        veronese_surface(GF),
    ]
    for v in witnesses:
        gamma = hyperplane_section_points(v, seed=11)
        assert len(gamma) == v.d
        assert a_m(v, 2) <= gamma.h0_ideal(2)


def test_section_points_count_and_ambient():
    v = rational_normal_curve(4, GF)
    gamma = hyperplane_section_points(v, seed=1)
    assert len(gamma) == 4
    assert gamma.c == 3
    # section of a curve in linearly general position: 3-regular
    assert gamma.regularity() <= 3

"""Tests for secant dimensions and deficiency invariants of quadratic embeddings."""

import json

import pytest

from hypersurfaces.exactcore import QQ, PrimeField, binomial
from hypersurfaces.secants import (
    TerraciniError,
    expected_table2_deltas,
    invariants_json,
    secant_dim,
    table2_row,
    veronese_square,
    zak_invariants,
)
from hypersurfaces.varieties import (
    elliptic_normal_curve,
    project_from_general_point,
    rational_normal_curve,
    scroll_surface,
    veronese_surface,
)

BIGP = PrimeField(1000003)


# ---------------------------------------------------------------- embedding


def test_square_twisted_cubic():
    y = veronese_square(rational_normal_curve(3, BIGP))
    assert y.N == 9
    assert len(y.coords2) == binomial(5, 2) == 10
    assert y.span_dim == 9 - 3 == 6


def test_square_conic():
    y = veronese_square(rational_normal_curve(2, BIGP))
    assert y.N == 5
    assert y.span_dim == 4  # one quadric through a conic


def test_square_veronese_surface():
    y = veronese_square(veronese_surface(BIGP))
    assert y.N == binomial(7, 2) - 1 == 20
    assert y.span_dim == 20 - 6 == 14


def test_square_rejects_enumerator_curves():
    with pytest.raises(ValueError):
        veronese_square(elliptic_normal_curve(2, 10007))


# ---------------------------------------------------------------- secant dims


def test_secant_dims_twisted_cubic():
    y = veronese_square(rational_normal_curve(3, BIGP))
    assert [secant_dim(y, k) for k in range(4)] == [1, 3, 5, 6]


def test_secant_dims_veronese():
    y = veronese_square(veronese_surface(BIGP))
    assert secant_dim(y, 3) == 11
    assert secant_dim(y, 4) == 13
    assert secant_dim(y, 5) == 14


def test_secant_dim_small_prime_rejected():
    y = veronese_square(rational_normal_curve(3, BIGP))
    small = rational_normal_curve(3, PrimeField(10007))
    with pytest.raises(ValueError):
        secant_dim(veronese_square(small), 1)
    assert secant_dim(y, 0) == 1


def test_secant_dim_deterministic():
    y = veronese_square(veronese_surface(BIGP))
    assert secant_dim(y, 3, seed=4) == secant_dim(y, 3, seed=4)


# ---------------------------------------------------------------- invariants


def test_zak_twisted_cubic():
    inv = zak_invariants(rational_normal_curve(3, BIGP))
    assert (inv.ell2, inv.k2) == (2, 3)
    assert inv.delta[3] == 1
    assert inv.delta2_total == 1
    assert inv.zak4_ok and inv.zak5_ok


def test_zak_veronese():
    inv = zak_invariants(veronese_surface(BIGP))
    assert (inv.ell2, inv.k2) == (3, 5)
    assert (inv.delta[4], inv.delta[5]) == (1, 2)
    assert inv.zak4_ok


def test_zak_projected_quartic():
    v = project_from_general_point(rational_normal_curve(4, BIGP), seed=3)
    inv = zak_invariants(v)
    assert (inv.delta[3], inv.delta[4], inv.k2) == (0, 1, 4)
    assert inv.zak4_ok


def test_zak_general_properties():
    # vanishing below the codimension, the k-c ceiling, strict growth of the
    # deficiency past ell2, and bounded rank growth
    witnesses = [
        rational_normal_curve(3, BIGP),
        rational_normal_curve(4, BIGP),
        scroll_surface(1, 2, BIGP),
        scroll_surface(2, 2, BIGP),
        veronese_surface(BIGP),
        project_from_general_point(rational_normal_curve(4, BIGP), seed=3),
    ]
    for v in witnesses:
        inv = zak_invariants(v)
        assert inv.zak4_ok and inv.zak5_ok
        n, c = inv.n, inv.c
        for k, dk in inv.delta.items():
            if k <= c:
                assert dk == 0
            if c + 1 <= k <= c + n:
                assert dk <= k - c
        assert inv.ell2 >= c
        window = [inv.delta[k] for k in range(inv.ell2 + 1, min(inv.k2, c + n) + 1)]
        assert all(a < b for a, b in zip(window, window[1:]))
        for k in range(1, inv.k2 + 1):
            assert inv.s[k - 1] <= inv.s[k] <= inv.s[k - 1] + n + 1
        # linear tail: once delta_k = k-c happens, it persists and k2 = c+n
        hit = [k for k in range(c + 1, min(inv.k2, c + n) + 1) if inv.delta[k] == k - c]
        if hit:
            k0 = hit[0]
            assert inv.k2 == c + n
            for k in range(k0, c + n + 1):
                assert inv.delta[k] == k - c


def test_zak_rational_pass_matches_prime_pass():
    for make in (
        lambda fld: rational_normal_curve(3, fld),
        lambda fld: veronese_surface(fld),
        lambda fld: project_from_general_point(rational_normal_curve(4, fld), seed=3),
    ):
        inv_p = zak_invariants(make(BIGP))
        inv_q = zak_invariants(make(QQ))
        assert inv_p.s == inv_q.s
        assert inv_p.delta == inv_q.delta
        assert (inv_p.ell2, inv_p.k2) == (inv_q.ell2, inv_q.k2)


# ---------------------------------------------------------------- table rows


def test_expected_table2_rows():
    assert expected_table2_deltas(1, 2, "c+1", "n+1") == {3: 1, 4: 0}
    assert expected_table2_deltas(2, 2, "c+1", "n+1") == {3: 1, 4: 2, 5: 0}
    assert expected_table2_deltas(1, 2, "c+2", "1") == {3: 0, 4: 1}
    assert expected_table2_deltas(2, 3, "c+2", "1") == {4: 0, 5: 1, 6: 2}
    assert expected_table2_deltas(3, 3, "c+2", "n") == {4: 0, 5: 1, 6: 3, 7: 0}
    assert expected_table2_deltas(3, 3, "c+2", "n+1") == {4: 0, 5: 2, 6: 3, 7: 0}
    assert expected_table2_deltas(3, 3, "c+3", "n+1") == {4: 0, 5: 1, 6: 3, 7: 0}
    with pytest.raises(ValueError):
        expected_table2_deltas(2, 3, "c+4", "n")


def test_table2_row_minimal_and_depth_one():
    assert table2_row(rational_normal_curve(3, BIGP), "c+1", "n+1").ok
    assert table2_row(scroll_surface(1, 2, BIGP), "c+1", "n+1").ok
    assert table2_row(veronese_surface(BIGP), "c+1", "n+1").ok
    pq = project_from_general_point(rational_normal_curve(4, BIGP), seed=3)
    assert table2_row(pq, "c+2", "1").ok
    ps = project_from_general_point(scroll_surface(1, 4, BIGP), seed=11)
    assert table2_row(ps, "c+2", "1").ok


def test_table2_row_mismatch_reported():
    cmp = table2_row(rational_normal_curve(3, BIGP), "c+2", "1")
    assert not cmp.ok
    assert cmp.mismatches


# ---------------------------------------------------------------- report


def test_invariants_json_fixed_keys():
    inv = zak_invariants(rational_normal_curve(3, BIGP), trials=3, seed=9)
    payload = json.loads(invariants_json(inv))
    assert list(payload) == [
        "label", "n", "c", "d", "s", "delta", "ell2", "k2",
        "delta2", "zak4_ok", "trials", "seed",
    ]
    assert payload["s"] == [1, 3, 5, 6]
    assert payload["delta"] == [0, 0, 1]
    assert payload["seed"] == 9

import pytest

import ggk_codes as gg


def test_curve_numerology():
    c = gg.new_curve(2, 3)
    assert (c.genus, c.n_places, c.n, c.w_deg, c.m_dual) == (10, 225, 223, 224, 242)
    assert c.goppa(35) == 17


def test_invalid_parameters():
    with pytest.raises(ValueError):
        gg.new_curve(2, 2)
    with pytest.raises(ValueError):
        gg.new_curve(6, 1)


def test_semigroup():
    c = gg.new_curve(2, 3)
    assert gg.decompose(1, c) == (-1, 2, 2)
    assert gg.tau(1, c) == 19
    assert gg.tau_inv(19, c) == 1
    assert len(gg.gaps_qinf(c)) == c.genus


def test_table_and_best():
    c = gg.new_curve(2, 3)
    t = gg.build_table(c)
    assert t.delta == 245
    assert t.at(28, 7) == 18
    assert gg.bound(400, 0, t, c) == c.goppa(400)
    assert gg.dim_code(28, 7, c) == 26
    rows = gg.best_codes(c, t)
    row = next(r for r in rows if r["k"] == 197)
    assert (row["d_2P"], row["d_1P"]) == (18, 17)
    assert rows[0]["k"] == 222 and rows[-1]["k"] == 1


def test_verify_hermitian():
    ok, checks = gg.verify(gg.new_curve(2, 1))
    assert ok
    assert any(ch["informational"] for ch in checks)

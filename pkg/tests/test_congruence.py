import pytest

from pseudofactorials.algebra import Poly
from pseudofactorials.congruence import (
    REFERENCE_RESIDUES,
    ModSeq,
    alpha_mod,
    canonical_modulus,
    check_modular_recurrence,
    detect_period,
    figure3_csv,
    figure3_table,
    figure3_text,
    mismatched_cells,
    modular_convergent,
    series_of_convergent,
)
from pseudofactorials.pseudofact import alpha_seq

# reference residues alpha_n mod M, n = 0..25, typed in independently of the module copy
TABLE = """
2: 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
3: 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2
4: 1 3 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
5: 1 4 3 2 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
6: 1 5 4 2 4 2 4 2 4 2 4 2 4 2 4 2 4 2 4 2 4 2 4 2 4 2
7: 1 6 5 2 2 2 2 4 1 6 6 6 6 5 3 4 4 4 4 1 2 5 5 5 5 3
8: 1 7 6 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
9: 1 8 7 2 7 5 4 5 1 8 1 2 7 2 4 5 4 8 1 8 7 2 7 5 4 5
10: 1 9 8 2 6 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
11: 1 10 9 2 5 4 10 6 5 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
12: 1 11 10 2 4 8 4 8 4 8 4 8 4 8 4 8 4 8 4 8 4 8 4 8 4 8
13: 1 12 11 2 3 12 5 0 5 1 4 2 1 11 9 4 6 11 10 0 10 2 8 4 2 9
14: 1 13 12 2 2 2 2 4 8 6 6 6 6 12 10 4 4 4 4 8 2 12 12 12 12 10
15: 1 14 13 2 1 5 10 5 10 5 10 5 10 5 10 5 10 5 10 5 10 5 10 5 10 5
16: 1 15 14 2 0 8 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
17: 1 16 15 2 16 11 3 3 5 16 7 12 10 7 1 10 1 0 0 0 0 0 0 0 0 0
18: 1 17 16 2 16 14 4 14 10 8 10 2 16 2 4 14 4 8 10 8 16 2 16 14 4 14
19: 1 18 17 2 16 17 3 14 0 17 6 9 8 3 18 0 15 8 7 11 3 16 14 3 5 17
20: 1 19 18 2 16 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
"""
EXPECTED = {
    int(m): [int(x) for x in row.split()]
    for m, row in (line.split(":") for line in TABLE.strip().splitlines())
}


def test_table_cell_for_cell():
    table = figure3_table()
    assert len(table) == 19
    for M, row in zip(range(2, 21), table):
        assert row == EXPECTED[M], M
    assert mismatched_cells() == []
    assert {M: list(v) for M, v in REFERENCE_RESIDUES.items()} == EXPECTED


def test_alpha_mod_examples():
    assert alpha_mod(3, 8).values == (1, 2, 1, 2, 1, 2, 1, 2)
    assert alpha_mod(7, 12).values == (1, 6, 5, 2, 2, 2, 2, 4, 1, 6, 6, 6)
    assert all(v == 0 for v in alpha_mod(11, 201).values[11:])


def test_alpha_mod_errors():
    with pytest.raises(ValueError):
        alpha_mod(1, 5)
    with pytest.raises(ValueError):
        alpha_mod(5, 0)


def test_two_code_paths_agree():
    exact = alpha_seq(150)
    for M in range(2, 21):
        assert alpha_mod(M, 150).values == tuple(a % M for a in exact)


@pytest.mark.parametrize("M, pre, per", [(3, 0, 2), (6, 2, 2), (7, 1, 36), (9, 0, 18)])
def test_observed_periods(M, pre, per):
    s = detect_period(alpha_mod(M, 200))
    assert (s.preperiod, s.period) == (pre, per)
    assert s.to_json()["status"] == "observed"


def test_period_cycles():
    s = detect_period(alpha_mod(3, 60))
    assert s.values[s.preperiod : s.preperiod + s.period] == (1, 2)
    s = detect_period(alpha_mod(6, 60))
    assert s.values[s.preperiod : s.preperiod + s.period] == (4, 2)


@pytest.mark.parametrize("M", range(2, 21))
def test_period_stable_when_horizon_doubles(M):
    for H in (200, 400):
        a = detect_period(alpha_mod(M, H))
        b = detect_period(alpha_mod(M, 2 * H))
        if a.period is not None:
            assert (a.preperiod, a.period) == (b.preperiod, b.period)
    assert b.period is not None


@pytest.mark.parametrize("M", [2, 4, 5, 8, 10, 11, 16, 17, 20])
def test_eventually_zero_rows(M):
    s = detect_period(alpha_mod(M, 300))
    assert s.period == 1
    assert all(v == 0 for v in s.values[s.preperiod :])


def test_period_undetected():
    s = detect_period(alpha_mod(7, 50))
    assert s.period is None and s.preperiod is None
    assert s.to_json()["status"] == "undetected"


def test_period_horizon_check():
    with pytest.raises(ValueError):
        detect_period(alpha_mod(3, 10), 20)


def test_period_invariant_holds():
    s = detect_period(alpha_mod(13, 400))
    if s.period is not None:
        v = s.values
        assert all(v[n + s.period] == v[n] for n in range(s.preperiod, len(v) - s.period))


def test_detect_period_on_synthetic_sequence():
    seq = ModSeq(10, (5, 6, 7) + (1, 2, 3) * 10)
    s = detect_period(seq)
    assert (s.preperiod, s.period) == (3, 3)


def test_canonical_modulus():
    assert [canonical_modulus(m) for m in (1, 2, 3)] == [3, 12, 324]
    assert canonical_modulus(7) == 3 ** 4 * 5040 ** 2


def test_modular_convergent_examples():
    c1 = modular_convergent(1)
    assert (c1.modulus, c1.P, c1.Q) == (3, Poly([1]), Poly([1, 1]))
    c3 = modular_convergent(3)
    assert (c3.modulus, c3.P, c3.Q) == (324, Poly([1, 2, 1]), Poly([1, 3, 6, 10]))


def test_mod7_reduction():
    c = modular_convergent(7, 7)
    assert c.Q == Poly([1, 0, 0, 0, 0, 0, 4])
    rest = Poly([3, 6, 5, 2, 2, 2])
    assert c.P == (c.Q * 5 + rest).mod(7)


def test_mod11_reduction():
    c = modular_convergent(11, 11)
    assert c.Q == Poly([1])
    assert c.P == Poly([1, 10, 9, 2, 5, 4, 10, 6, 5, 1, 1])


@pytest.mark.parametrize(
    "p, Q",
    [
        (5, Poly([1])),
        (11, Poly([1])),
        (17, Poly([1])),
        (23, Poly([1])),
        (13, Poly([1] + [0] * 11 + [11])),
        (19, Poly([1] + [0] * 17 + [11])),
        (31, Poly([1] + [0] * 29 + [4])),
    ],
)
def test_prime_reductions(p, Q):
    assert modular_convergent(p, p).Q == Q


def test_convergent_series_matches_residues():
    for m in range(1, 8):
        c = modular_convergent(m)
        N = 4 * m + 10
        assert series_of_convergent(c, N) == list(alpha_mod(c.modulus, N).values)


def test_modular_recurrence():
    assert check_modular_recurrence(1, 3, 50)
    assert all((-1) ** n % 3 == v for n, v in enumerate(alpha_mod(3, 50).values))
    assert check_modular_recurrence(2, 12, 50)
    for m in range(1, 8):
        assert check_modular_recurrence(m, None, 60)


def test_modular_recurrence_can_fail():
    assert not check_modular_recurrence(2, 7, 50)


def test_text_and_csv():
    text = figure3_text()
    lines = text.splitlines()
    assert len(lines) == 20
    assert lines[1].split() == ["2"] + [str(x) for x in EXPECTED[2]]
    csv_text = figure3_csv(4, 5)
    assert csv_text == "M,n=0,n=1,n=2,n=3,n=4\r\n2,1,1,0,0,0\r\n3,1,2,1,2,1\r\n4,1,3,2,2,0\r\n"

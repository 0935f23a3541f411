import pytest

from onsagerkit.cartan import validate
from onsagerkit.freelie import parse_bracket, to_lyndon
from onsagerkit.serre_coeffs import (
    SameIndexError,
    c0_closed_form,
    coeff_row,
    coeff_table,
    serre_relation,
)

# the explicit low-order table as polynomials in the Cartan entry
TABLE = {
    0: lambda a: (1,),
    1: lambda a: (0, 1),
    2: lambda a: (-a, 0, 1),
    3: lambda a: (0, -3 * a - 2, 0, 1),
    4: lambda a: (3 * a * a + 6 * a, 0, -6 * a - 8, 0, 1),
    5: lambda a: (0, 15 * a * a + 50 * a + 24, 0, -10 * a - 20, 0, 1),
}


@pytest.mark.parametrize("a", range(0, -7, -1))
def test_low_order_table(a):
    for r, expect in TABLE.items():
        assert coeff_row(a, r).c == expect(a), (a, r)


def test_base_rows():
    assert coeff_row(-5, 0).c == (1,)
    assert coeff_row(-5, 1).c == (0, 1)


@pytest.mark.parametrize("a", range(0, -9, -1))
def test_closed_form_matches_recursion(a):
    for ell in range(0, 11):
        assert coeff_row(a, 2 * ell).c[0] == c0_closed_form(a, ell)
        if ell:
            assert coeff_row(a, 2 * ell - 1).c[0] == 0


def test_closed_form_examples():
    # symbolic in a, checked pointwise
    for a in range(0, -9, -1):
        assert c0_closed_form(a, 0) == 1
        assert c0_closed_form(a, 1) == -a
        assert c0_closed_form(a, 2) == 3 * a * a + 6 * a


@pytest.mark.parametrize("a", range(0, -9, -1))
def test_parity_and_leading(a):
    rows = coeff_table(a, 12)
    for r, row in enumerate(rows):
        for s, c in enumerate(row.c):
            if (s - r) % 2 == 1:
                assert c == 0, (a, r, s)
        assert row.c[r] == 1
        if r >= 1:
            assert row.c[r - 1] == 0


def _pair_matrix(a):
    return validate([[2, a], [0 if a == 0 else -1, 2]])


def test_relation_displays():
    # the concrete list for a_ij in 0..-4, as Lyndon normal forms
    expected = {
        0: "[B1,B2]",
        -1: "[B1,[B1,B2]]",
        -2: "[B1,[B1,[B1,B2]]]",
        -3: "[B1,[B1,[B1,[B1,B2]]]]",
        -4: "[B1,[B1,[B1,[B1,[B1,B2]]]]]",
    }
    lower = {
        0: [],
        -1: [(1, "B2")],
        -2: [(4, "[B1,B2]")],
        -3: [(10, "[B1,[B1,B2]]"), (9, "B2")],
        -4: [(20, "[B1,[B1,[B1,B2]]]"), (64, "[B1,B2]")],
    }
    for a, top in expected.items():
        got = serre_relation(_pair_matrix(a), 1, 2)
        want = to_lyndon(parse_bracket(top))
        for coeff, text in lower[a]:
            want = want + coeff * to_lyndon(parse_bracket(text))
        assert got == want, a


def test_relation_both_orders():
    c = _pair_matrix(-2)
    # a_21 = -1 in this matrix, so the reversed pair gives the short relation
    got = serre_relation(c, 2, 1)
    want = to_lyndon(parse_bracket("[B2,[B2,B1]]")) + to_lyndon(parse_bracket("B1"))
    assert got == want


def test_relation_errors():
    c = _pair_matrix(-1)
    with pytest.raises(SameIndexError):
        serre_relation(c, 1, 1)
    with pytest.raises(IndexError):
        serre_relation(c, 1, 3)


def test_dolan_grady_from_affine_matrix():
    from onsagerkit.cartan import preset

    c = preset("A1~")
    rel = serre_relation(c, 0, 1)
    want = to_lyndon(parse_bracket("[B0,[B0,[B0,B1]]]")) + 4 * to_lyndon(parse_bracket("[B0,B1]"))
    assert rel == want

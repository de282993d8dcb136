import pytest
from hypothesis import given, strategies as st

from helpers import isomorphic, naive_xn
from quandlelink.quandle import (MalformedMatrixError, QuandleAxiomError, check_axioms,
                                 format_matrix, is_connected, is_trivial_orbit_quandle,
                                 make_dihedral, make_trivial, make_xn, orbits, parse_matrix,
                                 subquandle, verify_quandle)

DIHEDRAL_3 = [[1, 3, 2], [3, 2, 1], [2, 1, 3]]


def test_trivial_quandle_of_order_3_is_valid():
    q = verify_quandle([[1, 1, 1], [2, 2, 2], [3, 3, 3]])
    assert q.order == 3


def test_singleton():
    assert verify_quandle([[1]]).order == 1


def test_corrupted_x2_column_three():
    rows = [list(r) for r in naive_xn(2)]
    rows[0][2] = 1
    with pytest.raises(QuandleAxiomError) as exc:
        verify_quandle(rows)
    ii = [v for v in exc.value.violations if v.axiom == 2]
    assert ii and all(v.witness[1] == 3 for v in ii)
    assert not [v for v in exc.value.violations if v.axiom == 1]


@pytest.mark.parametrize("rows", [[[1, 2], [2, 3]], [[0]], [[1, 1]], []])
def test_malformed(rows):
    with pytest.raises(MalformedMatrixError):
        verify_quandle(rows)


def test_malformed_is_not_an_axiom_error():
    with pytest.raises(MalformedMatrixError):
        check_axioms([[1, 5], [2, 2]])


def test_make_trivial():
    assert make_trivial(2).matrix == ((1, 1), (2, 2))
    assert make_trivial(1).matrix == ((1,),)
    assert check_axioms(make_trivial(4).matrix) == []
    with pytest.raises(ValueError):
        make_trivial(0)


def test_make_xn_matches_displayed_matrix():
    assert make_xn(2).matrix == ((1, 1, 2), (2, 2, 1), (3, 3, 3))
    x3 = make_xn(3)
    assert [x3.op(a, 4) for a in range(1, 5)] == [2, 3, 1, 4]
    for b in range(1, 4):
        assert [x3.op(a, b) for a in range(1, 5)] == [1, 2, 3, 4]


@pytest.mark.parametrize("n", range(2, 9))
def test_xn_is_quandle(n):
    assert check_axioms(make_xn(n).matrix) == []
    assert make_xn(n).matrix == tuple(map(tuple, naive_xn(n)))


def test_xn_rejects_small_n():
    for n in (0, 1):
        with pytest.raises(ValueError):
            make_xn(n)


def test_xn_dual_shifts_backwards():
    x5 = make_xn(5)
    assert [x5.inv(a, 6) for a in range(1, 7)] == [5, 1, 2, 3, 4, 6]


def test_orbits():
    assert orbits(make_xn(5)).orbits == ((1, 2, 3, 4, 5), (6,))
    assert orbits(make_trivial(4)).orbits == ((1,), (2,), (3,), (4,))
    assert len(orbits(make_trivial(1))) == 1
    assert orbits(make_xn(5)).orbit_of[6] == 1


def test_connectedness():
    assert is_connected(make_trivial(1))
    assert not is_connected(make_xn(3))
    assert not is_connected(make_trivial(3))
    assert is_connected(verify_quandle(DIHEDRAL_3))


def test_trivial_orbit_quandles():
    assert is_trivial_orbit_quandle(make_xn(4))
    assert is_trivial_orbit_quandle(make_trivial(3))
    assert not is_trivial_orbit_quandle(verify_quandle(DIHEDRAL_3))


def test_dihedral_matches_hand_table():
    assert make_dihedral(3).matrix == tuple(map(tuple, DIHEDRAL_3))


def test_xn_orbit_subquandles_are_trivial():
    x4 = make_xn(4)
    big, small = orbits(x4).orbits
    assert isomorphic(subquandle(x4, big).matrix, make_trivial(4).matrix)
    assert isomorphic(subquandle(x4, small).matrix, make_trivial(1).matrix)


def test_subquandle_requires_closure():
    with pytest.raises(ValueError):
        subquandle(make_dihedral(3), [1, 2])


def test_matrix_file_roundtrip():
    q = make_xn(3)
    text = "# X_3\n" + format_matrix(q) + "\n# end\n"
    assert parse_matrix(text) == q.matrix


@pytest.mark.parametrize("text", ["", "2\n1 1\n", "2\n1 x\n2 2\n", "a\n", "2\n1 1\n2 3\n"])
def test_matrix_file_errors(text):
    with pytest.raises(MalformedMatrixError):
        parse_matrix(text)


QUANDLES = [make_trivial(1), make_trivial(3), make_xn(2), make_xn(5), make_dihedral(3),
            make_dihedral(5), make_dihedral(4)]


@given(st.sampled_from(QUANDLES), st.data())
def test_dual_inverts_right_translation(q, data):
    a = data.draw(st.integers(1, q.order))
    b = data.draw(st.integers(1, q.order))
    assert q.inv(q.op(a, b), b) == a
    assert q.op(q.inv(a, b), b) == a


@pytest.mark.parametrize("q", QUANDLES, ids=repr)
def test_columns_are_permutations_and_diagonal_is_identity(q):
    n = q.order
    for b in range(1, n + 1):
        assert sorted(q.op(a, b) for a in range(1, n + 1)) == list(range(1, n + 1))
    assert [q.op(a, a) for a in range(1, n + 1)] == list(range(1, n + 1))


@pytest.mark.parametrize("n", [2, 3, 8, 17, 32])
def test_xn_orbits_for_larger_n(n):
    assert orbits(make_xn(n)).orbits == (tuple(range(1, n + 1)), (n + 1,))

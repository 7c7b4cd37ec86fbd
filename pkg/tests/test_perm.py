import pytest
from hypothesis import given, strategies as st

from hopfgalois.perm import Perm, parse_perm, parse_perm_list, perm_list_string


def random_perm(draw, n):
    images = draw(st.permutations(range(n)))
    return Perm(images)


perms8 = st.permutations(range(8)).map(Perm)


def test_compose_convention_fixes_left_action():
    # (1 2 3) o (1 2) applies (1 2) first: the result is (1 3)
    p = parse_perm("(1,2,3)", 3)
    q = parse_perm("(1,2)", 3)
    assert (p * q).cycle_string() == "(1,3)"


def test_involution_squares_to_identity():
    t = parse_perm("(1,2)", 2)
    assert (t * t).is_identity()


@given(perms8)
def test_identity_is_neutral(p):
    e = Perm.identity(8)
    assert p * e == p
    assert e * p == p


@given(perms8)
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perms8, perms8)
def test_inverse_antihomomorphism(p, q):
    assert (p * q).inverse() == q.inverse() * p.inverse()


@given(perms8, perms8, perms8)
def test_associativity(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms8)
def test_order_matches_power(p):
    o = p.order()
    assert (p**o).is_identity()
    for d in range(1, o):
        if o % d == 0 and d < o:
            assert not (p**d).is_identity() or d == o


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        parse_perm("(1,2)", 2) * parse_perm("(1,2,3)", 3)


def test_not_a_permutation_rejected():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


@given(perms8)
def test_cycle_string_round_trip(p):
    assert parse_perm(p.cycle_string(), 8) == p


def test_parse_is_whitespace_insensitive():
    a = parse_perm("(1, 6)( 2,7)(3 ,5)(4,8)", 8)
    b = parse_perm("(1,6)(2,7)(3,5)(4,8)", 8)
    assert a == b
    assert b.cycle_string() == "(1,6)(2,7)(3,5)(4,8)"


def test_parse_rejects_garbage():
    for bad in ["(1,2", "1,2)", "(1,2)x", "(1,2)(2,3)", "(0,1)", "(1,9)"]:
        with pytest.raises(ValueError):
            parse_perm(bad, 8)


def test_identity_prints_and_parses():
    assert Perm.identity(5).cycle_string() == "()"
    assert parse_perm("()", 5) == Perm.identity(5)


def test_perm_list_round_trip():
    text = "(1,6)(2,7)(3,5)(4,8);(1,4)(2,3)(5,7)(6,8)"
    perms = parse_perm_list(text, 8)
    assert perm_list_string(perms) == text


def test_cycle_type_and_fixed_points():
    p = parse_perm("(1,2)(3,4,5)", 6)
    assert p.cycle_type() == (3, 2, 1)
    assert p.fixed_points() == (5,)
    assert p.order() == 6

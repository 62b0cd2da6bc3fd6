"""Bar complex: differentials, products, Connes operator, degree -1 operator."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from q8bv import bar
from q8bv.algebra import UNIT, X, XY, XYX, XYXY, Y, YX, YXY, AlgebraElement
from q8bv.bar import (
    BarChain,
    BarCochain,
    BarTensor,
    HochschildChain,
    bar_differential,
    chain_differential,
    circle_i,
    cochain_differential,
    connes_b,
    constant_cochain,
    cup,
    bv_delta,
)

MONO = [AlgebraElement.monomial(i) for i in range(8)]
NON_UNIT = list(range(1, 8))


def tensor(left, mids, right):
    return BarChain.of(len(mids), [BarTensor(left, tuple(mids), right)])


def identity_cochain() -> BarCochain:
    return BarCochain(1, lambda args: MONO[args[0]])


def multiplication_cochain() -> BarCochain:
    return BarCochain(2, lambda args: MONO[args[0]] * MONO[args[1]])


def test_bar_differential_degree_one():
    got = bar_differential(tensor(UNIT, (X,), UNIT))
    assert got == tensor(X, (), UNIT) + tensor(UNIT, (), X)


def test_bar_differential_expands_middle_product():
    got = bar_differential(tensor(UNIT, (X, X), UNIT))
    expected = tensor(X, (X,), UNIT) + tensor(UNIT, (YXY,), UNIT) + tensor(UNIT, (X,), X)
    assert got == expected


def test_bar_differential_squares_to_zero():
    assert not bar_differential(bar_differential(tensor(UNIT, (X, Y), UNIT)))
    for mids in itertools.product(NON_UNIT, repeat=3):
        assert not bar_differential(bar_differential(tensor(UNIT, mids, UNIT)))


def test_bar_differential_rejects_degree_zero():
    with pytest.raises(ValueError):
        bar_differential(tensor(UNIT, (), UNIT))


def test_cochain_vanishes_on_unit_arguments():
    f = identity_cochain()
    assert not f((UNIT,))


def test_cochain_differential_of_constant():
    a = MONO[X]
    df = cochain_differential(constant_cochain(a))
    for b in NON_UNIT:
        assert df((b,)) == MONO[b] * a + a * MONO[b]


def test_central_constant_is_cocycle():
    p1 = MONO[XY] + MONO[YX]
    df = cochain_differential(constant_cochain(p1))
    assert all(not df((b,)) for b in NON_UNIT)


def test_cochain_differential_squares_to_zero_degree_zero():
    ddf = cochain_differential(cochain_differential(constant_cochain(MONO[X])))
    for args in itertools.product(NON_UNIT, repeat=2):
        assert not ddf(args)


def test_cochain_differential_squares_to_zero_low_degrees():
    for f in (identity_cochain(), multiplication_cochain()):
        ddf = cochain_differential(cochain_differential(f))
        for args in itertools.product(NON_UNIT, repeat=f.degree + 2):
            assert not ddf(args)


def test_cup_of_constants():
    a, b = MONO[X], MONO[Y]
    c = cup(constant_cochain(a), constant_cochain(b))
    assert c(()) == a * b


def test_cup_with_unit_constant_is_identity():
    f = identity_cochain()
    left = cup(constant_cochain(AlgebraElement.one()), f)
    right = cup(f, constant_cochain(AlgebraElement.one()))
    for b in NON_UNIT:
        assert left((b,)) == f((b,))
        assert right((b,)) == f((b,))


def test_cup_associative_low_degrees():
    cochains = [
        constant_cochain(MONO[X]),
        constant_cochain(MONO[XY] + MONO[YX]),
        identity_cochain(),
    ]
    for f, g, h in itertools.product(cochains, repeat=3):
        lhs = cup(cup(f, g), h)
        rhs = cup(f, cup(g, h))
        for args in itertools.product(NON_UNIT, repeat=lhs.degree):
            assert lhs(args) == rhs(args)


def test_circle_insertion_of_unit_vanishes():
    f = multiplication_cochain()
    for i in (1, 2):
        c = circle_i(f, constant_cochain(AlgebraElement.one()), i)
        for args in itertools.product(NON_UNIT, repeat=1):
            assert not c(args)


def test_circle_composition_degree_one():
    f = identity_cochain()
    g = BarCochain(1, lambda args: MONO[args[0]] * MONO[X])
    got = circle_i(f, g, 1)
    for b in NON_UNIT:
        # f(g(b)) expanded over the basis, units dropped
        expected = AlgebraElement.zero()
        for m in g((b,)).monomials():
            if m != UNIT:
                expected = expected + f((m,))
        assert got((b,)) == expected


def test_circle_with_identity_fixes_multiplication():
    f = multiplication_cochain()
    got = circle_i(f, identity_cochain(), 1)
    for args in itertools.product(NON_UNIT, repeat=2):
        assert got(args) == f(args)


def test_circle_slot_out_of_range():
    with pytest.raises(ValueError):
        circle_i(identity_cochain(), identity_cochain(), 2)


def test_bracket_with_self_vanishes():
    for f in (identity_cochain(), multiplication_cochain()):
        b = bar.bracket(f, f)
        for args in itertools.product(NON_UNIT, repeat=b.degree):
            assert not b(args)


def test_bracket_of_degree_zero_pair_is_empty_sum():
    f = constant_cochain(MONO[X])
    g = constant_cochain(MONO[Y])
    br = bar.bracket(cochain_differential(f), g)  # degree 1 against degree 0
    assert br.degree == 0


def test_bracket_jacobi_identity_on_cochains():
    # the bracket satisfies the Jacobi identity strictly, not just on classes
    from q8bv.compare import transport_to_bar
    from q8bv.hhring import catalog

    cat = catalog()
    f = transport_to_bar(cat["u1"].rep)
    g = transport_to_bar(cat["u1p"].rep)
    triples = [
        (f, g, identity_cochain()),
        (f, g, multiplication_cochain()),
        (identity_cochain(), multiplication_cochain(), multiplication_cochain()),
    ]
    for a, b, c in triples:
        j = bar.bracket(a, bar.bracket(b, c)) + bar.bracket(b, bar.bracket(c, a)) + bar.bracket(
            c, bar.bracket(a, b)
        )
        for args in itertools.product(NON_UNIT, repeat=j.degree):
            assert not j(args)


def test_degree_zero_cocycles_are_the_center():
    # delta(const a) = 0 on every argument iff a is central
    from q8bv.algebra import center_basis
    from q8bv.gf2 import in_span

    center = [e.coeffs for e in center_basis()]
    for bits in range(256):
        a = AlgebraElement(bits)
        df = cochain_differential(constant_cochain(a))
        vanishes = all(not df((b,)) for b in NON_UNIT)
        assert vanishes == in_span(a.coeffs, center), a


def chain(head, mids):
    return HochschildChain.of(len(mids), [(head, tuple(mids))])


def test_chain_differential_two_terms():
    got = chain_differential(chain(X, (Y,)))
    assert got == chain(XY, ()) + chain(YX, ())


def test_chain_differential_squares_to_zero():
    assert not chain_differential(chain_differential(chain(X, (Y, X))))
    for head in range(8):
        for mids in itertools.product(NON_UNIT, repeat=2):
            assert not chain_differential(chain_differential(chain(head, mids)))


def test_chain_differential_of_commuting_pair():
    # xyx is central, so the two terms of the boundary cancel
    assert not chain_differential(chain(X, (XYX,)))


def test_chain_differential_rejects_degree_zero():
    with pytest.raises(ValueError):
        chain_differential(chain(X, ()))


def test_connes_on_degree_zero():
    assert connes_b(chain(X, ())) == chain(UNIT, (X,))
    assert not connes_b(chain(UNIT, ()))


def test_connes_squares_to_zero():
    assert not connes_b(connes_b(chain(X, (Y,))))
    for head in range(8):
        for mids in itertools.product(NON_UNIT, repeat=2):
            assert not connes_b(connes_b(chain(head, mids)))


def test_connes_anticommutes_with_boundary():
    c = chain(X, (Y, X))
    assert not chain_differential(connes_b(c)) + connes_b(chain_differential(c))


@given(st.integers(0, 7), st.lists(st.integers(1, 7), min_size=1, max_size=3))
@settings(max_examples=200)
def test_connes_identities_random(head, mids):
    c = chain(head, tuple(mids))
    assert not connes_b(connes_b(c))
    assert not chain_differential(connes_b(c)) + connes_b(chain_differential(c))


def test_bv_delta_rejects_degree_zero():
    with pytest.raises(ValueError):
        bv_delta(constant_cochain(MONO[X]))


def test_bv_delta_of_zero_cochain():
    f = BarCochain(1, lambda args: AlgebraElement.zero())
    assert not bv_delta(f)(())


def test_bv_delta_degree_one_formula():
    # Delta(f)() = sum_b <f(b), 1> b*
    f = BarCochain(1, lambda args: MONO[args[0]] * MONO[YXY])
    expected = AlgebraElement.zero()
    for b in NON_UNIT:
        if (MONO[b] * MONO[YXY]).coefficient(XYXY):
            expected = expected + MONO[bar.dual_basis(b)]
    assert bv_delta(f)(()) == expected

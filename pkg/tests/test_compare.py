"""Comparison morphisms: recursion values, chain maps, transports, memo hygiene."""

import pytest

from q8bv import compare, minres
from q8bv.algebra import UNIT, X, XY, XYX, XYXY, Y, YX, AlgebraElement
from q8bv.bar import BarChain, BarTensor
from q8bv.compare import (
    phi,
    phi_reference,
    psi,
    transport_to_bar,
    transport_to_min,
    verify_chain_maps,
)
from q8bv.hhring import catalog
from q8bv.minres import MinCochain, MinResElement

MONO = [AlgebraElement.monomial(i) for i in range(8)]


def test_phi_degree_one_is_inclusion():
    assert phi(1)[0] == BarChain.of(1, [BarTensor(UNIT, (X,), UNIT)])
    assert phi(1)[1] == BarChain.of(1, [BarTensor(UNIT, (Y,), UNIT)])


def test_phi_degree_three_is_the_six_term_chain():
    expected = BarChain.of(
        3,
        [
            BarTensor(UNIT, (X, X, X), UNIT),
            BarTensor(UNIT, (X, Y, X), Y),
            BarTensor(UNIT, (X, YX, Y), UNIT),
            BarTensor(UNIT, (Y, Y, Y), UNIT),
            BarTensor(UNIT, (Y, X, Y), X),
            BarTensor(UNIT, (Y, XY, X), UNIT),
        ],
    )
    assert phi(3)[0] == expected


def test_phi_degree_four_matches_dual_pair_formula():
    assert phi(4)[0] == phi_reference(4)[0]


def test_phi_matches_reference_everywhere():
    for n in range(6):
        for slot, ref in enumerate(phi_reference(n)):
            assert phi(n)[slot] == ref


def test_psi_degree_one_is_the_derivation():
    got = psi(1, (XY,))
    assert got == MinResElement.of(1, [(UNIT, 0, Y), (X, 1, UNIT)])


def test_psi_degree_two_spot_value():
    assert psi(2, (X, X)) == MinResElement.generator(2, 0)


def test_psi_degree_three_spot_value():
    assert psi(3, (X, X, X)) == MinResElement.generator(3, 0)


def test_psi_rejects_unit_entries():
    with pytest.raises(ValueError):
        psi(2, (UNIT, X))


def test_psi_degree_guard():
    with pytest.raises(ValueError):
        psi(9, tuple([X] * 9))


def test_verify_chain_maps_passes():
    report = verify_chain_maps(6)
    assert report.passed


def test_verify_chain_maps_resource_guard():
    with pytest.raises(ValueError):
        verify_chain_maps(7)


def test_fault_injected_t2_breaks_degree_three(monkeypatch):
    tables = list(minres.HOMOTOPY_TABLES)
    broken = dict(tables[2])
    broken[(X, 0)] = ()  # t2(x (x) rx (x) 1) should be 1 (x) 1
    tables[2] = broken
    monkeypatch.setattr(minres, "HOMOTOPY_TABLES", tuple(tables))
    compare.clear_psi_memo()
    try:
        report = verify_chain_maps(3)
        assert not report.passed
        failed = " ".join(c.name for c in report.checks if not c.passed)
        assert "psi" in failed
    finally:
        compare.clear_psi_memo()


def test_psi_memo_cold_recompute_is_identical():
    samples = [
        (1, (X,)),
        (2, (X, Y)),
        (3, (XYXY, X, X)),
        (3, (Y, XY, X)),
    ]
    warm = {key: psi(*key) for key in samples}
    compare.clear_psi_memo()
    for key, value in warm.items():
        assert psi(*key) == value


def test_transport_tables_for_degree_one_generators():
    cat = catalog()
    f = transport_to_bar(cat["u1"].rep)
    assert f((X,)) == AlgebraElement.one() + MONO[XY]
    assert f((YX,)) == MONO[Y]
    g = transport_to_bar(cat["u1p"].rep)
    assert g((XYXY,)) == MONO[XYX]
    assert g((Y,)) == AlgebraElement.one() + MONO[YX]


def test_transport_degree_four_periodicity_cochain():
    cat = catalog()
    z = transport_to_bar(cat["z"].rep)
    for b in range(1, 8):
        expected = AlgebraElement.one() if b == XYXY else AlgebraElement.zero()
        assert z((b, X, X, X)) == expected


def test_transport_round_trip_degrees_three_and_four():
    for degree in (3, 4):
        for bits in (1, 2, 5, 0x81, 0xFF):
            values = tuple(
                AlgebraElement(bits >> (8 * s) & 0xFF)
                for s in minres.generators(degree)
            )
            f = MinCochain(degree, values)
            assert transport_to_min(transport_to_bar(f)) == f


def test_transport_round_trip_degree_zero():
    for b in range(8):
        f = MinCochain(0, (MONO[b],))
        assert transport_to_min(transport_to_bar(f)) == f


def test_transport_of_zero_is_zero():
    f = MinCochain(2, (AlgebraElement.zero(), AlgebraElement.zero()))
    assert not transport_to_min(transport_to_bar(f))

"""Comparison morphisms between the minimal resolution and the bar resolution.

phi : P_* -> Bar_*  is built from the radical-split differential formulas and
the bar-side contracting homotopy (prepend a fresh unit); psi : Bar_* -> P_*
is built from the weak self-homotopy t_*.  Both satisfy the chain-map
identities by construction; verify_chain_maps re-checks them on explicit
arguments to guard the stored tables.

Degrees are capped at 8: that is as far as any product or BV computation on
the 4-periodic resolution needs to go, and it keeps the memo tables small.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import UNIT, AlgebraElement
from .bar import (
    BarChain,
    BarCochain,
    BarTensor,
    Mids,
    bar_differential,
    evaluate_on_chain,
    left_multiply,
    right_multiply,
    shift_in,
)
from .minres import (
    MinCochain,
    MinResElement,
    differential_formulas,
    evaluate_min,
    generators,
    homotopy_t,
    left_multiply as min_left_multiply,
    min_differential,
    right_multiply as min_right_multiply,
)
from .report import Check, Report

MAX_DEGREE = 8


@lru_cache(maxsize=None)
def phi(n: int) -> tuple[BarChain, ...]:
    """Images of the degree-n generators in the normalized bar resolution."""
    if not 0 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 0..{MAX_DEGREE}")
    if n == 0:
        return (BarChain.of(0, [BarTensor(UNIT, (), UNIT)]),)
    below = phi(n - 1)
    out = []
    for formula in differential_formulas(n):
        acc = BarChain.zero(n)
        for a, slot, b in formula.radical_terms:
            framed = right_multiply(
                left_multiply(AlgebraElement.monomial(a), below[slot]),
                AlgebraElement.monomial(b),
            )
            acc = acc + shift_in(framed)
        out.append(acc)
    return tuple(out)


def phi_on_element(e: MinResElement) -> BarChain:
    """Bimodule-linear extension of phi to arbitrary elements of P_n."""
    acc = BarChain.zero(e.degree)
    table = phi(e.degree)
    for left, slot, right in e.terms:
        acc = acc + right_multiply(
            left_multiply(AlgebraElement.monomial(left), table[slot]),
            AlgebraElement.monomial(right),
        )
    return acc


_PSI_MEMO: dict[tuple[int, Mids], MinResElement] = {}


def psi(n: int, mids: Mids) -> MinResElement:
    """Value of psi_n on the basis tensor 1 (x) mids (x) 1, memoized."""
    if not 0 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 0..{MAX_DEGREE}")
    if len(mids) != n:
        raise ValueError("tuple length does not match degree")
    if any(m == UNIT for m in mids):
        raise ValueError("interior entries must be non-unit monomials")
    if n == 0:
        return MinResElement.generator(0, 0)
    key = (n, mids)
    cached = _PSI_MEMO.get(key)
    if cached is None:
        tail = psi(n - 1, mids[1:])
        cached = homotopy_t(n - 1, min_left_multiply(AlgebraElement.monomial(mids[0]), tail))
        _PSI_MEMO[key] = cached
    return cached


def psi_on_chain(chain: BarChain) -> MinResElement:
    """Bimodule-linear extension of psi to bar chains with outer frames."""
    acc = MinResElement.zero(chain.degree)
    for t in chain.terms:
        acc = acc + min_right_multiply(
            min_left_multiply(AlgebraElement.monomial(t.left), psi(t.degree, t.mids)),
            AlgebraElement.monomial(t.right),
        )
    return acc


def clear_psi_memo() -> None:
    _PSI_MEMO.clear()


def transport_to_bar(f: MinCochain) -> BarCochain:
    """The composite cochain taking mids to f(psi(mids))."""
    n = f.degree
    return BarCochain(n, lambda mids: evaluate_min(f, psi(n, mids)))


def transport_to_min(g: BarCochain) -> MinCochain:
    """Evaluate a bar cochain on the phi images of the generators."""
    n = g.degree
    values = tuple(evaluate_on_chain(g, chain) for chain in phi(n))
    return MinCochain(n, values)


# ---------------------------------------------------------------------------
# Hand-tabulated low-degree values, used as a regression oracle
# ---------------------------------------------------------------------------


def phi_reference(n: int) -> tuple[BarChain, ...]:
    """Independent expansion of the first six comparison-map values.

    Degrees 0..3 are written out term by term; degree 4 applies the
    sum-over-dual-pairs formula to the degree-3 value and degree 5 prepends a
    generator, each using only bar-side primitives (no recursion through the
    stored differentials).
    """
    from .algebra import X, Y, XY, YX, dual_basis

    def chain(*tensors: tuple[int, tuple[int, ...], int]) -> BarChain:
        return BarChain.of(
            len(tensors[0][1]) if tensors else 0,
            [BarTensor(l, m, r) for l, m, r in tensors],
        )

    if n == 0:
        return (chain((UNIT, (), UNIT)),)
    if n == 1:
        return (chain((UNIT, (X,), UNIT)), (chain((UNIT, (Y,), UNIT))))
    if n == 2:
        return (
            chain((UNIT, (X, X), UNIT), (UNIT, (Y, X), Y), (UNIT, (YX, Y), UNIT)),
            chain((UNIT, (Y, Y), UNIT), (UNIT, (X, Y), X), (UNIT, (XY, X), UNIT)),
        )
    if n == 3:
        return (
            chain(
                (UNIT, (X, X, X), UNIT),
                (UNIT, (X, Y, X), Y),
                (UNIT, (X, YX, Y), UNIT),
                (UNIT, (Y, Y, Y), UNIT),
                (UNIT, (Y, X, Y), X),
                (UNIT, (Y, XY, X), UNIT),
            ),
        )
    if n == 4:
        deg3 = phi_reference(3)[0]
        acc = BarChain.zero(4)
        for b in range(1, 8):
            framed = right_multiply(
                left_multiply(AlgebraElement.monomial(b), deg3),
                AlgebraElement.monomial(dual_basis(b)),
            )
            acc = acc + shift_in(framed)
        return (acc,)
    if n == 5:
        deg4 = phi_reference(4)[0]
        return tuple(
            shift_in(left_multiply(AlgebraElement.monomial(g), deg4))
            for g in (X, Y)
        )
    raise ValueError("reference values exist for degrees 0..5 only")


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _bar_basis_tensor(mids: Mids) -> BarChain:
    return BarChain.of(len(mids), [BarTensor(UNIT, mids, UNIT)])


def verify_chain_maps(max_degree: int = 6) -> Report:
    """Chain-map identities for phi and psi, psi o phi = Id, and the
    low-degree reference tables.

    psi is checked exhaustively in degrees 1..3 and on the tuples occurring
    in phi images in degrees 4..max_degree.
    """
    if max_degree > 6:
        raise ValueError("resource guard: max_degree <= 6")
    checks: list[Check] = []

    fails = []
    for n in range(1, max_degree + 1):
        for slot in generators(n):
            lhs = bar_differential(phi(n)[slot])
            rhs = phi_on_element(min_differential(MinResElement.generator(n, slot)))
            if lhs + rhs:
                fails.append(f"degree {n} slot {slot}")
    checks.append(Check(f"phi chain map, degrees 1..{max_degree}", not fails, "; ".join(fails[:3])))

    fails = []
    for n in range(1, min(3, max_degree) + 1):
        for mids in itertools.product(range(1, 8), repeat=n):
            lhs = min_differential(psi(n, mids))
            rhs = psi_on_chain(bar_differential(_bar_basis_tensor(mids)))
            if lhs + rhs:
                fails.append(f"degree {n} tuple {mids}")
    checks.append(Check("psi chain map, degrees 1..3 exhaustive", not fails, "; ".join(fails[:3])))

    fails = []
    for n in range(4, max_degree + 1):
        seen: set[Mids] = set()
        for slot in generators(n):
            for t in phi(n)[slot].terms:
                seen.add(t.mids)
        for mids in sorted(seen):
            lhs = min_differential(psi(n, mids))
            rhs = psi_on_chain(bar_differential(_bar_basis_tensor(mids)))
            if lhs + rhs:
                fails.append(f"degree {n} tuple {mids}")
    checks.append(
        Check(f"psi chain map, degrees 4..{max_degree} on phi-image tuples", not fails, "; ".join(fails[:3]))
    )

    fails = []
    for n in range(0, 5):
        for slot in generators(n):
            got = psi_on_chain(phi(n)[slot])
            if got + MinResElement.generator(n, slot):
                fails.append(f"degree {n} slot {slot}")
    checks.append(Check("psi o phi = Id, degrees 0..4", not fails, "; ".join(fails[:3])))

    fails = []
    for n in range(0, 6):
        ref = phi_reference(n)
        got = phi(n)
        for slot in generators(n):
            if got[slot] + ref[slot]:
                fails.append(f"degree {n} slot {slot}")
    checks.append(Check("phi matches hand-tabulated values, degrees 0..5", not fails, "; ".join(fails[:3])))

    return Report("comparison", checks)

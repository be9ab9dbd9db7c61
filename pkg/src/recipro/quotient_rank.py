"""2-rank of an all-even cyclic product modulo its diagonal order-2 subgroup.

For G = Z/n_1 x ... x Z/n_k with every n_i even, the subgroup
Gamma = {0, (n_1/2, ..., n_k/2)} has two elements.  The 2-rank of G/Gamma
is computed by two independent routes:

* a closed-form case split: k when 4 divides every n_i, else k - 1;
* brute force, counting the g in G with 2g in Gamma.  Each two-torsion
  class of the quotient contributes exactly |Gamma| = 2 solutions, so the
  count is twice a power of two and its half gives the rank.

The quotient itself is never materialized; counting is all that is needed.
Pure functions over immutable inputs, safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import budget
from .abelian_core import AbelianGroup, GroupElement
from .errors import CapacityError, DomainError, InternalCheckError
from .residue_arith import validate_odd_prime


@dataclass(frozen=True)
class DiagonalGamma:
    """The order-2 subgroup {0, (n_1/2, ..., n_k/2)} of an all-even product."""

    group: AbelianGroup
    gamma: GroupElement

    def __post_init__(self):
        orders = self.group.factor_orders
        if not orders or any(n % 2 for n in orders):
            raise DomainError("diagonal subgroup needs a nonempty all-even factor list")
        expected = tuple(n // 2 for n in orders)
        if self.gamma.group != self.group or self.gamma.coords != expected:
            raise DomainError(f"gamma must have coordinates {expected}")

    @classmethod
    def for_group(cls, group: AbelianGroup) -> DiagonalGamma:
        if any(n % 2 for n in group.factor_orders):
            raise DomainError("diagonal subgroup needs all factor orders even")
        gamma = GroupElement(group, tuple(n // 2 for n in group.factor_orders))
        return cls(group, gamma)


def rank2_quotient_formula(orders: Sequence[int]) -> int:
    """Closed form: k when 4 divides every order, else k - 1."""
    orders = tuple(orders)
    if not orders:
        raise DomainError("factor list must be nonempty")
    for n in orders:
        if not isinstance(n, int) or isinstance(n, bool) or n < 2 or n % 2:
            raise DomainError(f"factor orders must be even integers >= 2, got {n!r}")
    k = len(orders)
    return k if all(n % 4 == 0 for n in orders) else k - 1


def rank2_quotient_enumerated(gamma: DiagonalGamma) -> int:
    """Quotient 2-rank by counting the g in G with 2g in {0, gamma}.

    The count must be 2 * 2**rank; any other value signals a bug in this
    package rather than bad input, hence InternalCheckError.
    """
    G = gamma.group
    budget.require_within(G.order, budget.QUOTIENT_ENUM_CAP, "quotient two-torsion count")
    orders = G.factor_orders
    target = gamma.gamma.coords
    count = 0
    for coords in G.iter_coords():
        doubled = tuple(2 * c % n for c, n in zip(coords, orders))
        if not any(doubled) or doubled == target:
            count += 1
    half, rem = divmod(count, 2)
    if rem or half < 1 or half & (half - 1):
        raise InternalCheckError(f"solution count {count} is not twice a power of 2")
    return half.bit_length() - 1


def corollary_rank_for_primes(p: int, q: int) -> int:
    """Quotient 2-rank for the units product of two distinct odd primes.

    Applies the closed form to [p-1, q-1]: 2 when p = q = 1 (mod 4), else 1.
    """
    p = validate_odd_prime(p)
    q = validate_odd_prime(q)
    if p == q:
        raise DomainError("primes must be distinct")
    return rank2_quotient_formula((p - 1, q - 1))


@dataclass(frozen=True)
class QuotientRankReport:
    """Both routes side by side; enumeration is skipped over the budget."""

    k: int
    formula_rank: int
    enumerated_rank: int | None = None
    agree: bool | None = None


def quotient_rank_report(orders: Sequence[int]) -> QuotientRankReport:
    orders = tuple(orders)
    formula = rank2_quotient_formula(orders)
    enumerated = None
    try:
        enumerated = rank2_quotient_enumerated(DiagonalGamma.for_group(AbelianGroup(orders)))
    except CapacityError:
        pass
    agree = None if enumerated is None else formula == enumerated
    return QuotientRankReport(
        k=len(orders), formula_rank=formula, enumerated_rank=enumerated, agree=agree
    )

"""Exact arithmetic in finite abelian groups given as products of cyclic groups.

A group is described by its factor orders (n_1, ..., n_k); an element carries
one reduced residue per factor.  Enumeration order is lexicographic on the
coordinate tuples (the rightmost coordinate varies fastest), and every
operation that walks the whole group is capacity-checked first.

Values are immutable after construction and all operations are pure
functions, so everything here may be used concurrently without locking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterator, NamedTuple, Sequence

from . import budget
from .errors import DomainError, GroupMismatchError


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product Z/n_1 x ... x Z/n_k; trivial factors n_i = 1 are allowed."""

    factor_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(self.factor_orders)
        for n in orders:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise DomainError(f"factor orders must be integers >= 1, got {n!r}")
        object.__setattr__(self, "factor_orders", orders)

    @property
    def order(self) -> int:
        return prod(self.factor_orders)

    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.factor_orders))

    def element(self, coords: Sequence[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def iter_coords(self) -> Iterator[tuple[int, ...]]:
        """All coordinate tuples in lexicographic order (capacity-checked)."""
        budget.require_within(self.order, budget.GROUP_ENUM_CAP, "group enumeration")
        return itertools.product(*(range(n) for n in self.factor_orders))

    def elements(self) -> Iterator[GroupElement]:
        for coords in self.iter_coords():
            yield GroupElement(self, coords)

    def __str__(self) -> str:
        return " x ".join(f"Z/{n}" for n in self.factor_orders) or "trivial"


@dataclass(frozen=True)
class GroupElement:
    """An element of an AbelianGroup: one residue 0 <= g_i < n_i per factor."""

    group: AbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        orders = self.group.factor_orders
        if len(coords) != len(orders):
            raise DomainError(
                f"expected {len(orders)} coordinates, got {len(coords)}"
            )
        for c, n in zip(coords, orders):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < n:
                raise DomainError(f"coordinate {c!r} is not reduced modulo {n}")
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class Rank2Result(NamedTuple):
    rank: int
    two_torsion_size: int


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    """Componentwise sum modulo the factor orders."""
    if a.group != b.group:
        raise GroupMismatchError("elements belong to different groups")
    orders = a.group.factor_orders
    return GroupElement(
        a.group, tuple((x + y) % n for x, y, n in zip(a.coords, b.coords, orders))
    )


def element_order(g: GroupElement) -> int:
    """Least m >= 1 with m*g = 0, i.e. lcm over factors of n_i / gcd(n_i, g_i)."""
    return lcm(*(n // gcd(n, c) for c, n in zip(g.coords, g.group.factor_orders)))


def two_torsion_subgroup(G: AbelianGroup) -> list[GroupElement]:
    """All g with 2g = 0, in lexicographic order, by full enumeration.

    The result has 2**rank elements where rank counts the even factors.
    """
    orders = G.factor_orders
    out = []
    for coords in G.iter_coords():
        if all(2 * c % n == 0 for c, n in zip(coords, orders)):
            out.append(GroupElement(G, coords))
    return out


def rank2(G: AbelianGroup) -> Rank2Result:
    """2-rank by the closed form: the number of even factor orders.

    The reported two-torsion size 2**rank always matches the length of
    :func:`two_torsion_subgroup` when that enumeration is feasible.
    """
    r = sum(1 for n in G.factor_orders if n % 2 == 0)
    return Rank2Result(rank=r, two_torsion_size=1 << r)


def sum_all_elements(G: AbelianGroup) -> GroupElement:
    """The sum of every element of G, by honest full enumeration.

    The result is the identity unless the 2-rank is exactly 1, in which case
    it is the unique element of order 2.
    """
    orders = G.factor_orders
    totals = [0] * len(orders)
    for coords in G.iter_coords():
        for i, c in enumerate(coords):
            totals[i] += c
    return GroupElement(G, tuple(t % n for t, n in zip(totals, orders)))

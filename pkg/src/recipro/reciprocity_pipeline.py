"""End-to-end reciprocity verification for a pair of distinct odd primes.

Inside the units product F_p^x x F_q^x, the two-element subgroup
Gamma = {(1,1), (-1,-1)} has a canonical set of coset representatives:

    (k mod p, k mod q)  for 0 < k < pq/2 with p and q both not dividing k.

verify_pair runs the whole chain for one pair: it takes the coordinatewise
product of those representatives, compares it exactly against a closed form
built from Legendre symbols, checks that the product sits inside Gamma or in
the order-2 coset {(1,-1), (-1,1)} according to the 2-rank of the quotient,
derives from that the predicted relation between (q/p) and (p/q), and
cross-checks the reciprocity identity with directly computed symbols.  All
named checks are recorded; a failure never aborts the remaining checks.

Pure functions throughout; sweeps over many pairs may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import budget
from .errors import DomainError, InternalCheckError
from .quotient_rank import corollary_rank_for_primes
from .residue_arith import legendre_euler, validate_odd_prime

RELATION_EQUAL = 1
RELATION_OPPOSITE = -1


class UnitPair(NamedTuple):
    """A residue mod p paired with a residue mod q.

    The primes themselves live on the owning Transversal / GammaPQ /
    PairVerdict, which keeps million-entry pair lists lightweight.
    """

    a: int
    b: int


def _validate_pair(p: int, q: int) -> None:
    validate_odd_prime(p)
    validate_odd_prime(q)
    if p == q:
        raise DomainError("primes must be distinct")


@dataclass(frozen=True)
class GammaPQ:
    """The subgroup {(1, 1), (p-1, q-1)} of the units product."""

    p: int
    q: int

    def __post_init__(self):
        _validate_pair(self.p, self.q)

    @property
    def members(self) -> tuple[UnitPair, UnitPair]:
        return (UnitPair(1, 1), UnitPair(self.p - 1, self.q - 1))

    def negate(self, x: UnitPair) -> UnitPair:
        return UnitPair((self.p - x.a) % self.p, (self.q - x.b) % self.q)

    def equivalent(self, x: UnitPair, y: UnitPair) -> bool:
        """Same Gamma-coset: equal or componentwise negatives."""
        return x == y or x == self.negate(y)


@dataclass(frozen=True)
class Transversal:
    """Coset representatives (k mod p, k mod q), k ascending over (0, pq/2)."""

    p: int
    q: int
    pairs: tuple[UnitPair, ...]

    def __post_init__(self):
        _validate_pair(self.p, self.q)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[UnitPair]:
        return iter(self.pairs)


def build_transversal(p: int, q: int) -> Transversal:
    """Materialize the canonical representatives; pq is capped for storage."""
    _validate_pair(p, q)
    n = p * q
    budget.require_within(n, budget.TRANSVERSAL_CAP, "transversal storage")
    pairs = []
    append = pairs.append
    for k in range(1, n // 2 + 1):
        ra = k % p
        if ra == 0:
            continue
        rb = k % q
        if rb == 0:
            continue
        append(UnitPair(ra, rb))
    expected = (p - 1) * (q - 1) // 2
    if len(pairs) != expected:
        raise InternalCheckError(
            f"built {len(pairs)} representatives for ({p}, {q}), expected {expected}"
        )
    return Transversal(p, q, tuple(pairs))


def product_over_transversal(L: Transversal) -> UnitPair:
    """Componentwise product of all entries, reduced mod p and mod q each step."""
    p, q = L.p, L.q
    ap = aq = 1
    for a, b in L.pairs:
        ap = ap * a % p
        aq = aq * b % q
    return UnitPair(ap, aq)


def _streamed_product(p: int, q: int) -> UnitPair:
    # same result as product_over_transversal(build_transversal(p, q)),
    # single pass over k with constant memory
    n = p * q
    budget.require_within(n, budget.STREAM_PRODUCT_CAP, "transversal product stream")
    ap = aq = 1
    for k in range(1, n // 2 + 1):
        ra = k % p
        if ra == 0:
            continue
        rb = k % q
        if rb == 0:
            continue
        ap = ap * ra % p
        aq = aq * rb % q
    return UnitPair(ap, aq)


def closed_form_product(p: int, q: int) -> UnitPair:
    """The pair ((-1)^((q-1)/2) * (q/p), (-1)^((p-1)/2) * (p/q)), in residues.

    Sign +1 maps to residue 1, sign -1 to p-1 (resp. q-1).
    """
    _validate_pair(p, q)
    s1 = legendre_euler(q, p) * (-1 if (q - 1) // 2 % 2 else 1)
    s2 = legendre_euler(p, q) * (-1 if (p - 1) // 2 % 2 else 1)
    return UnitPair(1 if s1 == 1 else p - 1, 1 if s2 == 1 else q - 1)


def verify_transversal(L: Transversal) -> bool:
    """True iff L is exactly the canonical representative set.

    Checked: the size is (p-1)(q-1)/2; every entry is a unit pair; the
    Chinese-remainder lift of every entry lands in (0, pq/2); and the lifts
    are pairwise distinct.  Distinct lower-half lifts already rule out both
    duplicates and componentwise-negative pairs (x and -x lift to k and
    pq - k), and with the size count they force one representative per
    coset.  The lift route is independent of how L was generated.
    """
    p, q = L.p, L.q
    n = p * q
    if len(L.pairs) != (p - 1) * (q - 1) // 2:
        return False
    c1 = q * pow(q, -1, p)  # 1 mod p, 0 mod q
    c2 = p * pow(p, -1, q)  # 0 mod p, 1 mod q
    half = n // 2
    lifts = set()
    for a, b in L.pairs:
        if not (0 < a < p and 0 < b < q):
            return False
        k = (a * c1 + b * c2) % n
        if k > half or k in lifts:
            return False
        lifts.add(k)
    return True


def _residue_sign(r: int, m: int) -> int | None:
    """+1 for residue 1, -1 for residue m-1, None for anything else."""
    if r == 1:
        return 1
    if r == m - 1:
        return -1
    return None


def predicted_symbol_relation(p: int, q: int, rank: int) -> int:
    """+1 when (q/p) and (p/q) must agree, -1 when they must be opposite.

    Rank 2 forces equality; rank 1 forces equality unless p = q = 3 (mod 4),
    where the leading signs cancel and the symbols flip.
    """
    if rank > 1 or p % 4 != q % 4:
        return RELATION_EQUAL
    return RELATION_OPPOSITE


def qr_identity(p: int, q: int) -> bool:
    """(p/q)(q/p) == (-1)^(((p-1)/2)((q-1)/2)), all three symbols computed directly."""
    _validate_pair(p, q)
    lhs = legendre_euler(p, q) * legendre_euler(q, p)
    rhs = -1 if ((p - 1) // 2) * ((q - 1) // 2) % 2 else 1
    return lhs == rhs


@dataclass(frozen=True)
class PairVerdict:
    """Every checked identity for one prime pair, plus the overall verdict."""

    p: int
    q: int
    rank: int
    product_L: UnitPair
    closed_form: UnitPair
    legendre_qp: int
    legendre_pq: int
    predicted_relation: int
    qr_identity_holds: bool
    checks: dict[str, bool]

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())


def verify_pair(p: int, q: int) -> PairVerdict:
    """Run the whole verification chain for one pair of distinct odd primes.

    Named checks recorded in the verdict:

    * ``product_matches_closed_form`` -- transversal product equals the
      Legendre closed form, coordinatewise and exactly;
    * ``transversal_valid`` -- the materialized representative set checks
      out (present only while pq is within the storage cap; above it the
      product is streamed and this check is skipped);
    * ``rank_sign_dichotomy`` -- the product's coordinates are both signs
      (1 or -1 residues), equal when the quotient rank is 2 and opposite
      when it is 1; any non-sign residue fails the check outright;
    * ``relation_matches_symbols`` -- the relation predicted from the rank
      and the residues of p, q mod 4 holds between the computed symbols;
    * ``qr_identity`` -- the reciprocity identity for the pair.

    A failed check marks the verdict failed without aborting the rest.
    """
    _validate_pair(p, q)
    n = p * q
    budget.require_within(n, budget.STREAM_PRODUCT_CAP, "pair verification")

    transversal_valid = None
    if n <= budget.effective_cap(budget.TRANSVERSAL_CAP):
        L = build_transversal(p, q)
        product = product_over_transversal(L)
        transversal_valid = verify_transversal(L)
    else:
        product = _streamed_product(p, q)

    closed = closed_form_product(p, q)
    rank = corollary_rank_for_primes(p, q)
    leg_qp = legendre_euler(q, p)
    leg_pq = legendre_euler(p, q)
    predicted = predicted_symbol_relation(p, q, rank)
    qr_holds = qr_identity(p, q)

    checks: dict[str, bool] = {}
    checks["product_matches_closed_form"] = product == closed
    if transversal_valid is not None:
        checks["transversal_valid"] = transversal_valid
    sp = _residue_sign(product.a, p)
    sq = _residue_sign(product.b, q)
    if sp is None or sq is None:
        checks["rank_sign_dichotomy"] = False
    elif rank > 1:
        checks["rank_sign_dichotomy"] = sp == sq
    else:
        checks["rank_sign_dichotomy"] = sp == -sq
    checks["relation_matches_symbols"] = leg_qp == predicted * leg_pq
    checks["qr_identity"] = qr_holds

    return PairVerdict(
        p=p,
        q=q,
        rank=rank,
        product_L=product,
        closed_form=closed,
        legendre_qp=leg_qp,
        legendre_pq=leg_pq,
        predicted_relation=predicted,
        qr_identity_holds=qr_holds,
        checks=checks,
    )

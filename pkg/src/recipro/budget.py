"""Enumeration budgets.

Operations that walk a whole group, a whole transversal, or a
factorial-length loop check the step count against a cap before starting
and raise :class:`~recipro.errors.CapacityError` instead of running away.
Defaults keep everything at desk scale; setting the environment variable
``RECIPRO_MAX_BUDGET`` to a positive integer lowers (never raises) every
cap at once.
"""

import os

from .errors import CapacityError, DomainError

ENV_VAR = "RECIPRO_MAX_BUDGET"

GROUP_ENUM_CAP = 1 << 22         # full enumeration of an abelian group
QUOTIENT_ENUM_CAP = 1 << 18      # two-torsion counting modulo the diagonal subgroup
STREAM_PRODUCT_CAP = 1 << 21     # streamed pass over 0 < k < pq/2
TRANSVERSAL_CAP = 200_000        # materialized transversal, bound on pq
FACTORIAL_LOOP_CAP = 10_000_000  # factorial-style running products
SQUARE_ORACLE_CAP = 100_000      # square-enumeration oracle, bound on the modulus


def effective_cap(default: int) -> int:
    """The default cap, clamped by RECIPRO_MAX_BUDGET when that is set."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{ENV_VAR} must be positive, got {value}")
    return min(default, value)


def require_within(size: int, default_cap: int, what: str) -> None:
    cap = effective_cap(default_cap)
    if size > cap:
        raise CapacityError(f"{what} needs {size} steps, over the cap of {cap}")

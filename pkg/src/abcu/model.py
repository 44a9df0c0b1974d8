"""Core domain types for approval-based committee voting.

Voters are identified by ``0..n-1`` and candidates by ``0..m-1``.
Approval sets, profiles and committees are canonical sorted tuples, so
values hash and compare deterministically and enumeration orders are
reproducible.  All probabilities are exact :class:`fractions.Fraction`
values; group-size thresholds are compared by integer
cross-multiplication, never by division, because ``n/k`` is fractional
in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

ApprovalSet = tuple[int, ...]
Profile = tuple[ApprovalSet, ...]
Committee = tuple[int, ...]

DEFAULT_BUDGET = 2**20


class InputError(ValueError):
    """Invalid instance, model, committee, document or parameter."""


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, count: int, budget: int):
        super().__init__(f"enumeration of {count} objects exceeds the budget of {budget}")
        self.count = count
        self.budget = budget


@dataclass(frozen=True)
class Instance:
    """Election frame: ``n`` voters, ``m`` candidates, committee size ``k``."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"need at least one voter, got n={self.n}")
        if self.m < 1:
            raise InputError(f"need at least one candidate, got m={self.m}")
        if not 1 <= self.k <= self.m:
            raise InputError(f"committee size k={self.k} must satisfy 1 <= k <= m={self.m}")


def parse_probability(value) -> Fraction:
    """Coerce ``value`` to an exact Fraction in ``[0, 1]``.

    Accepts ints, Fractions and strings (``"1/2"`` or ``"0.6"``, both
    parsed exactly).  Floats are rejected: their binary representation
    silently loses the decimal value the caller meant.
    """
    if isinstance(value, bool):
        raise InputError(f"not a probability: {value!r}")
    if isinstance(value, float):
        raise InputError(f"float {value!r} is not exact; pass a string like '0.6' or a fraction '3/5'")
    try:
        f = Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"cannot parse probability {value!r}: {exc}") from None
    if not 0 <= f <= 1:
        raise InputError(f"probability {f} outside [0, 1]")
    return f


def approval_set(members: Iterable[int], m: int | None = None) -> ApprovalSet:
    """Canonicalize a collection of candidate ids: sorted, deduplicated.

    When ``m`` is given, members must lie in ``0..m-1``.
    """
    canon = tuple(sorted(set(members)))
    for c in canon:
        if not isinstance(c, int) or isinstance(c, bool):
            raise InputError(f"candidate id {c!r} is not an integer")
        if c < 0 or (m is not None and c >= m):
            raise InputError(f"candidate id {c} out of range for m={m}")
    return canon


def approval_profile(sets: Iterable[Iterable[int]], inst: Instance) -> Profile:
    """Canonicalize a full profile and check it has exactly ``n`` approval sets."""
    prof = tuple(approval_set(s, inst.m) for s in sets)
    if len(prof) != inst.n:
        raise InputError(f"profile has {len(prof)} approval sets, expected n={inst.n}")
    return prof


def committee(members: Iterable[int], inst: Instance, size: int | None = None) -> Committee:
    """Canonicalize a committee and check its size (defaults to ``k``)."""
    want = inst.k if size is None else size
    w = approval_set(members, inst.m)
    if len(w) != want:
        raise InputError(f"committee {w} has size {len(w)}, expected {want}")
    return w


def meets_threshold(group_size: int, ell: int, inst: Instance) -> bool:
    """Exact test for ``group_size >= ell * n / k`` by cross-multiplication."""
    if ell < 1:
        raise InputError(f"cohesiveness level ell={ell} must be positive")
    return group_size * inst.k >= ell * inst.n


def min_group_size(ell: int, inst: Instance) -> int:
    """Smallest group size meeting the ``ell``-threshold (exact ceiling)."""
    if ell < 1:
        raise InputError(f"cohesiveness level ell={ell} must be positive")
    return -(-ell * inst.n // inst.k)

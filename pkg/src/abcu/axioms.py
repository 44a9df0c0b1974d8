"""Deterministic checkers for JR, PJR and EJR on a single approval profile.

A committee fails justified representation (JR) when some candidate
outside it is approved by a full quota (``n/k`` voters) none of whom has
any approved candidate in the committee.  PJR and EJR strengthen this to
``ell``-cohesive groups: at least ``ell * n / k`` voters jointly approving
at least ``ell`` common candidates must see ``ell`` committee members in
their combined approvals (PJR) or one member of the group must have
``ell`` approved committee members (EJR).  EJR implies PJR implies JR.

All checkers return the first violation in a documented scan order
(ascending ``ell``, then lexicographic candidate subset, then
lexicographic voter group), so witnesses are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import (
    Committee,
    InputError,
    Instance,
    Profile,
    committee,
    meets_threshold,
    min_group_size,
)

AXIOMS = ("jr", "pjr", "ejr")


@dataclass(frozen=True)
class Violation:
    """A cohesive voter group left underrepresented by a committee.

    ``group`` meets the ``ell``-threshold, jointly approves every
    candidate in ``common`` (``len(common) >= ell``), and fails the
    axiom's representation condition.  For JR, ``ell`` is 1 and
    ``common`` is the single ignored candidate.
    """

    axiom: str
    ell: int
    group: tuple[int, ...]
    common: tuple[int, ...]


def _require_axiom(axiom: str) -> str:
    if axiom not in AXIOMS:
        raise InputError(f"unknown axiom {axiom!r}, expected one of {AXIOMS}")
    return axiom


def _jr_violation(inst: Instance, prof: Profile, wset: frozenset[int]) -> Violation | None:
    """JR check against an arbitrary candidate set (no size requirement)."""
    unrepresented = [i for i, a in enumerate(prof) if wset.isdisjoint(a)]
    for c in range(inst.m):
        if c in wset:
            continue
        group = tuple(i for i in unrepresented if c in prof[i])
        if meets_threshold(len(group), 1, inst):
            return Violation("jr", 1, group, (c,))
    return None


def jr_violation(inst: Instance, prof: Profile, w: Committee) -> Violation | None:
    """First JR violation of committee ``w``, or None if JR holds.

    Polynomial scan: for each candidate outside the committee, gather
    the unrepresented voters approving it and compare the group against
    the quota.  The witness group is the maximal one for its candidate.
    """
    w = committee(w, inst)
    return _jr_violation(inst, prof, frozenset(w))


def ejr_violation(inst: Instance, prof: Profile, w: Committee) -> Violation | None:
    """First EJR violation, or None.

    Exact but exponential in ``ell``: enumerates candidate subsets ``T``
    of each size ``ell``.  For fixed ``T`` the set of voters approving
    all of ``T`` with fewer than ``ell`` committee approvals is the
    largest possible violating group, and every violating group is
    contained in one of this form, so the enumeration is sound and
    complete.
    """
    w = committee(w, inst)
    wset = frozenset(w)
    approved = [frozenset(a) for a in prof]
    in_w = [len(a & wset) for a in approved]
    for ell in range(1, inst.k + 1):
        eligible = [i for i in range(inst.n) if in_w[i] < ell]
        if not meets_threshold(len(eligible), ell, inst):
            continue
        for t in itertools.combinations(range(inst.m), ell):
            tset = frozenset(t)
            group = tuple(i for i in eligible if tset <= approved[i])
            if meets_threshold(len(group), ell, inst):
                return Violation("ejr", ell, group, t)
    return None


def pjr_violation(inst: Instance, prof: Profile, w: Committee) -> Violation | None:
    """First PJR violation, or None.

    For each ``T`` of size ``ell`` whose unanimous approvers meet the
    ``ell``-threshold, minimizes the committee coverage of the group's
    approval union by brute force over voter subsets of exactly the
    minimal qualifying size: shrinking a violating group can only shrink
    the union, so minimal size suffices.
    """
    w = committee(w, inst)
    wset = frozenset(w)
    approved = [frozenset(a) for a in prof]
    for ell in range(1, inst.k + 1):
        size = min_group_size(ell, inst)
        if size > inst.n:
            continue
        for t in itertools.combinations(range(inst.m), ell):
            tset = frozenset(t)
            pool = [i for i in range(inst.n) if tset <= approved[i]]
            if len(pool) < size:
                continue
            for group in itertools.combinations(pool, size):
                union = frozenset().union(*(approved[i] for i in group))
                if len(union & wset) < ell:
                    return Violation("pjr", ell, group, t)
    return None


_VIOLATION_FINDERS = {
    "jr": jr_violation,
    "pjr": pjr_violation,
    "ejr": ejr_violation,
}


def axiom_violation(inst: Instance, prof: Profile, w: Committee, axiom: str) -> Violation | None:
    """Dispatch to the requested axiom's violation finder."""
    return _VIOLATION_FINDERS[_require_axiom(axiom)](inst, prof, w)


def is_jr(inst: Instance, prof: Profile, w: Committee) -> bool:
    return jr_violation(inst, prof, w) is None


def is_pjr(inst: Instance, prof: Profile, w: Committee) -> bool:
    return pjr_violation(inst, prof, w) is None


def is_ejr(inst: Instance, prof: Profile, w: Committee) -> bool:
    return ejr_violation(inst, prof, w) is None


def satisfies(inst: Instance, prof: Profile, w: Committee, axiom: str) -> bool:
    return axiom_violation(inst, prof, w, axiom) is None


def greedy_jr_committee(inst: Instance, prof: Profile) -> Committee:
    """Build a size-``k`` committee satisfying JR for ``prof``.

    Repeatedly adds the candidate approved by the largest number of
    still-unrepresented voters while some candidate meets the quota
    among them (ties broken by lowest candidate index), then pads with
    the lowest-indexed unused candidates.  Each pick represents a quota
    of voters, so at most ``k`` picks happen before the loop stops.
    """
    chosen: list[int] = []
    unrepresented = set(range(inst.n))
    while len(chosen) < inst.k:
        counts = [0] * inst.m
        for i in unrepresented:
            for c in prof[i]:
                counts[c] += 1
        for c in chosen:
            counts[c] = -1
        best = max(range(inst.m), key=lambda c: (counts[c], -c))
        if not meets_threshold(counts[best], 1, inst):
            break
        chosen.append(best)
        unrepresented = {i for i in unrepresented if best not in prof[i]}
    for c in range(inst.m):
        if len(chosen) == inst.k:
            break
        if c not in chosen:
            chosen.append(c)
    return tuple(sorted(chosen))

"""Possible/necessary satisfaction deciders for JR, PJR and EJR.

"Possible" means some plausible profile satisfies the axiom, "necessary"
means all of them do.  Polynomial procedures exist for several
model/problem combinations and are used automatically:

* Joint models are decided by scanning their explicit profile list.
* CandidateProb/ThreeValued possible-JR reduces to a single check on the
  best-case completion: approving every committee member with positive
  probability and, outside the committee, only forced approvals can only
  remove violations, and the completion is plausible by independence.
* Lottery/CandidateProb/ThreeValued necessary-JR reduces to counting,
  per outside candidate, the voters who can simultaneously approve it
  and dodge the committee (for lotteries: a single plausible set
  containing the candidate and disjoint from the committee).
* Necessary-JR committee existence has two polynomial special cases:
  lotteries whose plausible sets are all singletons (candidates whose
  potential-approver count meets the quota are mandatory), and
  strictly interior probability matrices (only the full candidate set
  can be necessarily JR, so the answer is yes iff k = m).

Everything else is decided by exact enumeration over plausible profiles
(and, for existence questions, over committees in lexicographic order).
All searches return the first witness in scan order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .axioms import (
    Violation,
    greedy_jr_committee,
    jr_violation,
    satisfies,
    _require_axiom,
)
from .model import (
    DEFAULT_BUDGET,
    BudgetError,
    Committee,
    committee,
    meets_threshold,
)
from .uncertainty import (
    CandidateProbModel,
    JointModel,
    LotteryModel,
    Model,
    PlausibleProfile,
    ThreeValuedModel,
    _cp_rows,
    enumerate_plausible,
    first_plausible,
    profile_probability,
)

POLY = "poly-special-case"
ENUM = "enumeration"


@dataclass(frozen=True)
class DecisionResult:
    """Answer plus witness: a profile for possible-*, a profile and its
    violation for necessary-* refutations, a committee for exists-*."""

    answer: bool
    method: str
    witness_profile: PlausibleProfile | None = None
    witness_violation: Violation | None = None
    witness_committee: Committee | None = None


def _matrix_like(model: Model) -> bool:
    return isinstance(model, (CandidateProbModel, ThreeValuedModel))


# ---------------------------------------------------------------------------
# possible JR


def is_poss_jr(
    model: Model, w, *, budget: int | None = None, force_enumeration: bool = False
) -> DecisionResult:
    """Does ``w`` satisfy JR in at least one plausible profile?"""
    inst = model.instance
    w = committee(w, inst)
    if force_enumeration:
        return _poss_by_enumeration(model, w, "jr", budget)
    if isinstance(model, JointModel):
        for lam, prof in model.entries:
            if jr_violation(inst, prof, w) is None:
                return DecisionResult(True, POLY, witness_profile=PlausibleProfile(prof, lam))
        return DecisionResult(False, POLY)
    if _matrix_like(model):
        rows = _cp_rows(model)
        wset = set(w)
        prof = tuple(
            tuple(sorted(
                [c for c in w if row[c] > 0]
                + [c for c, p in enumerate(row) if c not in wset and p == 1]
            ))
            for row in rows
        )
        if jr_violation(inst, prof, w) is None:
            return DecisionResult(
                True, POLY,
                witness_profile=PlausibleProfile(prof, profile_probability(model, prof)),
            )
        return DecisionResult(False, POLY)
    return _poss_jr_lottery(model, w, budget)


def _poss_jr_lottery(model: LotteryModel, w: Committee, budget: int | None) -> DecisionResult:
    """Backtracking over per-voter set choices with quota pruning.

    A partial assignment dies as soon as some outside candidate already
    has a quota of committed unrepresented approvers: later choices
    cannot remove them.  The first surviving full assignment (voters in
    index order, sets in input order) is the witness.
    """
    cap = DEFAULT_BUDGET if budget is None else budget
    inst = model.instance
    wset = frozenset(w)
    counts = [0] * inst.m
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def search(i: int) -> bool:
        nonlocal nodes
        if i == inst.n:
            return True
        for _, s in model.lotteries[i]:
            nodes += 1
            if nodes > cap:
                raise BudgetError(nodes, cap)
            bumped = [] if wset & set(s) else list(s)
            dead = False
            for c in bumped:
                counts[c] += 1
                if meets_threshold(counts[c], 1, inst):
                    dead = True
            if not dead:
                chosen.append(s)
                if search(i + 1):
                    return True
                chosen.pop()
            for c in bumped:
                counts[c] -= 1
        return False

    if search(0):
        prof = tuple(chosen)
        return DecisionResult(
            True, ENUM,
            witness_profile=PlausibleProfile(prof, profile_probability(model, prof)),
        )
    return DecisionResult(False, ENUM)


def exists_poss_jr(model: Model) -> DecisionResult:
    """Always yes: every profile admits a JR committee, so build one
    greedily for the first plausible profile."""
    pp = first_plausible(model)
    w = greedy_jr_committee(model.instance, pp.profile)
    return DecisionResult(True, POLY, witness_committee=w, witness_profile=pp)


# ---------------------------------------------------------------------------
# necessary JR


def is_nec_jr(
    model: Model, w, *, budget: int | None = None, force_enumeration: bool = False
) -> DecisionResult:
    """Does ``w`` satisfy JR in every plausible profile?"""
    inst = model.instance
    w = committee(w, inst)
    if force_enumeration:
        return _nec_by_enumeration(model, w, "jr", budget)
    if isinstance(model, JointModel):
        for lam, prof in model.entries:
            viol = jr_violation(inst, prof, w)
            if viol is not None:
                return DecisionResult(
                    False, POLY,
                    witness_profile=PlausibleProfile(prof, lam),
                    witness_violation=viol,
                )
        return DecisionResult(True, POLY)
    if isinstance(model, LotteryModel):
        return _nec_jr_lottery(model, w)
    return _nec_jr_matrix(model, w)


def _nec_jr_lottery(model: LotteryModel, w: Committee) -> DecisionResult:
    inst = model.instance
    wset = frozenset(w)
    for c in range(inst.m):
        if c in wset:
            continue
        # A voter can contribute to a violation at c only via one single
        # plausible set that both contains c and avoids the committee.
        culprits: dict[int, tuple[int, ...]] = {}
        for i, voter in enumerate(model.lotteries):
            for _, s in voter:
                if c in s and wset.isdisjoint(s):
                    culprits[i] = s
                    break
        if meets_threshold(len(culprits), 1, inst):
            prof = tuple(
                culprits.get(i, model.lotteries[i][0][1]) for i in range(inst.n)
            )
            return DecisionResult(
                False, POLY,
                witness_profile=PlausibleProfile(prof, profile_probability(model, prof)),
                witness_violation=jr_violation(inst, prof, w),
            )
    return DecisionResult(True, POLY)


def _nec_jr_matrix(model: CandidateProbModel | ThreeValuedModel, w: Committee) -> DecisionResult:
    inst = model.instance
    rows = _cp_rows(model)
    wset = frozenset(w)
    dodgers = [all(rows[i][c] < 1 for c in w) for i in range(inst.n)]
    for c in range(inst.m):
        if c in wset:
            continue
        group = [i for i in range(inst.n) if dodgers[i] and rows[i][c] > 0]
        if meets_threshold(len(group), 1, inst):
            in_group = set(group)
            prof = tuple(
                tuple(sorted(
                    {c2 for c2, p in enumerate(rows[i]) if p == 1}
                    | ({c} if i in in_group else set())
                ))
                for i in range(inst.n)
            )
            return DecisionResult(
                False, POLY,
                witness_profile=PlausibleProfile(prof, profile_probability(model, prof)),
                witness_violation=jr_violation(inst, prof, w),
            )
    return DecisionResult(True, POLY)


def exists_nec_jr(
    model: Model, *, budget: int | None = None, force_enumeration: bool = False
) -> DecisionResult:
    """Is some size-``k`` committee JR in every plausible profile?"""
    inst = model.instance
    if not force_enumeration:
        if isinstance(model, LotteryModel) and all(
            len(s) == 1 for voter in model.lotteries for _, s in voter
        ):
            counts = [0] * inst.m
            for voter in model.lotteries:
                for _, s in voter:
                    counts[s[0]] += 1
            mandatory = [c for c in range(inst.m) if meets_threshold(counts[c], 1, inst)]
            if len(mandatory) > inst.k:
                return DecisionResult(False, POLY)
            chosen = list(mandatory)
            for c in range(inst.m):
                if len(chosen) == inst.k:
                    break
                if c not in mandatory:
                    chosen.append(c)
            return DecisionResult(True, POLY, witness_committee=tuple(sorted(chosen)))
        if _matrix_like(model):
            rows = _cp_rows(model)
            if all(0 < p < 1 for row in rows for p in row):
                # Every candidate can be the unanimous favourite, so only
                # the full candidate set is necessarily JR.
                if inst.k == inst.m:
                    return DecisionResult(True, POLY, witness_committee=tuple(range(inst.m)))
                return DecisionResult(False, POLY)
    cap = DEFAULT_BUDGET if budget is None else budget
    total = math.comb(inst.m, inst.k)
    if total > cap:
        raise BudgetError(total, cap)
    for w in itertools.combinations(range(inst.m), inst.k):
        if is_nec_jr(model, w, budget=budget).answer:
            return DecisionResult(True, ENUM, witness_committee=w)
    return DecisionResult(False, ENUM)


# ---------------------------------------------------------------------------
# PJR / EJR via enumeration (and the generic enumeration fallbacks)


def _poss_by_enumeration(model: Model, w: Committee, axiom: str, budget: int | None) -> DecisionResult:
    inst = model.instance
    for pp in enumerate_plausible(model, budget):
        if satisfies(inst, pp.profile, w, axiom):
            return DecisionResult(True, ENUM, witness_profile=pp)
    return DecisionResult(False, ENUM)


def _nec_by_enumeration(model: Model, w: Committee, axiom: str, budget: int | None) -> DecisionResult:
    from .axioms import axiom_violation

    inst = model.instance
    for pp in enumerate_plausible(model, budget):
        viol = axiom_violation(inst, pp.profile, w, axiom)
        if viol is not None:
            return DecisionResult(False, ENUM, witness_profile=pp, witness_violation=viol)
    return DecisionResult(True, ENUM)


def is_poss_axiom(
    model: Model, w, axiom: str, *, budget: int | None = None,
    force_enumeration: bool = False,
) -> DecisionResult:
    """Possible satisfaction for any axiom; JR uses the fast paths."""
    _require_axiom(axiom)
    if axiom == "jr":
        return is_poss_jr(model, w, budget=budget, force_enumeration=force_enumeration)
    return _poss_by_enumeration(model, committee(w, model.instance), axiom, budget)


def is_nec_axiom(
    model: Model, w, axiom: str, *, budget: int | None = None,
    force_enumeration: bool = False,
) -> DecisionResult:
    """Necessary satisfaction for any axiom; JR uses the fast paths."""
    _require_axiom(axiom)
    if axiom == "jr":
        return is_nec_jr(model, w, budget=budget, force_enumeration=force_enumeration)
    return _nec_by_enumeration(model, committee(w, model.instance), axiom, budget)


def exists_nec_axiom(
    model: Model, axiom: str, *, budget: int | None = None,
    force_enumeration: bool = False,
) -> DecisionResult:
    """Is some committee necessarily satisfying ``axiom``?  First
    lexicographic winner is returned."""
    _require_axiom(axiom)
    if axiom == "jr":
        return exists_nec_jr(model, budget=budget, force_enumeration=force_enumeration)
    inst = model.instance
    cap = DEFAULT_BUDGET if budget is None else budget
    total = math.comb(inst.m, inst.k)
    if total > cap:
        raise BudgetError(total, cap)
    profiles = list(enumerate_plausible(model, budget))
    for w in itertools.combinations(range(inst.m), inst.k):
        if all(satisfies(inst, pp.profile, w, axiom) for pp in profiles):
            return DecisionResult(True, ENUM, witness_committee=w)
    return DecisionResult(False, ENUM)


def exists_poss_axiom(model: Model, axiom: str, *, budget: int | None = None) -> DecisionResult:
    """Is some committee possibly satisfying ``axiom``?  For JR this is
    always yes; for PJR/EJR it is decided by plain enumeration."""
    _require_axiom(axiom)
    if axiom == "jr":
        return exists_poss_jr(model)
    inst = model.instance
    cap = DEFAULT_BUDGET if budget is None else budget
    total = math.comb(inst.m, inst.k)
    if total > cap:
        raise BudgetError(total, cap)
    profiles = list(enumerate_plausible(model, budget))
    for w in itertools.combinations(range(inst.m), inst.k):
        for pp in profiles:
            if satisfies(inst, pp.profile, w, axiom):
                return DecisionResult(True, ENUM, witness_committee=w, witness_profile=pp)
    return DecisionResult(False, ENUM)

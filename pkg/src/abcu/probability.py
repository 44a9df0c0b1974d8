"""Exact satisfaction probabilities for JR, PJR and EJR.

The probability that a committee satisfies an axiom is the sum, over
plausible profiles, of the profile probability times the axiom
indicator.  Joint models are summed directly over their entries.  Two
ThreeValued cases admit closed forms that avoid enumeration:

* When every entry over the committee is certain (0 or 1), the set of
  certainly-unrepresented voters is fixed, and each outside candidate's
  violation event depends only on that candidate's own unknown entries.
  Events over disjoint fair coins are independent, so the satisfaction
  probability is a product over outside candidates of one minus the
  violation probability, itself a binomial tail count over that
  candidate's unknowns.

* When ``k = n`` the quota is one voter, so a profile satisfies JR iff
  every voter either approves a committee member or approves nothing.
  That is a per-voter condition over disjoint unknowns, so satisfying
  completions are counted voter by voter and multiplied.

Everything else falls back to exact enumeration.  For ThreeValued
models all plausible profiles are equiprobable, so results also carry
the exact (satisfying, total) profile counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .axioms import satisfies
from .model import Committee, InputError, committee, meets_threshold
from .uncertainty import (
    HALF,
    JointModel,
    Model,
    ThreeValuedModel,
    enumerate_plausible,
)

JOINT_SCAN = "joint-scan"
CLOSED_FORM_CERTAIN_W = "closed-form-certain-w"
COUNT_K_EQ_N = "count-k-eq-n"
ENUM = "enumeration"


@dataclass(frozen=True)
class ProbResult:
    """Exact probability, the method that produced it, and, for
    equiprobable (ThreeValued) models, the exact profile counts with
    ``value == counts[0] / counts[1]``."""

    value: Fraction
    method: str
    counts: tuple[int, int] | None = None


def _total_unknowns(model: ThreeValuedModel) -> int:
    return sum(1 for row in model.entries for p in row if p == HALF)


def _with_counts(value: Fraction, method: str, model: Model) -> ProbResult:
    if not isinstance(model, ThreeValuedModel):
        return ProbResult(value, method)
    total = 2 ** _total_unknowns(model)
    count = value * total
    assert count.denominator == 1
    return ProbResult(value, method, (count.numerator, total))


def _certain_over_committee(model: ThreeValuedModel, w: Committee) -> bool:
    return all(row[c] != HALF for row in model.entries for c in w)


def _certain_w_value(model: ThreeValuedModel, w: Committee) -> Fraction:
    inst = model.instance
    rows = model.entries
    unrepresented = [i for i in range(inst.n) if all(rows[i][c] == 0 for c in w)]
    wset = set(w)
    value = Fraction(1)
    for c in range(inst.m):
        if c in wset:
            continue
        n1 = sum(1 for i in unrepresented if rows[i][c] == 1)
        nu = sum(1 for i in unrepresented if rows[i][c] == HALF)
        if meets_threshold(n1, 1, inst):
            return Fraction(0)
        # Smallest number of unknown approvals that pushes the group of
        # certain approvers over the quota (exact ceiling, no division).
        tau = -(-(inst.n - n1 * inst.k) // inst.k)
        violating = sum(math.comb(nu, l) for l in range(tau, nu + 1))
        value *= 1 - Fraction(violating, 2**nu)
    return value


def _full_committee_counts(model: ThreeValuedModel, w: Committee) -> tuple[int, int]:
    rows = model.entries
    wset = set(w)
    count = 1
    total_exp = 0
    for row in rows:
        x = sum(1 for p in row if p == HALF)
        total_exp += x
        if any(row[c] == 1 for c in w):
            per_voter = 2**x
        else:
            y = sum(1 for c in wset if row[c] == HALF)
            per_voter = (2**y - 1) * 2 ** (x - y)
            if not any(p == 1 for p in row):
                per_voter += 1  # the all-disapprove completion needs nothing
        count *= per_voter
    return count, 2**total_exp


def _value_by_enumeration(model: Model, w: Committee, axiom: str, budget: int | None) -> Fraction:
    inst = model.instance
    value = Fraction(0)
    for pp in enumerate_plausible(model, budget):
        if satisfies(inst, pp.profile, w, axiom):
            value += pp.prob
    return value


def jr_probability(
    model: Model, w, *, budget: int | None = None, force_enumeration: bool = False
) -> ProbResult:
    """Exact probability that ``w`` satisfies JR under ``model``."""
    inst = model.instance
    w = committee(w, inst)
    if not force_enumeration:
        if isinstance(model, JointModel):
            from .axioms import is_jr

            value = sum(
                (lam for lam, prof in model.entries if is_jr(inst, prof, w)),
                Fraction(0),
            )
            return ProbResult(value, JOINT_SCAN)
        if isinstance(model, ThreeValuedModel):
            if _certain_over_committee(model, w):
                return _with_counts(_certain_w_value(model, w), CLOSED_FORM_CERTAIN_W, model)
            if inst.k == inst.n:
                count, total = _full_committee_counts(model, w)
                return ProbResult(Fraction(count, total), COUNT_K_EQ_N, (count, total))
    return _with_counts(_value_by_enumeration(model, w, "jr", budget), ENUM, model)


def jr_satisfying_count(model: ThreeValuedModel, w, *, budget: int | None = None) -> tuple[int, int]:
    """Exact (number of plausible profiles where ``w`` is JR, total
    number of plausible profiles) for a ThreeValued model."""
    if not isinstance(model, ThreeValuedModel):
        raise InputError("profile counting requires a three-valued model")
    result = jr_probability(model, w, budget=budget)
    assert result.counts is not None
    return result.counts


def axiom_probability(
    model: Model, w, axiom: str, *, budget: int | None = None,
    force_enumeration: bool = False,
) -> ProbResult:
    """Exact probability that ``w`` satisfies ``axiom`` (jr/pjr/ejr).

    JR dispatches to the closed forms when they apply; PJR and EJR are
    computed by enumeration only.
    """
    from .axioms import _require_axiom

    _require_axiom(axiom)
    if axiom == "jr":
        return jr_probability(model, w, budget=budget, force_enumeration=force_enumeration)
    w = committee(w, model.instance)
    return _with_counts(_value_by_enumeration(model, w, axiom, budget), ENUM, model)

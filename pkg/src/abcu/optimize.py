"""Committee search: probability maximization and small-committee JR.

``max_axiom`` scans all size-``k`` committees in lexicographic order and
keeps the first one attaining the maximum axiom probability, counting
how many committees tie.  ``size_jr`` decides whether a committee of a
given size ``r`` smaller than ``k`` satisfies JR, with the quota still
computed from the instance's ``k``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .axioms import _jr_violation
from .model import (
    DEFAULT_BUDGET,
    BudgetError,
    Committee,
    InputError,
    Instance,
    Profile,
    approval_profile,
)
from .probability import axiom_probability
from .uncertainty import Model, plausible_count


@dataclass(frozen=True)
class MaxResult:
    """Lexicographically least probability-maximizing committee, its
    exact probability, and the number of committees attaining it."""

    committee: Committee
    value: Fraction
    ties: int


def max_axiom(
    model: Model, axiom: str, *, budget: int | None = None,
    force_enumeration: bool = False,
) -> MaxResult:
    """Committee with the highest probability of satisfying ``axiom``."""
    inst = model.instance
    cap = DEFAULT_BUDGET if budget is None else budget
    work = math.comb(inst.m, inst.k) * plausible_count(model)
    if work > cap:
        raise BudgetError(work, cap)
    best: Fraction | None = None
    best_w: Committee | None = None
    ties = 0
    for w in itertools.combinations(range(inst.m), inst.k):
        value = axiom_probability(
            model, w, axiom, budget=budget, force_enumeration=force_enumeration
        ).value
        if best is None or value > best:
            best, best_w, ties = value, w, 1
        elif value == best:
            ties += 1
    assert best is not None and best_w is not None
    return MaxResult(best_w, best, ties)


def size_jr(inst: Instance, prof: Profile, r: int) -> tuple[bool, Committee | None]:
    """Is there a committee of size ``r < k`` satisfying JR?

    The quota stays ``n/k`` with the instance's original ``k``; only the
    committee itself is smaller.  Returns the first suitable committee
    in lexicographic order.
    """
    if not isinstance(r, int) or isinstance(r, bool) or not 1 <= r < inst.k:
        raise InputError(f"target size r={r!r} must satisfy 1 <= r < k={inst.k}")
    prof = approval_profile(prof, inst)
    for w in itertools.combinations(range(inst.m), r):
        if _jr_violation(inst, prof, frozenset(w)) is None:
            return True, w
    return False, None

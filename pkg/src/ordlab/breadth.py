"""Breadth of finite lattices.

A lattice has breadth at most n when the infimum of any finite subset is
already the infimum of at most n of its elements.  Subsets here are
nonempty subsets of the carrier (the empty set is harmless either way:
its infimum, the top, is achieved by the empty subfamily).

Two routes compute the bound: the literal definition over every subset
("exhaustive") and the size-bound reduction that only inspects subsets
of size n+1 ("size-bound-reduction").  The reduction is the default and
is validated against the literal route on every lattice with up to six
elements by the oracle gate in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .limits import Limits, check_subset_elements
from .order_core import ElementSet, Poset, iter_bits, mask_of

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_REDUCTION = "size-bound-reduction"


class BreadthCheck(NamedTuple):
    holds: bool
    counterexample: Optional[ElementSet]


@dataclass(frozen=True)
class BreadthReport:
    lattice: Poset
    breadth: int
    witness: ElementSet
    method: str


def _require_complete_lattice(lattice: Poset) -> None:
    cert = lattice.certificate
    if not cert.is_complete:
        raise ValueError("breadth is defined on complete lattices")


def _has_small_same_inf_subset(lattice: Poset, subset: int, n: int) -> bool:
    target = lattice.infimum_mask(subset)
    if subset.bit_count() <= n:
        return True
    members = list(iter_bits(subset))
    for size in range(1, n + 1):
        for combo in itertools.combinations(members, size):
            if lattice.infimum_mask(mask_of(combo)) == target:
                return True
    return False


def has_breadth_at_most(
    lattice: Poset,
    n: int,
    *,
    method: str = METHOD_REDUCTION,
    limits: Limits | None = None,
) -> BreadthCheck:
    """Decide breadth <= n, returning a violating subset on failure."""
    _require_complete_lattice(lattice)
    if n < 1:
        raise ValueError("breadth bound must be positive")
    check_subset_elements(lattice.n, limits, "breadth check")
    if method == METHOD_EXHAUSTIVE:
        for subset in range(1, lattice.full_mask + 1):
            if not _has_small_same_inf_subset(lattice, subset, n):
                return BreadthCheck(False, ElementSet(lattice, subset))
        return BreadthCheck(True, None)
    if method == METHOD_REDUCTION:
        for combo in itertools.combinations(range(lattice.n), n + 1):
            subset = mask_of(combo)
            target = lattice.infimum_mask(subset)
            reducible = False
            for drop in combo:
                if lattice.infimum_mask(subset & ~(1 << drop)) == target:
                    reducible = True
                    break
            if not reducible:
                return BreadthCheck(False, ElementSet(lattice, subset))
        return BreadthCheck(True, None)
    raise ValueError(f"unknown method {method!r}")


def is_irredundant(lattice: Poset, subset: ElementSet | int) -> bool:
    """No proper subset (the empty one included) has the same infimum."""
    mask = subset.mask if isinstance(subset, ElementSet) else int(subset)
    if mask == 0:
        return True
    target = lattice.infimum_mask(mask)
    sub = (mask - 1) & mask
    while True:
        if lattice.infimum_mask(sub) == target:
            return False
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return True


def _minimal_same_inf_subset(lattice: Poset, subset: int) -> int:
    """Smallest subset of ``subset`` with the same infimum; it is
    irredundant because nothing smaller achieves the infimum."""
    target = lattice.infimum_mask(subset)
    members = list(iter_bits(subset))
    for size in range(0, len(members) + 1):
        for combo in itertools.combinations(members, size):
            mask = mask_of(combo)
            if lattice.infimum_mask(mask) == target:
                return mask
    return subset


def compute_breadth(
    lattice: Poset, *, method: str = METHOD_REDUCTION, limits: Limits | None = None
) -> BreadthReport:
    """Least n with breadth <= n, plus an irredundant witness of that size.

    The one-element lattice is degenerate: its breadth is 1 but no
    single element is irredundant (the empty subset already reaches the
    top), so the witness is the empty set there.
    """
    _require_complete_lattice(lattice)
    last_violation: Optional[ElementSet] = None
    n = 1
    while True:
        holds, violation = has_breadth_at_most(lattice, n, method=method, limits=limits)
        if holds:
            break
        last_violation = violation
        n += 1
    if last_violation is not None:
        witness_mask = _minimal_same_inf_subset(lattice, last_violation.mask)
    elif lattice.n >= 2:
        witness_mask = 1 << lattice.bottom
    else:
        witness_mask = 0
    witness = ElementSet(lattice, witness_mask)
    if witness_mask and not is_irredundant(lattice, witness_mask):
        raise AssertionError("internal error: computed witness is redundant")
    return BreadthReport(lattice, n, witness, method)


def compute_dual_breadth(
    lattice: Poset, *, method: str = METHOD_REDUCTION, limits: Limits | None = None
) -> BreadthReport:
    """Breadth of the order dual (suprema in the original lattice).

    Provided as separate plumbing; it is not the breadth itself, though
    the two agree on self-dual lattices.
    """
    return compute_breadth(lattice.dual(), method=method, limits=limits)


def coatom(n: int, m: int) -> int:
    """Element of the n-bit vector lattice that is 1 everywhere except
    coordinate m (character m of the label)."""
    if not 0 <= m < n:
        raise ValueError("coordinate out of range")
    return ((1 << n) - 1) ^ (1 << (n - 1 - m))


def coatom_family(n: int) -> list[int]:
    """All n vectors with exactly one zero coordinate; their infimum is
    the bottom and no proper subfamily reaches it."""
    return [coatom(n, m) for m in range(n)]

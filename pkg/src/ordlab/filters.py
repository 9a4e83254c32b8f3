"""Set filters on finite posets and their convergence notions.

On a finite carrier every set filter is principal: closure under finite
intersection forces the intersection of all members to be a member, so a
filter is exactly the family of supersets of one nonempty generator set.
:class:`SetFilter` stores only that generator; ``members`` materializes
the definitional family for oracle checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MalformedInputError
from .limits import Limits, check_subset_elements
from .order_core import ElementSet, Poset, iter_bits


@dataclass(frozen=True)
class SetFilter:
    """The filter of all supersets of ``generator`` on ``parent``'s carrier."""

    parent: Poset
    generator: int

    def __post_init__(self) -> None:
        if self.generator == 0:
            raise MalformedInputError("filter generator must be nonempty")
        if self.generator < 0 or self.generator & ~self.parent.full_mask:
            raise MalformedInputError("filter generator out of range")

    @property
    def generator_set(self) -> ElementSet:
        return ElementSet(self.parent, self.generator)

    def __contains__(self, mask: int) -> bool:
        return mask & self.generator == self.generator

    def members(self, limits: Limits | None = None) -> list[int]:
        """All member sets, i.e. every superset of the generator."""
        check_subset_elements(self.parent.n, limits, "filter materialization")
        free = self.parent.full_mask & ~self.generator
        out = []
        sub = 0
        while True:
            out.append(self.generator | sub)
            if sub == free:
                break
            sub = (sub - free) & free
        return out


def filter_from_labels(parent: Poset, labels: Iterable[str]) -> SetFilter:
    return SetFilter(parent, ElementSet.from_labels(parent, labels).mask)


def filter_from_base(parent: Poset, base_sets: Iterable[ElementSet | int]) -> SetFilter:
    """Filter generated by a base: all sets containing the base's intersection.

    Every base set must be nonempty and the total intersection must be
    nonempty, otherwise the generated family would contain the empty set.
    """
    masks = []
    for b in base_sets:
        mask = b.mask if isinstance(b, ElementSet) else int(b)
        if mask == 0:
            raise MalformedInputError("filter base contains an empty set")
        if mask < 0 or mask & ~parent.full_mask:
            raise MalformedInputError("filter base set out of range")
        masks.append(mask)
    if not masks:
        raise MalformedInputError("filter base must be nonempty")
    gen = parent.full_mask
    for m in masks:
        gen &= m
    if gen == 0:
        raise MalformedInputError("filter base has empty total intersection")
    return SetFilter(parent, gen)


def filter_upper(f: SetFilter) -> ElementSet:
    """Union over all members of their upper-bound sets.

    Computed as the upper bounds of the generator: a set's upper bounds
    only grow as the set shrinks, and the generator is the smallest
    member.  The identity is cross-checked against the definitional
    union in the test suite.
    """
    return f.parent.upper_bounds(f.generator)


def filter_lower(f: SetFilter) -> ElementSet:
    return f.parent.lower_bounds(f.generator)


def filter_upper_definitional(f: SetFilter, limits: Limits | None = None) -> ElementSet:
    """Oracle route: materialize every member and union its upper bounds."""
    out = 0
    for member in f.members(limits):
        out |= f.parent.upper_bounds_mask(member)
    return ElementSet(f.parent, out)


def filter_lower_definitional(f: SetFilter, limits: Limits | None = None) -> ElementSet:
    out = 0
    for member in f.members(limits):
        out |= f.parent.lower_bounds_mask(member)
    return ElementSet(f.parent, out)


def order_converges(f: SetFilter, x: int) -> bool:
    """True iff inf of the filter's upper set and sup of its lower set both equal x.

    Intended for complete lattices; when a required bound is missing the
    filter simply does not converge (no error).
    """
    p = f.parent
    upper = p.upper_bounds_mask(f.generator)
    lower = p.lower_bounds_mask(f.generator)
    return p.infimum_mask(upper) == x == p.supremum_mask(lower)


def super_filters(f: SetFilter) -> list[SetFilter]:
    """All filters containing f: generators are the nonempty subsets of f's generator."""
    gen = f.generator
    out = []
    sub = gen
    while sub:
        out.append(SetFilter(f.parent, sub))
        sub = (sub - 1) & gen
    out.sort(key=lambda g: g.generator)
    return out


def star_converges(f: SetFilter, x: int, *, literal_tail: bool = False) -> bool:
    """Star-convergence: every super-filter has a further super-filter
    that order-converges to x.

    With ``literal_tail=True`` the final clause instead asks that the
    original filter order-converges to x (the weaker reading in which
    the inner existential is satisfied trivially); both readings are
    reported by the CLI.
    """
    if literal_tail:
        return order_converges(f, x)
    for prime in super_filters(f):
        if not any(order_converges(g, x) for g in super_filters(prime)):
            return False
    return True


def upper_iff_downset(f: SetFilter, x: int) -> bool:
    """Check the equivalence: x bounds the filter from above iff the
    principal down-set of x is a member.  Returns whether the two sides
    agree (they always should)."""
    p = f.parent
    in_upper = bool((p.upper_bounds_mask(f.generator) >> x) & 1)
    downset_member = p.down[x] & f.generator == f.generator
    return in_upper == downset_member


def convergence_points(f: SetFilter) -> list[int]:
    return [x for x in range(f.parent.n) if order_converges(f, x)]


def order_convergence_is_pointlike(p: Poset) -> bool:
    """Brute-force the degeneracy law on one finite lattice: a filter
    order-converges to x exactly when its generator is {x}."""
    for gen in range(1, p.full_mask + 1):
        f = SetFilter(p, gen)
        for x in range(p.n):
            if order_converges(f, x) != (gen == 1 << x):
                return False
    return True


def satisfies_filter_axioms(carrier_size: int, family: Iterable[int]) -> bool:
    """Literal check of the three filter axioms on an explicit family:
    no empty member, closed under pairwise intersection, upward closed."""
    fam = set(family)
    if not fam or 0 in fam:
        return False
    full = (1 << carrier_size) - 1
    for a in fam:
        if a < 0 or a & ~full:
            return False
        for b in fam:
            if a & b not in fam:
                return False
        free = full & ~a
        sub = free
        while True:
            if a | sub not in fam:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & free
    return True

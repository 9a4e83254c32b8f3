"""Finite posets and lattices.

Elements are integer indices ``0..n-1`` carrying distinct display labels.
The order relation is stored as per-element bitmasks: ``down[i]`` is the
set of elements below-or-equal to ``i`` and ``up[i]`` the set above it.
Every subset of the carrier is a plain int bitmask at this level;
:class:`ElementSet` wraps a mask for the public API.  All values are
immutable and all operations are pure, so posets can be shared freely
across concurrent enumeration campaigns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import MalformedInputError
from .limits import Limits, check_elements, check_subset_elements


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class Poset:
    """Immutable finite partially ordered set."""

    def __init__(self, labels: Sequence[str], down_rows: Sequence[int], *, _validated: bool = False):
        self.labels: tuple[str, ...] = tuple(labels)
        self.n: int = len(self.labels)
        self.down: tuple[int, ...] = tuple(down_rows)
        self.full_mask: int = (1 << self.n) - 1
        up = [0] * self.n
        for j in range(self.n):
            row = self.down[j]
            for i in iter_bits(row):
                up[i] |= 1 << j
        self.up: tuple[int, ...] = tuple(up)
        if not _validated:
            self._validate()

    def _validate(self) -> None:
        n = self.n
        if n < 1:
            raise MalformedInputError("poset needs at least one element")
        if len(set(self.labels)) != n:
            raise MalformedInputError("duplicate label")
        if any(not isinstance(lab, str) for lab in self.labels):
            raise MalformedInputError("labels must be strings")
        if len(self.down) != n:
            raise MalformedInputError("relation size does not match label count")
        for i, row in enumerate(self.down):
            if row & ~self.full_mask:
                raise MalformedInputError("relation row out of range")
            if not (row >> i) & 1:
                raise MalformedInputError("relation is not reflexive")
        for i in range(n):
            for j in iter_bits(self.down[i]):
                if j != i and (self.down[j] >> i) & 1:
                    raise MalformedInputError("relation is not antisymmetric")
                if self.down[j] & ~self.down[i]:
                    raise MalformedInputError("relation is not transitive")

    # -- basic queries ------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def elements(self) -> range:
        return range(self.n)

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise MalformedInputError(f"unknown label {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.labels, self.down))

    def __repr__(self) -> str:
        return f"Poset({self.n} elements: {', '.join(self.labels[:6])}{'...' if self.n > 6 else ''})"

    # -- down-sets and bounds ------------------------------------------

    def down_set(self, x: int) -> "ElementSet":
        """Principal down-set of ``x``: everything below-or-equal to it."""
        return ElementSet(self, self.down[x])

    def up_set(self, x: int) -> "ElementSet":
        """Principal up-set of ``x``: everything above-or-equal to it."""
        return ElementSet(self, self.up[x])

    def is_down_set(self, subset: "ElementSet | int") -> bool:
        """True iff the subset is closed under going down."""
        mask = _mask_arg(self, subset)
        for i in iter_bits(mask):
            if self.down[i] & ~mask:
                return False
        return True

    def is_up_set(self, subset: "ElementSet | int") -> bool:
        mask = _mask_arg(self, subset)
        for i in iter_bits(mask):
            if self.up[i] & ~mask:
                return False
        return True

    def upper_bounds_mask(self, mask: int) -> int:
        out = self.full_mask
        for i in iter_bits(mask):
            out &= self.up[i]
        return out

    def lower_bounds_mask(self, mask: int) -> int:
        out = self.full_mask
        for i in iter_bits(mask):
            out &= self.down[i]
        return out

    def upper_bounds(self, subset: "ElementSet | int") -> "ElementSet":
        """Elements above every member of the subset; the carrier when empty."""
        return ElementSet(self, self.upper_bounds_mask(_mask_arg(self, subset)))

    def lower_bounds(self, subset: "ElementSet | int") -> "ElementSet":
        return ElementSet(self, self.lower_bounds_mask(_mask_arg(self, subset)))

    def infimum_mask(self, mask: int) -> Optional[int]:
        lb = self.lower_bounds_mask(mask)
        for x in iter_bits(lb):
            if not lb & ~self.down[x]:
                return x
        return None

    def supremum_mask(self, mask: int) -> Optional[int]:
        ub = self.upper_bounds_mask(mask)
        for x in iter_bits(ub):
            if not ub & ~self.up[x]:
                return x
        return None

    def infimum(self, subset: "ElementSet | int") -> Optional[int]:
        """Largest lower bound, or None when absent.  inf(empty) is the top."""
        return self.infimum_mask(_mask_arg(self, subset))

    def supremum(self, subset: "ElementSet | int") -> Optional[int]:
        """Least upper bound, or None when absent.  sup(empty) is the bottom."""
        return self.supremum_mask(_mask_arg(self, subset))

    def meet(self, i: int, j: int) -> Optional[int]:
        return self.infimum_mask((1 << i) | (1 << j))

    def join(self, i: int, j: int) -> Optional[int]:
        return self.supremum_mask((1 << i) | (1 << j))

    @cached_property
    def bottom(self) -> Optional[int]:
        for x in range(self.n):
            if self.up[x] == self.full_mask:
                return x
        return None

    @cached_property
    def top(self) -> Optional[int]:
        for x in range(self.n):
            if self.down[x] == self.full_mask:
                return x
        return None

    @cached_property
    def meet_table(self) -> tuple[tuple[Optional[int], ...], ...]:
        return tuple(tuple(self.meet(i, j) for j in range(self.n)) for i in range(self.n))

    @cached_property
    def join_table(self) -> tuple[tuple[Optional[int], ...], ...]:
        return tuple(tuple(self.join(i, j) for j in range(self.n)) for i in range(self.n))

    @cached_property
    def certificate(self) -> "LatticeCert":
        return _certify(self)

    # -- structure ------------------------------------------------------

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) with i strictly below j and nothing between."""
        out = []
        for i in range(self.n):
            strict_up = self.up[i] & ~(1 << i)
            for j in iter_bits(strict_up):
                between = self.down[j] & strict_up & ~(1 << j)
                if not between:
                    out.append((i, j))
        out.sort()
        return out

    def dual(self) -> "Poset":
        """Same carrier with the order reversed."""
        return Poset(self.labels, self.up, _validated=True)


def _mask_arg(parent: Poset, subset: "ElementSet | int") -> int:
    if isinstance(subset, ElementSet):
        if subset.parent is not parent and subset.parent != parent:
            raise ValueError("subset belongs to a different poset")
        return subset.mask
    mask = int(subset)
    if mask < 0 or mask & ~parent.full_mask:
        raise ValueError("subset mask out of range")
    return mask


@dataclass(frozen=True)
class ElementSet:
    """A subset of a poset's carrier, stored as a bitmask."""

    parent: Poset
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask & ~self.parent.full_mask:
            raise ValueError("member indices out of range")

    @classmethod
    def from_indices(cls, parent: Poset, indices: Iterable[int]) -> "ElementSet":
        return cls(parent, mask_of(indices))

    @classmethod
    def from_labels(cls, parent: Poset, labels: Iterable[str]) -> "ElementSet":
        return cls(parent, mask_of(parent.index_of(lab) for lab in labels))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def member_labels(self) -> tuple[str, ...]:
        return tuple(self.parent.labels[i] for i in iter_bits(self.mask))

    def __contains__(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(self.member_labels)}}})"


@dataclass(frozen=True)
class LatticeCert:
    """Result of certifying a poset's lattice structure."""

    poset: Poset
    is_lattice: bool
    is_complete: bool
    is_distributive: bool
    bottom: Optional[int]
    top: Optional[int]


def build_poset(labels: Sequence[str], covers: Iterable[tuple[int, int]]) -> Poset:
    """Build a poset from its cover relation (Hasse edges).

    The order is the reflexive-transitive closure of the covers.  Inputs
    that are not genuine cover relations are rejected: cycles, duplicate
    edges, and edges already implied by transitivity all raise
    :class:`MalformedInputError`.
    """
    labels = list(labels)
    n = len(labels)
    if n < 1:
        raise MalformedInputError("poset needs at least one element")
    if len(set(labels)) != n:
        raise MalformedInputError("duplicate label")
    edges = []
    seen = set()
    for pair in covers:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise MalformedInputError(f"cover index out of range: {(i, j)}")
        if i == j:
            raise MalformedInputError(f"cycle detected at element {i}")
        if (i, j) in seen:
            raise MalformedInputError(f"duplicate cover {(i, j)}")
        seen.add((i, j))
        edges.append((i, j))

    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for i, j in edges:
        succ[i].append(j)
        indeg[j] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        raise MalformedInputError("cycle detected in covers")

    down = [1 << v for v in range(n)]
    for v in order:
        for w in succ[v]:
            down[w] |= down[v]

    for i, j in edges:
        between = down[j] & ~down[i] & ~(1 << j)
        if any((down[k] >> i) & 1 and k != i for k in iter_bits(between)):
            raise MalformedInputError(
                f"edge {(i, j)} is implied by other covers; supply covers only, not the full relation"
            )
    return Poset(labels, down, _validated=True)


def _certify(p: Poset) -> LatticeCert:
    is_lattice = True
    for i in range(p.n):
        for j in range(i + 1, p.n):
            pair = (1 << i) | (1 << j)
            if p.infimum_mask(pair) is None or p.supremum_mask(pair) is None:
                is_lattice = False
                break
        if not is_lattice:
            break
    bottom, top = p.bottom, p.top
    # On a finite carrier a lattice with bottom and top has all infima and
    # suprema; the equivalence is separately checked against the literal
    # all-subsets definition in the test suite.
    is_complete = is_lattice and bottom is not None and top is not None
    is_distributive = False
    if is_lattice:
        meet, join = p.meet_table, p.join_table
        is_distributive = all(
            meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]]
            for x in range(p.n)
            for y in range(p.n)
            for z in range(p.n)
        )
    return LatticeCert(p, is_lattice, is_complete, is_distributive, bottom, top)


def certify_lattice(p: Poset) -> LatticeCert:
    """Exhaustively computed lattice certificate (cached per poset)."""
    return p.certificate


def is_complete_literal(p: Poset, limits: Limits | None = None) -> bool:
    """All-subsets completeness check: every subset (empty included) has
    an infimum and a supremum.  Exponential; oracle use only."""
    check_subset_elements(p.n, limits, "literal completeness check")
    for mask in range(1 << p.n):
        if p.infimum_mask(mask) is None or p.supremum_mask(mask) is None:
            return False
    return True


def variant_distributive_identity_holds(p: Poset) -> bool:
    """Exhaustively check x ∧ (y ∨ z) = (x ∨ y) ∧ (x ∨ z) on a lattice.

    This is not the standard distributive law (which uses x ∧ y and
    x ∧ z on the right); it is reported separately so callers can see
    whether a lattice happens to satisfy it.
    """
    cert = p.certificate
    if not cert.is_lattice:
        raise ValueError("variant identity is only defined on lattices")
    meet, join = p.meet_table, p.join_table
    return all(
        meet[x][join[y][z]] == meet[join[x][y]][join[x][z]]
        for x in range(p.n)
        for y in range(p.n)
        for z in range(p.n)
    )


def product(posets: Sequence[Poset], limits: Limits | None = None) -> Poset:
    """Direct product ordered pointwise.

    Element i of the product corresponds to the i-th tuple in
    ``itertools.product`` order over the factor carriers (last factor
    varies fastest); labels are tuple renderings of factor labels.
    """
    if not posets:
        raise ValueError("product needs at least one factor")
    size = 1
    for p in posets:
        size *= p.n
    check_elements(size, limits, "product")
    tuples = list(itertools.product(*(range(p.n) for p in posets)))
    labels = ["(" + ",".join(p.labels[t[k]] for k, p in enumerate(posets)) + ")" for t in tuples]
    down = []
    for j, tj in enumerate(tuples):
        row = 0
        for i, ti in enumerate(tuples):
            if all((posets[k].down[tj[k]] >> ti[k]) & 1 for k in range(len(posets))):
                row |= 1 << i
        down.append(row)
    return Poset(labels, down, _validated=True)


def boolean_power(n: int, limits: Limits | None = None) -> Poset:
    """The lattice of n-bit vectors ordered pointwise.

    Element i is the vector whose label is the width-n binary rendering
    of i, so coordinate m is character m of the label.
    """
    if n < 1:
        raise ValueError("boolean_power needs n >= 1")
    size = 1 << n
    check_elements(size, limits, "boolean power")
    labels = [format(i, f"0{n}b") for i in range(size)]
    down = []
    for j in range(size):
        row = 0
        for i in range(size):
            if i & j == i:
                row |= 1 << i
        down.append(row)
    return Poset(labels, down, _validated=True)


def are_order_isomorphic(a: Poset, b: Poset) -> bool:
    """Backtracking isomorphism test with local-invariant pruning."""
    if a.n != b.n:
        return False

    def profile(p: Poset, i: int) -> tuple[int, int]:
        return (p.down[i].bit_count(), p.up[i].bit_count())

    if sorted(profile(a, i) for i in range(a.n)) != sorted(profile(b, j) for j in range(b.n)):
        return False
    candidates = [
        [j for j in range(b.n) if profile(a, i) == profile(b, j)] for i in range(a.n)
    ]
    order = sorted(range(a.n), key=lambda i: len(candidates[i]))
    assign: dict[int, int] = {}
    used = [False] * b.n

    def extend(pos: int) -> bool:
        if pos == a.n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in assign.items():
                if a.leq(i, i2) != b.leq(j, j2) or a.leq(i2, i) != b.leq(j2, j):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                del assign[i]
                used[j] = False
        return False

    return extend(0)


def poset_to_dict(p: Poset) -> dict:
    """JSON-ready form: labels plus the sorted cover list."""
    return {"labels": list(p.labels), "covers": [list(c) for c in p.covers()]}


def poset_from_dict(doc: object) -> Poset:
    if not isinstance(doc, dict):
        raise MalformedInputError("poset document must be a JSON object")
    labels = doc.get("labels")
    covers = doc.get("covers")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise MalformedInputError('poset document needs "labels": [string, ...]')
    if not isinstance(covers, list):
        raise MalformedInputError('poset document needs "covers": [[i, j], ...]')
    pairs = []
    for item in covers:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise MalformedInputError(f"bad cover entry: {item!r}")
        pairs.append((item[0], item[1]))
    return build_poset(labels, pairs)

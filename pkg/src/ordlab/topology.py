"""Finite topologies generated from subbases.

A topology on a finite carrier is determined by the smallest open set
around each point: a set is open exactly when it contains the minimal
neighborhood of each of its points, and the whole open family is the set
of unions of minimal neighborhoods.  Storing the minimal-neighborhood
table (one bitmask per point) therefore represents the topology exactly
while staying linear in the carrier size; a discrete topology on 64
points has 2^64 open sets but a 64-entry table.  The full family can
still be materialized for small carriers, and the generation algorithm
is cross-checked against a brute-force oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .limits import Limits, check_elements, check_subset_elements
from .order_core import Poset, iter_bits


@dataclass(frozen=True)
class FiniteTopology:
    """A topology on ``{0..carrier_size-1}`` as minimal neighborhoods.

    ``min_nbhd[p]`` is the intersection of all open sets containing p.
    Two topologies on the same carrier are equal iff these tables are
    equal, so dataclass equality is genuine set-family equality.
    """

    carrier_size: int
    min_nbhd: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.carrier_size
        full = (1 << n) - 1
        if len(self.min_nbhd) != n:
            raise ValueError("neighborhood table size mismatch")
        for p, nb in enumerate(self.min_nbhd):
            if nb & ~full or not (nb >> p) & 1:
                raise ValueError("invalid minimal neighborhood")
            for q in iter_bits(nb):
                if self.min_nbhd[q] & ~nb:
                    raise ValueError("neighborhood table not closed under the topology")

    @property
    def full_mask(self) -> int:
        return (1 << self.carrier_size) - 1

    def is_open(self, mask: int) -> bool:
        return all(not self.min_nbhd[p] & ~mask for p in iter_bits(mask))

    def is_closed(self, mask: int) -> bool:
        return self.is_open(self.full_mask & ~mask)

    def opens(self, limits: Limits | None = None) -> tuple[int, ...]:
        """Materialize the whole open family (small carriers only)."""
        check_subset_elements(self.carrier_size, limits, "open-family materialization")
        return self._opens

    @cached_property
    def _opens(self) -> tuple[int, ...]:
        family = {0}
        for nb in set(self.min_nbhd):
            family |= {m | nb for m in family}
        return tuple(sorted(family))

    def closed_family(self, limits: Limits | None = None) -> tuple[int, ...]:
        full = self.full_mask
        return tuple(sorted(full & ~m for m in self.opens(limits)))


def from_closed_subbasis(carrier_size: int, closed_sets: Iterable[int]) -> FiniteTopology:
    """Coarsest topology in which every listed set is closed.

    The closed family it generates is all intersections of finite unions
    of the listed sets together with the empty set and the carrier; the
    minimal neighborhood of p is the complement of the union of the
    listed sets avoiding p.
    """
    full = (1 << carrier_size) - 1
    sets = list(closed_sets)
    for c in sets:
        if c < 0 or c & ~full:
            raise ValueError("closed set out of carrier range")
    table = []
    for p in range(carrier_size):
        nb = full
        for c in sets:
            if not (c >> p) & 1:
                nb &= ~c
        table.append(nb & full)
    return FiniteTopology(carrier_size, tuple(table))


def from_open_subbasis(carrier_size: int, open_sets: Iterable[int]) -> FiniteTopology:
    """Topology generated by the listed sets as an open subbasis."""
    full = (1 << carrier_size) - 1
    sets = list(open_sets)
    for u in sets:
        if u < 0 or u & ~full:
            raise ValueError("open set out of carrier range")
    table = []
    for p in range(carrier_size):
        nb = full
        for u in sets:
            if (u >> p) & 1:
                nb &= u
        table.append(nb)
    return FiniteTopology(carrier_size, tuple(table))


def interval_topology(p: Poset) -> FiniteTopology:
    """Closed subbasis: all principal down-sets and up-sets."""
    return from_closed_subbasis(p.n, list(p.down) + list(p.up))


def lower_topology(p: Poset) -> FiniteTopology:
    """Closed subbasis: the principal down-sets only."""
    return from_closed_subbasis(p.n, list(p.down))


def upper_topology(p: Poset) -> FiniteTopology:
    """Closed subbasis: the principal up-sets only."""
    return from_closed_subbasis(p.n, list(p.up))


def product_topology(factors: Sequence[FiniteTopology], limits: Limits | None = None) -> FiniteTopology:
    """Product topology on the tuple carrier.

    Tuple indexing matches :func:`ordlab.order_core.product`: element i of
    the product is the i-th tuple in itertools.product order (last factor
    fastest).  Open subbasis: preimages of factor opens under projections.
    """
    if not factors:
        raise ValueError("product needs at least one factor")
    sizes = [t.carrier_size for t in factors]
    total = 1
    for s in sizes:
        total *= s
    check_elements(total, limits, "product topology")

    strides = [1] * len(sizes)
    for k in range(len(sizes) - 2, -1, -1):
        strides[k] = strides[k + 1] * sizes[k + 1]

    # coordinate_mask[k][v]: product points whose k-th coordinate is v
    coordinate_mask = [[0] * s for s in sizes]
    for i in range(total):
        for k, s in enumerate(sizes):
            coordinate_mask[k][i // strides[k] % s] |= 1 << i

    table = []
    for i in range(total):
        nb = (1 << total) - 1
        for k, t in enumerate(factors):
            coord = i // strides[k] % sizes[k]
            allowed = 0
            for v in iter_bits(t.min_nbhd[coord]):
                allowed |= coordinate_mask[k][v]
            nb &= allowed
        table.append(nb)
    return FiniteTopology(total, tuple(table))


def topologies_equal(a: FiniteTopology, b: FiniteTopology) -> bool:
    """Exact set-family equality."""
    if a.carrier_size != b.carrier_size:
        raise ValueError("carrier size mismatch")
    return a.min_nbhd == b.min_nbhd


def is_hausdorff(t: FiniteTopology) -> bool:
    """Every two distinct points have disjoint open neighborhoods."""
    for p in range(t.carrier_size):
        for q in range(p + 1, t.carrier_size):
            if t.min_nbhd[p] & t.min_nbhd[q]:
                return False
    return True


def is_t1(t: FiniteTopology) -> bool:
    """Every singleton is closed."""
    for p in range(t.carrier_size):
        for q in range(t.carrier_size):
            if q != p and (t.min_nbhd[q] >> p) & 1:
                return False
    return True


def is_discrete(t: FiniteTopology) -> bool:
    """Every singleton is open."""
    return all(t.min_nbhd[p] == 1 << p for p in range(t.carrier_size))


def topology_to_dict(t: FiniteTopology, limits: Limits | None = None) -> dict:
    """JSON dump: each open as a sorted index list, opens sorted lexicographically."""
    opens = [sorted(iter_bits(m)) for m in t.opens(limits)]
    opens.sort()
    return {"carrier": t.carrier_size, "opens": opens}

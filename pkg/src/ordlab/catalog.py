"""Instance families: named posets, exhaustive enumeration, random generators.

The named library covers the structures every campaign iterates over:
chains, bounded antichains (M_k diamonds), the n-bit vector lattices,
M3, N5, and a few products.  ``all_posets`` enumerates every labeled
poset on a small carrier; ``random_poset``/``random_lattice`` produce
seeded deterministic samples.
"""

from __future__ import annotations

from functools import lru_cache
from random import Random
from typing import Iterable, Optional

from .errors import OrdlabError
from .order_core import (
    Poset,
    are_order_isomorphic,
    boolean_power,
    build_poset,
    iter_bits,
    product,
)


def chain(k: int) -> Poset:
    """Total order 0 < 1 < ... < k-1."""
    if k < 1:
        raise ValueError("chain needs at least one element")
    return build_poset([str(i) for i in range(k)], [(i, i + 1) for i in range(k - 1)])


def two() -> Poset:
    """The two-element lattice {0, 1} with 0 < 1."""
    return chain(2)


def antichain_bounded(k: int) -> Poset:
    """k pairwise-incomparable atoms between a bottom and a top (M_k)."""
    if k < 1:
        raise ValueError("need at least one atom")
    labels = ["0"] + [f"a{i + 1}" for i in range(k)] + ["1"]
    covers = [(0, i + 1) for i in range(k)] + [(i + 1, k + 1) for i in range(k)]
    return build_poset(labels, covers)


def m3() -> Poset:
    """The diamond: bottom, three incomparable atoms, top."""
    return build_poset(
        ["0", "a", "b", "c", "1"],
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )


def n5() -> Poset:
    """The pentagon: 0 < a < c < 1 with b incomparable to a and c."""
    return build_poset(
        ["0", "a", "b", "c", "1"],
        [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
    )


_NAMED = {
    "1": lambda: chain(1),
    "2": two,
    "chain2": two,
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "chain5": lambda: chain(5),
    "chain6": lambda: chain(6),
    "chain7": lambda: chain(7),
    "chain8": lambda: chain(8),
    "2^1": lambda: boolean_power(1),
    "2^2": lambda: boolean_power(2),
    "2^3": lambda: boolean_power(3),
    "2^4": lambda: boolean_power(4),
    "M2": lambda: antichain_bounded(2),
    "M3": m3,
    "M4": lambda: antichain_bounded(4),
    "M5": lambda: antichain_bounded(5),
    "N5": n5,
    "2xchain3": lambda: product([two(), chain(3)]),
    "2xchain4": lambda: product([two(), chain(4)]),
    "chain3xchain3": lambda: product([chain(3), chain(3)]),
    "2xM3": lambda: product([two(), m3()]),
}


def collapse_to_two():
    """Stored order-preserving non-homomorphism: the 2-bit vector lattice
    onto the chain 2, bottom to 0 and the other three elements to 1.  Its
    preimage of [1, 1] is not an interval."""
    from .morphisms import classify

    return classify([0, 1, 1, 1], boolean_power(2), two())


def named_poset(name: str) -> Poset:
    try:
        factory = _NAMED[name]
    except KeyError:
        raise KeyError(f"unknown poset name {name!r}") from None
    return factory()


def poset_names() -> list[str]:
    return sorted(_NAMED)


def library_posets(max_size: int) -> list[tuple[str, Poset]]:
    """The deterministic instance family, sorted by size then name.

    Always contains the chain 2, the n-bit vector lattices with n <= 4,
    and products of chains, subject to the size cap.
    """
    seen: dict[str, Poset] = {}
    for name in sorted(_NAMED):
        p = named_poset(name)
        if p.n <= max_size:
            seen[name] = p
    items = sorted(seen.items(), key=lambda kv: (kv[1].n, kv[0]))
    # Drop alias entries that duplicate an identical poset already kept.
    out: list[tuple[str, Poset]] = []
    for name, p in items:
        if any(p == q for _, q in out):
            continue
        out.append((name, p))
    return out


def library_lattices(max_size: int) -> list[tuple[str, Poset]]:
    return [(name, p) for name, p in library_posets(max_size) if p.certificate.is_lattice]


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[Poset, ...]:
    """Every labeled poset on carrier {0..n-1}.

    Each poset on n elements restricts to exactly one poset on the first
    n-1 elements, so extending every smaller poset by a fresh element z
    (choosing the down-set below z and an up-set above it, compatible
    with transitivity) enumerates each labeled poset exactly once.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    labels = tuple(str(i) for i in range(n))
    if n == 1:
        return (Poset(labels, (1,), _validated=True),)
    out = []
    z_bit = 1 << (n - 1)
    for base in all_posets(n - 1):
        full = base.full_mask
        down_sets = [m for m in range(full + 1) if base.is_down_set(m)]
        up_sets = [m for m in range(full + 1) if base.is_up_set(m)]
        for d in down_sets:
            # everything above the new element must be above all of d
            allowed = full
            for i in iter_bits(d):
                allowed &= base.up[i]
            allowed &= ~d
            for u in up_sets:
                if u & ~allowed:
                    continue
                rows = [base.down[i] | (z_bit if (u >> i) & 1 else 0) for i in range(base.n)]
                rows.append(d | z_bit)
                out.append(Poset(labels, rows, _validated=True))
    return tuple(out)


def all_posets_up_to(n: int) -> list[Poset]:
    out: list[Poset] = []
    for k in range(1, n + 1):
        out.extend(all_posets(k))
    return out


@lru_cache(maxsize=None)
def all_lattices(n: int) -> tuple[Poset, ...]:
    """Every labeled lattice on carrier {0..n-1}."""
    out = []
    for p in all_posets(n):
        if p.bottom is None or p.top is None:
            continue
        if p.certificate.is_lattice:
            out.append(p)
    return tuple(out)


def iso_representatives(posets: Iterable[Poset]) -> list[Poset]:
    """One representative per order-isomorphism class."""

    def key(p: Poset) -> tuple:
        return (
            p.n,
            tuple(sorted((p.down[i].bit_count(), p.up[i].bit_count()) for i in range(p.n))),
            len(p.covers()),
        )

    buckets: dict[tuple, list[Poset]] = {}
    for p in posets:
        buckets.setdefault(key(p), []).append(p)
    reps: list[Poset] = []
    for bucket in buckets.values():
        kept: list[Poset] = []
        for p in bucket:
            if not any(are_order_isomorphic(p, q) for q in kept):
                kept.append(p)
        reps.extend(kept)
    return reps


def random_poset(size: int, rng: Random, edge_prob: float = 0.35) -> Poset:
    """Random labeled poset: the transitive closure of a random DAG on
    the naturally ordered carrier."""
    if size < 1:
        raise ValueError("need size >= 1")
    down = [1 << i for i in range(size)]
    for j in range(size):
        for i in range(j):
            if rng.random() < edge_prob:
                down[j] |= down[i]
    return Poset([str(i) for i in range(size)], down, _validated=True)


def _random_distributive_lattice(size: int, rng: Random) -> Optional[Poset]:
    """Close a random family of down-sets of a random poset under union
    and intersection; the result ordered by inclusion is a distributive
    lattice, kept when it has the requested number of elements."""
    base_size = rng.randint(2, 6)
    base = random_poset(base_size, rng)
    down_sets = [m for m in range(base.full_mask + 1) if base.is_down_set(m)]
    count = rng.randint(1, len(down_sets))
    family = set(rng.sample(down_sets, count))
    while True:
        extra = {
            op(a, b)
            for a in family
            for b in family
            for op in (int.__and__, int.__or__)
        }
        if extra <= family:
            break
        family |= extra
    if len(family) != size:
        return None
    masks = sorted(family)
    down_rows = []
    for j, mj in enumerate(masks):
        row = 0
        for i, mi in enumerate(masks):
            if mi & ~mj == 0:
                row |= 1 << i
        down_rows.append(row)
    return Poset([f"v{i}" for i in range(size)], down_rows, _validated=True)


def _stack(blocks: list[Poset]) -> Poset:
    """Vertical sum identifying each block's top with the next bottom."""
    covers: list[tuple[int, int]] = []
    labels: list[str] = []
    prev_top = None
    for b, block in enumerate(blocks):
        local: dict[int, int] = {}
        for i in range(block.n):
            if b > 0 and i == block.bottom:
                local[i] = prev_top
                continue
            local[i] = len(labels)
            labels.append(f"v{len(labels)}")
        for i, j in block.covers():
            covers.append((local[i], local[j]))
        prev_top = local[block.top]
    return build_poset(labels, covers)


_BLOCKS_BY_GAIN = {
    1: [lambda: chain(2)],
    2: [lambda: chain(3)],
    3: [lambda: chain(4), lambda: boolean_power(2)],
    4: [lambda: chain(5), m3, n5],
}


def _random_block_lattice(size: int, rng: Random) -> Poset:
    """Vertical composition of small bounded lattices (possibly M3/N5),
    giving non-distributive samples of exact size."""
    remaining = size - 1
    blocks: list[Poset] = []
    while remaining > 0:
        gain = rng.randint(1, min(4, remaining))
        blocks.append(rng.choice(_BLOCKS_BY_GAIN[gain])())
        remaining -= gain
    return _stack(blocks)


def random_lattice(size: int, seed: int, *, mode: str = "mixed", max_tries: int = 500) -> Poset:
    """Seeded random lattice with exactly ``size`` elements.

    ``mode="distributive"`` uses only the down-set-family construction;
    ``"mixed"`` interleaves it with vertical compositions that insert M3
    and N5 fragments.  Deterministic in the seed.
    """
    if size < 2:
        raise ValueError("need size >= 2")
    if mode not in ("mixed", "distributive"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = Random(seed)
    for attempt in range(max_tries):
        if mode == "mixed" and rng.random() < 0.5:
            result = _random_block_lattice(size, rng)
        else:
            result = _random_distributive_lattice(size, rng)
        if result is None:
            continue
        if result.certificate.is_lattice:
            return result
    raise OrdlabError(f"could not generate a {size}-element lattice in {max_tries} tries")

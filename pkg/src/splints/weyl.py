"""Weyl group action on signed roots and splint equivalence classes.

Elements are stored as permutations of the signed root list (index i is the
i-th positive root, index n+i its negative) rather than matrices: reflection
matrices for the 3-coordinate rank-2 hexagonal system have non-integer
entries, while the permutation action stays exact.  Two splints are equivalent
when some group element carries one unordered pair of symmetrized parts onto
the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import TYPE_CHECKING, Iterable

from .errors import CapacityError, DomainError
from .rootsys import PositiveRootSet, dot

if TYPE_CHECKING:
    from .splint import SplintRecord

#: Largest group order generated in full; E_6 (51840) fits, E_7 does not.
CAPACITY_ORDER = 100_000


def expected_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return (1 << rank) * factorial(rank)
    if family == "D":
        return (1 << (rank - 1)) * factorial(rank)
    if family == "G":
        return 12
    if family == "F":
        return 1152
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    raise DomainError(f"unknown family {family!r}")


@dataclass(frozen=True, eq=False)
class WeylGroup:
    target: PositiveRootSet
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _signed_index(target: PositiveRootSet, v: tuple[int, ...]) -> int:
    idx = target.vector_index.get(v)
    if idx is not None:
        return idx
    neg = tuple(-x for x in v)
    idx = target.vector_index.get(neg)
    if idx is None:
        raise DomainError(f"reflection image {v} is not a signed root; system is not reflection-closed")
    return target.size + idx


def reflection(target: PositiveRootSet, root_index: int) -> tuple[int, ...]:
    """Reflection in the given positive root, as a signed-root permutation."""
    n = target.size
    a = target.roots[root_index]
    na = dot(a, a)
    perm = []
    for t in range(2 * n):
        v = target.roots[t] if t < n else tuple(-x for x in target.roots[t - n])
        num = 2 * dot(v, a)
        if num % na != 0:
            raise DomainError("reflection coefficient is not integral; system is not crystallographic")
        c = num // na
        w = tuple(x - c * y for x, y in zip(v, a))
        perm.append(_signed_index(target, w))
    return tuple(perm)


def weyl_group(target: PositiveRootSet) -> WeylGroup:
    """Closure of the simple reflections; elements sorted for determinism."""
    order = expected_order(target.family, target.rank)
    if order > CAPACITY_ORDER:
        raise CapacityError(
            f"Weyl group of {target.family}{target.rank} has order {order}, over the supported bound of {CAPACITY_ORDER}"
        )
    n = target.size
    gens = [reflection(target, s) for s in target.non_sums()]
    identity = tuple(range(2 * n))
    elements = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(2 * n))
                if q not in elements:
                    elements.add(q)
                    fresh.append(q)
        frontier = fresh
    if len(elements) != order:
        raise DomainError(
            f"generated {len(elements)} elements for {target.family}{target.rank}, expected {order}"
        )
    return WeylGroup(target, tuple(sorted(elements)))


@dataclass(frozen=True)
class SplintClass:
    class_id: int
    representative: tuple[tuple[int, ...], tuple[int, ...]]  # least symmetrized pair in the orbit
    record_ids: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.record_ids)


def _symmetrize(part: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(set(part) | {i + n for i in part}))


def _pair(s1: tuple[int, ...], s2: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (s1, s2) if s1 <= s2 else (s2, s1)


def orbit_of_pair(
    pair: tuple[tuple[int, ...], tuple[int, ...]], group: WeylGroup
) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = set()
    s1, s2 = pair
    for g in group.elements:
        out.add(_pair(tuple(sorted(g[i] for i in s1)), tuple(sorted(g[i] for i in s2))))
    return out


def splint_classes(records: list["SplintRecord"], group: WeylGroup) -> list[SplintClass]:
    """Partition records into group orbits; also stamps each record's weyl_class."""
    n = group.target.size
    canon_of: dict = {}
    keys = []
    for rec in records:
        pair = _pair(
            _symmetrize(rec.partition.part1, n), _symmetrize(rec.partition.part2, n)
        )
        if pair not in canon_of:
            orbit = orbit_of_pair(pair, group)
            canon = min(orbit)
            for q in orbit:
                canon_of[q] = canon
        keys.append(canon_of[pair])
    classes = []
    for cid, canon in enumerate(sorted(set(keys))):
        ids = tuple(i for i, k in enumerate(keys) if k == canon)
        for i in ids:
            records[i].weyl_class = cid
        classes.append(SplintClass(cid, canon, ids))
    return classes

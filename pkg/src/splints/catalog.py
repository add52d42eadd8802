"""Catalog of simple types and stems (multisets of simple types).

Canonical names collapse the low-rank coincidences: B1/C1/D1 -> A1, C2 -> B2,
D3 -> A3, and D2 -> the two-component stem 2A1.  Stem strings follow the
grammar  term ("+" term)*  with  term = [count] family rank,  components
ordered by (size, family, rank).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable

from .errors import DomainError
from .rootsys import CARTAN_BOUNDS, E_RANKS


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:  # pragma: no cover
        return self.name


def simple_size(t: SimpleType) -> int:
    """Number of positive roots of a canonical simple type."""
    f, r = t.family, t.rank
    if f == "A":
        return r * (r + 1) // 2
    if f in ("B", "C"):
        return r * r
    if f == "D":
        return r * (r - 1)
    if f == "G":
        return 6
    if f == "F":
        return 24
    return {6: 36, 7: 63, 8: 120}[r]


def _component_key(t: SimpleType) -> tuple[int, str, int]:
    return (simple_size(t), t.family, t.rank)


def _make_simple(family: str, rank: int) -> SimpleType:
    if family in CARTAN_BOUNDS:
        if rank < CARTAN_BOUNDS[family]:
            raise DomainError(f"{family}{rank} is not canonical (bound {family} >= {CARTAN_BOUNDS[family]})")
    elif family == "E":
        if rank not in E_RANKS:
            raise DomainError(f"E rank must be one of {E_RANKS}, got {rank}")
    elif family == "F":
        if rank != 4:
            raise DomainError("F rank must be 4")
    elif family == "G":
        if rank != 2:
            raise DomainError("G rank must be 2")
    else:
        raise DomainError(f"unknown family {family!r}")
    return SimpleType(family, rank)


@dataclass(frozen=True)
class StemType:
    """A multiset of canonical simple types, stored sorted by (size, family, rank)."""

    components: tuple[SimpleType, ...]

    @property
    def size(self) -> int:
        return sum(simple_size(c) for c in self.components)

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def name(self) -> str:
        out = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            count = j - i
            out.append((str(count) if count > 1 else "") + comps[i].name)
            i = j
        return "+".join(out)

    def __repr__(self) -> str:  # pragma: no cover
        return self.name


def stem(components: Iterable[SimpleType]) -> StemType:
    comps = tuple(sorted(components, key=_component_key))
    if not comps:
        raise DomainError("a stem needs at least one component")
    return StemType(comps)


def canonical_name(family: str, rank: int) -> StemType:
    """Resolve a possibly non-canonical family/rank label to its canonical stem."""
    if rank < 1:
        raise DomainError(f"rank must be positive, got {rank}")
    if family in ("B", "C", "D") and rank == 1:
        return stem([SimpleType("A", 1)])
    if family == "C" and rank == 2:
        return stem([SimpleType("B", 2)])
    if family == "D" and rank == 2:
        return stem([SimpleType("A", 1), SimpleType("A", 1)])
    if family == "D" and rank == 3:
        return stem([SimpleType("A", 3)])
    return stem([_make_simple(family, rank)])


_TERM_RE = re.compile(r"^(\d*)([A-G])(\d+)$")


def parse_stem(text: str) -> StemType:
    """Parse a stem string; inverse of StemType.name on canonical forms."""
    comps: list[SimpleType] = []
    for term in text.replace(" ", "").split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise DomainError(f"cannot parse stem term {term!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise DomainError(f"component count must be positive in {term!r}")
        comps.extend(canonical_name(m.group(2), int(m.group(3))).components * count)
    return stem(comps)


def _simple_types_of_size(s: int) -> list[SimpleType]:
    out = []
    r = (isqrt(1 + 8 * s) - 1) // 2
    if r * (r + 1) // 2 == s and r >= 1:
        out.append(SimpleType("A", r))
    r = isqrt(s)
    if r * r == s:
        if r >= 2:
            out.append(SimpleType("B", r))
        if r >= 3:
            out.append(SimpleType("C", r))
    r = (1 + isqrt(1 + 4 * s)) // 2
    if r * (r - 1) == s and r >= 4:
        out.append(SimpleType("D", r))
    if s == 36:
        out.append(SimpleType("E", 6))
    if s == 63:
        out.append(SimpleType("E", 7))
    if s == 120:
        out.append(SimpleType("E", 8))
    if s == 24:
        out.append(SimpleType("F", 4))
    if s == 6:
        out.append(SimpleType("G", 2))
    return sorted(out, key=_component_key)


@lru_cache(maxsize=None)
def stem_candidates(size: int, max_rank: int) -> tuple[StemType, ...]:
    """Every stem with the given root count and total rank <= max_rank.

    Recursive descent over component sizes in decreasing order keeps the
    enumeration duplicate-free.
    """
    if size < 1:
        raise DomainError(f"stem size must be positive, got {size}")
    pool = [t for s in range(size, 0, -1) for t in _simple_types_of_size(s)]

    results: list[StemType] = []

    def descend(start: int, remaining: int, rank_left: int, chosen: list[SimpleType]) -> None:
        if remaining == 0:
            results.append(stem(chosen))
            return
        for k in range(start, len(pool)):
            t = pool[k]
            sz = simple_size(t)
            if sz > remaining or t.rank > rank_left:
                continue
            chosen.append(t)
            descend(k, remaining - sz, rank_left - t.rank, chosen)
            chosen.pop()

    descend(0, size, max_rank, [])
    return tuple(sorted(set(results), key=lambda st: st.name))

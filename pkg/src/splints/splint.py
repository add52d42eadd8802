"""Splint enumeration, witness validation, descriptors, and table verification.

A splint is an unordered bipartition of a positive system into two onto stem
images, each stem's rank within the ambient rank.  Enumeration walks the
candidate bipartitions surviving the scan module's rank bound (side containing
root index 0 first, ascending mask order) and keeps those where both sides
admit a full realization, so the output order is canonical and independent of
worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import scan, weyl
from .catalog import StemType
from .embed import _CLASS_RANK, Realization, realizations
from .errors import CapacityError, DomainError
from .rootsys import PositiveRootSet, Vector, build_positive_roots
from .table import ExpectedRow, rows_for

#: Largest positive system the enumerator accepts (covers rank 5 classical
#: systems; 2^25 bipartition sides is the practical desk limit).
CAPACITY_ROOTS = 26


@dataclass(frozen=True, eq=False)
class SplintPartition:
    target: PositiveRootSet
    part1: tuple[int, ...]
    part2: tuple[int, ...]


def partition(target: PositiveRootSet, side: tuple[int, ...] | frozenset[int]) -> SplintPartition:
    """Canonical partition from one side's index set (part1 holds index 0)."""
    chosen = frozenset(side)
    if not chosen or len(chosen) != len(tuple(side)):
        raise DomainError("partition side must be a nonempty set of distinct indices")
    if not all(0 <= i < target.size for i in chosen):
        raise DomainError("partition side contains out-of-range root indices")
    rest = frozenset(range(target.size)) - chosen
    if not rest:
        raise DomainError("partition side must be a proper subset of the roots")
    if 0 in chosen:
        return SplintPartition(target, tuple(sorted(chosen)), tuple(sorted(rest)))
    return SplintPartition(target, tuple(sorted(rest)), tuple(sorted(chosen)))


def partition_from_vectors(target: PositiveRootSet, side: tuple[Vector, ...]) -> SplintPartition:
    return partition(target, tuple(target.index_of(v) for v in side))


def is_splint(
    p: SplintPartition, max_rank: int | None = None
) -> tuple[tuple[Realization, ...], tuple[Realization, ...]] | None:
    """All stem realizations of both parts, or None when either part has none."""
    bound = p.target.rank if max_rank is None else max_rank
    r1 = realizations(p.part1, p.target, bound)
    if not r1:
        return None
    r2 = realizations(p.part2, p.target, bound)
    if not r2:
        return None
    return r1, r2


@dataclass(eq=False)
class SplintRecord:
    partition: SplintPartition
    realizations1: tuple[Realization, ...]
    realizations2: tuple[Realization, ...]
    weyl_class: int | None = None


@dataclass(frozen=True, order=True)
class PartSummary:
    stem_name: str
    metric_class: str


@dataclass(frozen=True)
class Descriptor:
    parts: tuple[PartSummary, PartSummary]  # sorted, the pair is unordered

    def render(self) -> str:
        return " | ".join(f"{p.stem_name} {p.metric_class}" for p in self.parts)


def _best(reals: tuple[Realization, ...]) -> PartSummary:
    def key(r: Realization) -> tuple[int, int, str]:
        return (len(r.stem.components), _CLASS_RANK[r.best_class], r.stem.name)

    chosen = min(reals, key=key)
    return PartSummary(chosen.stem.name, chosen.best_class)


def descriptor(r: SplintRecord) -> Descriptor:
    a, b = _best(r.realizations1), _best(r.realizations2)
    return Descriptor((a, b) if a <= b else (b, a))


def enumerate_splints(target: PositiveRootSet, jobs: int = 1) -> list[SplintRecord]:
    """All splints of the target, canonical ascending order of part1 index sets."""
    if target.size > CAPACITY_ROOTS:
        raise CapacityError(
            f"{target.family}{target.rank} has {target.size} positive roots, over the supported bound of {CAPACITY_ROOTS}"
        )
    tables = scan.build_tables(target)
    records = []
    for mask in scan.candidate_masks(target, tables, jobs=jobs):
        part1 = tuple(i for i in range(target.size) if (mask >> i) & 1)
        part2 = tuple(i for i in range(target.size) if not (mask >> i) & 1)
        r1 = realizations(part1, target, target.rank)
        if not r1:
            continue
        r2 = realizations(part2, target, target.rank)
        if not r2:
            continue
        records.append(SplintRecord(SplintPartition(target, part1, part2), r1, r2))
    return records


@dataclass
class RowCheck:
    row: ExpectedRow
    found: bool
    weyl_class: int | None


@dataclass
class ClassSummary:
    class_id: int
    size: int
    representative: str  # rendered descriptor of the class's first record
    witness_rows: tuple[int, ...]


@dataclass
class TargetReport:
    family: str
    rank: int
    expected_classes: int
    found_classes: int
    splint_count: int
    rows: list[RowCheck]
    classes: list[ClassSummary]
    witnesses_ok: bool
    counts_ok: bool
    bijection_ok: bool
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.witnesses_ok and self.counts_ok and self.bijection_ok


@dataclass
class Report:
    targets: list[TargetReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.targets)


def verify_target(family: str, rank: int, jobs: int = 1) -> TargetReport:
    start = time.perf_counter()
    target = build_positive_roots(family, rank)
    records = enumerate_splints(target, jobs=jobs)
    group = weyl.weyl_group(target)
    classes = weyl.splint_classes(records, group)
    rows = rows_for(family, rank)

    by_partition = {
        (frozenset(r.partition.part1), frozenset(r.partition.part2)): r for r in records
    }
    checks: list[RowCheck] = []
    for row in rows:
        try:
            s1 = frozenset(target.index_of(v) for v in row.part1)
            s2 = frozenset(target.index_of(v) for v in row.part2)
        except DomainError:
            checks.append(RowCheck(row, False, None))
            continue
        rec = by_partition.get((s1, s2)) or by_partition.get((s2, s1))
        if rec is None:
            checks.append(RowCheck(row, False, None))
        else:
            checks.append(RowCheck(row, True, rec.weyl_class))

    summaries = []
    for cls in classes:
        rep = records[cls.record_ids[0]]
        wrows = tuple(i for i, c in enumerate(checks) if c.weyl_class == cls.class_id)
        summaries.append(ClassSummary(cls.class_id, len(cls.record_ids), descriptor(rep).render(), wrows))

    witnesses_ok = all(c.found for c in checks)
    counts_ok = len(classes) == len(rows)
    matched = [c.weyl_class for c in checks if c.weyl_class is not None]
    bijection_ok = len(set(matched)) == len(matched) == len(classes)
    return TargetReport(
        family,
        rank,
        len(rows),
        len(classes),
        len(records),
        checks,
        summaries,
        witnesses_ok,
        counts_ok,
        bijection_ok,
        time.perf_counter() - start,
    )


def verify_table(targets: list[tuple[str, int]], jobs: int = 1) -> Report:
    return Report([verify_target(f, r, jobs=jobs) for f, r in targets])

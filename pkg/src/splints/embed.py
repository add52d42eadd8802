"""Sum-preserving embeddings of stems into positive systems.

An embedding maps the abstract positive system of a stem injectively into a
target positive system so that every abstract sum relation is preserved.  The
condition is one-directional: the image may satisfy extra additive relations,
so any k-element subset of a target is an onto image of the stem kA1.

The search places abstract roots in an order where a root whose decomposition
partners are already placed has a forced image; only the stem's simple roots
branch.  Metric classification compares the abstract and image Gram matrices
up to a single positive rational factor, globally or per simple component.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .catalog import StemType, stem_candidates
from .errors import DomainError
from .rootsys import PositiveRootSet, Vector, build_positive_roots, components, direct_sum

METRIC = "metric"
SEMIMETRIC = "semimetric"
NONMETRIC = "nonmetric"
_CLASS_RANK = {METRIC: 0, SEMIMETRIC: 1, NONMETRIC: 2}


@lru_cache(maxsize=None)
def stem_system(stem: StemType) -> PositiveRootSet:
    """Canonical positive system of a stem: orthogonal direct sum of its components."""
    parts = [build_positive_roots(c.family, c.rank) for c in stem.components]
    if len(parts) == 1:
        return parts[0]
    return direct_sum(stem.name, parts)


@lru_cache(maxsize=None)
def _component_ids(stem: StemType) -> tuple[tuple[int, ...], ...]:
    sys = stem_system(stem)
    return components(range(sys.size), sys)


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]
    # ("free",) places a simple root; ("sum", a, b) forces image(a)+image(b);
    # ("diff", c, b) forces image(c)-image(b)
    kinds: tuple[tuple, ...]
    checks: tuple[tuple[tuple[int, int, int], ...], ...]


@lru_cache(maxsize=None)
def _plan(stem: StemType) -> _Plan:
    sys = stem_system(stem)
    comps = sorted(_component_ids(stem), key=lambda b: (-len(b), b[0]))
    nonsums = set(sys.non_sums())
    placed: set[int] = set()
    order: list[int] = []
    kinds: list[tuple] = []

    def forced() -> tuple[int, tuple] | None:
        for a, b, c in sys.triples:
            known = (a in placed) + (b in placed) + (c in placed)
            if known == 2:
                if c not in placed:
                    return c, ("sum", a, b)
                if a not in placed:
                    return a, ("diff", c, b)
                return b, ("diff", c, a)
        return None

    for comp in comps:
        todo = set(comp)
        while todo:
            nxt = forced()
            if nxt is None:
                cand = [i for i in todo if i in nonsums]
                nxt = min(cand) if cand else min(todo), ("free",)
            root, kind = nxt
            order.append(root)
            kinds.append(kind)
            placed.add(root)
            todo.discard(root)

    position = {root: p for p, root in enumerate(order)}
    checks: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for t in sys.triples:
        checks[max(position[x] for x in t)].append(t)
    return _Plan(tuple(order), tuple(kinds), tuple(tuple(c) for c in checks))


@dataclass(frozen=True, eq=False)
class EmbeddingAssignment:
    stem: StemType
    target: PositiveRootSet
    assignment: tuple[int, ...]  # target root index per abstract root, in stem-system order
    image: frozenset[int]
    metric_class: str


def _classify(stem: StemType, target: PositiveRootSet, assignment: Sequence[int]) -> str:
    sys = stem_system(stem)
    g0 = sys.dots
    td = target.dots
    idx = list(assignment)

    def scaled_match(rows: Sequence[int]) -> bool:
        i0 = rows[0]
        num, den = g0[i0][i0], td[idx[i0]][idx[i0]]
        for a in rows:
            for b in rows:
                if g0[a][b] * den != num * td[idx[a]][idx[b]]:
                    return False
        return True

    if scaled_match(range(sys.size)):
        return METRIC
    if all(scaled_match(comp) for comp in _component_ids(stem)):
        return SEMIMETRIC
    return NONMETRIC


def classify_metric(a: EmbeddingAssignment) -> str:
    """Recompute the metric class of an assignment from its Gram matrices."""
    return _classify(a.stem, a.target, a.assignment)


def _iter_assignments(
    stem: StemType,
    target: PositiveRootSet,
    allowed: Sequence[int],
) -> Iterator[tuple[int, ...]]:
    sys = stem_system(stem)
    plan = _plan(stem)
    n = sys.size
    troots = target.roots
    lookup = {troots[t]: t for t in allowed}
    allowed_sorted = sorted(allowed)
    img: list[Vector | None] = [None] * n
    out: list[int] = [0] * n
    used = [False] * target.size

    def place(p: int) -> Iterator[tuple[int, ...]]:
        if p == n:
            yield tuple(out)
            return
        root = plan.order[p]
        kind = plan.kinds[p]

        def attempt(t: int) -> Iterator[tuple[int, ...]]:
            v = troots[t]
            img[root] = v
            out[root] = t
            used[t] = True
            ok = True
            for a, b, c in plan.checks[p]:
                va, vb, vc = img[a], img[b], img[c]
                if tuple(x + y for x, y in zip(va, vb)) != vc:
                    ok = False
                    break
            if ok:
                yield from place(p + 1)
            img[root] = None
            used[t] = False

        if kind[0] == "free":
            for t in allowed_sorted:
                if not used[t]:
                    yield from attempt(t)
        else:
            if kind[0] == "sum":
                _, a, b = kind
                v = tuple(x + y for x, y in zip(img[a], img[b]))
            else:
                _, c, b = kind
                v = tuple(x - y for x, y in zip(img[c], img[b]))
            t = lookup.get(v)
            if t is not None and not used[t]:
                yield from attempt(t)

    yield from place(0)


def iter_embeddings(
    stem: StemType,
    target: PositiveRootSet,
    restrict_to: Sequence[int] | None = None,
    onto: bool = False,
) -> Iterator[EmbeddingAssignment]:
    """Stream assignments in deterministic backtracking order."""
    sys = stem_system(stem)
    if restrict_to is None:
        allowed: tuple[int, ...] = tuple(range(target.size))
    else:
        allowed = tuple(sorted(set(restrict_to)))
    if onto:
        if restrict_to is None or len(allowed) != sys.size:
            raise DomainError("onto search needs restrict_to with exactly the stem's size")
    if len(allowed) < sys.size:
        return
    for assignment in _iter_assignments(stem, target, allowed):
        yield EmbeddingAssignment(
            stem=stem,
            target=target,
            assignment=assignment,
            image=frozenset(assignment),
            metric_class=_classify(stem, target, assignment),
        )


def find_embeddings(
    stem: StemType,
    target: PositiveRootSet,
    restrict_to: Sequence[int] | None = None,
    onto: bool = False,
    limit: int | None = None,
) -> tuple[EmbeddingAssignment, ...]:
    """Embeddings of the stem into the target, optionally inside/onto a subset."""
    if limit is not None and limit < 1:
        raise DomainError(f"limit must be positive, got {limit}")
    out = []
    for a in iter_embeddings(stem, target, restrict_to, onto):
        out.append(a)
        if limit is not None and len(out) == limit:
            break
    return tuple(out)


def embeds(stem: StemType, target: PositiveRootSet) -> bool:
    return bool(find_embeddings(stem, target, limit=1))


@dataclass(frozen=True, eq=False)
class Realization:
    """One stem admitting an onto embedding of a subset, with its best metric class."""

    stem: StemType
    metric: bool
    componentwise: bool
    witness: EmbeddingAssignment

    @property
    def best_class(self) -> str:
        if self.metric:
            return METRIC
        if self.componentwise:
            return SEMIMETRIC
        return NONMETRIC


def subset_non_sums(subset: Sequence[int], target: PositiveRootSet) -> tuple[int, ...]:
    """Elements of the subset that are not a sum of two subset elements."""
    idx = sorted(set(subset))
    vecs = {target.roots[i]: i for i in idx}
    sums = set()
    for n, i in enumerate(idx):
        for j in idx[n:]:
            if i == j:
                continue
            s = tuple(x + y for x, y in zip(target.roots[i], target.roots[j]))
            k = vecs.get(s)
            if k is not None:
                sums.add(k)
    return tuple(i for i in idx if i not in sums)


def subset_triples(subset: Sequence[int], target: PositiveRootSet) -> tuple[tuple[int, int, int], ...]:
    idx = sorted(set(subset))
    vecs = {target.roots[i]: i for i in idx}
    out = []
    for n, i in enumerate(idx):
        for j in idx[n + 1 :]:
            s = tuple(x + y for x, y in zip(target.roots[i], target.roots[j]))
            k = vecs.get(s)
            if k is not None:
                out.append((i, j, k))
    return tuple(out)


def _all_a1(stem: StemType) -> bool:
    return all(c.family == "A" and c.rank == 1 for c in stem.components)


def realizations(
    subset: Sequence[int],
    target: PositiveRootSet,
    max_rank: int,
) -> tuple[Realization, ...]:
    """Every stem of rank <= max_rank admitting an onto embedding of the subset.

    Flags are quantified over all onto embeddings: metric if some embedding is
    metric, componentwise if some embedding restricts metrically to every
    simple component.  The witness carries the best class found.
    """
    idx = tuple(sorted(set(subset)))
    if not idx:
        raise DomainError("realizations of the empty subset")
    nonsum_count = len(subset_non_sums(idx, target))
    if nonsum_count > max_rank:
        return ()
    tri_count = len(subset_triples(idx, target))

    out = []
    for cand in stem_candidates(len(idx), max_rank):
        if cand.rank < nonsum_count:
            continue
        if _all_a1(cand):
            # no abstract relations: identity witness, metric iff the image is
            # pairwise orthogonal with one common norm
            td = target.dots
            base = td[idx[0]][idx[0]]
            metric = all(td[a][a] == base for a in idx) and all(
                td[a][b] == 0 for n, a in enumerate(idx) for b in idx[n + 1 :]
            )
            witness = EmbeddingAssignment(
                stem=cand,
                target=target,
                assignment=idx,
                image=frozenset(idx),
                metric_class=METRIC if metric else SEMIMETRIC,
            )
            out.append(Realization(cand, metric, True, witness))
            continue
        if len(stem_system(cand).triples) > tri_count:
            continue
        best: EmbeddingAssignment | None = None
        for a in iter_embeddings(cand, target, restrict_to=idx, onto=True):
            if best is None or _CLASS_RANK[a.metric_class] < _CLASS_RANK[best.metric_class]:
                best = a
            if best.metric_class == METRIC:
                break
        if best is None:
            continue
        out.append(
            Realization(
                cand,
                best.metric_class == METRIC,
                best.metric_class in (METRIC, SEMIMETRIC),
                best,
            )
        )
    return tuple(out)

"""Positive root systems of the finite simple types, in exact integer coordinates.

Every presentation here has integer entries only: the classical families use
their natural coordinates, G2 lives in the sum-zero plane of Z^3, F4 is scaled
so its short roots have squared norm 2, and the E family uses the even
coordinate system scaled by two (all squared norms 8).  A uniform rescaling of
a presentation never matters downstream because embeddings are compared up to
one positive rational factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError

Vector = tuple[int, ...]
Triple = tuple[int, int, int]

# least admissible rank per family (E is the exceptional set {6, 7, 8})
CARTAN_BOUNDS = {"A": 1, "B": 2, "C": 3, "D": 4}
E_RANKS = (6, 7, 8)


def _check_rank(family: str, rank: int) -> None:
    if family in CARTAN_BOUNDS:
        low = CARTAN_BOUNDS[family]
        if rank < low:
            raise DomainError(
                f"family {family} requires rank >= {low} (Cartan bound), got {rank}"
            )
    elif family == "E":
        if rank not in E_RANKS:
            raise DomainError(f"family E requires rank in {E_RANKS} (Cartan bound), got {rank}")
    elif family == "F":
        if rank != 4:
            raise DomainError(f"family F requires rank 4 (Cartan bound), got {rank}")
    elif family == "G":
        if rank != 2:
            raise DomainError(f"family G requires rank 2 (Cartan bound), got {rank}")
    else:
        raise DomainError(f"unknown family {family!r}, expected one of A-G")


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _unit(dim: int, i: int, scale: int = 1) -> Vector:
    v = [0] * dim
    v[i] = scale
    return tuple(v)


def _roots_a(rank: int) -> list[Vector]:
    dim = rank + 1
    out = []
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [0] * dim
            v[i], v[j] = 1, -1
            out.append(tuple(v))
    return out


def _roots_bcd(family: str, rank: int) -> list[Vector]:
    out = []
    for i in range(rank):
        for j in range(i + 1, rank):
            for sj in (-1, 1):
                v = [0] * rank
                v[i], v[j] = 1, sj
                out.append(tuple(v))
    if family == "B":
        out.extend(_unit(rank, i) for i in range(rank))
    elif family == "C":
        out.extend(_unit(rank, i, 2) for i in range(rank))
    return out


_G2_ROOTS = (
    (1, -1, 0),
    (0, 1, -1),
    (1, 0, -1),
    (2, -1, -1),
    (1, 1, -2),
    (1, -2, 1),
)


def _roots_f4() -> list[Vector]:
    out: list[Vector] = [_unit(4, i, 2) for i in range(4)]
    for s2 in (-1, 1):
        for s3 in (-1, 1):
            for s4 in (-1, 1):
                out.append((1, s2, s3, s4))
    for i in range(4):
        for j in range(i + 1, 4):
            for sj in (-1, 1):
                v = [0, 0, 0, 0]
                v[i], v[j] = 1, sj
                out.append(tuple(v))
    return out


def _roots_e(rank: int) -> list[Vector]:
    # E8 in the even coordinate system, scaled by 2; positivity is
    # "first nonzero coordinate positive", which is closed under addition.
    roots: list[Vector] = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (-2, 2):
                for sj in (-2, 2):
                    v = [0] * 8
                    v[i], v[j] = si, sj
                    roots.append(tuple(v))
    for signs in range(256):
        v = tuple(1 if not (signs >> k) & 1 else -1 for k in range(8))
        if sum(1 for x in v if x < 0) % 2 == 0:
            roots.append(v)

    if rank <= 7:
        roots = [v for v in roots if v[6] + v[7] == 0]
    if rank == 6:
        roots = [v for v in roots if v[5] + v[6] == 0]

    def positive(v: Vector) -> bool:
        for x in v:
            if x:
                return x > 0
        return False

    return [v for v in roots if positive(v)]


def sum_triples(roots: Sequence[Vector]) -> tuple[Triple, ...]:
    """All (i, j, k) with i < j and roots[i] + roots[j] == roots[k]."""
    index = {v: k for k, v in enumerate(roots)}
    out = []
    for i, j in combinations(range(len(roots)), 2):
        s = tuple(a + b for a, b in zip(roots[i], roots[j]))
        k = index.get(s)
        if k is not None:
            out.append((i, j, k))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class PositiveRootSet:
    """A positive system, frozen in ascending lexicographic coordinate order."""

    family: str
    rank: int
    ambient_dim: int
    roots: tuple[Vector, ...]
    triples: tuple[Triple, ...]

    @property
    def size(self) -> int:
        return len(self.roots)

    @cached_property
    def vector_index(self) -> dict[Vector, int]:
        return {v: i for i, v in enumerate(self.roots)}

    @cached_property
    def dots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(dot(u, v) for v in self.roots) for u in self.roots)

    def norm(self, i: int) -> int:
        return self.dots[i][i]

    def index_of(self, vector: Sequence[int]) -> int:
        v = tuple(vector)
        if v not in self.vector_index:
            raise DomainError(f"{v} is not a positive root of {self.family}{self.rank}")
        return self.vector_index[v]

    def non_sums(self) -> tuple[int, ...]:
        """Indices never arising as a sum; for a full system these are the simple roots."""
        sums = {k for _, _, k in self.triples}
        return tuple(i for i in range(self.size) if i not in sums)

    def __repr__(self) -> str:  # pragma: no cover
        return f"PositiveRootSet({self.family}{self.rank}, {self.size} roots)"


def from_vectors(family: str, rank: int, ambient_dim: int, vectors: Iterable[Vector]) -> PositiveRootSet:
    roots = tuple(sorted(tuple(v) for v in vectors))
    if len(set(roots)) != len(roots):
        raise DomainError("duplicate root vectors")
    return PositiveRootSet(family, rank, ambient_dim, roots, sum_triples(roots))


def build_positive_roots(family: str, rank: int) -> PositiveRootSet:
    """Construct the positive system of the given simple type."""
    _check_rank(family, rank)
    if family == "A":
        vecs, dim = _roots_a(rank), rank + 1
    elif family in ("B", "C", "D"):
        vecs, dim = _roots_bcd(family, rank), rank
    elif family == "G":
        vecs, dim = list(_G2_ROOTS), 3
    elif family == "F":
        vecs, dim = _roots_f4(), 4
    else:
        vecs, dim = _roots_e(rank), 8
    return from_vectors(family, rank, dim, vecs)


def direct_sum(label: str, parts: Sequence[PositiveRootSet]) -> PositiveRootSet:
    """Orthogonal direct sum on concatenated coordinates, refrozen canonically."""
    if not parts:
        raise DomainError("direct sum of zero systems")
    dim = sum(p.ambient_dim for p in parts)
    vecs: list[Vector] = []
    offset = 0
    for p in parts:
        tail = dim - offset - p.ambient_dim
        for v in p.roots:
            vecs.append((0,) * offset + v + (0,) * tail)
        offset += p.ambient_dim
    rank = sum(p.rank for p in parts)
    return from_vectors(label, rank, dim, vecs)


def components(subset: Sequence[int], prs: PositiveRootSet) -> tuple[tuple[int, ...], ...]:
    """Connected blocks of subset under: x ~ y iff x+y, x-y, or y-x lies in the subset.

    For a full system of a direct sum the blocks are exactly the simple summands.
    """
    idx = sorted(set(subset))
    vecs = {prs.roots[i] for i in idx}
    parent = {i: i for i in idx}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    for a, b in combinations(idx, 2):
        u, v = prs.roots[a], prs.roots[b]
        s = tuple(x + y for x, y in zip(u, v))
        d = tuple(x - y for x, y in zip(u, v))
        nd = tuple(-x for x in d)
        if s in vecs or d in vecs or nd in vecs:
            union(a, b)

    blocks: dict[int, list[int]] = {}
    for i in idx:
        blocks.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(b)) for b in sorted(blocks.values(), key=lambda b: b[0]))


def gram(subset: Sequence[int], prs: PositiveRootSet) -> tuple[tuple[int, ...], ...]:
    """Exact Gram matrix of the selected roots, rows in subset order."""
    idx = list(subset)
    return tuple(tuple(prs.dots[a][b] for b in idx) for a in idx)


def is_positive_root(family: str, rank: int, vector: Sequence[int]) -> bool:
    """Closed-form membership predicate, independent of the generators above."""
    _check_rank(family, rank)
    v = tuple(vector)
    if family == "A":
        if len(v) != rank + 1 or sum(v) != 0:
            return False
        pos = [i for i, x in enumerate(v) if x == 1]
        neg = [i for i, x in enumerate(v) if x == -1]
        zero_ok = all(x in (-1, 0, 1) for x in v)
        return zero_ok and len(pos) == 1 and len(neg) == 1 and pos[0] < neg[0]
    if family in ("B", "C", "D"):
        if len(v) != rank:
            return False
        support = [(i, x) for i, x in enumerate(v) if x]
        if len(support) == 2:
            (i, a), (j, b) = support
            return a == 1 and b in (-1, 1)
        if len(support) != 1:
            return False
        (i, a) = support[0]
        return (family == "B" and a == 1) or (family == "C" and a == 2)
    if family == "G":
        return v in _G2_ROOTS
    if family == "F":
        if len(v) != 4:
            return False
        support = [(i, x) for i, x in enumerate(v) if x]
        if len(support) == 1:
            return support[0][1] == 2
        if len(support) == 2:
            (i, a), (j, b) = support
            return a == 1 and b in (-1, 1)
        return v[0] == 1 and all(x in (-1, 1) for x in v)
    # E family: even-lattice pattern, orthogonality cuts, first nonzero positive
    if len(v) != 8:
        return False
    support = [x for x in v if x]
    if len(support) == 2:
        shape_ok = all(x in (-2, 2) for x in support)
    elif len(support) == 8:
        shape_ok = all(x in (-1, 1) for x in v) and sum(1 for x in v if x < 0) % 2 == 0
    else:
        shape_ok = False
    if not shape_ok:
        return False
    if rank <= 7 and v[6] + v[7] != 0:
        return False
    if rank == 6 and v[5] + v[6] != 0:
        return False
    for x in v:
        if x:
            return x > 0
    return False


def positive_root_count(family: str, rank: int) -> int:
    """Closed-form cardinality of the positive system."""
    _check_rank(family, rank)
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "G":
        return 6
    if family == "F":
        return 24
    return {6: 36, 7: 63, 8: 120}[rank]

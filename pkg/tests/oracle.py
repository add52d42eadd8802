"""Naive realization oracle: try every bijection from stem roots to a subset.

Independent of the production backtracking search; used to cross-check
realizations on small subsets.
"""

from __future__ import annotations

from itertools import permutations

from splints.catalog import StemType, stem_candidates
from splints.embed import stem_system
from splints.rootsys import PositiveRootSet


def oracle_onto_maps(stem: StemType, subset: tuple[int, ...], target: PositiveRootSet) -> list[tuple[int, ...]]:
    """All sum-preserving bijections stem -> subset, as index tuples."""
    sys = stem_system(stem)
    if sys.size != len(subset):
        return []
    out = []
    for perm in permutations(subset):
        ok = True
        for i, j, k in sys.triples:
            vi = target.roots[perm[i]]
            vj = target.roots[perm[j]]
            if tuple(a + b for a, b in zip(vi, vj)) != target.roots[perm[k]]:
                ok = False
                break
        if ok:
            out.append(perm)
    return out


def oracle_stems(subset: tuple[int, ...], target: PositiveRootSet, max_rank: int) -> set[str]:
    """Names of all stems realizing the subset, by brute force."""
    found = set()
    for cand in stem_candidates(len(subset), max_rank):
        if oracle_onto_maps(cand, subset, target):
            found.add(cand.name)
    return found


def oracle_best_class(subset: tuple[int, ...], target: PositiveRootSet, max_rank: int) -> str | None:
    """Best metric class over all stems and bijections, or None if unrealizable."""
    from splints.embed import _classify

    best = None
    order = {"metric": 0, "semimetric": 1, "nonmetric": 2}
    for cand in stem_candidates(len(subset), max_rank):
        for perm in oracle_onto_maps(cand, subset, target):
            cls = _classify(cand, target, perm)
            if best is None or order[cls] < order[best]:
                best = cls
    return best

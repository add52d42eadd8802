"""Pruned scan over all bipartitions of a positive system.

Bipartitions are encoded as bitmasks over root indices; the side containing
index 0 identifies each unordered partition once, so the scan walks the odd
masks below 2^n.  A side survives only if a cheap lower bound on the rank any
onto stem would need stays within the ambient rank.  The bound is computed per
connected component of the side (union-find over the sum triples lying inside
it): a component of size s with t internal triples and k non-sum elements
needs at least max(dp[s][t], k) rank, where dp is a knapsack table over the
simple types that embed into the target at all.  Survivors still undergo the
full realization search; the bound never rejects a true splint side.

The hot loop is compiled with numba; a plain-Python twin of the same
semantics, built on the high-level subset routines, exists for cross-checking
on small systems.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from .catalog import SimpleType, StemType, simple_size, stem
from .embed import embeds, stem_system, subset_non_sums, subset_triples
from .rootsys import PositiveRootSet, components

_INF = 127  # sentinel in the int8 dp table
_CHUNK_BITS = 18


@dataclass(frozen=True, eq=False)
class PruneTables:
    n: int
    rank: int
    tri: np.ndarray  # (T, 3) int64, triples (a, b, c)
    pair_off: np.ndarray  # (n+1,) int64, slice bounds into pair_masks per element
    pair_masks: np.ndarray  # int64, (1<<a)|(1<<b) for each decomposition of the element
    dp: np.ndarray  # (n+1, T+1) int8, min stem rank by (size, triple budget)
    types: tuple[SimpleType, ...]  # simple types that embed into the target


def embeddable_simple_types(target: PositiveRootSet) -> tuple[SimpleType, ...]:
    """Simple types of fitting size and rank that embed into the target at all."""
    out = []
    families = ("A", "B", "C", "D", "E", "F", "G")
    for fam in families:
        ranks: range | tuple[int, ...]
        if fam == "A":
            ranks = range(1, target.rank + 1)
        elif fam == "B":
            ranks = range(2, target.rank + 1)
        elif fam == "C":
            ranks = range(3, target.rank + 1)
        elif fam == "D":
            ranks = range(4, target.rank + 1)
        elif fam == "E":
            ranks = tuple(r for r in (6, 7, 8) if r <= target.rank)
        elif fam == "F":
            ranks = (4,) if target.rank >= 4 else ()
        else:
            ranks = (2,) if target.rank >= 2 else ()
        for r in ranks:
            t = SimpleType(fam, r)
            if simple_size(t) <= target.size and embeds(stem([t]), target):
                out.append(t)
    return tuple(out)


def build_tables(target: PositiveRootSet) -> PruneTables:
    n = target.size
    tri = np.array(target.triples, dtype=np.int64).reshape(-1, 3)
    tcount = len(target.triples)

    pairs: list[list[int]] = [[] for _ in range(n)]
    for a, b, c in target.triples:
        pairs[c].append((1 << a) | (1 << b))
    pair_off = np.zeros(n + 1, dtype=np.int64)
    flat: list[int] = []
    for i in range(n):
        pair_off[i] = len(flat)
        flat.extend(pairs[i])
    pair_off[n] = len(flat)
    pair_masks = np.array(flat, dtype=np.int64) if flat else np.zeros(0, dtype=np.int64)

    types = embeddable_simple_types(target)
    dp = np.full((n + 1, tcount + 1), _INF, dtype=np.int8)
    dp[0, 0] = 0
    for t in types:
        sz = simple_size(t)
        tt = len(stem_system(stem([t])).triples)
        if sz > n or tt > tcount or t.rank > target.rank:
            continue
        # unbounded knapsack: repeat each type freely
        for s in range(sz, n + 1):
            for k in range(tt, tcount + 1):
                prev = int(dp[s - sz, k - tt])
                if prev != _INF and prev + t.rank < dp[s, k]:
                    dp[s, k] = prev + t.rank
    # convert the triple axis to "budget <= k": prefix minimum
    for s in range(n + 1):
        best = _INF
        for k in range(tcount + 1):
            if dp[s, k] < best:
                best = dp[s, k]
            dp[s, k] = best
    return PruneTables(n, target.rank, tri, pair_off, pair_masks, dp, types)


@njit(cache=True, nogil=True)
def _side_ok(mask, n, rank, tri, pair_off, pair_masks, dp, tri_cap, parent, csize, ctri, cnon):
    for i in range(n):
        if (mask >> i) & 1:
            parent[i] = i
            csize[i] = 0
            ctri[i] = 0
            cnon[i] = 0
    for t in range(tri.shape[0]):
        a = tri[t, 0]
        if (mask >> a) & 1:
            b = tri[t, 1]
            c = tri[t, 2]
            if ((mask >> b) & 1) and ((mask >> c) & 1):
                ra = a
                while parent[ra] != ra:
                    parent[ra] = parent[parent[ra]]
                    ra = parent[ra]
                rb = b
                while parent[rb] != rb:
                    parent[rb] = parent[parent[rb]]
                    rb = parent[rb]
                if ra != rb:
                    parent[rb] = ra
                rc = c
                while parent[rc] != rc:
                    parent[rc] = parent[parent[rc]]
                    rc = parent[rc]
                if rc != ra:
                    parent[rc] = ra
    for t in range(tri.shape[0]):
        a = tri[t, 0]
        if (mask >> a) & 1:
            b = tri[t, 1]
            c = tri[t, 2]
            if ((mask >> b) & 1) and ((mask >> c) & 1):
                ra = a
                while parent[ra] != ra:
                    ra = parent[ra]
                ctri[ra] += 1
    for i in range(n):
        if (mask >> i) & 1:
            r = i
            while parent[r] != r:
                parent[r] = parent[parent[r]]
                r = parent[r]
            csize[r] += 1
            is_sum = False
            for k in range(pair_off[i], pair_off[i + 1]):
                pm = pair_masks[k]
                if (mask & pm) == pm:
                    is_sum = True
                    break
            if not is_sum:
                cnon[r] += 1
    total = 0
    for i in range(n):
        if ((mask >> i) & 1) and parent[i] == i:
            t = ctri[i]
            if t > tri_cap:
                t = tri_cap
            b = dp[csize[i], t]
            if cnon[i] > b:
                b = cnon[i]
            total += b
            if total > rank:
                return False
    return True


@njit(cache=True, nogil=True)
def _scan_chunk(start, stop, n, rank, tri, pair_off, pair_masks, dp, out):
    full = (1 << n) - 1
    tri_cap = dp.shape[1] - 1
    parent = np.empty(n, dtype=np.int64)
    csize = np.empty(n, dtype=np.int64)
    ctri = np.empty(n, dtype=np.int64)
    cnon = np.empty(n, dtype=np.int64)
    cnt = 0
    for k in range(start, stop):
        m = 2 * k + 1
        if m == full:
            continue
        if _side_ok(m, n, rank, tri, pair_off, pair_masks, dp, tri_cap, parent, csize, ctri, cnon) and _side_ok(
            full ^ m, n, rank, tri, pair_off, pair_masks, dp, tri_cap, parent, csize, ctri, cnon
        ):
            out[cnt] = m
            cnt += 1
    return cnt


def candidate_masks(target: PositiveRootSet, tables: PruneTables | None = None, jobs: int = 1) -> list[int]:
    """Masks (bit 0 set) of bipartition sides passing the rank lower bound, ascending.

    The mask range is split into fixed chunks merged in order, so the result is
    identical for every worker count.
    """
    if tables is None:
        tables = build_tables(target)
    n = target.size
    if n < 2:
        return []
    total = 1 << (n - 1)
    chunk = min(total, 1 << _CHUNK_BITS)
    spans = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]

    def run(span: tuple[int, int]) -> np.ndarray:
        start, stop = span
        buf = np.empty(stop - start, dtype=np.int64)
        cnt = _scan_chunk(
            start, stop, n, tables.rank, tables.tri, tables.pair_off, tables.pair_masks, tables.dp, buf
        )
        return buf[:cnt].copy()

    if jobs <= 1 or len(spans) == 1:
        parts = [run(s) for s in spans]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, spans))
    out: list[int] = []
    for p in parts:
        out.extend(int(x) for x in p)
    return out


def side_bound_python(indices: tuple[int, ...], target: PositiveRootSet, tables: PruneTables) -> int:
    """Plain-Python twin of the kernel's per-side rank lower bound."""
    nonsums = set(subset_non_sums(indices, target))
    total = 0
    tri_cap = tables.dp.shape[1] - 1
    for comp in components(indices, target):
        t = min(len(subset_triples(comp, target)), tri_cap)
        b = int(tables.dp[len(comp), t])
        b = max(b, sum(1 for i in comp if i in nonsums))
        total += b
    return total


def candidate_masks_python(target: PositiveRootSet, tables: PruneTables | None = None) -> list[int]:
    """Reference implementation of candidate_masks built on the high-level routines."""
    if tables is None:
        tables = build_tables(target)
    n = target.size
    full = (1 << n) - 1
    out = []
    for m in range(1, full, 2):
        part1 = tuple(i for i in range(n) if (m >> i) & 1)
        part2 = tuple(i for i in range(n) if not (m >> i) & 1)
        if side_bound_python(part1, target, tables) <= target.rank and side_bound_python(
            part2, target, tables
        ) <= target.rank:
            out.append(m)
    return out

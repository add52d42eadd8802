"""Weight multiplicities, restriction to a subsystem, and diagram patterns.

Demonstrates the motivating observation behind splints: restrict an
irreducible module to the subalgebra generated by one part of a splint and
the surviving highest weights, with multiplicities, trace out the weight
diagram of a module for a different system.

All arithmetic is exact rational.  Weight multiplicities come from the
Freudenthal recursion, cross-checked against the dimension formula on every
call; restriction multiplicities come from the alternating sum over the
subsystem's Weyl group, whose rank-1 case visibly reduces to differencing
along a root string.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CapacityError, DomainError
from .rootsys import PositiveRootSet, build_positive_roots

Weight = tuple[Fraction, ...]
WeightMultiset = dict[Weight, int]

_W_SUB_CAP = 100_000


def _frac_vec(v: Sequence) -> Weight:
    return tuple(Fraction(x) for x in v)


def _dotf(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _add(u: Weight, v: Sequence[Fraction]) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Weight, v: Sequence[Fraction]) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def _weyl_dim(positive: Sequence[Weight], rho: Weight, lam: Weight) -> int:
    num = Fraction(1)
    for a in positive:
        num *= _dotf(_add(lam, rho), a) / _dotf(rho, a)
    if num.denominator != 1 or num <= 0:
        raise DomainError(f"dimension formula gave non-integer value {num}")
    return int(num)


def weight_multiplicities(family: str, rank: int, highest_weight: Sequence) -> WeightMultiset:
    """Full weight multiset of the irreducible module, by Freudenthal recursion."""
    target = build_positive_roots(family, rank)
    lam = _frac_vec(highest_weight)
    if len(lam) != target.ambient_dim:
        raise DomainError(
            f"weight has {len(lam)} coordinates, ambient space has {target.ambient_dim}"
        )
    positive = [_frac_vec(v) for v in target.roots]
    simple = [positive[i] for i in target.non_sums()]
    for a in simple:
        c = 2 * _dotf(lam, a) / _dotf(a, a)
        if c.denominator != 1 or c < 0:
            raise DomainError(f"weight is not dominant integral: pairing {c} with simple root {a}")
    rho = tuple(sum(col, Fraction(0)) / 2 for col in zip(*positive))
    lam_sq = _dotf(lam, lam)
    lam_rho_sq = _dotf(_add(lam, rho), _add(lam, rho))

    mult: WeightMultiset = {lam: 1}
    level = [lam]
    while level:
        candidates = sorted({_sub(mu, a) for mu in level for a in simple})
        level = []
        for mu in candidates:
            if mu in mult:
                continue
            den = lam_rho_sq - _dotf(_add(mu, rho), _add(mu, rho))
            if den <= 0:
                continue
            num = Fraction(0)
            for a in positive:
                # walk up the root string; weights satisfy |nu|^2 <= |lam|^2,
                # and the norm along the ray is eventually increasing
                na = _dotf(a, a)
                vertex = -_dotf(mu, a) / na
                k = 1
                while True:
                    up = tuple(m + k * x for m, x in zip(mu, a))
                    if k > vertex and _dotf(up, up) > lam_sq:
                        break
                    m_up = mult.get(up, 0)
                    if m_up:
                        num += 2 * m_up * _dotf(up, a)
                    k += 1
            m = num / den
            if m.denominator != 1 or m < 0:
                raise DomainError(f"Freudenthal recursion produced invalid multiplicity {m} at {mu}")
            if m > 0:
                mult[mu] = int(m)
                level.append(mu)

    total = sum(mult.values())
    expected = _weyl_dim(positive, rho, lam)
    if total != expected:
        raise DomainError(f"weight total {total} disagrees with dimension formula {expected}")
    return mult


def _validate_subsystem(target: PositiveRootSet, sub: tuple[int, ...]) -> None:
    if not sub:
        raise DomainError("subsystem is empty")
    if len(set(sub)) != len(sub):
        raise DomainError("subsystem indices repeat")
    chosen = set(sub)
    for x in range(len(sub)):
        for y in range(x + 1, len(sub)):
            vi, vj = target.roots[sub[x]], target.roots[sub[y]]
            s = tuple(a + b for a, b in zip(vi, vj))
            if s in target.vector_index and target.vector_index[s] not in chosen:
                raise DomainError(f"subsystem not closed: sum {s} lies outside it")
            for d in (
                tuple(a - b for a, b in zip(vi, vj)),
                tuple(b - a for a, b in zip(vi, vj)),
            ):
                if d in target.vector_index and target.vector_index[d] not in chosen:
                    raise DomainError(f"subsystem not closed: difference {d} lies outside it")


def _sub_simples(target: PositiveRootSet, sub: tuple[int, ...]) -> list[int]:
    chosen = set(sub)
    vecs = {target.roots[i] for i in sub}
    out = []
    for i in sub:
        v = target.roots[i]
        if not any(
            tuple(a - b for a, b in zip(v, target.roots[j])) in vecs for j in sub if j != i
        ):
            out.append(i)
    return sorted(out)


def _reflection_matrix(a: Weight, dim: int) -> tuple[tuple[Fraction, ...], ...]:
    na = _dotf(a, a)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            base = Fraction(1) if i == j else Fraction(0)
            row.append(base - 2 * a[i] * a[j] / na)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_apply(m: tuple[tuple[Fraction, ...], ...], v: Weight) -> Weight:
    return tuple(_dotf(row, v) for row in m)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def sub_weyl_group(target: PositiveRootSet, sub: tuple[int, ...]) -> list[tuple[tuple, int]]:
    """Subsystem Weyl group as (matrix, determinant sign) pairs."""
    dim = target.ambient_dim
    gens = [_reflection_matrix(_frac_vec(target.roots[i]), dim) for i in _sub_simples(target, sub)]
    ident = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(dim)) for i in range(dim)
    )
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                q = _mat_mul(m, g)
                if q not in seen:
                    if len(seen) >= _W_SUB_CAP:
                        raise CapacityError(
                            f"subsystem Weyl group exceeds the supported bound of {_W_SUB_CAP}"
                        )
                    seen[q] = -seen[m]
                    fresh.append(q)
        frontier = fresh
    return list(seen.items())


def subalgebra_highest_weights(
    target: PositiveRootSet, weights: Mapping[Weight, int], sub_roots: Iterable[int]
) -> WeightMultiset:
    """Highest-weight multiset of the restriction to a closed positive subsystem.

    Alternating sum over the subsystem Weyl group; checked against the total
    dimension via the subsystem's own dimension formula.
    """
    sub = tuple(sub_roots)
    _validate_subsystem(target, sub)
    sub_vecs = [_frac_vec(target.roots[i]) for i in sub]
    rho_sub = tuple(sum(col, Fraction(0)) / 2 for col in zip(*sub_vecs))
    simples = [_frac_vec(target.roots[i]) for i in _sub_simples(target, sub)]
    group = sub_weyl_group(target, sub)

    out: WeightMultiset = {}
    for nu in sorted(weights):
        if any(_dotf(nu, a) < 0 for a in simples):
            continue
        b = 0
        shifted = _add(nu, rho_sub)
        for mat, sign in group:
            img = _sub(_mat_apply(mat, shifted), rho_sub)
            m = weights.get(img, 0)
            if m:
                b += sign * m
        if b < 0:
            raise DomainError(f"alternating sum gave negative multiplicity {b} at {nu}")
        if b:
            out[nu] = b

    total = sum(weights.values())
    accounted = sum(
        b * _weyl_dim(sub_vecs, rho_sub, nu) for nu, b in out.items()
    )
    if accounted != total:
        raise DomainError(
            f"restriction accounts for {accounted} of {total} weights; subsystem input is not a valid branching base"
        )
    return out


def fundamental_weights(target: PositiveRootSet) -> tuple[Weight, ...]:
    """Fundamental weights in the span of the simple roots, simple-root order."""
    simples = [_frac_vec(target.roots[i]) for i in target.non_sums()]
    r = len(simples)
    cartan = [
        [2 * _dotf(simples[j], simples[k]) / _dotf(simples[k], simples[k]) for j in range(r)]
        for k in range(r)
    ]
    out = []
    for i in range(r):
        coeffs = _solve_linear(cartan, [Fraction(1) if k == i else Fraction(0) for k in range(r)])
        vec = tuple(
            sum((c * s[d] for c, s in zip(coeffs, simples)), Fraction(0))
            for d in range(target.ambient_dim)
        )
        out.append(vec)
    return tuple(out)


def _solve_linear(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@dataclass(frozen=True)
class PatternMatch:
    family: str
    rank: int
    coefficients: tuple[int, int]
    highest_weight: Weight
    total: int
    anchors: tuple[tuple[Weight, Weight], ...]  # (pattern point, matched point)


def _pattern_candidates(family: str, n: int) -> list[tuple[int, int]]:
    target = build_positive_roots(family, 2)
    fund = fundamental_weights(target)
    positive = [_frac_vec(v) for v in target.roots]
    rho = tuple(sum(col, Fraction(0)) / 2 for col in zip(*positive))
    out = []
    p = 0
    while True:
        lam_p = tuple(p * x for x in fund[0])
        if _weyl_dim(positive, rho, lam_p) > n:
            break
        q = 0
        while True:
            lam = tuple(p * x + q * y for x, y in zip(fund[0], fund[1]))
            d = _weyl_dim(positive, rho, lam)
            if d > n:
                break
            if d == n:
                out.append((p, q))
            q += 1
        p += 1
    return out


def match_pattern(
    hw: Mapping[Weight, int], pattern_family: str = "A", pattern_rank: int = 2
) -> PatternMatch | None:
    """First rank-2 pattern module whose diagram matches hw up to an affine map.

    The identification sends the pattern's highest weight to the
    lexicographically greatest point of hw (an extreme point of its hull);
    the images of two reference points are searched exhaustively, so a match
    is found whenever any affine identification exists.
    """
    if pattern_rank != 2:
        raise DomainError("only rank-2 patterns are supported")
    if not hw:
        raise DomainError("empty weight multiset")
    hw = {tuple(Fraction(x) for x in k): int(v) for k, v in hw.items()}
    n = sum(hw.values())
    support = sorted(hw)
    anchor = max(support)
    target = build_positive_roots(pattern_family, 2)
    fund = fundamental_weights(target)

    for p, q in _pattern_candidates(pattern_family, n):
        lam = tuple(p * x + q * y for x, y in zip(fund[0], fund[1]))
        pattern = weight_multiplicities(pattern_family, 2, lam)
        if sorted(pattern.values()) != sorted(hw.values()) or hw[anchor] != pattern[lam]:
            continue
        if n == 1:
            return PatternMatch(pattern_family, 2, (p, q), lam, 1, ((lam, anchor),))
        pts = sorted(pattern)
        u1 = None
        p1 = p2 = None
        for x in pts:
            d = _sub(x, lam)
            if any(d):
                p1, u1 = x, d
                break
        u2 = None
        for x in pts:
            d = _sub(x, lam)
            if any(d) and any(u1[i] * d[j] != u1[j] * d[i] for i in range(len(d)) for j in range(len(d))):
                p2, u2 = x, d
                break
        if u2 is None:
            continue  # degenerate pattern cannot match once n > 1
        # exact coordinates of every pattern point in the (u1, u2) frame
        i0, j0 = next(
            (i, j)
            for i in range(len(u1))
            for j in range(len(u1))
            if u1[i] * u2[j] - u1[j] * u2[i] != 0
        )
        det = u1[i0] * u2[j0] - u1[j0] * u2[i0]
        coords = []
        for x in pts:
            d = _sub(x, lam)
            a = (d[i0] * u2[j0] - d[j0] * u2[i0]) / det
            b = (u1[i0] * d[j0] - u1[j0] * d[i0]) / det
            if _add(tuple(a * c1 + b * c2 for c1, c2 in zip(u1, u2)), lam) != x:
                raise DomainError("pattern weights are not planar")
            coords.append((a, b))
        others = [h for h in support if h != anchor]
        for h1 in others:
            v1 = _sub(h1, anchor)
            for h2 in others:
                if h2 == h1:
                    continue
                v2 = _sub(h2, anchor)
                # identification must be invertible on the pattern plane
                if all(
                    v1[i] * v2[j] == v1[j] * v2[i]
                    for i in range(len(v1))
                    for j in range(i + 1, len(v1))
                ):
                    continue
                image: WeightMultiset = {}
                for (a, b), x in zip(coords, pts):
                    y = tuple(
                        h + a * c1 + b * c2 for h, c1, c2 in zip(anchor, v1, v2)
                    )
                    image[y] = image.get(y, 0) + pattern[x]
                if image == hw:
                    return PatternMatch(
                        pattern_family,
                        2,
                        (p, q),
                        lam,
                        n,
                        ((lam, anchor), (p1, h1), (p2, h2)),
                    )
    return None


def length_class_indices(target: PositiveRootSet, which: str) -> tuple[int, ...]:
    """Indices of the long or short roots; requires two distinct lengths."""
    norms = sorted({target.norm(i) for i in range(target.size)})
    if len(norms) != 2:
        raise DomainError(f"{target.family}{target.rank} has no long/short distinction")
    wanted = norms[1] if which == "long" else norms[0]
    return tuple(i for i in range(target.size) if target.norm(i) == wanted)

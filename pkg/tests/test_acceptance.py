"""Acceptance suite: one check per release criterion, one pass/fail line each.

Every expected value here is exact; no tolerances anywhere.  Criterion 1
asserts the full frozen class-count table; the enumeration is reported
verbatim, so a genuine count disagreement fails loudly rather than being
reconciled.
"""

import json
import random
import time

from splints.branch import (
    fundamental_weights,
    length_class_indices,
    match_pattern,
    subalgebra_highest_weights,
    weight_multiplicities,
)
from splints.catalog import parse_stem
from splints.cli import main
from splints.embed import embeds, find_embeddings, realizations
from splints.rootsys import build_positive_roots
from splints.splint import verify_table
from splints.table import DESK_TARGETS

from oracle import oracle_best_class, oracle_stems

EXPECTED_CLASSES = {
    ("A", 2): 1,
    ("A", 3): 3,
    ("A", 4): 4,
    ("A", 5): 2,
    ("A", 6): 2,
    ("B", 2): 3,
    ("B", 3): 2,
    ("B", 4): 1,
    ("B", 5): 1,
    ("C", 3): 2,
    ("C", 4): 1,
    ("C", 5): 1,
    ("D", 4): 1,
    ("D", 5): 0,
    ("G", 2): 2,
    ("F", 4): 1,
}

_ORDER = {"metric": 0, "semimetric": 1, "nonmetric": 2}


def test_criterion_1_table_reproduction():
    report = verify_table(list(DESK_TARGETS), jobs=1)
    problems = []
    for t in report.targets:
        key = (t.family, t.rank)
        assert t.expected_classes == EXPECTED_CLASSES[key]
        missing = [rc.row.row_type for rc in t.rows if not rc.found]
        if missing:
            problems.append(f"{t.family}{t.rank}: witness rows not accepted: {missing}")
        if t.found_classes != EXPECTED_CLASSES[key]:
            extras = [
                f"{c.representative} (size {c.size})" for c in t.classes if not c.witness_rows
            ]
            problems.append(
                f"{t.family}{t.rank}: found {t.found_classes} Weyl classes, expected "
                f"{EXPECTED_CLASSES[key]}; classes without a listed witness: {extras}"
            )
        elif not t.bijection_ok:
            problems.append(f"{t.family}{t.rank}: witnesses do not hit each class exactly once")
        # runtime: heavy targets get minutes, everything else runs in seconds
        budget = 900.0 if (t.family, t.rank) in (("F", 4), ("B", 5), ("C", 5)) else 120.0
        if t.elapsed > budget:
            problems.append(f"{t.family}{t.rank}: {t.elapsed:.0f}s exceeds {budget:.0f}s")
    print(f"criterion 1 (table reproduction): {'FAIL' if problems else 'PASS'}")
    assert not problems, "enumeration disagrees with the frozen table:\n" + "\n".join(problems)


def test_criterion_2_exceptional_census():
    f4 = build_positive_roots("F", 4)
    found = find_embeddings(parse_stem("D4"), f4)
    by_image = {}
    for a in found:
        by_image.setdefault(a.image, []).append(a)
    assert len(found) == 108
    assert len(by_image) == 18
    long_norm = 4
    metric_images = []
    for img, group in by_image.items():
        best = min((a.metric_class for a in group), key=_ORDER.get)
        longs = sum(1 for i in img if f4.norm(i) == long_norm)
        if best == "metric":
            metric_images.append((longs, len(img) - longs))
        else:
            assert best == "nonmetric"
            assert (longs, len(img) - longs) == (3, 9)
    assert sorted(metric_images) == [(0, 12), (12, 0)]
    witness = {f4.index_of(v) for v in [(1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (0, 0, 0, 2)]}
    assert any(witness <= set(img) for img in by_image)
    print("criterion 2 (exceptional census): PASS")


def test_criterion_3_non_embeddings():
    c3 = parse_stem("C3")
    for r in range(2, 6):
        assert not embeds(c3, build_positive_roots("B", r))
    b3 = parse_stem("B3")
    for r in range(3, 6):
        assert not embeds(b3, build_positive_roots("C", r))
    non_a_simples = ["B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "G2", "F4"]
    for r in range(2, 6):
        target = build_positive_roots("A", r)
        for name in non_a_simples:
            assert not embeds(parse_stem(name), target), (name, r)
    b2 = parse_stem("B2")
    for family, rank in DESK_TARGETS:
        target = build_positive_roots(family, rank)
        assert embeds(b2, target) == (family in "BCFG"), (family, rank)
    print("criterion 3 (non-embedding suite): PASS")


def _agrees_with_oracle(sub, target):
    found = realizations(sub, target, target.rank)
    assert {r.stem.name for r in found} == oracle_stems(sub, target, target.rank)
    if found:
        best = min((r.best_class for r in found), key=_ORDER.get)
        assert best == oracle_best_class(sub, target, target.rank)


def test_criterion_4_oracle_equivalence():
    for family, rank in [("B", 2), ("A", 3)]:
        target = build_positive_roots(family, rank)
        for mask in range(1, 1 << target.size):
            sub = tuple(i for i in range(target.size) if mask >> i & 1)
            _agrees_with_oracle(sub, target)
    rng = random.Random(20260815)  # documented sample seed
    for family in ("C", "B"):
        target = build_positive_roots(family, 3)
        for _ in range(500):
            k = rng.randint(1, 6)
            sub = tuple(sorted(rng.sample(range(target.size), k)))
            _agrees_with_oracle(sub, target)
    print("criterion 4 (oracle equivalence): PASS")


def _plane_shorts(dim, a, b):
    lo, hi = min(a, b), max(a, b)
    minus = [0] * dim
    minus[lo], minus[hi] = 1, -1
    plus = [0] * dim
    plus[lo], plus[hi] = 1, 1
    return tuple(minus), tuple(plus)


def _nonmetric_images(stem_name, target):
    by_image = {}
    for a in find_embeddings(parse_stem(stem_name), target):
        by_image.setdefault(a.image, []).append(a)
    return {
        img
        for img, group in by_image.items()
        if min((a.metric_class for a in group), key=_ORDER.get) == "nonmetric"
    }


def test_criterion_5_nonmetric_structure():
    # short-family targets: the image splits off an orthogonal short frame
    for r in range(2, 5):
        target = build_positive_roots("B", r)
        dots = target.dots
        for s in range(2, 5):
            for img in _nonmetric_images(f"A{s}", target):
                shorts = [i for i in img if target.norm(i) == 1]
                rest = [i for i in img if target.norm(i) != 1]
                assert len(shorts) == s
                assert all(dots[a][b] == 0 for x, a in enumerate(shorts) for b in shorts[x + 1 :])
                hits = find_embeddings(parse_stem(f"A{s-1}"), target, restrict_to=rest, onto=True)
                assert any(a.metric_class == "metric" for a in hits)
    # long-family targets: unique long root plus an exclusive-or on index pairs
    for r in range(3, 5):
        target = build_positive_roots("C", r)
        for s in range(2, 4):
            for img in _nonmetric_images(f"A{s}", target):
                longs = [i for i in img if target.norm(i) == 4]
                assert len(longs) == 1
                c = target.roots[longs[0]].index(2)
                vecs = {target.roots[i] for i in img}
                touched = set()
                for i in img:
                    v = target.roots[i]
                    if target.norm(i) == 2 and v[c] != 0:
                        touched.add(next(k for k in range(r) if k != c and v[k] != 0))
                assert len(touched) == s - 1
                for j in touched:
                    minus, plus = _plane_shorts(r, c, j)
                    assert minus in vecs and plus in vecs
                for j in sorted(touched):
                    for k in sorted(touched):
                        if j < k:
                            minus, plus = _plane_shorts(r, j, k)
                            assert (plus in vecs) != (minus in vecs)
    print("criterion 5 (non-metric structure): PASS")


def test_criterion_6_branching_patterns():
    b2 = build_positive_roots("B", 2)
    fund_b = fundamental_weights(b2)
    sub_b = (b2.index_of((1, -1)),)
    cases = []
    for a in range(4):
        for b in range(4 - a):
            cases.append(("B", 2, b2, fund_b, sub_b, (a, b)))
    g2 = build_positive_roots("G", 2)
    fund_g = fundamental_weights(g2)
    sub_g = length_class_indices(g2, "long")
    for a in range(2):
        for b in range(2):
            cases.append(("G", 2, g2, fund_g, sub_g, (a, b)))
    for family, rank, target, fund, sub, (a, b) in cases:
        start = time.perf_counter()
        lam = tuple(a * x + b * y for x, y in zip(fund[0], fund[1]))
        weights = weight_multiplicities(family, rank, lam)
        hw = subalgebra_highest_weights(target, weights, sub)
        match = match_pattern(hw, "A", 2)
        elapsed = time.perf_counter() - start
        assert match is not None, (family, a, b)
        assert match.total == sum(hw.values())
        assert elapsed < 10.0, (family, a, b, elapsed)
    print("criterion 6 (branching patterns): PASS")


def test_criterion_7_parallel_determinism(capsys):
    assert main(["splints", "--type", "F4", "--json", "--jobs", "1"]) == 0
    one = capsys.readouterr().out
    assert main(["splints", "--type", "F4", "--json", "--jobs", "8"]) == 0
    eight = capsys.readouterr().out
    assert one == eight
    doc = json.loads(one)
    assert len(doc["splints"]) == 1
    print("criterion 7 (parallel determinism): PASS")

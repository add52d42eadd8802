"""Weyl groups as signed-root permutations; orbit classification of splints."""

import pytest

from splints.errors import CapacityError
from splints.rootsys import build_positive_roots
from splints.splint import enumerate_splints
from splints.weyl import (
    expected_order,
    orbit_of_pair,
    reflection,
    splint_classes,
    weyl_group,
)

ORDERS = {
    ("A", 2): 6,
    ("A", 3): 24,
    ("B", 2): 8,
    ("B", 3): 48,
    ("C", 3): 48,
    ("D", 4): 192,
    ("G", 2): 12,
    ("F", 4): 1152,
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
}


def test_expected_orders():
    for (family, rank), order in ORDERS.items():
        assert expected_order(family, rank) == order


def test_generated_groups_match_expected_order():
    for family, rank in [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]:
        group = weyl_group(build_positive_roots(family, rank))
        assert group.order == ORDERS[(family, rank)]
        assert len(set(group.elements)) == group.order


def test_capacity_rejects_huge_groups_quickly():
    for family, rank in [("E", 7), ("E", 8)]:
        with pytest.raises(CapacityError):
            weyl_group(build_positive_roots(family, rank))


def test_reflections_are_involutions():
    target = build_positive_roots("B", 2)
    n = target.size
    for i in range(n):
        g = reflection(target, i)
        assert g[i] == i + n  # root maps to its negative
        assert all(g[g[x]] == x for x in range(2 * n))


def test_reflection_fixes_orthogonal_roots():
    target = build_positive_roots("B", 2)
    g = reflection(target, 0)  # reflect in e2
    assert g[2] == 2  # e1 fixed
    assert g[1] == 3  # e1-e2 -> e1+e2


def test_class_sizes_divide_group_order():
    for family, rank in [("B", 2), ("C", 3), ("A", 4)]:
        target = build_positive_roots(family, rank)
        records = enumerate_splints(target)
        group = weyl_group(target)
        classes = splint_classes(records, group)
        for cls in classes:
            assert group.order % cls.size == 0


def test_frozen_class_structure():
    cases = {
        ("A", 2): [3],
        ("B", 2): [2, 2, 1],
        ("C", 3): [12, 6, 1],
        ("A", 4): [20, 5, 30, 15, 30],
    }
    for (family, rank), sizes in cases.items():
        target = build_positive_roots(family, rank)
        records = enumerate_splints(target)
        classes = splint_classes(records, weyl_group(target))
        assert [c.size for c in classes] == sizes
        assert sum(c.size for c in classes) == len(records)


def test_classes_partition_records_and_stamp_ids():
    target = build_positive_roots("B", 3)
    records = enumerate_splints(target)
    classes = splint_classes(records, weyl_group(target))
    seen = sorted(i for c in classes for i in c.record_ids)
    assert seen == list(range(len(records)))
    for c in classes:
        for i in c.record_ids:
            assert records[i].weyl_class == c.class_id


def test_orbit_closure_under_group():
    from splints.weyl import _pair, _symmetrize

    target = build_positive_roots("B", 2)
    records = enumerate_splints(target)
    group = weyl_group(target)
    n = target.size
    rec = records[0]
    pair = _pair(_symmetrize(rec.partition.part1, n), _symmetrize(rec.partition.part2, n))
    orbit = orbit_of_pair(pair, group)
    # the orbit of any member is the same set
    for other in orbit:
        assert orbit_of_pair(other, group) == orbit

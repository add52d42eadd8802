"""Weight multiplicities, subsystem restriction, and pattern matching."""

from fractions import Fraction as F

import pytest

from splints.branch import (
    fundamental_weights,
    length_class_indices,
    match_pattern,
    sub_weyl_group,
    subalgebra_highest_weights,
    weight_multiplicities,
)
from splints.errors import DomainError
from splints.rootsys import build_positive_roots


def fr(*coords):
    return tuple(F(x) for x in coords)


def test_b2_vector_module_weights():
    w = weight_multiplicities("B", 2, (1, 0))
    assert w == {
        fr(1, 0): 1,
        fr(-1, 0): 1,
        fr(0, 1): 1,
        fr(0, -1): 1,
        fr(0, 0): 1,
    }


def test_b2_spinor_weights():
    w = weight_multiplicities("B", 2, (F(1, 2), F(1, 2)))
    assert w == {fr(s1 * F(1, 2), s2 * F(1, 2)): 1 for s1 in (1, -1) for s2 in (1, -1)}


def test_a2_adjoint_weights():
    w = weight_multiplicities("A", 2, (1, 0, -1))
    assert sum(w.values()) == 8
    assert w[fr(0, 0, 0)] == 2
    assert sorted(w.values()) == [1, 1, 1, 1, 1, 1, 2]


def test_g2_small_modules():
    w7 = weight_multiplicities("G", 2, (1, 0, -1))
    assert sum(w7.values()) == 7
    assert set(w7.values()) == {1}
    w14 = weight_multiplicities("G", 2, (2, -1, -1))
    assert sum(w14.values()) == 14
    assert w14[fr(0, 0, 0)] == 2


def test_weights_are_weyl_symmetric():
    # negation is a Weyl element for B2; the multiset must be stable
    w = weight_multiplicities("B", 2, (1, 1))
    assert sum(w.values()) == 10
    assert w == {tuple(-x for x in k): m for k, m in w.items()}


def test_invalid_highest_weights_rejected():
    with pytest.raises(DomainError):
        weight_multiplicities("B", 2, (F(1, 2), 0))  # non-integral pairing
    with pytest.raises(DomainError):
        weight_multiplicities("B", 2, (0, 1))  # not dominant
    with pytest.raises(DomainError):
        weight_multiplicities("B", 2, (1, 0, 0))  # wrong ambient dimension


def test_restriction_to_single_root():
    b2 = build_positive_roots("B", 2)
    w = weight_multiplicities("B", 2, (1, 0))
    hw = subalgebra_highest_weights(b2, w, (b2.index_of((1, -1)),))
    assert hw == {fr(1, 0): 1, fr(0, 0): 1, fr(0, -1): 1}


def test_rank_one_reduction_matches_string_differencing():
    b2 = build_positive_roots("B", 2)
    fund = fundamental_weights(b2)
    for root_vec in [(1, -1), (0, 1), (1, 0), (1, 1)]:
        alpha = fr(*root_vec)
        sub = (b2.index_of(root_vec),)
        for a in range(3):
            for b in range(3 - a):
                lam = tuple(a * x + b * y for x, y in zip(fund[0], fund[1]))
                w = weight_multiplicities("B", 2, lam)
                hw = subalgebra_highest_weights(b2, w, sub)
                expected = {}
                for mu, m in w.items():
                    if sum(p * q for p, q in zip(mu, alpha)) >= 0:
                        up = tuple(x + y for x, y in zip(mu, alpha))
                        d = m - w.get(up, 0)
                        if d:
                            expected[mu] = d
                assert hw == expected, (root_vec, a, b)


def test_self_branching_returns_highest_weight_only():
    b2 = build_positive_roots("B", 2)
    w = weight_multiplicities("B", 2, (1, 0))
    assert subalgebra_highest_weights(b2, w, tuple(range(b2.size))) == {fr(1, 0): 1}


def test_g2_seven_dim_to_long_triangle():
    g2 = build_positive_roots("G", 2)
    w = weight_multiplicities("G", 2, (1, 0, -1))
    hw = subalgebra_highest_weights(g2, w, length_class_indices(g2, "long"))
    assert hw == {fr(1, 0, -1): 1, fr(1, -1, 0): 1, fr(0, 0, 0): 1}


def test_b2_ten_dim_restriction():
    b2 = build_positive_roots("B", 2)
    w = weight_multiplicities("B", 2, (1, 1))
    hw = subalgebra_highest_weights(b2, w, (b2.index_of((1, -1)),))
    assert hw == {
        fr(1, 1): 1,
        fr(1, 0): 1,
        fr(1, -1): 1,
        fr(0, 0): 1,
        fr(0, -1): 1,
        fr(-1, -1): 1,
    }


def test_subsystem_validation():
    b2 = build_positive_roots("B", 2)
    w = weight_multiplicities("B", 2, (1, 0))
    with pytest.raises(DomainError):
        subalgebra_highest_weights(b2, w, (0, 2))  # e2, e1: sum e1+e2 missing
    with pytest.raises(DomainError):
        subalgebra_highest_weights(b2, w, ())
    with pytest.raises(DomainError):
        subalgebra_highest_weights(b2, w, (1, 1))


def test_sub_weyl_group_orders():
    b2 = build_positive_roots("B", 2)
    assert len(sub_weyl_group(b2, (1,))) == 2
    assert len(sub_weyl_group(b2, tuple(range(4)))) == 8
    g2 = build_positive_roots("G", 2)
    assert len(sub_weyl_group(g2, length_class_indices(g2, "long"))) == 6


def test_fundamental_weights_frozen():
    b2 = build_positive_roots("B", 2)
    assert fundamental_weights(b2) == (fr(F(1, 2), F(1, 2)), fr(1, 0))
    g2 = build_positive_roots("G", 2)
    assert fundamental_weights(g2) == (fr(1, 0, -1), fr(2, -1, -1))
    # order follows the lex order of the simple roots: e1-e2 before e0-e1
    a2 = build_positive_roots("A", 2)
    assert fundamental_weights(a2) == (
        fr(F(1, 3), F(1, 3), F(-2, 3)),
        fr(F(2, 3), F(-1, 3), F(-1, 3)),
    )


def test_match_pattern_examples():
    b2 = build_positive_roots("B", 2)
    w = weight_multiplicities("B", 2, (1, 0))
    hw = subalgebra_highest_weights(b2, w, (b2.index_of((1, -1)),))
    m = match_pattern(hw)
    assert m is not None
    assert m.coefficients == (0, 1)
    assert m.total == 3
    # anchor goes to the lexicographically greatest point
    assert m.anchors[0][1] == fr(1, 0)


def test_match_pattern_degenerate_cases():
    assert match_pattern({fr(5, 7): 1}).coefficients == (0, 0)
    assert match_pattern({fr(0, 0): 1, fr(1, 0): 1}) is None
    assert match_pattern({fr(0, 0): 1, fr(1, 0): 1, fr(2, 0): 1}) is None
    with pytest.raises(DomainError):
        match_pattern({})
    with pytest.raises(DomainError):
        match_pattern({fr(0, 0): 1}, "A", 3)


def test_match_pattern_respects_multiplicity_profile():
    # six points of multiplicity 1 do not form the 6-dim triangle if doubled
    hw = {fr(0, 0): 2, fr(1, 0): 2, fr(0, 1): 2}
    assert match_pattern(hw) is None


def test_length_classes():
    b2 = build_positive_roots("B", 2)
    assert length_class_indices(b2, "long") == (1, 3)
    assert length_class_indices(b2, "short") == (0, 2)
    with pytest.raises(DomainError):
        length_class_indices(build_positive_roots("A", 2), "long")
    with pytest.raises(DomainError):
        length_class_indices(build_positive_roots("D", 4), "short")

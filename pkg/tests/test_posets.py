"""Tests for chain products, order complexes and K_lambda h-vectors."""

from __future__ import annotations

import itertools
import math

import pytest

from edgewise.combinat import des, eulerian_vector, multiset_permutations, partitions
from edgewise.complexes import (
    CapacityError,
    SimplicialComplex,
    are_isomorphic,
    full_simplex,
    h_vector,
    join,
)
from edgewise.posets import (
    GradedPoset,
    chain_product,
    h_k_lambda,
    h_k_lambda_by_words,
    h_k_lambda_from_complex,
    h_k_lambda_recurrence,
    is_join_irreducible,
    k_lambda,
    maximal_chain_labels,
    maximal_chains,
    order_complex,
    proper_part,
    r_label_product,
)


def barycentric_boundary(k: int) -> SimplicialComplex:
    """Barycentric subdivision of the boundary of the (k-1)-simplex,
    built directly from flags of proper subsets of {1..k}."""
    ground = tuple(range(1, k + 1))
    subsets = [
        frozenset(c)
        for r in range(1, k)
        for c in itertools.combinations(ground, r)
    ]
    facets = []

    def extend(flag):
        grown = False
        for s in subsets:
            if flag[-1] < s:
                grown = True
                extend(flag + [s])
        if not grown:
            facets.append(tuple(flag))

    for s in subsets:
        if len(s) == 1:
            extend([s])
    return SimplicialComplex(facets)


class TestChainProduct:
    def test_single_chain(self):
        P = chain_product((2,))
        assert set(P.elements) == {(0,), (1,), (2,)}
        assert set(P.covers) == {((0,), (1,)), ((1,), (2,))}

    def test_element_count(self):
        for lengths in [(1, 1), (2, 1), (3, 2, 1)]:
            P = chain_product(lengths)
            assert len(P.elements) == math.prod(m + 1 for m in lengths)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            chain_product(())
        with pytest.raises(ValueError):
            chain_product((2, 0))

    def test_unique_bottom_and_top(self):
        P = chain_product((2, 2, 1))
        assert P.minimal_elements() == ((0, 0, 0),)
        assert P.maximal_elements() == ((2, 2, 1),)


class TestRLabeling:
    def test_labels_are_raised_coordinates(self):
        P = r_label_product(chain_product((1, 1)))
        assert P.cover_label((0, 0), (1, 0)) == 1
        assert P.cover_label((0, 0), (0, 1)) == 2

    def test_verify_passes_for_products(self):
        for lengths in [(3,), (1, 1, 1), (2, 2), (3, 2, 1)]:
            r_label_product(chain_product(lengths), verify=True)

    def test_non_product_rejected(self):
        V = GradedPoset(("a", "b", "c"), (("a", "b"), ("a", "c")))
        with pytest.raises(ValueError):
            r_label_product(V)
        missing = GradedPoset(
            ((0, 0), (1, 0), (1, 1)),
            (((0, 0), (1, 0)), ((1, 0), (1, 1))),
        )
        with pytest.raises(ValueError):
            r_label_product(missing)

    def test_chain_label_words_are_multiset_words(self):
        # Reading labels along maximal chains of P_lam gives each word over
        # the multiset {1^lam_1, ..., s^lam_s} exactly once.
        for k in range(2, 6):
            for lam in partitions(k):
                P = r_label_product(chain_product(lam), verify=False)
                words = maximal_chain_labels(P)
                assert sorted(words) == sorted(multiset_permutations(lam))

    def test_chain_count(self):
        P = chain_product((1, 1, 1))
        assert len(maximal_chains(P)) == 6


class TestOrderComplex:
    def test_reduced_of_short_chain_is_empty_complex(self):
        assert order_complex(chain_product((1,)), reduced=True) == SimplicialComplex([()])

    def test_proper_part_needs_bounds(self):
        two_points = GradedPoset(("a", "b"), ())
        with pytest.raises(ValueError):
            proper_part(two_points)

    def test_unreduced_chain_is_simplex(self):
        K = order_complex(chain_product((2,)))
        assert K == full_simplex(((0,), (1,), (2,)))

    def test_descent_count_gives_h(self):
        # h_m of the reduced order complex counts maximal chains whose label
        # word has m descents.
        for lam in [(1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1)]:
            P = r_label_product(chain_product(lam), verify=False)
            k = sum(lam)
            hist = [0] * k
            for word in maximal_chain_labels(P):
                hist[des(word)] += 1
            assert h_vector(order_complex(P, reduced=True)) == tuple(hist)


class TestKLambda:
    def test_full_part_is_simplex(self):
        for k in range(2, 6):
            K = k_lambda((k,))
            assert K.num_facets == 1
            assert K.dim == k - 2

    def test_two_singletons_is_s0(self):
        K = k_lambda((1, 1))
        assert K.f_vector() == (1, 2)

    def test_hexagon(self):
        K = k_lambda((1, 1, 1))
        assert K.f_vector() == (1, 6, 6)
        assert h_vector(K) == (1, 4, 1)

    def test_vertex_and_facet_counts(self):
        for k in range(2, 7):
            for lam in partitions(k):
                K = k_lambda(lam)
                assert len(K.vertices) == math.prod(p + 1 for p in lam) - 2
                expected = math.factorial(k)
                for p in lam:
                    expected //= math.factorial(p)
                assert K.num_facets == expected
                assert K.is_pure() and K.dim == k - 2

    def test_all_singletons_is_barycentric_boundary(self):
        for k in range(2, 6):
            assert are_isomorphic(
                k_lambda((1,) * k), barycentric_boundary(k), max_vertices=32
            )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            k_lambda((1,))
        with pytest.raises(ValueError):
            k_lambda((1, 2))
        with pytest.raises(ValueError):
            k_lambda(())


class TestHKLambda:
    def test_three_routes_agree(self):
        for k in range(2, 7):
            for lam in partitions(k):
                h = h_k_lambda(lam)
                assert h == h_k_lambda_by_words(lam)
                assert h == h_k_lambda_recurrence(lam)
                assert h == h_k_lambda_from_complex(lam)

    def test_two_part_closed_form(self):
        for k in range(2, 9):
            for lam in partitions(k, s=2):
                expected = tuple(
                    math.comb(lam[0], i) * math.comb(lam[1], i) for i in range(k)
                )
                assert h_k_lambda(lam) == expected

    def test_all_singletons_is_eulerian(self):
        for k in range(2, 8):
            assert h_k_lambda((1,) * k) == eulerian_vector(k)

    def test_last_nonzero_entry(self):
        for k in range(2, 8):
            for lam in partitions(k):
                h = h_k_lambda(lam)
                last = k - lam[0]
                expected = math.prod(math.comb(lam[0], p) for p in lam[1:])
                if last == 0:
                    assert h == (1,) + (0,) * (k - 1)
                else:
                    assert h[last] == expected
                    assert all(v == 0 for v in h[last + 1 :])
                    assert h[last] > 0

    def test_simplex_h(self):
        assert h_k_lambda((4,)) == (1, 0, 0, 0)
        assert h_k_lambda((2, 1)) == (1, 2, 0)


class TestJoinIrreducible:
    def test_points(self):
        assert is_join_irreducible(SimplicialComplex([(1,)]))
        assert is_join_irreducible(SimplicialComplex([(1,), (2,)]))

    def test_full_simplex_reducible(self):
        assert not is_join_irreducible(full_simplex((1, 2, 3)))

    def test_explicit_join_detected(self):
        square = join(
            SimplicialComplex([(0,), (1,)]), SimplicialComplex([(2,), (3,)])
        )
        assert not is_join_irreducible(square)

    def test_cone_reducible(self):
        cone = SimplicialComplex([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1)])
        assert not is_join_irreducible(cone)

    def test_k_lambda_irreducible_unless_single_part(self):
        for k in range(2, 6):
            for lam in partitions(k):
                if lam == (k,):
                    continue
                assert is_join_irreducible(k_lambda(lam)), lam
        for k in range(3, 6):
            assert not is_join_irreducible(k_lambda((k,)))

    def test_k2_simplex_is_point(self):
        assert is_join_irreducible(k_lambda((2,)))

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            is_join_irreducible(full_simplex(range(25)))
        assert not is_join_irreducible(full_simplex(range(25)), max_components=25)

"""Tests for the edgewise subdivision: codes, ridges, types, links."""

from __future__ import annotations

import itertools
import math

import pytest

from edgewise.combinat import partitions
from edgewise.complexes import (
    CapacityError,
    SimplicialComplex,
    are_isomorphic,
    full_simplex,
    join,
)
from edgewise.posets import k_lambda
from edgewise.subdivision import (
    VertexType,
    build_complex,
    classify_link_of_face,
    code_of_facet,
    corner_support_partition,
    corners,
    count_distinct_links_dim,
    count_faces_with_link_type,
    count_link_types,
    count_link_types_of_faces,
    decode_facet,
    encode_facet,
    facet_codes,
    is_interior_vertex,
    link_of_face,
    link_of_vertex,
    number_of_facets,
    number_of_vertices,
    off_export,
    q_sequence,
    ridge_neighbors,
    s_v_permutations,
    star_of_vertex,
    vertex_partition,
    vertex_set,
    vertex_type,
)

SMALL_GRID = [(k, q) for k in (2, 3, 4, 5) for q in (1, 2, 3)]


class TestVertices:
    def test_counts(self):
        for k, q in SMALL_GRID:
            vs = vertex_set(k, q)
            assert len(vs) == number_of_vertices(k, q)
            assert len(vs) == math.comb(q + k - 1, k - 1)
            assert len(set(vs)) == len(vs)

    def test_corners_are_vertices(self):
        for k, q in SMALL_GRID:
            vs = set(vertex_set(k, q))
            cs = corners(k, q)
            assert len(cs) == k
            assert set(cs) <= vs
        assert corners(4, 3) == ((0, 0, 0), (0, 0, 3), (0, 3, 3), (3, 3, 3))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            vertex_set(1, 2)
        with pytest.raises(ValueError):
            vertex_set(3, 0)


class TestCodes:
    def test_decode_example(self):
        assert decode_facet((1, 0), 2) == ((0, 1), (1, 1), (1, 2))

    def test_decode_chain_shape(self):
        for k, q in SMALL_GRID:
            vs = set(vertex_set(k, q))
            for a in facet_codes(k, q):
                chain = decode_facet(a, q)
                assert len(chain) == k
                assert len(set(chain)) == k
                assert set(chain) <= vs
                assert chain[0] == tuple(sorted(a))
                assert chain[-1] == tuple(c + 1 for c in chain[0])
                for lower, upper in zip(chain, chain[1:]):
                    diff = [u - l for u, l in zip(upper, lower)]
                    assert sorted(diff) == [0] * (k - 2) + [1]

    def test_code_roundtrip(self):
        for k, q in SMALL_GRID:
            for a in facet_codes(k, q):
                assert code_of_facet(decode_facet(a, q), q) == a

    def test_roundtrip_survives_shuffled_vertices(self):
        chain = decode_facet((2, 0, 1), 3)
        assert code_of_facet(reversed(chain), 3) == (2, 0, 1)

    def test_encode_decode_bijection(self):
        # Every compatible, in-region pair (v, pi) hits each code exactly once.
        for k, q in [(3, 2), (4, 2), (3, 3)]:
            seen = []
            for v in vertex_set(k, q):
                for pi in itertools.permutations(range(1, k)):
                    try:
                        seen.append(encode_facet(v, pi, q))
                    except ValueError:
                        continue
            assert sorted(seen) == sorted(facet_codes(k, q))
            assert len(set(seen)) == len(seen)

    def test_encode_rejects_incompatible_tie(self):
        with pytest.raises(ValueError):
            encode_facet((1, 1), (2, 1), 3)
        assert encode_facet((1, 1), (1, 2), 3) == (1, 1)

    def test_encode_rejects_out_of_region(self):
        with pytest.raises(ValueError):
            encode_facet((0, 2), (1, 2), 2)

    def test_code_of_facet_rejects_non_facets(self):
        with pytest.raises(ValueError):
            code_of_facet([(0, 0), (1, 1), (1, 2)], 2)
        with pytest.raises(ValueError):
            code_of_facet([(0, 0), (0, 1)], 2)


class TestComplex:
    def test_facet_count_and_purity(self):
        for k, q in SMALL_GRID:
            K = build_complex(k, q)
            assert K.num_facets == number_of_facets(k, q) == q ** (k - 1)
            assert K.is_pure()
            assert K.dim == k - 1
            assert len(K.vertices) == number_of_vertices(k, q)

    def test_q1_is_single_simplex(self):
        K = build_complex(4, 1)
        assert K.num_facets == 1
        assert K == full_simplex(vertex_set(4, 1))

    def test_k2_is_path(self):
        K = build_complex(2, 5)
        assert K.facets == frozenset(
            frozenset(((i,), (i + 1,))) for i in range(5)
        )

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build_complex(5, 10, max_facets=999)

    def test_cofacet_criterion(self):
        # Two vertices share a facet iff their difference lies in {0,1}^(k-1)
        # up to sign.
        for k, q in [(3, 3), (4, 2)]:
            K = build_complex(k, q)
            cofacet = {
                frozenset((u, v))
                for F in K.facets
                for u, v in itertools.combinations(F, 2)
            }
            for u, v in itertools.combinations(vertex_set(k, q), 2):
                diff = {a - b for a, b in zip(u, v)}
                expected = diff <= {0, 1} or diff <= {-1, 0}
                assert (frozenset((u, v)) in cofacet) == expected, (u, v)


class TestRidges:
    def test_against_brute_force(self):
        for k, q in SMALL_GRID:
            facets = {a: decode_facet(a, q) for a in facet_codes(k, q)}
            members = {a: frozenset(chain) for a, chain in facets.items()}
            for a, chain in facets.items():
                nbrs = ridge_neighbors(a, q)
                assert set(nbrs) == set(range(1, k + 1))
                for p in range(1, k + 1):
                    ridge = members[a] - {chain[p - 1]}
                    others = [
                        b for b, mem in members.items() if b != a and ridge <= mem
                    ]
                    assert len(others) <= 1
                    if others:
                        assert nbrs[p] == others[0], (a, p)
                    else:
                        assert nbrs[p] is None, (a, p)

    def test_neighbor_overlap(self):
        for k, q in [(4, 3), (5, 2)]:
            for a in facet_codes(k, q):
                mine = set(decode_facet(a, q))
                for p, b in ridge_neighbors(a, q).items():
                    if b is None:
                        continue
                    theirs = set(decode_facet(b, q))
                    assert len(mine & theirs) == k - 1

    def test_boundary_count_k2(self):
        # The path has exactly two boundary ridges (its endpoints).
        boundary = sum(
            1
            for a in facet_codes(2, 5)
            for b in ridge_neighbors(a, 5).values()
            if b is None
        )
        assert boundary == 2


class TestVertexTypes:
    def test_example(self):
        assert vertex_type((0, 0, 1, 1, 2, 9), 9) == VertexType(2, (2, 1), 1)
        assert vertex_partition((0, 0, 1, 1, 2, 9), 9) == (4, 2, 1)

    def test_partition_sums_to_k(self):
        for k, q in SMALL_GRID:
            for v in vertex_set(k, q):
                lam = vertex_partition(v, q)
                assert sum(lam) == k
                assert lam == tuple(sorted(lam, reverse=True))

    def test_corner_has_single_part(self):
        for k, q in SMALL_GRID:
            for w in corners(k, q):
                assert vertex_partition(w, q) == (k,)

    def test_interior_iff_all_parts_one(self):
        for k, q in SMALL_GRID + [(4, 4), (3, 4)]:
            for v in vertex_set(k, q):
                all_ones = vertex_partition(v, q) == (1,) * k
                assert is_interior_vertex(v, q) == all_ones, v

    def test_interior_exists_iff_q_at_least_k(self):
        for k, q in SMALL_GRID + [(2, 2), (3, 3), (4, 4)]:
            has = any(is_interior_vertex(v, q) for v in vertex_set(k, q))
            assert has == (q >= k)


class TestStars:
    def test_star_matches_global_filter(self):
        for k, q in [(2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
            K = build_complex(k, q)
            for v in vertex_set(k, q):
                expected = frozenset(F for F in K.facets if v in F)
                assert star_of_vertex(v, q).facets == expected, (k, q, v)

    def test_star_size_is_multinomial(self):
        for k, q in SMALL_GRID:
            for v in vertex_set(k, q):
                lam = vertex_partition(v, q)
                expected = math.factorial(k)
                for part in lam:
                    expected //= math.factorial(part)
                assert len(s_v_permutations(v, q)) == expected
                assert star_of_vertex(v, q).num_facets == expected

    def test_star_is_vertex_join_link(self):
        for v in [(0, 1), (1, 1), (0, 2, 3), (1, 1, 2)]:
            q = 3
            S = star_of_vertex(v, q)
            L = link_of_vertex(v, q, certify=False)
            assert S == join(full_simplex((v,)), L)


class TestVertexLinks:
    def test_links_certify_small_grid(self):
        for k, q in [(3, 3), (4, 2), (4, 4)]:
            for v in vertex_set(k, q):
                link_of_vertex(v, q, certify=True)

    def test_link_vertex_count(self):
        for k, q in [(3, 3), (4, 3), (5, 2)]:
            for v in vertex_set(k, q):
                lam = vertex_partition(v, q)
                L = link_of_vertex(v, q, certify=False)
                assert len(L.vertices) == math.prod(p + 1 for p in lam) - 2

    def test_interior_link_is_barycentric_sphere(self):
        v = (1, 2, 3)
        L = link_of_vertex(v, 4, certify=True)
        assert are_isomorphic(L, k_lambda((1, 1, 1, 1)), max_vertices=24)

    def test_all_link_types_realized(self):
        # Witness vertices: mu = (m_1, ..., m_s) gives the vertex with m_1 - 1
        # zeros then blocks of 1s, 2s, ...; its partition is mu re-sorted.
        k, q = 5, 5
        seen = set()
        for v in vertex_set(k, q):
            seen.add(vertex_partition(v, q))
        assert seen == set(partitions(k))


class TestFaceLinks:
    def test_block_decomposition_example(self):
        face = [
            (1, 1, 3, 3, 3, 6, 7),
            (2, 2, 3, 3, 3, 6, 8),
            (2, 2, 3, 3, 4, 7, 8),
        ]
        report = link_of_face(face, 9, certify=True)
        assert report.blocks == ((1, 2, 7), (5, 6), (3, 4, 8))
        assert report.link_class.block_sizes == (3, 3, 2)
        assert report.link_class.signatures == (
            (1, 1),
            (2, 1),
            (2, 1),
        )
        assert report.link_class.simplex_part == 0
        assert report.certified

    def test_single_vertex_face_matches_vertex_route(self):
        q = 3
        for v in vertex_set(4, q):
            report = link_of_face([v], q, certify=True)
            lam = vertex_partition(v, q)
            assert report.link_class.signatures == (lam,)
            direct = link_of_vertex(v, q, certify=False)
            assert report.link == direct

    def test_facet_face_has_empty_link(self):
        chain = decode_facet((1, 0, 2), 3)
        report = link_of_face(chain, 3, certify=True)
        assert report.link == SimplicialComplex([()])
        assert all(sum(s) == 1 for s in report.link_class.signatures)

    def test_edge_faces_certify(self):
        K = build_complex(4, 3)
        edges = {f for f in K.faces() if len(f) == 2}
        for edge in edges:
            link_of_face(tuple(edge), 3, certify=True)

    def test_non_face_rejected(self):
        with pytest.raises(ValueError):
            link_of_face([(0, 0), (1, 2)], 2)
        with pytest.raises(ValueError):
            link_of_face([], 2)

    def test_simplex_part_key(self):
        # A face whose blocks all have one value group yields a simplex link.
        chain = decode_facet((0, 0, 0), 3)
        face = [chain[0], chain[3]]
        report = link_of_face(face, 3, certify=True)
        p = report.link_class.simplex_part
        assert report.link_class.join_parts == ()
        assert report.link == full_simplex(report.link.vertices)
        assert len(report.link.vertices) == p


class TestLinkTypeCensus:
    def grid_census(self, k, q, t):
        K = build_complex(k, q)
        keys = set()
        for face in K.faces():
            if len(face) != t:
                continue
            keys.add(classify_link_of_face(tuple(face), q).iso_key)
        return len(keys)

    @pytest.mark.parametrize("k,q", [(4, 1), (4, 2), (4, 3), (4, 4), (5, 2), (3, 3)])
    def test_formula_matches_census(self, k, q):
        for t in range(1, k + 1):
            assert self.grid_census(k, q, t) == count_link_types_of_faces(k, q, t), (
                k,
                q,
                t,
            )

    def test_vertex_type_count_consistency(self):
        for k in range(2, 8):
            for q in range(1, 8):
                assert count_link_types_of_faces(k, q, 1) == count_link_types(k, q)

    def test_facet_case_is_one(self):
        assert count_link_types_of_faces(6, 4, 6) == 1


class TestCountingTables:
    def test_corner_gap_partition(self):
        assert corner_support_partition((1, 4), 6) == (3, 3)
        assert corner_support_partition((2,), 6) == (6,)
        assert corner_support_partition((1, 2, 3, 4, 5, 6), 6) == (1,) * 6

    def test_face_counts_against_gap_census(self):
        for k in range(2, 9):
            census: dict = {}
            for s in range(1, k + 1):
                for sub in itertools.combinations(range(1, k + 1), s):
                    beta = corner_support_partition(sub, k)
                    census[beta] = census.get(beta, 0) + 1
            for beta in partitions(k):
                assert census.get(beta, 0) == count_faces_with_link_type(k, k, beta)

    def test_k6_table(self):
        expected = {
            (6,): 6,
            (5, 1): 6,
            (4, 2): 6,
            (3, 3): 3,
            (4, 1, 1): 6,
            (3, 2, 1): 12,
            (2, 2, 2): 2,
            (3, 1, 1, 1): 6,
            (2, 2, 1, 1): 9,
            (2, 1, 1, 1, 1): 6,
            (1, 1, 1, 1, 1, 1): 1,
        }
        for beta, count in expected.items():
            assert count_faces_with_link_type(6, 6, beta) == count
        assert sum(expected.values()) == 2**6 - 1

    def test_face_count_row_sums(self):
        for k in range(2, 9):
            for s in range(1, k + 1):
                total = sum(
                    count_faces_with_link_type(k, k, beta) for beta in partitions(k, s)
                )
                assert total == math.comb(k, s)

    def test_zero_when_too_few_levels(self):
        assert count_faces_with_link_type(4, 2, (1, 1, 1, 1)) == 0
        assert count_faces_with_link_type(4, 2, (2, 2)) == 2
        assert count_faces_with_link_type(4, 2, (3, 1)) == 4
        assert count_faces_with_link_type(3, 1, (2, 1)) == 0

    def test_q_sequence_table(self):
        assert q_sequence(9) == (1, 3, 7, 16, 34, 74, 151, 312, 625, 1245)

    def test_distinct_links_table(self):
        expected = (2, 5, 12, 28, 62, 136, 287, 599, 1224, 2469)
        for m, value in enumerate(expected):
            assert count_distinct_links_dim(m) == value

    def test_distinct_links_realized_at_diagonal(self):
        for m in range(5):
            k = q = 2 * m + 2
            assert count_link_types_of_faces(k, q, m + 1) == count_distinct_links_dim(m)

    def test_link_type_count_examples(self):
        # Partitions of k with at most min(k, q) parts.
        assert count_link_types(3, 1) == 1
        assert count_link_types(3, 2) == 2
        assert count_link_types(3, 3) == 3
        assert count_link_types(6, 2) == 4
        assert count_link_types(6, 99) == 11


class TestOffExport:
    def parse(self, text: str):
        lines = [line for line in text.splitlines() if line]
        if lines[0] == "OFF":
            dim = 3
            counts_at = 1
        else:
            assert lines[0] == "nOFF"
            dim = int(lines[1])
            counts_at = 2
        nv, nf, _ = map(int, lines[counts_at].split())
        verts = [
            tuple(int(float(c)) for c in line.split())
            for line in lines[counts_at + 1 : counts_at + 1 + nv]
        ]
        facets = []
        for line in lines[counts_at + 1 + nv :]:
            parts = list(map(int, line.split()))
            assert parts[0] == len(parts) - 1
            facets.append([verts[i] for i in parts[1:]])
        return dim, verts, facets

    def test_roundtrip_small(self):
        for k, q in [(2, 3), (3, 2), (4, 2), (5, 2)]:
            text = off_export(k, q)
            dim, verts, facets = self.parse(text)
            pad = dim - (k - 1)
            stripped = [v[: k - 1] for v in verts]
            assert all(v[k - 1 :] == (0,) * pad for v in verts)
            K = SimplicialComplex(
                [tuple(v[: k - 1] for v in F) for F in facets]
            )
            assert K == build_complex(k, q)
            assert sorted(stripped) == sorted(vertex_set(k, q))

    def test_header_variants(self):
        assert off_export(3, 2).startswith("OFF\n")
        assert off_export(4, 2).startswith("OFF\n")
        assert off_export(5, 2).startswith("nOFF\n4\n")

    def test_deterministic(self):
        assert off_export(4, 3) == off_export(4, 3)

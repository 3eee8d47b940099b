#!/usr/bin/env python3
"""
Tests for benzenoid.py - Benzenoid graphs, Kekule structures and v-bars.
"""

import itertools
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from benzenoid import (
    SLANT,
    VERTICAL,
    VBarTuple,
    audit_vbar_rows,
    build_benzenoid,
    constrained_completion,
    enumerate_kekule,
    extract_vbars,
    is_kekule,
    kekule_to_matrix,
    matrix_to_kekule,
    reconstruct_from_vbars,
    seam_paths,
    validate_vbar_tuple,
    vbar_positions,
    vbar_tuple_from_chain,
)
from errors import BudgetExceededError, ValidationError
from exactcount import count_kekule_closed, hexagon_count
from wim import WIMatrix, enumerate_wim, pulse_decompose


def all_vbar_tuples(n, r):
    """Every valid v-bar tuple for O{n, 2, r}."""
    for xs in itertools.combinations_with_replacement(range(n + 1), r):
        for ys in itertools.combinations_with_replacement(range(n + 1), r):
            vbars = VBarTuple(n=n, r=r, xs=xs, ys=ys)
            if validate_vbar_tuple(vbars):
                yield vbars


@pytest.mark.unit
class TestBuildBenzenoid:
    """Tests for build_benzenoid."""

    def test_two_hexagons(self):
        """Test O{1,2,1}: 2 hexagons, 10 vertices, 11 edges."""
        graph = build_benzenoid(1, 2, 1)

        assert len(graph.hexagons) == 2
        assert graph.vertex_count == 10
        assert len(graph.edges) == 11

    def test_single_hexagon(self):
        """Test O{1,1,1}: one hexagon with two vertical edges."""
        graph = build_benzenoid(1, 1, 1)

        assert graph.vertex_count == 6
        assert len(graph.vbar_index) == 2

    def test_row_widths(self):
        """Test that O{2,2,2} has rows of 2, 3, 2 hexagons."""
        graph = build_benzenoid(2, 2, 2)

        assert graph.hex_rows == (2, 3, 2)
        assert len(graph.hexagons) == 7

    def test_large_example(self):
        """Test that O{6,2,6} has 47 hexagons in rows of 6, 7, ..., 7, 6."""
        graph = build_benzenoid(6, 2, 6)

        assert len(graph.hexagons) == 47
        assert graph.hex_rows == (6, 7, 7, 7, 7, 7, 6)

    @pytest.mark.parametrize("p,q,r", itertools.product(range(1, 4), repeat=3))
    def test_hexagon_count_and_euler(self, p, q, r):
        """Test hexagon counts and V - E + hexagons = 1 for every small shape."""
        graph = build_benzenoid(p, q, r)

        assert len(graph.hexagons) == hexagon_count(p, q, r)
        assert graph.vertex_count - len(graph.edges) + len(graph.hexagons) == 1

    def test_edges_normalized_and_sorted(self):
        """Test that edges are (u, v) with u < v in sorted order."""
        graph = build_benzenoid(2, 2, 2)

        assert all(u < v for u, v in graph.edges)
        assert list(graph.edges) == sorted(graph.edges)

    def test_vertical_labels(self):
        """Test that row t carries hex_rows[t] + 1 labelled vertical edges."""
        graph = build_benzenoid(3, 2, 2)
        for row, width in enumerate(graph.hex_rows):
            assert len(graph.row_vbars(row)) == width + 1
            for edge in graph.row_vbars(row):
                assert graph.edge_kind(edge) == VERTICAL

    def test_cached_and_equal(self):
        """Test that repeated builds share one graph."""
        assert build_benzenoid(2, 2, 2) is build_benzenoid(2, 2, 2)
        assert build_benzenoid(2, 2, 2) != build_benzenoid(2, 2, 1)

    @pytest.mark.parametrize("params", [(0, 2, 1), (1, 0, 1), (1, 2, 0)])
    def test_rejects_nonpositive(self, params):
        """Test that zero sides raise ValidationError."""
        with pytest.raises(ValidationError):
            build_benzenoid(*params)


@pytest.mark.unit
class TestSeams:
    """Tests for seam_paths."""

    @pytest.mark.parametrize("p,r", [(1, 1), (2, 2), (3, 1), (2, 3)])
    def test_every_vertex_on_one_seam(self, p, r):
        """Test that seams partition the vertex set."""
        graph = build_benzenoid(p, 2, r)
        seams = seam_paths(graph)
        flat = [v for seam in seams for v in seam]

        assert sorted(flat) == list(range(graph.vertex_count))
        assert len(seams) == r + 2

    def test_seams_use_slant_edges(self):
        """Test that consecutive seam vertices share a slant edge."""
        graph = build_benzenoid(2, 2, 2)
        for seam in seam_paths(graph):
            for u, v in zip(seam, seam[1:]):
                assert graph.edge_kind((min(u, v), max(u, v))) == SLANT


@pytest.mark.unit
class TestEnumerateKekule:
    """Tests for enumerate_kekule and is_kekule."""

    def test_known_counts(self):
        """Test small benzenoids against hand counts."""
        assert sum(1 for _ in enumerate_kekule(build_benzenoid(1, 2, 1))) == 3
        assert sum(1 for _ in enumerate_kekule(build_benzenoid(1, 1, 1))) == 2
        assert sum(1 for _ in enumerate_kekule(build_benzenoid(2, 2, 2))) == 20

    def test_outputs_are_kekule(self):
        """Test that every output is a perfect matching."""
        graph = build_benzenoid(2, 2, 2)
        for structure in enumerate_kekule(graph):
            assert is_kekule(graph, structure.selected)
            assert len(structure.selected) == graph.vertex_count // 2

    def test_deterministic(self):
        """Test that two runs give the same stream."""
        graph = build_benzenoid(2, 2, 1)

        assert list(enumerate_kekule(graph)) == list(enumerate_kekule(graph))

    def test_empty_set_is_not_kekule(self):
        """Test that no edges do not cover the hexagon."""
        assert not is_kekule(build_benzenoid(1, 1, 1), [])

    def test_foreign_edge_is_not_kekule(self):
        """Test that a cover using a non-edge is rejected."""
        graph = build_benzenoid(1, 1, 1)

        assert not graph.graph.has_edge(0, 5)
        assert not is_kekule(graph, [(0, 5), (1, 3), (2, 4)])

    def test_budget(self):
        """Test that max_edges guards the enumeration."""
        with pytest.raises(BudgetExceededError):
            next(enumerate_kekule(build_benzenoid(2, 2, 2), max_edges=10))

    @pytest.mark.slow
    @pytest.mark.parametrize("p,q,r", itertools.product(range(1, 4), repeat=3))
    def test_matches_product_formula(self, p, q, r):
        """Test enumeration against the closed product over all p, q, r <= 3."""
        count = sum(1 for _ in enumerate_kekule(build_benzenoid(p, q, r)))

        assert count == count_kekule_closed(p, q, r)


@pytest.mark.unit
class TestVBars:
    """Tests for v-bar tuples, extraction and reconstruction."""

    def test_validate_examples(self, w_vbars):
        """Test valid and invalid tuples."""
        assert validate_vbar_tuple(w_vbars)
        assert not validate_vbar_tuple(VBarTuple(n=3, r=1, xs=(1,), ys=(2,)))
        assert not validate_vbar_tuple(VBarTuple(n=3, r=2, xs=(0, 3), ys=(2, 3)))
        assert not validate_vbar_tuple(VBarTuple(n=3, r=2, xs=(1, 3), ys=(1, 0)))

    def test_positions(self, w_vbars):
        """Test the 2r v-bar positions of the example."""
        assert vbar_positions(w_vbars) == [
            (0, 2), (1, 2), (1, 4), (2, 3), (2, 5), (3, 3),
            (3, 5), (4, 4), (4, 5), (5, 4), (5, 7), (6, 5),
        ]

    def test_example_structure(self, w_vbars):
        """Test reconstruction and extraction on O{6,2,6}."""
        graph = build_benzenoid(6, 2, 6)
        structure = reconstruct_from_vbars(graph, w_vbars)

        assert is_kekule(graph, structure.selected)
        assert structure.vbars() == sorted(vbar_positions(w_vbars))
        assert extract_vbars(structure) == w_vbars

    def test_top_right_tuple(self):
        """Test that xs = ys = (n, ..., n) reconstructs."""
        graph = build_benzenoid(3, 2, 2)
        vbars = VBarTuple(n=3, r=2, xs=(3, 3), ys=(3, 3))

        assert extract_vbars(reconstruct_from_vbars(graph, vbars)) == vbars

    def test_invalid_tuple_rejected(self):
        """Test that y_1 > x_1 cannot be reconstructed."""
        graph = build_benzenoid(1, 2, 1)
        with pytest.raises(ValidationError):
            reconstruct_from_vbars(graph, VBarTuple(n=1, r=1, xs=(0,), ys=(1,)))

    def test_wrong_graph(self, w_vbars):
        """Test that a tuple for another graph is rejected."""
        with pytest.raises(ValidationError):
            reconstruct_from_vbars(build_benzenoid(2, 2, 2), w_vbars)

    def test_extract_needs_two_rows(self):
        """Test that q != 2 has no v-bar tuple."""
        structure = next(enumerate_kekule(build_benzenoid(1, 1, 1)))
        with pytest.raises(ValidationError):
            extract_vbars(structure)

    def test_every_structure_has_valid_vbars(self):
        """Test extraction over all 20 structures of O{2,2,2}."""
        tuples = {extract_vbars(s) for s in enumerate_kekule(build_benzenoid(2, 2, 2))}

        assert len(tuples) == 20
        assert all(validate_vbar_tuple(t) for t in tuples)

    def test_reconstruction_covers_every_tuple(self):
        """Test that every valid tuple for n = r = 2 reconstructs and extracts back."""
        graph = build_benzenoid(2, 2, 2)
        tuples = list(all_vbar_tuples(2, 2))

        assert len(tuples) == 20
        for vbars in tuples:
            assert extract_vbars(reconstruct_from_vbars(graph, vbars)) == vbars

    def test_from_chain(self, w_matrix, w_vbars):
        """Test the chain-to-tuple identification."""
        assert vbar_tuple_from_chain(pulse_decompose(w_matrix)) == w_vbars

    def test_from_empty_chain(self):
        """Test that k = 1 has no tuple."""
        matrix = WIMatrix.from_lists([[1], [1]], k=1)

        assert vbar_tuple_from_chain(pulse_decompose(matrix)) is None


@pytest.mark.unit
class TestConstrainedCompletion:
    """Tests for constrained_completion."""

    def test_unconstrained_hexagon(self):
        """Test both matchings of a single hexagon."""
        assert len(constrained_completion(build_benzenoid(1, 1, 1), [], [])) == 2

    def test_conflicting_edges(self):
        """Test that two selected edges sharing a vertex have no completion."""
        graph = build_benzenoid(1, 1, 1)
        u = graph.edges[0][0]
        touching = [edge for edge in graph.edges if u in edge]

        assert constrained_completion(graph, touching[:2], []) == []

    def test_overlap_rejected(self):
        """Test that an edge cannot be forced both ways."""
        graph = build_benzenoid(1, 1, 1)
        with pytest.raises(ValidationError):
            constrained_completion(graph, [graph.edges[0]], [graph.edges[0]])

    @pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_vbars_force_unique_structure(self, n, r):
        """Test that fixing every vertical edge leaves exactly one matching."""
        graph = build_benzenoid(n, 2, r)
        verticals = set(graph.vbar_index.values())
        for vbars in all_vbar_tuples(n, r):
            chosen = {graph.vbar_index[pos] for pos in vbar_positions(vbars)}
            completions = constrained_completion(graph, chosen, verticals - chosen)

            assert completions == [reconstruct_from_vbars(graph, vbars)]


@pytest.mark.unit
class TestVBarRules:
    """Tests for audit_vbar_rows."""

    @pytest.mark.parametrize("n,r", itertools.product(range(1, 4), repeat=2))
    def test_every_rule_holds(self, n, r):
        """Test every rule on every structure of O{n,2,r} for n, r <= 3."""
        for structure in enumerate_kekule(build_benzenoid(n, 2, r)):
            audit = audit_vbar_rows(structure)
            assert all(audit.values()), (structure.vbars(), audit)

    def test_rule_names(self):
        """Test the audit keys."""
        structure = next(enumerate_kekule(build_benzenoid(1, 2, 1)))

        assert set(audit_vbar_rows(structure)) == {
            "top_row",
            "row_one",
            "one_to_right",
            "none_to_left",
            "middle_rows",
            "bottom_row",
            "vbar_count",
        }


@pytest.mark.unit
class TestMatrixToKekule:
    """Tests for matrix_to_kekule and kekule_to_matrix."""

    def test_example_round_trip(self, w_matrix, w_vbars):
        """Test the example matrix through the benzenoid and back."""
        structure = matrix_to_kekule(w_matrix)

        assert structure.graph.params == (6, 2, 6)
        assert extract_vbars(structure) == w_vbars
        assert kekule_to_matrix(structure) == w_matrix

    def test_all_ones(self):
        """Test the minimum matrix on O{2,2,1}."""
        matrix = WIMatrix.from_lists([[1, 1], [1, 1]], k=2)
        structure = matrix_to_kekule(matrix)

        assert extract_vbars(structure) == VBarTuple(n=2, r=1, xs=(2,), ys=(2,))
        assert kekule_to_matrix(structure) == matrix

    def test_rejects_k_one(self):
        """Test that k = 1 has no benzenoid."""
        with pytest.raises(ValidationError):
            matrix_to_kekule(WIMatrix.from_lists([[1], [1]], k=1))

    def test_rejects_three_rows(self):
        """Test that the mapping needs two rows."""
        with pytest.raises(ValidationError):
            matrix_to_kekule(WIMatrix.from_lists([[1], [1], [2]], k=2))

    def test_injective_onto_structures(self):
        """Test that the 20 matrices of 2 x 2, k = 3 hit all 20 structures."""
        images = {matrix_to_kekule(m) for m in enumerate_wim(2, 2, 3)}

        assert images == set(enumerate_kekule(build_benzenoid(2, 2, 2)))

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(2, 5)])
    def test_bijection(self, n, k):
        """Test injectivity, surjectivity and inverse for n <= 3, 2 <= k <= 4."""
        matrices = list(enumerate_wim(2, n, k))
        images = [matrix_to_kekule(m) for m in matrices]
        structures = set(enumerate_kekule(build_benzenoid(n, 2, k - 1)))

        assert len(set(images)) == len(matrices)
        assert set(images) == structures
        for structure in structures:
            assert matrix_to_kekule(kekule_to_matrix(structure)) == structure

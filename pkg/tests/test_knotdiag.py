"""PD code parsing, validation, and the presentation matrix."""

import pytest

from alexinv.exactla import det_poly
from alexinv.knotdiag import (
    PDCode,
    PDSyntaxError,
    PDValidationError,
    alexander_matrix,
    parse_pd,
    wirtinger,
)
from alexinv.polyring import IntPoly, normalize_delta

TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIGURE8 = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"


class TestParsing:
    def test_json_style(self):
        pd = parse_pd(TREFOIL)
        assert pd.n_crossings == 3
        assert pd.crossings[0] == (1, 4, 2, 5)

    def test_bracket_style(self):
        pd = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")
        assert pd == parse_pd(TREFOIL)

    def test_bracket_style_parens(self):
        pd = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]")
        assert pd.n_crossings == 3

    def test_whitespace_tolerated(self):
        assert parse_pd(" [[1, 4, 2, 5] ,[3,6,4,1],[5,2,6,3]] ") \
            == parse_pd(TREFOIL)

    def test_garbage_raises_syntax_error(self):
        with pytest.raises(PDSyntaxError):
            parse_pd("not a pd code")

    def test_wrong_arity_rejected(self):
        with pytest.raises((PDSyntaxError, PDValidationError)):
            parse_pd("[[1,2,3],[4,5,6]]")

    def test_bad_label_multiplicity_rejected(self):
        with pytest.raises(PDValidationError):
            parse_pd("[[1,1,1,2],[2,3,3,4]]")

    def test_two_component_link_rejected(self):
        # Hopf link: labels come back to each component after two edges.
        with pytest.raises(PDValidationError):
            parse_pd("[[2,3,1,4],[4,1,3,2]]")


class TestPDCode:
    def test_edge_count(self):
        pd = parse_pd(TREFOIL)
        assert pd.n_edges == 6

    def test_successor_wraps(self):
        pd = parse_pd(TREFOIL)
        assert pd.successor(1) == 2
        assert pd.successor(6) == 1

    def test_json_round_trip(self):
        pd = parse_pd(TREFOIL)
        assert parse_pd(pd.to_json()) == pd

    def test_empty_diagram_is_unknot(self):
        pd = PDCode(())
        assert pd.n_crossings == 0


class TestWirtinger:
    def test_trefoil_arcs_and_signs(self):
        data = wirtinger(parse_pd(TREFOIL))
        assert data.n_generators == 3
        assert [rel[3] for rel in data.relations] == [1, 1, 1]

    def test_figure8_has_both_signs(self):
        data = wirtinger(parse_pd(FIGURE8))
        signs = sorted(rel[3] for rel in data.relations)
        assert signs == [-1, -1, 1, 1]

    def test_arc_count_equals_crossing_count(self):
        for text in (TREFOIL, FIGURE8):
            pd = parse_pd(text)
            assert wirtinger(pd).n_generators == pd.n_crossings


class TestAlexanderMatrix:
    def test_shape_is_one_less_than_crossings(self):
        am = alexander_matrix(parse_pd(TREFOIL))
        assert am.matrix.n == 2
        assert am.deleted_row == 2
        assert am.deleted_col == 2

    def test_trefoil_determinant(self):
        am = alexander_matrix(parse_pd(TREFOIL))
        assert normalize_delta(det_poly(am.matrix)) == IntPoly((1, -1, 1))

    def test_figure8_determinant(self):
        am = alexander_matrix(parse_pd(FIGURE8))
        assert normalize_delta(det_poly(am.matrix)) == IntPoly((1, -3, 1))

    def test_empty_diagram_gives_empty_matrix(self):
        am = alexander_matrix(PDCode(()))
        assert am.matrix.n == 0
        assert am.deleted_row is None

    def test_row_entries_for_distinct_arcs(self):
        # Each positive-crossing row holds t, 1 - t, and -1.
        am = alexander_matrix(parse_pd(TREFOIL))
        full_entries = set()
        for row in am.matrix.entries:
            for e in row:
                full_entries.add(e.coeffs)
        assert (0, 1) in full_entries or (1, -1) in full_entries

    def test_determinant_independent_of_deleted_column(self):
        # Deleting any column yields the same normalized determinant.
        from alexinv.knotdiag import _full_matrix_rows  # type: ignore
        pd = parse_pd(FIGURE8)
        rows = _full_matrix_rows(pd)
        n = pd.n_crossings
        from alexinv.exactla import PolyMatrix
        seen = set()
        for drop in range(n):
            sub = [
                [rows[i][j] for j in range(n) if j != drop]
                for i in range(n - 1)
            ]
            d = det_poly(PolyMatrix.from_rows(sub))
            seen.add(normalize_delta(d))
        assert len(seen) == 1

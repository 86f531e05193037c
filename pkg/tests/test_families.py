from __future__ import annotations

import pytest
from hypothesis import given

import pathcomb as pc
from pathcomb.families import D_STEP, H_STEP, V_STEP

from conftest import bit_triangles, path_families


def tri(*rows):
    return pc.BitTriangle.from_rows([(), *rows])


class TestBitTriangle:
    def test_empty(self):
        t = pc.BitTriangle(())
        assert t.n == 0

    def test_shape_enforced(self):
        with pytest.raises(ValueError):
            pc.BitTriangle(((0,),))
        with pytest.raises(ValueError):
            pc.BitTriangle.from_rows([[], [2]])

    def test_text_round_trip_examples(self):
        t = tri([0], [1, 0])
        assert t.to_text() == "3\n0\n1 0\n"
        assert pc.BitTriangle.from_text(t.to_text()) == t
        assert pc.BitTriangle.from_text("0\n") == pc.BitTriangle(())
        assert pc.BitTriangle.from_text("1\n").n == 1

    def test_parse_errors(self):
        with pytest.raises(pc.ParseError):
            pc.BitTriangle.from_text("")
        with pytest.raises(pc.ParseError):
            pc.BitTriangle.from_text("2\n0 1\n")
        with pytest.raises(pc.ParseError):
            pc.BitTriangle.from_text("3\n0\n1 7\n")
        with pytest.raises(pc.ParseError):
            pc.BitTriangle.from_text("1\njunk\n")

    @given(bit_triangles())
    def test_text_round_trip(self, t):
        assert pc.BitTriangle.from_text(t.to_text()) == t


class TestFamilyFromBits:
    def test_empty(self):
        f = pc.family_from_bits(pc.BitTriangle(()))
        assert f.n == 0 and f.B == () and f.D == ()

    def test_all_diagonal(self):
        f = pc.family_from_bits(tri([1], [1, 1]))
        assert tuple(f.D[i][i] for i in range(3)) == (0, 0, 0)
        assert all(step == D_STEP for p in pc.explicit_paths(f) for step in p.steps)

    def test_mixed(self):
        f = pc.family_from_bits(tri([0], [1, 0]))
        assert f.D[1][1] == 1 and f.D[2][2] == 1
        assert pc.validate_family(f) == []
        assert pc.is_cliff_shaped(f)

    @given(bit_triangles())
    def test_always_valid_and_cliff(self, t):
        f = pc.family_from_bits(t)
        assert pc.validate_family(f) == []
        assert pc.is_cliff_shaped(f)

    def test_injective(self, triangles_by_n):
        for n in range(6):
            families = {pc.family_from_bits(t) for t in triangles_by_n[n]}
            assert len(families) == 2 ** (n * (n - 1) // 2)


class TestExplicitPaths:
    def test_empty_path(self):
        f = pc.family_from_bits(pc.BitTriangle(((),)))
        (p,) = pc.explicit_paths(f)
        assert p.points() == [(0, 0)]

    def test_two_paths(self):
        f = pc.PathFamily.from_rows([[], [0]], [[0], [0, 1]])
        assert pc.explicit_paths(f)[1].points() == [(1, 0), (1, 1), (0, 1)]

    def test_cliff_path(self):
        f = pc.family_from_bits(tri([0], [1, 0]))
        assert pc.explicit_paths(f)[2].points() == [(2, 0), (1, 1), (1, 2), (0, 2)]

    def test_rejects_invalid(self):
        bad = pc.PathFamily.from_rows([[], [1]], [[0], [0, 1]])
        with pytest.raises(pc.InvalidFamily):
            pc.explicit_paths(bad)


class TestFamilyFromPaths:
    def test_empty(self):
        f = pc.family_from_paths([])
        assert f.n == 0

    def test_inverse_of_example(self):
        paths = [
            pc.ExplicitPath.from_points([(0, 0)]),
            pc.ExplicitPath.from_points([(1, 0), (0, 1)]),
            pc.ExplicitPath.from_points([(2, 0), (1, 1), (1, 2), (0, 2)]),
        ]
        f = pc.family_from_paths(paths)
        assert f.B[2] == (1, 0) and f.D[2][2] == 1

    def test_round_trip_exhaustive(self, schroder_by_n):
        for n in range(5):
            for f in schroder_by_n[n]:
                paths = pc.explicit_paths(f)
                assert pc.family_from_paths(paths) == f
                again = pc.explicit_paths(pc.family_from_paths(paths))
                assert [p.points() for p in again] == [p.points() for p in paths]

    @given(path_families())
    def test_round_trip_random(self, f):
        assert pc.family_from_paths(pc.explicit_paths(f)) == f

    def test_malformed(self):
        with pytest.raises(pc.MalformedPath):
            pc.family_from_paths([pc.ExplicitPath.from_points([(1, 0)])])
        with pytest.raises(pc.MalformedPath):
            pc.family_from_paths([pc.ExplicitPath.from_points([(0, 0), (0, 1)])])
        with pytest.raises(pc.MalformedPath):
            pc.ExplicitPath((0, 0), ((1, 1),))


class TestPredicates:
    @pytest.mark.parametrize("n", range(6))
    def test_all_diagonal_disjoint(self, n):
        t = pc.BitTriangle.from_rows([[1] * i for i in range(n)])
        assert pc.is_disjoint(pc.family_from_bits(t))

    def test_cliff_collision(self):
        f = pc.family_from_bits(tri([0], [1, 0]))
        assert not pc.is_disjoint(f)  # P_1 and P_2 both visit (1, 1)

    def test_combed_family_disjoint_not_cliff(self):
        f = pc.comb(tri([0], [1, 0]))
        assert pc.is_disjoint(f)
        assert f.D[2][1] == 1 and not pc.is_cliff_shaped(f)

    def test_single_path_cliff(self):
        assert pc.is_cliff_shaped(pc.family_from_bits(pc.BitTriangle(((),))))


class TestValidateFamily:
    def test_valid(self):
        assert pc.validate_family(pc.family_from_bits(tri([1], [0, 1]))) == []

    def test_balance_violation(self):
        f = pc.PathFamily.from_rows([[], [1]], [[0], [0, 1]])
        kinds = {(v.kind, v.i) for v in pc.validate_family(f)}
        assert ("descent-balance", 1) in kinds

    def test_schroder_violation(self):
        f = pc.PathFamily.from_rows([[], [0]], [[0], [1, 0]])
        assert any(v.kind == "schroder" and (v.i, v.j) == (1, 0)
                   for v in pc.validate_family(f))

    def test_triangularity_violation(self):
        f = pc.PathFamily(((), (0, 1)), ((0,), (0, 0)))
        assert any(v.kind == "triangularity" for v in pc.validate_family(f))

    def test_disjoint_families_are_valid(self, disjoint_by_n):
        for n in range(5):
            for f in disjoint_by_n[n]:
                assert pc.validate_family(f) == []


class TestFamilyText:
    def test_format(self):
        f = pc.comb(tri([0], [1, 0]))
        assert f.to_text() == "3\nB: | D: 0\nB: 1 | D: 0 0\nB: 0 0 | D: 0 1 1\n"
        assert pc.PathFamily.from_text(f.to_text()) == f

    def test_parse_errors(self):
        with pytest.raises(pc.ParseError):
            pc.PathFamily.from_text("1\nB: 0 | D: 0\n")
        with pytest.raises(pc.ParseError):
            pc.PathFamily.from_text("1\nD: 0 | B:\n")
        with pytest.raises(pc.ParseError):
            pc.PathFamily.from_text("1\nB: D: 0\n")

    @given(path_families())
    def test_round_trip(self, f):
        assert pc.PathFamily.from_text(f.to_text()) == f


class TestEntryLevels:
    def test_cliff_entry_levels(self):
        f = pc.family_from_bits(tri([1], [1, 0]))
        assert pc.entry_levels(f, 2) == (0, 0, 1)

    @given(path_families(max_n=5))
    def test_matches_geometry(self, f):
        # where a path has no vertical steps before column k, the entry
        # level equals the geometric top point of the path in that column
        paths = pc.explicit_paths(f)
        for k in range(f.n):
            levels = pc.entry_levels(f, k)
            for i in range(k, f.n):
                if all(f.D[i][j] == 0 for j in range(k)):
                    top = max(lev for lev, col in paths[i].points() if col == k)
                    assert levels[i] == top

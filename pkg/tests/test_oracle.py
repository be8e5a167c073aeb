from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combtiles.core import CombSpec, TriangleKind, board_to_tile_index
from combtiles.oracle import (
    COMB,
    SQUARE,
    RestrictedSubset,
    Tiling,
    build_triangle,
    enumerate_restricted_subsets,
    enumerate_tile_tilings,
    enumerate_tilings,
    join_boards,
    split_board,
    subset_to_tiling,
    tiling_to_subset,
)

from golden import CELL_SUMS, TILE_SUMS, TRIANGLES

small_specs = st.builds(
    CombSpec, m=st.integers(min_value=1, max_value=4), t=st.integers(min_value=2, max_value=5)
)


def test_tiling_validation():
    spec = CombSpec(2, 3)
    # comb at 1 covers {1,3,5}; square at 3 collides
    with pytest.raises(ValueError, match="overlaps"):
        Tiling(spec, 5, ((COMB, 1), (SQUARE, 3), (SQUARE, 4)))
    # comb at 2 would need cell 6 on a 5-board
    with pytest.raises(ValueError, match="cover"):
        Tiling(spec, 5, ((SQUARE, 1), (COMB, 2), (SQUARE, 3), (SQUARE, 5)))
    with pytest.raises(ValueError, match="ascending"):
        Tiling(spec, 2, ((SQUARE, 2), (SQUARE, 1)))
    ok = Tiling(spec, 5, ((COMB, 1), (SQUARE, 2), (SQUARE, 4)))
    assert ok.n_tiles == 3 and ok.n_combs == 1


def test_board_counts_match_published_sums():
    for (m, t), sums in CELL_SUMS.items():
        spec = CombSpec(m, t)
        for n, expected in enumerate(sums):
            assert len(enumerate_tilings(spec, n)) == expected, (m, t, n)


def test_tilings_are_distinct_and_canonically_ordered():
    spec = CombSpec(2, 3)
    tilings = enumerate_tilings(spec, 9)
    assert len(set(tilings)) == len(tilings)
    keys = [tl.placements for tl in tilings]
    # leftmost-cell generation with the square branch first is lexicographic
    # in (anchor, kind) with S before C
    order = {SQUARE: 0, COMB: 1}
    mapped = [tuple((a, order[k]) for k, a in pl) for pl in keys]
    assert mapped == sorted(mapped)


def test_tile_indexed_enumeration_matches_board_route():
    for m, t in [(2, 3), (2, 4), (3, 3), (3, 2)]:
        spec = CombSpec(m, t)
        for n in range(9):
            by_tiles: dict[int, int] = {}
            for tl in enumerate_tile_tilings(spec, n):
                by_tiles[tl.n_combs] = by_tiles.get(tl.n_combs, 0) + 1
            for k in range(n + 1):
                board = n + (t - 1) * k
                if board > 20:
                    continue
                by_board = sum(
                    1 for tl in enumerate_tilings(spec, board) if tl.n_combs == k
                )
                assert by_tiles.get(k, 0) == by_board, (m, t, n, k)


def test_build_triangle_tile_matches_golden():
    for (m, t), rows in TRIANGLES.items():
        tri = build_triangle(CombSpec(m, t), TriangleKind.TILE, 9)
        for n in range(9):
            assert list(tri.rows[n]) == rows[n], (m, t, n)


def test_build_triangle_board_matches_reindexed_golden():
    for (m, t), rows in TRIANGLES.items():
        spec = CombSpec(m, t)
        tri = build_triangle(spec, TriangleKind.BOARD, 14)
        for n in range(14):
            for k in range(n + 1):
                tn, tk = board_to_tile_index(spec, n, k)
                expected = 0
                if 0 <= tk <= tn < len(rows):
                    expected = rows[tn][tk]
                assert tri.entry(n, k) == expected, (m, t, n, k)


def test_row_sums_match_published_tile_sums():
    for (m, t), sums in TILE_SUMS.items():
        tri = build_triangle(CombSpec(m, t), TriangleKind.TILE, len(sums))
        assert list(tri.row_sums()) == sums, (m, t)


def test_enumeration_limits_are_enforced():
    spec = CombSpec(2, 3)
    with pytest.raises(ValueError, match="limit"):
        enumerate_tilings(spec, 27)
    with pytest.raises(ValueError, match="limit"):
        enumerate_tile_tilings(spec, 23)
    with pytest.raises(ValueError, match="limit"):
        enumerate_restricted_subsets(spec, 25)
    with pytest.raises(ValueError, match="limit"):
        build_triangle(spec, TriangleKind.BOARD, 28)
    with pytest.raises(ValueError, match="limit"):
        build_triangle(spec, TriangleKind.TILE, 24)
    assert enumerate_tilings(spec, 27, max_board=27)  # explicit override


def test_route_disagreement_is_an_error(monkeypatch):
    import combtiles.oracle as oracle

    def corrupt(spec, board_len):
        counts = [0] * (board_len + 1)
        for tl in enumerate_tilings(spec, board_len, max_board=board_len):
            counts[tl.n_combs] += 1
        if board_len == 5:
            counts[1] += 1
        return tuple(counts)

    monkeypatch.setattr(oracle, "_board_comb_counts", corrupt)
    with pytest.raises(RuntimeError, match="disagree at \\(3,1\\)"):
        build_triangle(CombSpec(2, 3), TriangleKind.TILE, 6)


def test_restricted_subset_validation():
    spec = CombSpec(2, 3)
    RestrictedSubset(spec, 7, (1, 2, 7))  # differences 1, 5, 6: allowed
    with pytest.raises(ValueError, match="banned"):
        RestrictedSubset(spec, 6, (1, 3))  # differ by m = 2
    with pytest.raises(ValueError, match="banned"):
        RestrictedSubset(spec, 6, (1, 5))  # differ by 2m = 4
    with pytest.raises(ValueError, match="increasing"):
        RestrictedSubset(spec, 6, (3, 1))
    with pytest.raises(ValueError, match="lie in"):
        RestrictedSubset(spec, 6, (1, 7))


def test_subset_enumeration_matches_brute_force():
    for m in range(1, 4):
        for t in range(2, 5):
            spec = CombSpec(m, t)
            banned = {q * m for q in range(1, t)}
            for n in range(9):
                got = enumerate_restricted_subsets(spec, n)
                expected = [
                    c
                    for size in range(n + 1)
                    for c in combinations(range(1, n + 1), size)
                    if not any(b - a in banned for a, b in combinations(c, 2))
                ]
                assert sorted(s.members for s in got) == sorted(expected), (m, t, n)
                for k in range(n + 1):
                    got_k = enumerate_restricted_subsets(spec, n, k)
                    assert all(s.k == k for s in got_k)
                    assert len(got_k) == sum(1 for c in expected if len(c) == k)


def test_subsets_in_lexicographic_order():
    spec = CombSpec(2, 3)
    subs = enumerate_restricted_subsets(spec, 6, 2)
    assert [s.members for s in subs] == [
        (1, 2), (1, 4), (1, 6), (2, 3), (2, 5), (3, 4), (3, 6), (4, 5), (5, 6),
    ]


def test_subset_tiling_bijection_example():
    spec = CombSpec(2, 3)
    sub = RestrictedSubset(spec, 5, (1, 4))
    tl = subset_to_tiling(sub)
    assert tl.board_len == 9
    assert tl.placements == ((COMB, 1), (SQUARE, 2), (COMB, 4), (SQUARE, 7), (SQUARE, 9))
    assert tiling_to_subset(tl) == sub


@settings(max_examples=40, deadline=None)
@given(small_specs, st.integers(min_value=0, max_value=10))
def test_subset_tiling_roundtrip(spec, n):
    for sub in enumerate_restricted_subsets(spec, n):
        tl = subset_to_tiling(sub)
        assert tl.board_len == n + (spec.t - 1) * spec.m
        assert tiling_to_subset(tl) == sub


def test_split_board_example():
    spec = CombSpec(2, 3)
    tl = Tiling(spec, 9, ((COMB, 1), (SQUARE, 2), (COMB, 4), (SQUARE, 7), (SQUARE, 9)))
    parts = split_board(tl)
    assert [p.board_len for p in parts] == [5, 4]
    assert parts[0].spec == CombSpec(1, 3)
    assert join_boards(spec, parts) == tl


@settings(max_examples=40, deadline=None)
@given(small_specs, st.integers(min_value=0, max_value=10))
def test_split_join_roundtrip(spec, board_len):
    for tl in enumerate_tilings(spec, board_len):
        parts = split_board(tl)
        assert len(parts) == spec.m
        j, r = divmod(board_len, spec.m)
        assert [p.board_len for p in parts] == [j + 1] * r + [j] * (spec.m - r)
        assert sum(p.n_combs for p in parts) == tl.n_combs
        assert join_boards(spec, parts) == tl


def test_join_boards_rejects_bad_input():
    spec = CombSpec(2, 3)
    sub_spec = CombSpec(1, 3)
    with pytest.raises(ValueError, match="exactly 2"):
        join_boards(spec, (Tiling(sub_spec, 1, ((SQUARE, 1),)),))
    with pytest.raises(ValueError, match="split pattern"):
        join_boards(
            spec,
            (
                Tiling(sub_spec, 3, ((SQUARE, 1), (SQUARE, 2), (SQUARE, 3))),
                Tiling(sub_spec, 1, ((SQUARE, 1),)),
            ),
        )
    with pytest.raises(ValueError, match="t-omino"):
        join_boards(
            spec,
            (
                Tiling(CombSpec(1, 2), 2, ((SQUARE, 1), (SQUARE, 2))),
                Tiling(CombSpec(1, 2), 2, ((SQUARE, 1), (SQUARE, 2))),
            ),
        )

from __future__ import annotations

import json
from dataclasses import replace
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combtiles.core import CombSpec, TriangleKind
from combtiles.digraph import UnsupportedStructureError, analyze_structure, build_digraph
from combtiles.recursion import (
    Metric,
    RecursionRelation,
    evaluate,
    multinomial_check,
    project_row_sum,
    synthesize,
    walk_count,
)

from golden import (
    CELL_SUM_RELATIONS,
    CELL_SUMS,
    ENTRY_RELATIONS,
    TILE_SUM_RELATIONS,
    TILE_SUMS,
    TRIANGLES,
)


def structure(m: int, t: int):
    return analyze_structure(build_digraph(CombSpec(m, t)))


def entry_dicts(rel: RecursionRelation) -> tuple[dict, dict]:
    return (
        {(n, k): c for n, k, c in rel.delta_terms},
        {(n, k): c for n, k, c in rel.shift_terms},
    )


def sum_dicts(rel: RecursionRelation) -> tuple[dict, dict]:
    return (
        {n: c for n, _, c in rel.delta_terms},
        {n: c for n, _, c in rel.shift_terms},
    )


def test_relation_validation():
    spec = CombSpec(2, 3)
    with pytest.raises(ValueError):
        RecursionRelation(spec, Metric.TILES, True, ((0, 0, 1),), ((0, 0, 1),))
    with pytest.raises(ValueError):
        RecursionRelation(spec, Metric.TILES, True, ((0, 0, 0),), ())
    with pytest.raises(ValueError):
        RecursionRelation(spec, Metric.TILES, True, ((0, None, 1),), ())
    with pytest.raises(ValueError):
        RecursionRelation(spec, Metric.TILES, False, ((0, None, 1),), ((1, 0, 1),))
    with pytest.raises(ValueError):
        RecursionRelation(spec, Metric.TILES, True, (), ((1, -1, 1),))


def test_synthesized_entry_relations_match_published():
    for (m, t), expected in ENTRY_RELATIONS.items():
        rel = synthesize(structure(m, t), Metric.TILES)
        assert rel.tracks_k and rel.metric is Metric.TILES
        deltas, shifts = entry_dicts(rel)
        assert deltas == expected[0], (m, t)
        assert shifts == expected[1], (m, t)


def test_synthesized_tile_sum_relations_match_published():
    for (m, t), expected in TILE_SUM_RELATIONS.items():
        rel = synthesize(structure(m, t), Metric.TILES, tracks_k=False)
        assert sum_dicts(rel) == expected, (m, t)


def test_synthesized_cell_sum_relations_match_published():
    for (m, t), expected in CELL_SUM_RELATIONS.items():
        rel = synthesize(structure(m, t), Metric.CELLS, tracks_k=False)
        assert sum_dicts(rel) == expected, (m, t)


def test_projection_agrees_with_direct_sum_synthesis():
    for m, t in ENTRY_RELATIONS:
        srel = project_row_sum(synthesize(structure(m, t), Metric.TILES))
        assert srel == synthesize(structure(m, t), Metric.TILES, tracks_k=False)
    with pytest.raises(ValueError):
        project_row_sum(project_row_sum(synthesize(structure(2, 3), Metric.TILES)))


def test_degenerate_synthesis_is_pascal_for_m1():
    rel = synthesize(structure(1, 3), Metric.TILES)
    assert entry_dicts(rel) == ({(0, 0): 1}, {(1, 0): 1, (1, 1): 1})
    tri = evaluate(rel, 10)
    for n in range(11):
        for k in range(n + 1):
            assert tri.entry(n, k) == comb(n, k)


def test_degenerate_synthesis_2_2():
    rel = synthesize(structure(2, 2), Metric.TILES)
    assert entry_dicts(rel) == ({(0, 0): 1}, {(1, 0): 1, (2, 1): 1, (2, 2): 1})
    assert evaluate(rel, 12) == walk_count(build_digraph(CombSpec(2, 2)), Metric.TILES, 12)


def test_render_strings():
    rel = synthesize(structure(2, 3), Metric.TILES)
    assert rel.render() == (
        "B(n,k) = δ(0,0) - δ(1,1) + B(n-1,k) + B(n-1,k-1) "
        "- B(n-2,k-1) + B(n-2,k-2) + B(n-3,k-1) - B(n-3,k-3)"
    )
    assert project_row_sum(rel).render() == "B(n) = δ(0) - δ(1) + 2B(n-1)"


def test_relation_json_roundtrips_terms():
    rel = synthesize(structure(2, 5), Metric.CELLS, tracks_k=False)
    payload = json.loads(rel.to_json())
    assert payload["metric"] == "cells" and payload["tracks_k"] is False
    assert {tuple(term[:2]) + (term[2],) for term in payload["shift_terms"]} == set(
        rel.shift_terms
    )


def test_evaluate_entry_relations_reproduce_triangles():
    for m, t in [(2, 3), (2, 4), (2, 5)]:
        rel = synthesize(structure(m, t), Metric.TILES)
        tri = evaluate(rel, 13)
        assert tri.kind is TriangleKind.TILE
        assert [list(row) for row in tri.rows] == TRIANGLES[(m, t)], (m, t)


def test_evaluate_4_2_matches_walk():
    rel = synthesize(structure(4, 2), Metric.TILES)
    assert evaluate(rel, 16) == walk_count(build_digraph(CombSpec(4, 2)), Metric.TILES, 16)
    crel = synthesize(structure(4, 2), Metric.CELLS)
    assert evaluate(crel, 16) == walk_count(
        build_digraph(CombSpec(4, 2)), Metric.CELLS, 16
    )


def test_evaluate_sum_relations_reproduce_prefixes():
    for (m, t), seq in TILE_SUMS.items():
        rel = synthesize(structure(m, t), Metric.TILES, tracks_k=False)
        assert evaluate(rel, len(seq) - 1) == tuple(seq), (m, t)
    for (m, t), seq in CELL_SUMS.items():
        rel = synthesize(structure(m, t), Metric.CELLS, tracks_k=False)
        assert evaluate(rel, len(seq) - 1) == tuple(seq), (m, t)


def test_walk_count_matches_golden():
    for (m, t), rows in TRIANGLES.items():
        tri = walk_count(build_digraph(CombSpec(m, t)), Metric.TILES, 13)
        assert [list(row) for row in tri.rows] == rows, (m, t)
    for (m, t), seq in TILE_SUMS.items():
        got = walk_count(build_digraph(CombSpec(m, t)), Metric.TILES, len(seq) - 1, False)
        assert got == tuple(seq), (m, t)
    for (m, t), seq in CELL_SUMS.items():
        got = walk_count(build_digraph(CombSpec(m, t)), Metric.CELLS, len(seq) - 1, False)
        assert got == tuple(seq), (m, t)


def test_walk_count_works_where_synthesis_refuses():
    # (3, 3) has no classifiable cycle structure but counting still works
    dg = build_digraph(CombSpec(3, 3))
    with pytest.raises(UnsupportedStructureError):
        analyze_structure(dg)
    tri = walk_count(dg, Metric.TILES, 13)
    assert [list(row) for row in tri.rows] == TRIANGLES[(3, 3)]


def test_errant_synthesis_hypothesis_checks():
    st_25 = structure(2, 5)
    # flip the non-plain inner cycle to plain: now two plain, zero non-plain
    broken = replace(
        st_25, inner_cycles=tuple(replace(c, plain=True) for c in st_25.inner_cycles)
    )
    with pytest.raises(UnsupportedStructureError, match="inner cycle"):
        synthesize(broken, Metric.TILES)
    # mark an outer cycle non-plain
    broken = replace(
        st_25, outer_cycles=tuple(replace(c, plain=False) for c in st_25.outer_cycles)
    )
    with pytest.raises(UnsupportedStructureError, match="outer cycle"):
        synthesize(broken, Metric.TILES)


def test_evaluate_rejects_negative_range():
    rel = synthesize(structure(2, 3), Metric.TILES)
    with pytest.raises(ValueError):
        evaluate(rel, -1)


def test_multinomial_check_examples():
    assert multinomial_check((1, 1, 1))
    assert multinomial_check((2, 1, 3, 2))
    with pytest.raises(ValueError):
        multinomial_check((2, 1))
    with pytest.raises(ValueError):
        multinomial_check((2, 0, 1))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=5), min_size=3, max_size=5))
def test_multinomial_check_holds_generally(j_values):
    assert multinomial_check(tuple(j_values))

"""Named verification checks over the triangle family, run on parameter grids.

Each check evaluates both sides of one identity with exact integers over a
bounded parameter grid and records every mismatch. Triangle entries come from the
walk counter over the metatile digraph (itself validated against the
enumeration oracle elsewhere), so each identity is probed independently of
the recursion synthesizer it may also be compared with.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass

from .core import CombSpec, Triangle, board_to_tile_index, max_combs
from .digraph import CycleStructure, analyze_structure, build_digraph
from .oracle import _board_comb_counts, enumerate_restricted_subsets
from .polynomials import (
    IntPolynomial,
    antidiagonal_sum_closed,
    bonacci_number,
    bonacci_poly,
    entry_via_poly,
    power_series_div,
)
from .recursion import (
    Metric,
    RecursionRelation,
    evaluate,
    multinomial_check,
    project_row_sum,
    synthesize,
    walk_count,
)


@dataclass(frozen=True)
class GridProfile:
    name: str
    max_m: int
    max_t: int
    max_n: int


PROFILES = {
    "quick": GridProfile("quick", 3, 4, 14),
    "full": GridProfile("full", 4, 5, 20),
}


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    grid: str
    cases_run: int
    failures: tuple[tuple[str, str, str], ...] = ()
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.cases_run > 0 and not self.failures

    def as_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "grid": self.grid,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "failures": [list(f) for f in self.failures],
            "notes": self.notes,
        }


def reports_to_json(reports: list[CheckReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2)


class _Recorder:
    """Accumulates cases and mismatches for one check."""

    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[tuple[str, str, str]] = []

    def record(self, params: str, expected: object, actual: object) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append((params, str(expected), str(actual)))


def _binom(a: int, b: int) -> int:
    # convention: 0 whenever b < 0 or a < b
    if b < 0 or a < b or a < 0:
        return 0
    return math.comb(a, b)


@functools.lru_cache(maxsize=None)
def _tile_triangle(spec: CombSpec, n_max: int) -> Triangle:
    tri = walk_count(build_digraph(spec), Metric.TILES, n_max, tracks_k=True)
    assert isinstance(tri, Triangle)
    return tri


@functools.lru_cache(maxsize=None)
def _board_triangle(spec: CombSpec, n_max: int) -> Triangle:
    tri = walk_count(build_digraph(spec), Metric.CELLS, n_max, tracks_k=True)
    assert isinstance(tri, Triangle)
    return tri


@functools.lru_cache(maxsize=None)
def _structure(spec: CombSpec) -> CycleStructure:
    return analyze_structure(build_digraph(spec))


def _specs(p: GridProfile, *, min_m: int = 1) -> list[CombSpec]:
    return [
        CombSpec(m, t)
        for m in range(min_m, p.max_m + 1)
        for t in range(2, p.max_t + 1)
    ]


def _grid_desc(p: GridProfile, extra: str = "") -> str:
    base = f"m<={p.max_m} t<={p.max_t} n<={p.max_n}"
    return f"{base}, {extra}" if extra else base


# Recurrence term lists for four sample specs, transcribed independently
# as (delta terms, shift terms) keyed by (n, k) or by n for the summed
# forms. These pin the synthesizer's exact output, not just its values.
_KNOWN_ENTRY_RELATIONS: dict[tuple[int, int], tuple[dict, dict]] = {
    (2, 3): (
        {(0, 0): 1, (1, 1): -1},
        {(1, 0): 1, (1, 1): 1, (2, 1): -1, (2, 2): 1, (3, 1): 1, (3, 3): -1},
    ),
    (2, 4): (
        {(0, 0): 1, (2, 1): -1, (2, 2): -1},
        {
            (1, 0): 1,
            (2, 1): 1,
            (2, 2): 2,
            (3, 1): -1,
            (3, 2): -1,
            (4, 1): 1,
            (4, 2): 1,
            (4, 3): -1,
            (4, 4): -1,
        },
    ),
    (4, 2): (
        {(0, 0): 1, (2, 1): -1, (3, 2): -1, (4, 4): -1},
        {
            (1, 0): 1,
            (2, 1): 1,
            (3, 1): -1,
            (3, 2): 1,
            (4, 1): 1,
            (4, 3): 1,
            (4, 4): 2,
            (5, 2): 1,
            (5, 3): 2,
            (5, 4): -1,
            (6, 3): -1,
            (6, 5): -1,
            (7, 4): -1,
            (7, 5): -1,
            (7, 6): -1,
            (8, 7): -1,
            (8, 8): -1,
        },
    ),
    (2, 5): (
        {(0, 0): 1, (1, 1): -1, (2, 2): -1, (3, 1): -1, (3, 3): 1},
        {
            (1, 0): 1,
            (1, 1): 1,
            (2, 1): -1,
            (2, 2): 2,
            (3, 1): 1,
            (3, 2): -1,
            (3, 3): -2,
            (4, 1): -1,
            (4, 2): 1,
            (4, 3): 1,
            (4, 4): -1,
            (5, 1): 1,
            (5, 3): -2,
            (5, 5): 1,
        },
    ),
}

_KNOWN_TILE_SUM_RELATIONS: dict[tuple[int, int], tuple[dict, dict]] = {
    (2, 3): ({0: 1, 1: -1}, {1: 2}),
    (2, 4): ({0: 1, 2: -2}, {1: 1, 2: 3, 3: -2}),
    (4, 2): (
        {0: 1, 2: -1, 3: -1, 4: -1},
        {1: 1, 2: 1, 4: 4, 5: 2, 6: -2, 7: -3, 8: -2},
    ),
    (2, 5): ({0: 1, 1: -1, 2: -1}, {1: 2, 2: 1, 3: -2}),
}

_KNOWN_CELL_SUM_RELATIONS: dict[tuple[int, int], tuple[dict, dict]] = {
    (2, 3): ({0: 1, 3: -1}, {1: 1, 3: 1, 4: -1, 5: 1, 6: 1, 9: -1}),
    (2, 4): (
        {0: 1, 5: -1, 8: -1},
        {1: 1, 5: 1, 6: -1, 7: 1, 8: 2, 9: -1, 10: 1, 13: -1, 16: -1},
    ),
    (4, 2): (
        {0: 1, 3: -1, 5: -1, 8: -1},
        {
            1: 1,
            3: 1,
            4: -1,
            5: 2,
            7: 2,
            8: 4,
            9: -2,
            11: -2,
            12: -1,
            13: -1,
            15: -1,
            16: -1,
        },
    ),
    (2, 5): (
        {0: 1, 5: -1, 7: -1, 10: -1, 15: 1},
        {
            1: 1,
            5: 1,
            6: -1,
            7: 1,
            8: -1,
            9: 1,
            10: 2,
            11: -1,
            12: 1,
            15: -2,
            16: 1,
            17: -2,
            20: -1,
            25: 1,
        },
    ),
}


def _relation_terms(rel: RecursionRelation) -> tuple[dict, dict]:
    if rel.tracks_k:
        deltas = {(n, k): c for n, k, c in rel.delta_terms}
        shifts = {(dn, dk): c for dn, dk, c in rel.shift_terms}
    else:
        deltas = {n: c for n, _, c in rel.delta_terms}
        shifts = {dn: c for dn, _, c in rel.shift_terms}
    return deltas, shifts


def _check_ch_eq_chb(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        board = _board_triangle(spec, p.max_n)
        tile = _tile_triangle(spec, p.max_n)
        for n in range(p.max_n + 1):
            for k in range(n + 1):
                tn, tk = board_to_tile_index(spec, n, k)
                expected = tile.entry(tn, tk)
                rec.record(
                    f"m={spec.m} t={spec.t} board={n} k={k}",
                    expected,
                    board.entry(n, k),
                )
    return CheckReport("ch_eq_chb", _grid_desc(p, "all k"), rec.cases, tuple(rec.failures))


def _check_adiag_sum(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        for n in range(p.max_n + 1):
            total = 0
            for k in range(n // spec.t + 1):
                tn, tk = board_to_tile_index(spec, n, k)
                total += tile.entry(tn, tk)
            j, r = divmod(n, spec.m)
            rec.record(
                f"m={spec.m} t={spec.t} board={n}",
                antidiagonal_sum_closed(spec, j, r),
                total,
            )
    return CheckReport("adiag_sum", _grid_desc(p), rec.cases, tuple(rec.failures))


def _check_col0(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        for n in range(p.max_n + 1):
            rec.record(f"m={spec.m} t={spec.t} n={n}", 1, tile.entry(n, 0))
    return CheckReport("col0", _grid_desc(p, "k=0"), rec.cases, tuple(rec.failures))


def _check_diag(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        for n in range(p.max_n + 1):
            expected = 1 if n % spec.m == 0 else 0
            rec.record(f"m={spec.m} t={spec.t} n={n}", expected, tile.entry(n, n))
    return CheckReport("diag", _grid_desc(p, "k=n"), rec.cases, tuple(rec.failures))


def _check_col1(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        gap = (spec.m - 1) * (spec.t - 1)
        for n in range(1, p.max_n + 1):
            expected = 0 if n < gap + 1 else n - gap
            rec.record(f"m={spec.m} t={spec.t} n={n}", expected, tile.entry(n, 1))
    return CheckReport("col1", _grid_desc(p, "k=1"), rec.cases, tuple(rec.failures))


def _check_zeros(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p, min_m=2):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for j in range(1, p.max_n // m + 2):
            for pp in range(1, m):
                for r in range(1 - (t - 2) * pp, pp + 1):
                    n, k = m * j - r, m * j - pp
                    if not 0 <= k <= n <= p.max_n:
                        continue
                    rec.record(
                        f"m={m} t={t} j={j} p={pp} r={r} (n={n},k={k})",
                        0,
                        tile.entry(n, k),
                    )
    # the zero region's edge: the largest k with a nonzero count on each
    # board must agree with the closed-form comb capacity
    for spec in _specs(p):
        board = _board_triangle(spec, p.max_n)
        for b in range(p.max_n + 1):
            largest = max(k for k in range(b + 1) if board.entry(b, k) > 0 or k == 0)
            j, r = divmod(b, spec.m)
            rec.record(
                f"m={spec.m} t={spec.t} board={b} capacity",
                max_combs(spec, j, r),
                largest,
            )
    return CheckReport("zeros", _grid_desc(p), rec.cases, tuple(rec.failures))


def _check_vert_boundary(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for j in range(1, p.max_n // m + 2):
            for s in range(t - 1):
                for r in range(m + 1):
                    n, k = m * (j + s - 1) + r, m * (j - 1)
                    if not 0 <= k <= n <= p.max_n:
                        continue
                    expected = _binom(j + s - 1, s) ** (m - r) * _binom(
                        j + s, s + 1
                    ) ** r
                    rec.record(
                        f"m={m} t={t} j={j} s={s} r={r} (n={n},k={k})",
                        expected,
                        tile.entry(n, k),
                    )
    return CheckReport("vert_boundary", _grid_desc(p), rec.cases, tuple(rec.failures))


def _check_ray_boundary(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for j in range(1, p.max_n // m + 2):
            for pp in range(m + 1):
                n, k = m * j + (t - 2) * pp, m * j - pp
                if not 0 <= k <= n <= p.max_n:
                    continue
                rec.record(
                    f"m={m} t={t} j={j} p={pp} (n={n},k={k})",
                    _binom(j + t - 2, t - 1) ** pp,
                    tile.entry(n, k),
                )
    return CheckReport("ray_boundary", _grid_desc(p), rec.cases, tuple(rec.failures))


def _check_one_square_block(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for j in range(1, p.max_n // m + 2):
            n, k = m * j + t - 1, m * j - 1
            if not 0 <= k <= n <= p.max_n:
                continue
            rec.record(
                f"m={m} t={t} j={j} (n={n},k={k})",
                m * _binom(j + t - 1, t),
                tile.entry(n, k),
            )
    return CheckReport("one_square_block", _grid_desc(p), rec.cases, tuple(rec.failures))


def _check_two_square_block(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for j in range(1, p.max_n // m + 2):
            if m * j < 2:
                continue
            n, k = m * j + 2 * (t - 1), m * j - 2
            if not 0 <= k <= n <= p.max_n:
                continue
            if j == 1 and m > 1:
                expected = _binom(m, 2)
            elif m == 1:
                expected = _binom(j + 2 * (t - 1), 2 * t)
            else:
                expected = m * _binom(j + 2 * (t - 1), 2 * t) + _binom(m, 2) * _binom(
                    j + t - 1, t
                ) ** 2
            rec.record(
                f"m={m} t={t} j={j} (n={n},k={k})", expected, tile.entry(n, k)
            )
    return CheckReport("two_square_block", _grid_desc(p), rec.cases, tuple(rec.failures))


def _compositions(s: int) -> list[tuple[int, ...]]:
    if s == 0:
        return [()]
    out = []
    for first in range(1, s + 1):
        for rest in _compositions(s - first):
            out.append((first,) + rest)
    return out


def _check_composition(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        m, t = spec.m, spec.t
        for s in range(1, 6):
            for j in range(1, p.max_n // m + 2):
                if m * j < s:
                    continue
                n, k = m * j + s * (t - 1), m * j - s
                if not 0 <= k <= n <= p.max_n:
                    continue
                expected = 0
                for parts in _compositions(s):
                    term = _binom(m, len(parts))
                    for r_i in parts:
                        term *= _binom(j + r_i * (t - 1), r_i * t)
                    expected += term
                rec.record(
                    f"m={m} t={t} s={s} j={j} (n={n},k={k})",
                    expected,
                    tile.entry(n, k),
                )
    return CheckReport(
        "composition", _grid_desc(p, "s<=5"), rec.cases, tuple(rec.failures)
    )


def _check_pascal_region(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    held = 0
    probed = 0
    for spec in _specs(p):
        tile = _tile_triangle(spec, p.max_n)
        edge = (spec.m - 1) * (spec.t - 1)
        for n in range(1, p.max_n + 1):
            for k in range(n + 1):
                pascal = tile.entry(n - 1, k) + tile.entry(n - 1, k - 1)
                if n > edge * k:
                    rec.record(
                        f"m={spec.m} t={spec.t} n={n} k={k}",
                        pascal,
                        tile.entry(n, k),
                    )
                elif n == edge * k:
                    probed += 1
                    if tile.entry(n, k) == pascal:
                        held += 1
    notes = (
        f"boundary n=(m-1)(t-1)k probed, not asserted: recurrence held at "
        f"{held} of {probed} boundary points"
    )
    return CheckReport(
        "pascal_region",
        _grid_desc(p, "n>(m-1)(t-1)k"),
        rec.cases,
        tuple(rec.failures),
        notes,
    )


def _check_subset_recurrence(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for spec in _specs(p):
        m, t = spec.m, spec.t
        pad = (t - 1) * m
        board = _board_triangle(spec, p.max_n + pad)

        def s_val(n: int, k: int) -> int:
            return board.entry(n + pad, k) if n + pad >= 0 and k >= 0 else 0

        for k in range(1, (p.max_n + pad) // t + 1):
            for n in range(m * (t - 1) * (k - 1) + 1, p.max_n + 1):
                rec.record(
                    f"m={m} t={t} n={n} k={k}",
                    s_val(n - 1, k) + s_val(n - t, k - 1),
                    s_val(n, k),
                )
    return CheckReport(
        "subset_recurrence",
        _grid_desc(p, "n>m(t-1)(k-1)"),
        rec.cases,
        tuple(rec.failures),
    )


def _check_rr_exact(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for (m, t), expected in sorted(_KNOWN_ENTRY_RELATIONS.items()):
        rel = synthesize(_structure(CombSpec(m, t)), Metric.TILES, tracks_k=True)
        rec.record(f"m={m} t={t} tiles by k", expected, _relation_terms(rel))
    return CheckReport(
        "rr_exact", "specs (2,3),(2,4),(4,2),(2,5)", rec.cases, tuple(rec.failures)
    )


def _check_sums_exact(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for (m, t), expected in sorted(_KNOWN_TILE_SUM_RELATIONS.items()):
        rel = project_row_sum(
            synthesize(_structure(CombSpec(m, t)), Metric.TILES, tracks_k=True)
        )
        rec.record(f"m={m} t={t} tile sums", expected, _relation_terms(rel))
    for (m, t), expected in sorted(_KNOWN_CELL_SUM_RELATIONS.items()):
        rel = synthesize(_structure(CombSpec(m, t)), Metric.CELLS, tracks_k=False)
        rec.record(f"m={m} t={t} cell sums", expected, _relation_terms(rel))
    return CheckReport(
        "sums_exact", "specs (2,3),(2,4),(4,2),(2,5)", rec.cases, tuple(rec.failures)
    )


def _check_gf_42(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    denominator = (
        IntPolynomial((1, -2))
        * IntPolynomial((1, 0, -1))
        * IntPolynomial((1, 0, 2, 1, 1))
    )
    series = power_series_div((1, -1, 0, -1), denominator.coeffs, 12)
    rel = project_row_sum(
        synthesize(_structure(CombSpec(4, 2)), Metric.TILES, tracks_k=True)
    )
    sums = evaluate(rel, 11)
    assert isinstance(sums, tuple)
    for n in range(12):
        rec.record(f"m=4 t=2 n={n}", series[n], sums[n])
    return CheckReport(
        "gf_42", "12 series terms", rec.cases, tuple(rec.failures)
    )


def _check_multinom(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    top = 4 if p.name == "quick" else 5
    for count in (3, 4):
        def sweep(prefix: list[int]) -> None:
            if len(prefix) == count:
                rec.record(f"j={tuple(prefix)}", True, multinomial_check(prefix))
                return
            for v in range(1, top + 1):
                sweep(prefix + [v])

        sweep([])
    return CheckReport(
        "multinom", f"N in 2..3, j<={top}", rec.cases, tuple(rec.failures)
    )


def _check_sumcoeff(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    for t in range(2, p.max_t + 1):
        for n in range(p.max_n + 1):
            rec.record(
                f"t={t} n={n}",
                bonacci_number(t, n),
                bonacci_poly(t, n).evaluate(1),
            )
    return CheckReport(
        "sumcoeff", f"t<={p.max_t} n<={p.max_n}", rec.cases, tuple(rec.failures)
    )


def _check_poly_coeff(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    cap = min(p.max_n, 16)
    for t in range(2, p.max_t + 1):
        omino = CombSpec(1, t)
        for n in range(cap + 1):
            counts = _board_comb_counts(omino, n)
            poly = bonacci_poly(t, n)
            for k in range(n + 1):
                rec.record(
                    f"t={t} n={n} k={k}",
                    counts[k] if k < len(counts) else 0,
                    poly.coefficient(k),
                )
    return CheckReport(
        "poly_coeff", f"t<={p.max_t} n<={cap} (enumerated)", rec.cases, tuple(rec.failures)
    )


def _check_tpoly(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    j_max = 5 if p.name == "quick" else 7
    oracle_cap = 14
    for spec in _specs(p):
        m, t = spec.m, spec.t
        board = _board_triangle(spec, m * j_max + m - 1)
        for j in range(j_max + 1):
            for r in range(m):
                n_board = m * j + r
                for k in range(n_board // t + 1):
                    expected = entry_via_poly(spec, j, r, k)
                    rec.record(
                        f"m={m} t={t} j={j} r={r} k={k}",
                        expected,
                        board.entry(n_board, k),
                    )
                    if n_board <= oracle_cap:
                        counts = _board_comb_counts(spec, n_board)
                        rec.record(
                            f"m={m} t={t} j={j} r={r} k={k} enumerated",
                            expected,
                            counts[k] if k < len(counts) else 0,
                        )
    return CheckReport(
        "tpoly",
        f"m<={p.max_m} t<={p.max_t} j<={j_max}, enumeration cross-check to board 14",
        rec.cases,
        tuple(rec.failures),
    )


def _check_s_corollaries(p: GridProfile) -> CheckReport:
    rec = _Recorder()
    cap = min(p.max_n, 14)
    for spec in _specs(p):
        m, t = spec.m, spec.t
        pad = (t - 1) * m
        board = _board_triangle(spec, cap + pad)
        for n in range(cap + 1):
            subsets = enumerate_restricted_subsets(spec, n)
            by_k: dict[int, int] = {}
            for sub in subsets:
                by_k[sub.k] = by_k.get(sub.k, 0) + 1
            j, r = divmod(n, m)
            poly = bonacci_poly(t, j + t - 1) ** (m - r) * bonacci_poly(
                t, j + t
            ) ** r
            k_top = max(by_k) if by_k else 0
            for k in range(max(k_top, poly.degree) + 1):
                rec.record(
                    f"m={m} t={t} n={n} k={k} coefficient",
                    poly.coefficient(k),
                    by_k.get(k, 0),
                )
                rec.record(
                    f"m={m} t={t} n={n} k={k} board form",
                    board.entry(n + pad, k),
                    by_k.get(k, 0),
                )
            rec.record(
                f"m={m} t={t} n={n} total",
                bonacci_number(t, j + t - 1) ** (m - r)
                * bonacci_number(t, j + t) ** r,
                len(subsets),
            )
    return CheckReport(
        "s_corollaries",
        f"m<={p.max_m} t<={p.max_t} universe<={cap}",
        rec.cases,
        tuple(rec.failures),
    )


_REGISTRY = {
    "ch_eq_chb": _check_ch_eq_chb,
    "adiag_sum": _check_adiag_sum,
    "col0": _check_col0,
    "diag": _check_diag,
    "col1": _check_col1,
    "zeros": _check_zeros,
    "vert_boundary": _check_vert_boundary,
    "ray_boundary": _check_ray_boundary,
    "one_square_block": _check_one_square_block,
    "two_square_block": _check_two_square_block,
    "composition": _check_composition,
    "pascal_region": _check_pascal_region,
    "subset_recurrence": _check_subset_recurrence,
    "rr_exact": _check_rr_exact,
    "sums_exact": _check_sums_exact,
    "gf_42": _check_gf_42,
    "multinom": _check_multinom,
    "sumcoeff": _check_sumcoeff,
    "poly_coeff": _check_poly_coeff,
    "tpoly": _check_tpoly,
    "s_corollaries": _check_s_corollaries,
}


def check_names() -> list[str]:
    return list(_REGISTRY)


def run_check(name: str, profile: str | GridProfile = "quick") -> CheckReport:
    if isinstance(profile, str):
        try:
            profile = PROFILES[profile]
        except KeyError:
            raise ValueError(f"unknown profile {profile!r}") from None
    try:
        fn = _REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}") from None
    return fn(profile)


def run_suite(profile: str | GridProfile = "quick") -> list[CheckReport]:
    return [run_check(name, profile) for name in _REGISTRY]

"""Linear recursions read off the cycle structure of a metatile digraph.

A digraph whose inner cycles share a common node yields a finite recursion
for the tiling counts; a digraph whose only obstruction is a single errant
self-loop yields a slightly longer one. Both synthesizers emit literal term
lists (delta terms and backward shifts) that are then collected into a
canonical form. A direct dynamic program over walks provides the same
numbers with no structure hypothesis at all, which is the cross-check.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .core import CombSpec, Triangle, TriangleKind
from .digraph import Cycle, CycleStructure, MetatileDigraph, UnsupportedStructureError


class Metric(Enum):
    TILES = "tiles"
    CELLS = "cells"


@dataclass(frozen=True)
class RecursionRelation:
    """B(n,k) = sum of delta terms + sum of coeff * B(n - dn, k - dk).

    Out-of-range references (n < 0, k < 0, k > n) read as 0. When tracks_k
    is false the k slot of every term is None and the relation is over a
    plain sequence B(n).
    """

    spec: CombSpec
    metric: Metric
    tracks_k: bool
    delta_terms: tuple[tuple[int, int | None, int], ...]
    shift_terms: tuple[tuple[int, int | None, int], ...]

    def __post_init__(self) -> None:
        for n0, k0, coeff in self.delta_terms:
            if n0 < 0 or coeff == 0 or (k0 is None) == self.tracks_k:
                raise ValueError(f"bad delta term ({n0},{k0},{coeff})")
        for dn, dk, coeff in self.shift_terms:
            if dn <= 0 or coeff == 0 or (dk is None) == self.tracks_k:
                raise ValueError(f"bad shift term ({dn},{dk},{coeff})")
            if dk is not None and dk < 0:
                raise ValueError(f"bad shift term ({dn},{dk},{coeff})")

    def render(self) -> str:
        head = "B(n,k)" if self.tracks_k else "B(n)"
        parts: list[str] = []

        def push(coeff: int, body: str) -> None:
            mag = abs(coeff)
            text = body if mag == 1 else f"{mag}{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")

        for n0, k0, coeff in self.delta_terms:
            push(coeff, f"δ({n0},{k0})" if self.tracks_k else f"δ({n0})")
        for dn, dk, coeff in self.shift_terms:
            if self.tracks_k:
                karg = "k" if dk == 0 else f"k-{dk}"
                push(coeff, f"B(n-{dn},{karg})")
            else:
                push(coeff, f"B(n-{dn})")
        if not parts:
            parts.append("0")
        return f"{head} = " + " ".join(parts)

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.spec.m,
                "t": self.spec.t,
                "metric": self.metric.value,
                "tracks_k": self.tracks_k,
                "delta_terms": [list(term) for term in self.delta_terms],
                "shift_terms": [list(term) for term in self.shift_terms],
            },
            indent=2,
        )


def _collect(
    terms: list[tuple[int, int | None, int]], tracks_k: bool
) -> tuple[tuple[int, int | None, int], ...]:
    acc: dict[tuple[int, int | None], int] = {}
    for n, k, coeff in terms:
        key = (n, k if tracks_k else None)
        acc[key] = acc.get(key, 0) + coeff
    kept = [(n, k, c) for (n, k), c in acc.items() if c != 0]
    kept.sort(key=lambda term: (term[0], term[1] if term[1] is not None else 0))
    return tuple(kept)


def synthesize(
    structure: CycleStructure, metric: Metric, tracks_k: bool = True
) -> RecursionRelation:
    """Turn a classified cycle structure into its recursion term lists.

    Common-node shape (inner cycles may be absent entirely): one unit delta,
    one shift minus one delta per inner cycle, per outer cycle its shift
    minus the shift composed with every inner cycle, one shift per circuit.

    Errant-loop shape: requires exactly one plain and one non-plain inner
    cycle besides the loop, and every outer cycle plain; adds the loop/plain
    cross terms and subtracts the loop shift from every plain circuit.
    """
    spec = structure.digraph.spec

    def w(cycle: Cycle) -> int:
        return cycle.n_cells if metric is Metric.CELLS else cycle.n_tiles

    deltas: list[tuple[int, int | None, int]] = [(0, 0, 1)]
    shifts: list[tuple[int, int | None, int]] = []

    if structure.errant is None:
        inner = structure.inner_cycles
        for cyc in inner:
            shifts.append((w(cyc), cyc.n_combs, 1))
            deltas.append((w(cyc), cyc.n_combs, -1))
        for oc in structure.outer_cycles:
            shifts.append((w(oc), oc.n_combs, 1))
            for cyc in inner:
                shifts.append((w(oc) + w(cyc), oc.n_combs + cyc.n_combs, -1))
        for circ in structure.circuits:
            shifts.append((w(circ), circ.n_combs, 1))
    else:
        plain_inner = [c for c in structure.inner_cycles if c.plain]
        other_inner = [c for c in structure.inner_cycles if not c.plain]
        if len(plain_inner) != 1 or len(other_inner) != 1:
            raise UnsupportedStructureError(
                "errant-loop synthesis needs exactly one plain and one "
                "non-plain inner cycle besides the loop"
            )
        if not all(c.plain for c in structure.outer_cycles):
            raise UnsupportedStructureError(
                "errant-loop synthesis needs every outer cycle plain"
            )
        trio = (structure.errant, plain_inner[0], other_inner[0])
        lens = [w(c) for c in trio]
        combs = [c.n_combs for c in trio]
        for length, kc in zip(lens, combs):
            shifts.append((length, kc, 1))
            deltas.append((length, kc, -1))
        cross_l = lens[0] + lens[1]
        cross_k = combs[0] + combs[1]
        deltas.append((cross_l, cross_k, 1))
        shifts.append((cross_l, cross_k, -1))
        for oc in structure.outer_cycles:
            lo, ko = w(oc), oc.n_combs
            shifts.append((lo, ko, 1))
            shifts.append((lo + cross_l, ko + cross_k, 1))
            for length, kc in zip(lens, combs):
                shifts.append((lo + length, ko + kc, -1))
        for circ in structure.circuits:
            shifts.append((w(circ), circ.n_combs, 1))
            if circ.plain:
                shifts.append((w(circ) + lens[0], circ.n_combs + combs[0], -1))

    return RecursionRelation(
        spec, metric, tracks_k, _collect(deltas, tracks_k), _collect(shifts, tracks_k)
    )


def project_row_sum(rel: RecursionRelation) -> RecursionRelation:
    """Sum the relation over k, collapsing terms that land on the same shift."""
    if not rel.tracks_k:
        raise ValueError("relation already projected")
    deltas = [(n0, None, c) for n0, _, c in rel.delta_terms]
    shifts = [(dn, None, c) for dn, _, c in rel.shift_terms]
    return RecursionRelation(
        rel.spec, rel.metric, False, _collect(deltas, False), _collect(shifts, False)
    )


def evaluate(rel: RecursionRelation, n_max: int) -> Triangle | tuple[int, ...]:
    """Run the relation forward through n = n_max with exact integers."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if rel.tracks_k:
        rows: list[list[int]] = []
        for n in range(n_max + 1):
            row = []
            for k in range(n + 1):
                value = 0
                for n0, k0, coeff in rel.delta_terms:
                    if n0 == n and k0 == k:
                        value += coeff
                for dn, dk, coeff in rel.shift_terms:
                    pn, pk = n - dn, k - dk
                    if pn >= 0 and 0 <= pk <= pn:
                        value += coeff * rows[pn][pk]
                row.append(value)
            rows.append(row)
        kind = TriangleKind.TILE if rel.metric is Metric.TILES else TriangleKind.BOARD
        return Triangle.from_rows(rel.spec, kind, rows)
    seq: list[int] = []
    for n in range(n_max + 1):
        value = 0
        for n0, _, coeff in rel.delta_terms:
            if n0 == n:
                value += coeff
        for dn, _, coeff in rel.shift_terms:
            if n - dn >= 0:
                value += coeff * seq[n - dn]
        seq.append(value)
    return tuple(seq)


def walk_count(
    dg: MetatileDigraph, metric: Metric, n_max: int, tracks_k: bool = True
) -> Triangle | tuple[int, ...]:
    """Count weighted walks 0 to 0 directly on the digraph, no synthesis.

    Arc weight is 1 tile or the arc's cell count; walks may pass through 0
    (a full tiling is a chain of metatiles). Works on any digraph, including
    ones whose cycle structure the synthesizer refuses.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    layers: list[dict[tuple[str, int], int]] = [
        defaultdict(int) for _ in range(n_max + 1)
    ]
    layers[0][("0", 0)] = 1
    for n in range(n_max + 1):
        for (node, k), count in list(layers[n].items()):
            if count == 0:
                continue
            for arc in dg.arcs_from[node]:
                weight = arc.cell_weight if metric is Metric.CELLS else 1
                if n + weight <= n_max:
                    layers[n + weight][(arc.dst, k + arc.comb_weight)] += count
    rows = [
        [layers[n].get(("0", k), 0) for k in range(n + 1)] for n in range(n_max + 1)
    ]
    if tracks_k:
        kind = TriangleKind.TILE if metric is Metric.TILES else TriangleKind.BOARD
        return Triangle.from_rows(dg.spec, kind, rows)
    return tuple(sum(row) for row in rows)


def _multinomial(parts: Sequence[int]) -> int:
    remaining = sum(parts)
    out = 1
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def multinomial_check(j_values: Sequence[int]) -> bool:
    """Exact two-sided evaluation of the block-counting multinomial identity.

    j_values is (j_0, j_1, ..., j_N) with N >= 2 and every entry positive.
    """
    js = [int(v) for v in j_values]
    if len(js) < 3:
        raise ValueError("need j_0 through j_N with N >= 2")
    if any(v <= 0 for v in js):
        raise ValueError("all j values must be positive")
    j0 = js[0]
    rest = js[1:]
    j_last = rest[-1]
    lhs = _multinomial(rest) * math.comb(j0 + j_last - 1, j0)
    factor = math.comb(j0 + j_last - 1, j0) - math.comb(j0 + j_last - 2, j0 - 1)
    rhs = 0
    for r in range(len(rest) - 1):
        reduced = rest.copy()
        reduced[r] -= 1
        rhs += _multinomial(reduced) * factor
    rhs += _multinomial(rest) * math.comb(j0 + j_last - 2, j0 - 1)
    last = rest.copy()
    last[-1] -= 1
    rhs += _multinomial(last) * math.comb(j0 + j_last - 2, j0)
    return lhs == rhs

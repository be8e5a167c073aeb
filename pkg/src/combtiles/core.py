"""Tile geometry, index conversions, and the triangle container.

A board is a linear array of unit cells, numbered from 1. It is tiled
with squares (one cell each) and combs: a comb has t teeth, each one
cell wide, with consecutive teeth separated by a gap of width m - 1.
Two integers (m, t) therefore fix the tile family. Counting tilings
either by the number of tiles used or by the length of the board tiled
gives two lower-triangular integer tables related by an index shift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CombSpec:
    """Parameters of the tile family: squares plus combs with t teeth m apart.

    A comb anchored at cell p occupies {p, p + m, ..., p + (t-1)m}, so it
    spans (t-1)m + 1 cells. With m = 1 the teeth touch and the comb is a
    plain t-omino; with t = 2 it is a two-tooth fence.
    """

    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        if self.t < 2:
            raise ValueError(f"t must be at least 2, got {self.t}")

    @property
    def comb_extent(self) -> int:
        """Cells spanned by one comb, gaps included."""
        return (self.t - 1) * self.m + 1


def comb_cells(spec: CombSpec, pos: int) -> frozenset[int]:
    """Cells occupied by a comb whose leftmost tooth is at cell ``pos``."""
    if pos < 1:
        raise ValueError(f"cell index must be >= 1, got {pos}")
    return frozenset(pos + i * spec.m for i in range(spec.t))


def board_to_tile_index(spec: CombSpec, n_board: int, k: int) -> tuple[int, int]:
    """Map (board length, comb count) to (tile count, comb count).

    A tiling of an n-board with k combs uses n - kt squares, hence
    n - (t-1)k tiles in total. Negative results are allowed; they index
    implicit zeros of the triangles.
    """
    return (n_board - (spec.t - 1) * k, k)


def tile_to_board_index(spec: CombSpec, n_tiles: int, k: int) -> tuple[int, int]:
    """Inverse of :func:`board_to_tile_index`."""
    return (n_tiles + (spec.t - 1) * k, k)


def max_combs(spec: CombSpec, J: int, R: int) -> int:
    """Largest number of combs that fits in a board of length m*J + R.

    R selects the residue class of the board length mod m and must lie
    in 0..m-1.
    """
    if not 0 <= R < spec.m:
        raise ValueError(f"R must be in 0..{spec.m - 1}, got {R}")
    if J < 0:
        raise ValueError(f"J must be >= 0, got {J}")
    t = spec.t
    if J % t < t - 1:
        return spec.m * (J - J % t) // t
    return spec.m * (J - t + 1) // t + R


class TriangleKind(Enum):
    """Which index the triangle rows run over.

    TILE: entry (n, k) counts tilings that use n tiles, k of them combs.
    BOARD: entry (n, k) counts tilings of an n-board that use k combs.
    """

    TILE = "tile"
    BOARD = "board"


@dataclass(frozen=True)
class Triangle:
    """Dense lower-triangular table of nonnegative big integers.

    Row n holds entries for k = 0..n, trailing zeros included. Entries
    outside the stored triangle (k < 0 or k > n) read as zero.
    """

    spec: CombSpec
    kind: TriangleKind
    rows: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        frozen = tuple(tuple(int(e) for e in row) for row in self.rows)
        object.__setattr__(self, "rows", frozen)
        for n, row in enumerate(frozen):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")
            if any(e < 0 for e in row):
                raise ValueError(f"row {n} contains a negative entry")
        if frozen and frozen[0] != (1,):
            raise ValueError("entry (0,0) must be 1")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> int:
        """Entry (n, k), with implicit zeros for k < 0, k > n, or n < 0."""
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self.rows):
            raise IndexError(f"row {n} not materialized (have {len(self.rows)} rows)")
        return self.rows[n][k]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def to_csv(self) -> str:
        """One row per line, entries comma-separated."""
        return "\n".join(",".join(str(e) for e in row) for row in self.rows) + "\n"

    def to_json(self) -> str:
        """JSON object with entries rendered as decimal strings."""
        obj = {
            "m": self.spec.m,
            "t": self.spec.t,
            "kind": self.kind.value,
            "rows": [[str(e) for e in row] for row in self.rows],
        }
        return json.dumps(obj)

    @classmethod
    def from_rows(
        cls, spec: CombSpec, kind: TriangleKind, rows: Iterable[Sequence[int]]
    ) -> "Triangle":
        return cls(spec, kind, tuple(tuple(row) for row in rows))

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        obj = json.loads(text)
        spec = CombSpec(int(obj["m"]), int(obj["t"]))
        kind = TriangleKind(obj["kind"])
        rows = tuple(tuple(int(e) for e in row) for row in obj["rows"])
        return cls(spec, kind, rows)

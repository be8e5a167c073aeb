"""Integer polynomials and the square/t-omino counting family.

The family f_0, f_1, ... for a tooth count t satisfies

    f_n(x) = f_{n-1}(x) + x * f_{n-t}(x),   f_0 = 1,   f_{n<0} = 0,

so [x^k] f_n counts tilings of an n-board by squares and t-ominoes with k
t-ominoes. Products of these polynomials give closed forms for triangle
entries and antidiagonal sums.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Sequence

from .core import CombSpec


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, stored low degree first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cleaned = [int(c) for c in self.coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @property
    def degree(self) -> int:
        # degree of the zero polynomial is reported as -1
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if k < 0 or k >= len(self.coeffs):
            return 0
        return self.coeffs[k]

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("exponent must be >= 0")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))


_X = IntPolynomial((0, 1))


@functools.lru_cache(maxsize=None)
def bonacci_poly(t: int, n: int) -> IntPolynomial:
    """The n-th member of the square/t-omino family for tooth count t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if n < 0:
        return IntPolynomial(())
    if n == 0:
        return IntPolynomial((1,))
    return bonacci_poly(t, n - 1) + _X * bonacci_poly(t, n - t)


def bonacci_number(t: int, n: int) -> int:
    """Value of the family at x = 1, computed by its own integer recurrence."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if n < 0:
        return 0
    vals = [0] * (n + 1)
    vals[0] = 1
    for i in range(1, n + 1):
        vals[i] = vals[i - 1] + (vals[i - t] if i >= t else 0)
    return vals[n]


def _check_j_r(spec: CombSpec, j: int, r: int) -> None:
    if j < 0:
        raise ValueError("j must be >= 0")
    if not 0 <= r < spec.m:
        raise ValueError(f"r must be in 0..{spec.m - 1}")


def entry_via_poly(spec: CombSpec, j: int, r: int, k: int) -> int:
    """Tile-indexed entry at (m*j + r - (t-1)*k, k) as a product coefficient.

    The value is [x^k] of f_j^(m-r) * f_{j+1}^r at tooth count t.
    """
    _check_j_r(spec, j, r)
    if k < 0:
        raise ValueError("k must be >= 0")
    prod = bonacci_poly(spec.t, j) ** (spec.m - r) * bonacci_poly(spec.t, j + 1) ** r
    return prod.coefficient(k)


def antidiagonal_sum_closed(spec: CombSpec, j: int, r: int) -> int:
    """Count of all tilings of an (m*j + r)-board, in product closed form."""
    _check_j_r(spec, j, r)
    return bonacci_number(spec.t, j) ** (spec.m - r) * bonacci_number(
        spec.t, j + 1
    ) ** r


def power_series_div(
    numerator: Sequence[int], denominator: Sequence[int], n_terms: int
) -> list[int]:
    """First n_terms coefficients of numerator/denominator as a power series.

    Exact integer arithmetic; the denominator must have constant term 1.
    """
    if n_terms < 0:
        raise ValueError("n_terms must be >= 0")
    den = list(denominator)
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    num = list(numerator)
    out: list[int] = []
    for k in range(n_terms):
        c = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * out[k - i]
        out.append(c)
    return out

"""Orthogonality of families of linear-form arrays.

A family of d parameter vectors (one per array) is orthogonal when
superposing the d arrays yields every d-tuple of symbols exactly once.
For linear forms that reduces to an integer condition: the d x d matrix
of coefficients must have determinant coprime to n.  The brute-force
superposition check stays available as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .lattice import LatinArray
from .modarith import Residue, gcd, reduce
from .params import ParamVector, check


@dataclass(frozen=True)
class ParamMatrix:
    """d parameter vectors over a common order, stacked as matrix rows."""

    rows: tuple[ParamVector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        d = self.rows[0].dimension
        n = self.rows[0].order
        for row in self.rows:
            if row.dimension != d or row.order != n:
                raise ValueError("all rows must share dimension and order")
        if len(self.rows) != d:
            raise ValueError(
                f"need exactly {d} rows for dimension {d}, got {len(self.rows)}"
            )

    @property
    def order(self) -> int:
        return self.rows[0].order

    @property
    def dimension(self) -> int:
        return self.rows[0].dimension


def determinant(m: ParamMatrix) -> int:
    """Exact integer determinant of the coefficient matrix."""
    return _det([list(row.alphas) for row in m.rows])


def determinant_mod(m: ParamMatrix) -> tuple[int, Residue]:
    """The determinant both as a plain integer and reduced mod n."""
    det = determinant(m)
    return det, reduce(det, m.order)


def check_orthogonal_fast(m: ParamMatrix) -> bool:
    """Determinant test for orthogonality of a feasible family.

    Every row must pass its own feasibility check; a family containing an
    infeasible vector is rejected with an error rather than a verdict.
    """
    for idx, row in enumerate(m.rows):
        report = check(row)
        if not report.feasible:
            first = report.violations[0][0]
            raise ValueError(
                f"not a pandiagonal family: row {idx} {row} fails {first}"
            )
    det = determinant(m)
    return gcd(det % m.order, m.order) == 1


def verify_orthogonal_brute(arrays: Sequence[LatinArray]) -> bool:
    """Superpose the arrays and test that all n**d value tuples are distinct.

    Independent of the determinant shortcut; works on any arrays of equal
    shape, one per axis of their common dimension.
    """
    if not arrays:
        raise ValueError("need at least one array")
    d = arrays[0].dimension
    n = arrays[0].order
    for a in arrays:
        if a.dimension != d or a.order != n:
            raise ValueError("mismatched shapes: arrays must share dimension and order")
    if len(arrays) != d:
        raise ValueError(f"need exactly {d} arrays for dimension {d}, got {len(arrays)}")
    # encode each cell's value tuple as one base-n integer, then count
    code = np.zeros(arrays[0].values.shape, dtype=np.int64)
    for a in arrays:
        code = code * n + a.values
    return int(np.unique(code).size) == n**d


def _det(m: list[list[int]]) -> int:
    if len(m) == 1:
        return m[0][0]
    total = 0
    sign = 1
    for col, lead in enumerate(m[0]):
        minor = [row[:col] + row[col + 1 :] for row in m[1:]]
        total += sign * lead * _det(minor)
        sign = -sign
    return total

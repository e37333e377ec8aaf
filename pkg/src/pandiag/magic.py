"""Pandiagonal magic arrays composed from orthogonal latin-array families.

Superposing d mutually orthogonal arrays and reading each cell's value
tuple as a base-n numeral yields a candidate magic array on the symbols
0 .. n**d - 1; array q supplies the q-th most significant digit.  When the
family is orthogonal and each digit array is pandiagonal-latin, every line
of every constituent square sums to the magic constant
sigma = n * (n**d - 1) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Sequence

import numpy as np

from .lattice import MAX_ORDER, LatinArray, build, permute_symbols
from .modarith import gcd
from .orthogonal import ParamMatrix, determinant
from .params import DIMENSIONS, ParamVector, check, enumerate_feasible

# distinct-grid counting materializes every family x relabeling combination;
# beyond d=2, n=5 that is no longer desk-scale
MAX_DISTINCT_ORDER = 5

# cap on canonical-family combinations scanned by the counting helpers
_MAX_FAMILY_COMBOS = 5_000_000


@dataclass(frozen=True, eq=False)
class MagicArray:
    """A d-dimensional grid meant to carry each of 0 .. n**d - 1 once.

    The permutation property is checked by the verifier, not assumed here;
    only the value range is enforced.  params/perms record provenance when
    the array came from compose_checked.
    """

    values: np.ndarray
    params: tuple[ParamVector, ...] | None = None
    perms: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=np.int64, order="C")
        if vals.ndim not in DIMENSIONS:
            raise ValueError(f"array must have 2, 3 or 4 axes, got {vals.ndim}")
        n = vals.shape[0]
        if any(s != n for s in vals.shape):
            raise ValueError(f"array must be square along every axis, got {vals.shape}")
        if not 2 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside [2, {MAX_ORDER}]")
        top = n ** vals.ndim - 1
        if vals.size and (vals.min() < 0 or vals.max() > top):
            raise ValueError(f"values must lie in [0, {top}]")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return self.values.shape[0]

    @property
    def dimension(self) -> int:
        return self.values.ndim


def sigma(dimension: int, order: int) -> int:
    """The magic line sum n * (n**d - 1) / 2 (always an integer)."""
    if dimension not in DIMENSIONS:
        raise ValueError(f"dimension must be one of {DIMENSIONS}, got {dimension}")
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    return order * (order**dimension - 1) // 2


def compose(arrays: Sequence[LatinArray]) -> MagicArray:
    """Base-n superposition of d digit arrays, most significant first.

    No orthogonality or latin-ness is required here; degenerate input
    simply produces an array that fails verification.
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
    code = np.zeros(arrays[0].values.shape, dtype=np.int64)
    for a in arrays:
        code = code * n + a.values
    return MagicArray(code)


def decompose(m: MagicArray) -> list[LatinArray]:
    """Recover the d base-n digit arrays, most significant first."""
    n, d = m.order, m.dimension
    return [
        LatinArray((m.values // n ** (d - 1 - q)) % n) for q in range(d)
    ]


def compose_checked(
    vectors: Sequence[ParamVector],
    perms: Sequence[Sequence[int]] | None = None,
) -> MagicArray:
    """Build digit arrays from vectors, relabel, and compose, checking hypotheses.

    Each vector must be feasible and the family must pass the determinant
    orthogonality test; failures raise ValueError naming the failed
    hypothesis.  perms optionally relabels the symbols of each digit array
    (one bijection per array) before composing, which preserves both
    orthogonality and pandiagonality.
    """
    vectors = tuple(vectors)
    if not vectors:
        raise ValueError("need at least one vector")
    d = vectors[0].dimension
    n = vectors[0].order
    if len(vectors) != d:
        raise ValueError(f"need exactly {d} vectors for dimension {d}, got {len(vectors)}")
    for v in vectors:
        if v.dimension != d or v.order != n:
            raise ValueError("all vectors must share dimension and order")
        report = check(v)
        if not report.feasible:
            names = ", ".join(c for c, _ in report.violations)
            raise ValueError(f"hypothesis failed: {v} is infeasible ({names})")
    det = determinant(ParamMatrix(vectors))
    g = gcd(det % n, n)
    if g != 1:
        raise ValueError(
            f"hypothesis failed: family is not orthogonal"
            f" (determinant {det} shares factor {g} with order {n})"
        )
    if perms is None:
        perm_tuples = tuple(tuple(range(n)) for _ in range(d))
    else:
        if len(perms) != d:
            raise ValueError(f"need exactly {d} symbol permutations, got {len(perms)}")
        perm_tuples = tuple(tuple(int(x) for x in p) for p in perms)
    digits = []
    for v, p in zip(vectors, perm_tuples):
        digits.append(permute_symbols(build(v), p))
    out = compose(digits)
    return MagicArray(out.values, params=vectors, perms=perm_tuples)


def count_orthogonal_families(dimension: int, order: int) -> int:
    """Ordered d-tuples of canonical feasible vectors passing the determinant test."""
    return sum(1 for _ in _iter_families(dimension, order))


def count_constructed(dimension: int, order: int, distinct: bool = False) -> int:
    """How many magic arrays the construction yields.

    With distinct=False this is the raw product: (ordered orthogonal
    families over canonical vectors) x (n!)**d symbol relabelings, with no
    deduplication.  With distinct=True every family x relabeling
    combination is materialized and duplicate grids are counted once;
    that is only desk-scale for d=2, n <= MAX_DISTINCT_ORDER.
    """
    if not distinct:
        families = count_orthogonal_families(dimension, order)
        return families * factorial(order) ** dimension
    if dimension != 2 or order > MAX_DISTINCT_ORDER:
        raise ValueError(
            "out of supported range: distinct counting is limited to"
            f" dimension 2, order <= {MAX_DISTINCT_ORDER}"
        )
    n = order
    seen: set[bytes] = set()
    relabelings = list(permutations(range(n)))
    for family in _iter_families(dimension, order):
        high, low = (build(v).values for v in family)
        # precompute each relabeling of both digit arrays once
        high_variants = [np.asarray(p, dtype=np.int64)[high] * n for p in relabelings]
        low_variants = [np.asarray(p, dtype=np.int64)[low] for p in relabelings]
        for hv in high_variants:
            for lv in low_variants:
                seen.add((hv + lv).tobytes())
    return len(seen)


def _iter_families(dimension: int, order: int):
    canonical = enumerate_feasible(dimension, order, canonical_only=True)
    if len(canonical) ** dimension > _MAX_FAMILY_COMBOS:
        raise ValueError(
            "out of supported range: too many candidate families"
            f" ({len(canonical)}**{dimension})"
        )
    for rows in product(canonical, repeat=dimension):
        det = determinant(ParamMatrix(rows))
        if gcd(det % order, order) == 1:
            yield rows

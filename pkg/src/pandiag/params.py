"""Parameter vectors for linear-form arrays and their feasibility checks.

A vector of d coefficients over Z_n defines the d-dimensional array whose
cell at coordinates (x_0 .. x_{d-1}) holds sum(alpha_m * x_m) mod n.  The
array is pandiagonal-latin exactly when a family of gcd conditions holds;
every condition says some integer built from the coefficients must be
coprime to n.  Differences and aggregates are reduced mod n first, so a
value of 0 (gcd n) counts as a violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .modarith import MAX_MODULUS, gcd, mod_inverse

DIMENSIONS = (2, 3, 4)


@dataclass(frozen=True)
class ParamVector:
    """Coefficients of a linear form over Z_n, one per axis."""

    alphas: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        if self.dimension not in DIMENSIONS:
            raise ValueError(
                f"dimension must be one of {DIMENSIONS}, got {self.dimension}"
            )
        if not 2 <= self.order <= MAX_MODULUS:
            raise ValueError(f"order {self.order} outside [2, {MAX_MODULUS}]")
        for a in self.alphas:
            if not 1 <= a <= self.order - 1:
                raise ValueError(
                    f"component {a} outside [1, {self.order - 1}] for order {self.order}"
                )

    @property
    def dimension(self) -> int:
        return len(self.alphas)

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.alphas) + f"> mod {self.order}"


@dataclass(frozen=True)
class ConstraintReport:
    """Outcome of a feasibility check.

    violations holds (constraint id, offending value) pairs; the offending
    value is the residue in [0, n) that failed to be coprime to n.
    """

    feasible: bool
    violations: tuple[tuple[str, int], ...] = field(default=())


def check(v: ParamVector) -> ConstraintReport:
    """Feasibility check for any supported dimension."""
    return {2: check_pair, 3: check_triple, 4: check_quad}[v.dimension](v)


def check_pair(v: ParamVector) -> ConstraintReport:
    """d=2 feasibility: components, their sum and their difference coprime to n."""
    _need_dimension(v, 2)
    bad = _component_violations(v) + _pairwise_violations(v)
    return ConstraintReport(not bad, tuple(bad))


def check_triple(v: ParamVector) -> ConstraintReport:
    """d=3 feasibility: pair conditions plus the total and total-less-a-double."""
    _need_dimension(v, 3)
    n = v.order
    total = sum(v.alphas)
    bad = _component_violations(v) + _pairwise_violations(v)
    bad += _violation("total", total, n)
    for m, a in enumerate(v.alphas):
        bad += _violation(f"total_less_double({m})", total - 2 * a, n)
    return ConstraintReport(not bad, tuple(bad))


def check_quad(v: ParamVector) -> ConstraintReport:
    """d=4 feasibility.

    Beyond the component and pairwise conditions, the total B = sum(alphas)
    must stay coprime to n after removing one component once or twice, a
    component once and another twice, or two distinct components twice.
    """
    _need_dimension(v, 4)
    n = v.order
    total = sum(v.alphas)
    bad = _component_violations(v) + _pairwise_violations(v)
    bad += _violation("total", total, n)
    for m, a in enumerate(v.alphas):
        bad += _violation(f"total_less_component({m})", total - a, n)
    for m, a in enumerate(v.alphas):
        bad += _violation(f"total_less_double({m})", total - 2 * a, n)
    for m_once, a_once in enumerate(v.alphas):
        for m_twice, a_twice in enumerate(v.alphas):
            if m_once == m_twice:
                continue
            bad += _violation(
                f"total_less_component_less_double({m_once},{m_twice})",
                total - a_once - 2 * a_twice,
                n,
            )
    for a_idx in range(4):
        for b_idx in range(a_idx + 1, 4):
            bad += _violation(
                f"total_less_two_doubles({a_idx},{b_idx})",
                total - 2 * v.alphas[a_idx] - 2 * v.alphas[b_idx],
                n,
            )
    return ConstraintReport(not bad, tuple(bad))


def canonicalize(v: ParamVector) -> ParamVector:
    """Scale so the leading component becomes 1.

    Requires the leading component to be invertible mod n; feasible vectors
    always satisfy that.
    """
    lead = v.alphas[0]
    if gcd(lead, v.order) != 1:
        raise ValueError(
            f"cannot canonicalize: leading component {lead} not invertible mod {v.order}"
        )
    return scale(v, int(mod_inverse(lead, v.order)))


def scale(v: ParamVector, k: int) -> ParamVector:
    """Multiply every component by k mod n; k must be coprime to n."""
    n = v.order
    if gcd(k % n, n) != 1:
        raise ValueError(f"scale factor {k} not coprime to order {n}")
    return ParamVector(tuple((a * k) % n for a in v.alphas), n)


def enumerate_feasible(
    dimension: int, order: int, canonical_only: bool = False
) -> list[ParamVector]:
    """All feasible vectors for (dimension, order) in lexicographic order.

    canonical_only restricts to leading component 1; since scaling by a
    unit preserves feasibility, every feasible vector is a scaled copy of
    a canonical one.
    """
    return list(iter_feasible(dimension, order, canonical_only))


def iter_feasible(
    dimension: int, order: int, canonical_only: bool = False
) -> Iterator[ParamVector]:
    """Lazy lexicographic feasibility search with pairwise pruning.

    Arguments are validated eagerly; only the search itself is deferred.
    """
    if dimension not in DIMENSIONS:
        raise ValueError(f"dimension must be one of {DIMENSIONS}, got {dimension}")
    if not 2 <= order <= MAX_MODULUS:
        raise ValueError(f"order {order} outside [2, {MAX_MODULUS}]")
    units = [a for a in range(1, order) if gcd(a, order) == 1]

    def extend(prefix: list[int]) -> Iterator[ParamVector]:
        if len(prefix) == dimension:
            v = ParamVector(tuple(prefix), order)
            if check(v).feasible:
                yield v
            return
        choices = [1] if (not prefix and canonical_only) else units
        for a in choices:
            # pairwise sums/differences prune most of the tree early; the
            # aggregate conditions are re-checked at the leaf
            if all(
                gcd((b + a) % order, order) == 1 and gcd((b - a) % order, order) == 1
                for b in prefix
            ):
                yield from extend(prefix + [a])

    return extend([])


def minimal_order(dimension: int, max_order: int) -> int | None:
    """Smallest order in [2, max_order] admitting a feasible vector, else None."""
    for n in range(2, max_order + 1):
        # canonical search suffices: scaling by the inverse of the leading
        # component maps any feasible vector to a canonical feasible one
        if next(iter_feasible(dimension, n, canonical_only=True), None) is not None:
            return n
    return None


def _need_dimension(v: ParamVector, d: int) -> None:
    if v.dimension != d:
        raise ValueError(f"expected {d} components, got {v.dimension}")


def _component_violations(v: ParamVector) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for m, a in enumerate(v.alphas):
        out += _violation(f"component({m})", a, v.order)
    return out


def _pairwise_violations(v: ParamVector) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    d = v.dimension
    for a_idx in range(d):
        for b_idx in range(a_idx + 1, d):
            out += _violation(
                f"pair_sum({a_idx},{b_idx})",
                v.alphas[a_idx] + v.alphas[b_idx],
                v.order,
            )
    for a_idx in range(d):
        for b_idx in range(a_idx + 1, d):
            out += _violation(
                f"pair_diff({a_idx},{b_idx})",
                v.alphas[a_idx] - v.alphas[b_idx],
                v.order,
            )
    return out


def _violation(constraint: str, raw: int, n: int) -> list[tuple[str, int]]:
    value = raw % n
    if gcd(value, n) == 1:
        return []
    return [(constraint, value)]

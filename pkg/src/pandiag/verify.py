"""Construction-blind verification by exhaustive line enumeration.

A d-dimensional array is checked through its constituent squares: the
single square itself for d=2; for d=3 the 3n axis-parallel squares plus 6
diagonal squares (two axes tied equal or summing to n-1); for d=4 the
4n+12 constituent cubes, each expanded recursively into its own 3n+6
squares.  Every square contributes 4n lines: n rows, n columns, n wrapped
diagonals in each of the two orientations (offset 0 being the two main
diagonals).

The verifier reads only the value grid, never construction provenance.
Squares are scanned in a fixed documented order and lines within a square
in the order rows, columns, diagonal-plus, diagonal-minus, so the first
reported failure is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING, Iterator, Sequence

import numpy as np

from .lattice import AXIS_NAMES, LatinArray

if TYPE_CHECKING:  # pragma: no cover
    from .magic import MagicArray

LINE_KINDS = ("row", "column", "diagonal-plus", "diagonal-minus")

# squares are checked in batches to keep fancy-indexing overhead down while
# still letting fail_fast stop early on big d=4 scans
_CHUNK = 256


@dataclass(frozen=True)
class SquareView:
    """One constituent square of a larger array.

    axes holds one binding per global axis: ("const", v) pins a coordinate,
    ("row", flip) / ("col", flip) map the square's own row or column index
    onto the axis, reversed when flip is set.  Anti ties (coordinates
    summing to n-1) are exactly the flipped bindings.
    """

    order: int
    square_id: str
    axes: tuple[tuple, ...]

    def materialize(self, values: np.ndarray) -> np.ndarray:
        """Gather the square's n x n grid out of the full array."""
        n = self.order
        rows, cols = _row_col_index(n)
        index: list[object] = []
        for kind, arg in self.axes:
            if kind == "const":
                index.append(arg)
            else:
                base = rows if kind == "row" else cols
                index.append((n - 1) - base if arg else base)
        return values[tuple(index)]

    def embed(self, r: int, c: int) -> tuple[int, ...]:
        """Global coordinates of the square's local cell (r, c)."""
        n = self.order
        out = []
        for kind, arg in self.axes:
            if kind == "const":
                out.append(arg)
            else:
                x = r if kind == "row" else c
                out.append((n - 1) - x if arg else x)
        return tuple(out)


@dataclass(frozen=True)
class Line:
    """A maximal line inside one constituent square, as global cells."""

    cells: tuple[tuple[int, ...], ...]
    kind: str
    square_id: str


@dataclass(frozen=True)
class Failure:
    line: Line | None
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a full or fail-fast scan.

    property grades what actually held: for the latin check one of
    latin / diagonal-latin / pandiagonal-latin, for the magic check one of
    semi-magic / magic / pandiagonal-magic; None when even the base grade
    failed or a fail-fast scan stopped before grading was possible.
    """

    passed: bool
    property: str | None
    lines_checked: int
    magic_sum: int | None = None
    first_failure: Failure | None = None


@lru_cache(maxsize=None)
def enumerate_squares(dimension: int, order: int) -> tuple[SquareView, ...]:
    """All constituent squares in canonical scan order."""
    n = order
    if dimension == 2:
        return (
            SquareView(n, "square", (("row", False), ("col", False))),
        )
    if dimension == 3:
        return tuple(
            SquareView(n, sq_id, axes)
            for sq_id, axes in _box_square_specs(n, AXIS_NAMES[:3])
        )
    if dimension == 4:
        out = []
        for cube_id, cube_axes, local_names in _cube_specs(n):
            for sq_id, sq_axes in _box_square_specs(n, local_names):
                out.append(
                    SquareView(
                        n,
                        f"cube({cube_id})/{sq_id}",
                        _compose(cube_axes, sq_axes, n),
                    )
                )
        return tuple(out)
    raise ValueError(f"dimension must be 2, 3 or 4, got {dimension}")


def enumerate_cubes(order: int) -> list[str]:
    """Ids of the 4n+12 constituent cubes of a 4-D array."""
    return [cube_id for cube_id, _, _ in _cube_specs(order)]


def enumerate_lines(square: SquareView) -> list[Line]:
    """The 4n lines of one square, in canonical order."""
    n = square.order
    return [_line_at(square, idx) for idx in range(4 * n)]


def verify_latin_pandiagonal(a: LatinArray, fail_fast: bool = False) -> VerificationReport:
    """Check that every line of every constituent square hits each symbol once.

    Grades short of a pass: latin (all rows and columns of every square),
    diagonal-latin (latin plus both main diagonals of every square).
    """
    return _scan(
        a.values,
        magic_sum=None,
        grades=("latin", "diagonal-latin", "pandiagonal-latin"),
        fail_fast=fail_fast,
    )


def verify_magic_pandiagonal(m: "MagicArray", fail_fast: bool = False) -> VerificationReport:
    """Check a candidate magic array by line sums.

    First requires the values to be a permutation of 0..n**d - 1, then
    checks that every line of every constituent square sums to the magic
    constant n*(n**d - 1)/2.  Grades short of a pass: semi-magic (rows and
    columns), magic (plus both main diagonals of every square).
    """
    n, d = m.order, m.dimension
    target = n * (n**d - 1) // 2
    counts = np.bincount(m.values.ravel(), minlength=n**d)
    if counts.max() > 1:
        rep = int(np.argmax(counts > 1))
        return VerificationReport(
            passed=False,
            property=None,
            lines_checked=0,
            magic_sum=target,
            first_failure=Failure(
                None, f"repeat: value {rep} appears {int(counts[rep])} times"
            ),
        )
    return _scan(
        m.values,
        magic_sum=target,
        grades=("semi-magic", "magic", "pandiagonal-magic"),
        fail_fast=fail_fast,
    )


def _scan(
    values: np.ndarray,
    magic_sum: int | None,
    grades: tuple[str, str, str],
    fail_fast: bool,
) -> VerificationReport:
    n, d = values.shape[0], values.ndim
    squares = enumerate_squares(d, n)
    lines_checked = len(squares) * 4 * n
    rows_cols_ok = True
    main_diags_ok = True
    all_ok = True
    stopped_early = False
    failure_at: tuple[int, int] | None = None

    for base in range(0, len(squares), _CHUNK):
        chunk = squares[base : base + _CHUNK]
        grids = np.stack([sq.materialize(values) for sq in chunk])
        ok = _line_ok(grids, magic_sum)
        rows_cols_ok &= bool(ok[:, : 2 * n].all())
        main_diags_ok &= bool(ok[:, 2 * n].all()) and bool(ok[:, 3 * n].all())
        if not ok.all():
            all_ok = False
            if failure_at is None:
                s_idx, l_idx = np.argwhere(~ok)[0]
                failure_at = (base + int(s_idx), int(l_idx))
            if fail_fast:
                lines_checked = failure_at[0] * 4 * n + failure_at[1] + 1
                stopped_early = True
                break

    if all_ok:
        prop: str | None = grades[2]
    elif stopped_early:
        prop = None
    elif rows_cols_ok:
        prop = grades[1] if main_diags_ok else grades[0]
    else:
        prop = None

    first_failure = None
    if failure_at is not None:
        square = squares[failure_at[0]]
        line = _line_at(square, failure_at[1])
        cells_vals = [int(values[c]) for c in line.cells]
        if magic_sum is None:
            reason = f"repeated symbol in {line.kind} of {square.square_id}: {cells_vals}"
        else:
            reason = (
                f"{line.kind} of {square.square_id} sums to {sum(cells_vals)},"
                f" expected {magic_sum}"
            )
        first_failure = Failure(line, reason)

    return VerificationReport(
        passed=all_ok,
        property=prop,
        lines_checked=lines_checked,
        magic_sum=magic_sum,
        first_failure=first_failure,
    )


def _line_ok(grids: np.ndarray, magic_sum: int | None) -> np.ndarray:
    """(squares, 4n) line outcomes in canonical within-square order."""
    n = grids.shape[1]
    coords = np.arange(n)
    offsets = coords[:, None]
    positions = coords[None, :]
    # entry (offset o, position p) of the two diagonal families reads the
    # square at row p, column (p +/- ...) wrapped mod n
    dplus = grids[:, positions, (positions + offsets) % n]
    dminus = grids[:, positions, (n - 1 - positions + offsets) % n]
    blocks = (grids, grids.transpose(0, 2, 1), dplus, dminus)
    oks = []
    for block in blocks:
        if magic_sum is None:
            oks.append((np.sort(block, axis=2) == coords).all(axis=2))
        else:
            oks.append(block.sum(axis=2, dtype=np.int64) == magic_sum)
    return np.concatenate(oks, axis=1)


def _line_at(square: SquareView, index: int) -> Line:
    n = square.order
    kind = LINE_KINDS[index // n]
    k = index % n
    if kind == "row":
        local = [(k, c) for c in range(n)]
    elif kind == "column":
        local = [(r, k) for r in range(n)]
    elif kind == "diagonal-plus":
        local = [(p, (p + k) % n) for p in range(n)]
    else:
        local = [(p, (n - 1 - p + k) % n) for p in range(n)]
    cells = tuple(square.embed(r, c) for r, c in local)
    return Line(cells, kind, square.square_id)


def _box_square_specs(
    n: int, names: Sequence[str]
) -> Iterator[tuple[str, tuple[tuple, ...]]]:
    """The 3n+6 squares of an n^3 box, axes named for readable ids."""
    for a in range(3):
        rem = [x for x in range(3) if x != a]
        for v in range(n):
            axes: list[tuple] = [()] * 3
            axes[a] = ("const", v)
            axes[rem[0]] = ("row", False)
            axes[rem[1]] = ("col", False)
            yield f"{names[a]}={v}", tuple(axes)
    for a, b in combinations(range(3), 2):
        c = 3 - a - b
        for anti in (False, True):
            axes = [()] * 3
            axes[a] = ("row", False)
            axes[b] = ("row", anti)
            axes[c] = ("col", False)
            label = f"{names[a]}+{names[b]}={n - 1}" if anti else f"{names[a]}={names[b]}"
            yield label, tuple(axes)


def _cube_specs(
    n: int,
) -> Iterator[tuple[str, tuple[tuple, ...], tuple[str, str, str]]]:
    """The 4n+12 constituent cubes of an n^4 array.

    Each cube binds the four global axes to a constant or to one of three
    cube-local axes (with an optional reversal for anti ties) and carries
    names for those local axes so nested square ids stay readable.
    """
    names = AXIS_NAMES
    for a in range(4):
        rem = [x for x in range(4) if x != a]
        for v in range(n):
            axes: list[tuple] = [()] * 4
            axes[a] = ("const", v)
            for local, g in enumerate(rem):
                axes[g] = (local, False)
            yield f"{names[a]}={v}", tuple(axes), tuple(names[g] for g in rem)
    for a, b in combinations(range(4), 2):
        rem = [x for x in range(4) if x not in (a, b)]
        for anti in (False, True):
            axes = [()] * 4
            axes[a] = (0, False)
            axes[b] = (0, anti)
            axes[rem[0]] = (1, False)
            axes[rem[1]] = (2, False)
            label = f"{names[a]}+{names[b]}={n - 1}" if anti else f"{names[a]}={names[b]}"
            local = (f"{names[a]}{names[b]}", names[rem[0]], names[rem[1]])
            yield label, tuple(axes), local


def _compose(
    cube_axes: tuple[tuple, ...], square_axes: tuple[tuple, ...], n: int
) -> tuple[tuple, ...]:
    """Bindings of a square inside a cube, pushed out to global axes."""
    out = []
    for binding in cube_axes:
        if binding[0] == "const":
            out.append(binding)
            continue
        local, flip = binding
        kind, arg = square_axes[local]
        if kind == "const":
            out.append(("const", (n - 1) - arg if flip else arg))
        else:
            out.append((kind, bool(arg) ^ bool(flip)))
    return tuple(out)


@lru_cache(maxsize=None)
def _row_col_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    coords = np.arange(n)
    rows = coords[:, None].copy()
    cols = coords[None, :].copy()
    rows.flags.writeable = False
    cols.flags.writeable = False
    return rows, cols

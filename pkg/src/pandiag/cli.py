"""Command line front end and the array document format.

Documents are JSON objects with keys dimension, order, values (the flat
cell list, first axis slowest), an optional kind tag (latin or magic) and
optional generating params.  Serialization is deterministic: sorted keys,
compact separators, one trailing newline, so identical arrays produce
identical bytes.

Exit codes: 0 success or property verified, 1 well-formed input with a
negative answer (failed verification, infeasible or non-orthogonal
family, empty search), 2 usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .lattice import (
    AXIS_NAMES,
    MAX_ORDER,
    LatinArray,
    SliceSpec,
    Tie,
    build,
    slice_values,
)
from .magic import MagicArray, compose_checked
from .modarith import MAX_MODULUS
from .orthogonal import ParamMatrix, check_orthogonal_fast, determinant_mod, verify_orthogonal_brute
from .params import DIMENSIONS, ParamVector, iter_feasible
from .verify import verify_latin_pandiagonal, verify_magic_pandiagonal

# d=4 arrays grow as n**4; past 41 the CLI wants explicit --force
DEFAULT_ORDER_CAPS = {2: 101, 3: 101, 4: 41}

KINDS = ("latin", "magic")


class InputError(Exception):
    """Malformed input or bad usage; maps to exit code 2."""


@dataclass(frozen=True)
class ArrayDocument:
    """In-memory form of the JSON wire format."""

    dimension: int
    order: int
    values: np.ndarray
    kind: str = "latin"
    params: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.dimension not in DIMENSIONS:
            raise InputError(f"dimension must be one of {DIMENSIONS}, got {self.dimension}")
        if not 2 <= self.order <= MAX_ORDER:
            raise InputError(f"order {self.order} outside [2, {MAX_ORDER}]")
        if self.kind not in KINDS:
            raise InputError(f"kind must be one of {KINDS}, got {self.kind!r}")
        vals = np.array(self.values, dtype=np.int64, order="C")
        expected = (self.order,) * self.dimension
        if vals.shape != expected:
            if vals.size == self.order**self.dimension and vals.ndim == 1:
                vals = vals.reshape(expected)
            else:
                raise InputError(
                    f"values must hold {self.order**self.dimension} cells, got {vals.size}"
                )
        top = self.order - 1 if self.kind == "latin" else self.order**self.dimension - 1
        if vals.size and (vals.min() < 0 or vals.max() > top):
            raise InputError(f"values must lie in [0, {top}] for kind {self.kind}")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)
        if self.params is not None:
            object.__setattr__(
                self, "params", tuple(tuple(int(a) for a in vec) for vec in self.params)
            )
            for vec in self.params:
                if len(vec) != self.dimension:
                    raise InputError("params must list one coefficient per axis")


def document_to_json(doc: ArrayDocument) -> str:
    payload: dict[str, object] = {
        "dimension": doc.dimension,
        "order": doc.order,
        "kind": doc.kind,
        "values": [int(x) for x in doc.values.ravel()],
    }
    if doc.params is not None:
        if doc.kind == "latin":
            payload["params"] = list(doc.params[0])
        else:
            payload["params"] = [list(vec) for vec in doc.params]
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def document_from_json(text: str) -> ArrayDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise InputError("document must be a JSON object")
    for key in ("dimension", "order", "values"):
        if key not in raw:
            raise InputError(f"document missing required key {key!r}")
    dimension, order = raw["dimension"], raw["order"]
    if not isinstance(dimension, int) or not isinstance(order, int):
        raise InputError("dimension and order must be integers")
    values = raw["values"]
    if not isinstance(values, list) or not all(isinstance(x, int) for x in values):
        raise InputError("values must be a list of integers")
    kind = raw.get("kind", "latin")
    params = raw.get("params")
    norm: tuple[tuple[int, ...], ...] | None = None
    if params is not None:
        if not isinstance(params, list) or not params:
            raise InputError("params must be a non-empty list")
        if all(isinstance(x, int) for x in params):
            norm = (tuple(params),)
        elif all(isinstance(vec, list) and all(isinstance(x, int) for x in vec) for vec in params):
            norm = tuple(tuple(vec) for vec in params)
        else:
            raise InputError("params must be a vector or a list of vectors")
    return ArrayDocument(dimension, order, np.array(values), kind, norm)


def render_blocks(values: np.ndarray, sep: str, offset: int = 0) -> str:
    """Text form of a shaped array: blank-line separated 2-D blocks.

    Blocks run over the leading coordinates in ascending row-major order;
    each block prints the final two axes as rows of cells.
    """
    n = values.shape[0]
    lines: list[str] = []
    for idx, block in enumerate(values.reshape(-1, n, n)):
        if idx:
            lines.append("")
        for row in block:
            lines.append(sep.join(str(int(x) + offset) for x in row))
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1


def main() -> None:  # pragma: no cover - thin entry point
    sys.exit(run())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pandiag",
        description="Pandiagonal latin and magic arrays from linear forms over Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a linear-form array and emit it")
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument("--params", required=True, metavar="A1,A2,..", help="one coefficient per axis")
    p.add_argument("--dim", type=int, help="expected dimension (cross-checked against --params)")
    p.add_argument("--check", action="store_true", help="verify pandiagonality before emitting")
    p.add_argument("--slice", metavar="SPEC", help="emit a 2-D view instead of the full array")
    _output_options(p)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("verify", help="check a document for the pandiagonal property")
    p.add_argument("file", nargs="?", default="-", help="JSON document path or - for stdin")
    p.add_argument(
        "--expect",
        choices=("latin-pandiagonal", "magic-pandiagonal"),
        help="property to check; defaults to the document's kind tag",
    )
    p.add_argument("--fail-fast", action="store_true", help="stop at the first failing square")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("search", help="enumerate feasible parameter vectors")
    p.add_argument("--dim", type=int, required=True, choices=DIMENSIONS)
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument("--canonical", action="store_true", help="leading coefficient 1 only")
    p.add_argument("--limit", type=int, metavar="K", help="stop after K vectors")
    p.add_argument("--force", action="store_true", help="override the default order cap")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("orthogonal", help="test a family of vectors for orthogonality")
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument(
        "--params-list", required=True, metavar="V1;V2;..", help="d vectors, e.g. '1,2;1,3'"
    )
    p.add_argument("--fast", action="store_true", help="run the determinant test")
    p.add_argument("--brute", action="store_true", help="run the superposition test")
    p.add_argument("--force", action="store_true", help="override the default order cap")
    p.set_defaults(handler=_cmd_orthogonal)

    p = sub.add_parser("magic", help="compose a pandiagonal magic array from a family")
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument(
        "--params-list", required=True, metavar="V1;V2;..", help="d vectors, e.g. '1,2;1,3'"
    )
    p.add_argument(
        "--perms",
        metavar="P1;P2;..",
        help="optional symbol relabeling per digit array, e.g. '0,1,2,3,4;4,3,2,1,0'",
    )
    p.add_argument("--check", action="store_true", help="verify the composed array before emitting")
    _output_options(p)
    p.set_defaults(handler=_cmd_magic)

    p = sub.add_parser("slice", help="print a 2-D view of a document")
    p.add_argument("file", nargs="?", default="-", help="JSON document path or - for stdin")
    p.add_argument("--spec", required=True, metavar="SPEC", help="e.g. 'k=2' or 'i=2,j+k=16'")
    p.add_argument("--format", choices=("grid", "csv", "json"), default="grid")
    p.add_argument("--one-based", action="store_true", help="display symbols starting at 1")
    p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_slice)

    return parser


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "grid", "csv"), default="json")
    p.add_argument("--one-based", action="store_true", help="display symbols starting at 1")
    p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")
    p.add_argument("--force", action="store_true", help="override the default order cap")


def _cmd_generate(args: argparse.Namespace) -> int:
    alphas = _parse_vector(args.params)
    if args.dim is not None and args.dim != len(alphas):
        raise InputError(f"--dim {args.dim} contradicts {len(alphas)} coefficients")
    _check_order_cap(len(alphas), args.order, args.force)
    v = _wrap_input(lambda: ParamVector(alphas, args.order))
    array = _wrap_input(lambda: build(v))
    if args.check:
        report = verify_latin_pandiagonal(array)
        if not report.passed:
            reason = report.first_failure.reason if report.first_failure else "unknown"
            print(f"check failed: {reason}", file=sys.stderr)
            return 1
    if args.slice is not None:
        spec = _parse_slice_spec(args.slice, v.dimension, v.order)
        grid = _wrap_input(lambda: slice_values(array.values, spec))
        doc = ArrayDocument(2, v.order, grid, "latin")
    else:
        doc = ArrayDocument(v.dimension, v.order, array.values, "latin", (v.alphas,))
    _emit(doc, args.format, args.one_based, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    expect = args.expect or (
        "magic-pandiagonal" if doc.kind == "magic" else "latin-pandiagonal"
    )
    if expect == "latin-pandiagonal":
        try:
            array = LatinArray(doc.values)
        except ValueError as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return 1
        report = verify_latin_pandiagonal(array, fail_fast=args.fail_fast)
        if report.passed:
            print(f"verified {report.property}: lines={report.lines_checked}")
            return 0
    else:
        try:
            candidate = MagicArray(doc.values)
        except ValueError as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return 1
        report = verify_magic_pandiagonal(candidate, fail_fast=args.fail_fast)
        if report.passed:
            print(
                f"verified {report.property}: sum={report.magic_sum},"
                f" lines={report.lines_checked}"
            )
            return 0
    reason = report.first_failure.reason if report.first_failure else "unknown"
    achieved = report.property or "none"
    print(f"verification failed (achieved: {achieved}): {reason}", file=sys.stderr)
    return 1


def _cmd_search(args: argparse.Namespace) -> int:
    _check_order_cap(args.dim, args.order, args.force, hard_cap=MAX_MODULUS)
    count = 0
    for v in _wrap_input(lambda: iter_feasible(args.dim, args.order, args.canonical)):
        print(",".join(str(a) for a in v.alphas))
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    print(f"{count} feasible vectors", file=sys.stderr)
    return 0 if count else 1


def _cmd_orthogonal(args: argparse.Namespace) -> int:
    vectors = _parse_family(args.params_list, args.order)
    matrix = _wrap_input(lambda: ParamMatrix(vectors))
    _check_order_cap(matrix.dimension, args.order, args.force)
    det, residue = determinant_mod(matrix)
    print(f"det={det}")
    print(f"det_mod={int(residue)}")
    # with no explicit selection both checks run
    run_fast = args.fast or not args.brute
    run_brute = args.brute or not args.fast
    verdicts = []
    if run_fast:
        try:
            fast = check_orthogonal_fast(matrix)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"fast={'orthogonal' if fast else 'not-orthogonal'}")
        verdicts.append(fast)
    if run_brute:
        arrays = [build(v) for v in matrix.rows]
        brute = verify_orthogonal_brute(arrays)
        print(f"brute={'orthogonal' if brute else 'not-orthogonal'}")
        verdicts.append(brute)
    return 0 if all(verdicts) else 1


def _cmd_magic(args: argparse.Namespace) -> int:
    vectors = _parse_family(args.params_list, args.order)
    dimension = vectors[0].dimension
    _check_order_cap(dimension, args.order, args.force)
    perms = _parse_perms(args.perms, dimension, args.order) if args.perms else None
    try:
        composed = compose_checked(vectors, perms)
    except ValueError as exc:
        print(f"composition rejected: {exc}", file=sys.stderr)
        return 1
    if args.check:
        report = verify_magic_pandiagonal(composed)
        if not report.passed:
            reason = report.first_failure.reason if report.first_failure else "unknown"
            print(f"check failed: {reason}", file=sys.stderr)
            return 1
    doc = ArrayDocument(
        dimension,
        args.order,
        composed.values,
        "magic",
        tuple(v.alphas for v in vectors),
    )
    _emit(doc, args.format, args.one_based, args.output)
    return 0


def _cmd_slice(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    spec = _parse_slice_spec(args.spec, doc.dimension, doc.order)
    grid = _wrap_input(lambda: slice_values(doc.values, spec))
    if args.format == "json":
        if doc.kind != "latin":
            raise InputError(
                "json slice output is only defined for latin documents;"
                " use grid or csv"
            )
        out = ArrayDocument(2, doc.order, grid, "latin")
        _emit(out, "json", args.one_based, args.output)
    else:
        sep = " " if args.format == "grid" else ","
        _write(render_blocks(grid, sep, 1 if args.one_based else 0), args.output)
    return 0


def _emit(doc: ArrayDocument, fmt: str, one_based: bool, output: str | None) -> None:
    if fmt == "json":
        if one_based:
            raise InputError("--one-based applies to grid and csv output only")
        text = document_to_json(doc)
    else:
        sep = " " if fmt == "grid" else ","
        text = render_blocks(doc.values, sep, 1 if one_based else 0)
    _write(text, output)


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_document(path: str) -> ArrayDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
    return document_from_json(text)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        alphas = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse coefficient vector {text!r}") from None
    if len(alphas) not in DIMENSIONS:
        raise InputError(f"need 2, 3 or 4 coefficients, got {len(alphas)}")
    return alphas


def _parse_family(text: str, order: int) -> tuple[ParamVector, ...]:
    vectors = []
    for part in text.split(";"):
        alphas = _parse_vector(part)
        vectors.append(_wrap_input(lambda: ParamVector(alphas, order)))
    return tuple(vectors)


def _parse_perms(text: str, dimension: int, order: int) -> list[list[int]]:
    blocks = text.split(";")
    if len(blocks) != dimension:
        raise InputError(f"need {dimension} permutations, got {len(blocks)}")
    perms = []
    for block in blocks:
        try:
            perm = [int(x) for x in block.split(",")]
        except ValueError:
            raise InputError(f"cannot parse permutation {block!r}") from None
        if sorted(perm) != list(range(order)):
            raise InputError(f"permutation {block!r} is not a bijection on 0..{order - 1}")
        perms.append(perm)
    return perms


_CONST_RE = re.compile(r"^([a-z])=(\d+)$")
_EQUAL_RE = re.compile(r"^([a-z])=([a-z])$")
_ANTI_RE = re.compile(r"^([a-z])\+([a-z])=(\d+)$")


def _parse_slice_spec(text: str, dimension: int, order: int) -> SliceSpec:
    """Parse constraints like "k=2", "i=j" or "i=2,j+k=16" into a SliceSpec.

    In a tie the first-named axis is the bound one and the second stays
    free; the remaining free axes become rows then columns in axis order.
    """
    names = AXIS_NAMES[:dimension]
    fixed: dict[int, int | Tie] = {}
    ties: list[tuple[int, int, bool]] = []
    tokens = [t.strip() for t in text.split(",") if t.strip()] if text.strip() else []
    for token in tokens:
        if m := _CONST_RE.match(token):
            axis = _axis_index(m.group(1), names)
            value = int(m.group(2))
            if not 0 <= value < order:
                raise InputError(f"coordinate {value} outside [0, {order - 1}] in {token!r}")
            _claim(fixed, axis, value, token)
        elif m := _EQUAL_RE.match(token):
            bound = _axis_index(m.group(1), names)
            target = _axis_index(m.group(2), names)
            ties.append((bound, target, False))
        elif m := _ANTI_RE.match(token):
            bound = _axis_index(m.group(1), names)
            target = _axis_index(m.group(2), names)
            if int(m.group(3)) != order - 1:
                raise InputError(
                    f"wrap ties must sum to n-1 = {order - 1}, got {token!r}"
                )
            ties.append((bound, target, True))
        else:
            raise InputError(f"cannot parse slice constraint {token!r}")
    for bound, target, anti in ties:
        if bound == target:
            raise InputError("a tie must couple two different axes")
        _claim(fixed, bound, Tie(target, anti), AXIS_NAMES[bound])
    free = [axis for axis in range(dimension) if axis not in fixed]
    if len(free) != 2:
        raise InputError(
            f"slice must leave exactly 2 axes free, got {len(free)} for dimension {dimension}"
        )
    for binding in fixed.values():
        if isinstance(binding, Tie) and binding.axis not in free:
            raise InputError(
                f"tie target {names[binding.axis]} is not free; name the free axis second"
            )
    return SliceSpec(free[0], free[1], fixed)


def _axis_index(name: str, names: str) -> int:
    if name not in names:
        raise InputError(f"unknown axis {name!r}; expected one of {','.join(names)}")
    return names.index(name)


def _claim(fixed: dict, axis: int, binding: int | Tie, token: str) -> None:
    if axis in fixed:
        raise InputError(f"axis {AXIS_NAMES[axis]} bound twice (at {token!r})")
    fixed[axis] = binding


def _check_order_cap(
    dimension: int, order: int, force: bool, hard_cap: int = MAX_ORDER
) -> None:
    if dimension not in DIMENSIONS:
        raise InputError(f"dimension must be one of {DIMENSIONS}, got {dimension}")
    cap = DEFAULT_ORDER_CAPS[dimension]
    if order > cap and not force:
        raise InputError(
            f"order {order} above default cap {cap} for dimension {dimension};"
            " pass --force to override"
        )
    if order > hard_cap:
        raise InputError(f"order {order} above hard cap {hard_cap}")


def _wrap_input(fn):
    try:
        return fn()
    except ValueError as exc:
        raise InputError(str(exc)) from None

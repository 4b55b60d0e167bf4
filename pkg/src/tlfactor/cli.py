"""Command-line front end.

Commands::

    build WORD --n N          word -> delta power + diagram JSON
    factor FILE               diagram JSON -> reduced word (+ --heap/--counts)
    mul FILE [FILE ...]       stack diagrams top to bottom, print the product
    check WORD --n N          reducedness / FC report with normal form
    heap WORD --n N           heap grid (or --dump for "level column" lines)
    enum K                    all diagrams of rank K, one JSON per line
    render [FILE|--word W]    ASCII or SVG picture of a diagram or heap

``-`` reads standard input wherever a file is expected, and diagram readers
skip ``delta_power:`` lines so ``build`` pipes straight into ``factor``.
Exit codes: 0 success, 2 parse error, 3 invariant violation, 4 budget
exceeded.  The environment variable ``TLF_BUDGET`` overrides the default
search budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from .diagrams import Diagram, diagram_from_word, multiply, validate
from .enumeration import DEFAULT_CAP, catalan, enumerate_diagrams
from .errors import (
    BudgetExceeded,
    InvariantViolation,
    NotReduced,
    ParseError,
    TLError,
)
from .factorize import factor, factor_multiplicities
from .heaps import heap_dump, heap_from_word, render_heap, word_from_heap
from .rendering import diagram_ascii, diagram_svg, heap_svg
from .words import DEFAULT_BUDGET, Word, is_fc

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4


def _budget() -> int:
    raw = os.environ.get("TLF_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"TLF_BUDGET must be an integer, got {raw!r}") from exc


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_diagram(path: str) -> Diagram:
    lines = [
        line
        for line in _read_text(path).splitlines()
        if line.strip() and not line.startswith("delta_power:")
    ]
    if not lines:
        raise ParseError(f"no diagram JSON found in {path}")
    diagram = Diagram.from_json("\n".join(lines))
    validate(diagram)
    return diagram


def _cmd_build(args) -> int:
    word = Word.parse(args.word, args.n)
    power, diagram = diagram_from_word(word)
    print(f"delta_power: {power}")
    print(diagram.to_json())
    return EXIT_OK


def _cmd_factor(args) -> int:
    diagram = _load_diagram(args.file)
    word = factor(diagram)
    print(word.to_text())
    if args.heap:
        grid = render_heap(heap_from_word(word))
        if grid:
            print(grid)
    if args.counts:
        for i, count in enumerate(factor_multiplicities(diagram), start=1):
            print(f"s{i}: {count}")
    return EXIT_OK


def _cmd_mul(args) -> int:
    diagrams = [_load_diagram(path) for path in args.files]
    total = 0
    product = diagrams[0]
    for lower in diagrams[1:]:
        loops, product = multiply(product, lower)
        total += loops
    print(f"delta_power: {total}")
    print(product.to_json())
    return EXIT_OK


def _cmd_check(args) -> int:
    word = Word.parse(args.word, args.n)
    try:
        fc = is_fc(word, budget=_budget())
    except NotReduced:
        print("reduced: no")
        print("fc: n/a")
        return EXIT_OK
    print("reduced: yes")
    print(f"fc: {'yes' if fc else 'no'}")
    if fc:
        normal = word_from_heap(heap_from_word(word))
        print(f"normal_form: {normal.to_text()}".rstrip())
    return EXIT_OK


def _cmd_heap(args) -> int:
    word = Word.parse(args.word, args.n)
    heap = heap_from_word(word)
    output = heap_dump(heap) if args.dump else render_heap(heap)
    if output:
        print(output)
    return EXIT_OK


def _cmd_enum(args) -> int:
    if args.count_only:
        print(catalan(args.k))
        return EXIT_OK
    diagrams = enumerate_diagrams(args.k, cap=args.cap)
    for text in sorted(d.to_json() for d in diagrams):
        if args.with_words:
            word = factor(Diagram.from_json(text))
            print(f"{text}\t{word.to_text()}")
        else:
            print(text)
    return EXIT_OK


def _cmd_render(args) -> int:
    if args.word is not None:
        if args.n is None:
            raise ParseError("--word requires --n")
        heap = heap_from_word(Word.parse(args.word, args.n))
        print(heap_svg(heap) if args.format == "svg" else render_heap(heap))
        return EXIT_OK
    diagram = _load_diagram(args.input)
    print(diagram_svg(diagram) if args.format == "svg" else diagram_ascii(diagram))
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlfactor",
        description="Temperley-Lieb diagrams of type A: build, factor, and render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="turn a word into a diagram")
    p.add_argument("word", help='generator subscripts, e.g. "1 3 2 4 3"')
    p.add_argument("--n", type=int, required=True, help="rank (number of generators)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("factor", help="reduced factorization of a diagram")
    p.add_argument("file", nargs="?", default="-", help="diagram JSON file, or - for stdin")
    p.add_argument("--heap", action="store_true", help="also print the heap grid")
    p.add_argument("--counts", action="store_true", help="also print per-generator counts")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("mul", help="multiply diagrams, top to bottom")
    p.add_argument("files", nargs="+", help="diagram JSON files, topmost first")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("check", help="reducedness and full commutativity of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("heap", help="heap of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dump", action="store_true", help='machine-readable "level column" lines')
    p.set_defaults(func=_cmd_heap)

    p = sub.add_parser("enum", help="enumerate all diagrams of a rank")
    p.add_argument("k", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--with-words", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration rank cap")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("render", help="draw a diagram or a heap")
    p.add_argument("input", nargs="?", default="-", help="diagram JSON file, or - for stdin")
    p.add_argument("--word", help="render the heap of this word instead")
    p.add_argument("--n", type=int, help="rank for --word")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TLError as exc:  # pragma: no cover - safety net
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


def main_entry() -> None:
    sys.exit(main())

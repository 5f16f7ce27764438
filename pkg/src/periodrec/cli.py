"""``periodrec`` command line.

Exit status: 0 on success, 2 on usage errors, 1 on invalid input data.
"""

import argparse
import json
import sys

from . import _kernels
from .bench import ENGINES, bench
from .corpus import GenSpec, generate
from .kangaroo import last_row_thresholded, rotation_distances
from .lcp_index import InvalidInputError
from .oracle import brute_apr, edit_distance
from .recovery import PeriodReport, RecoveryParams, default_jobs, recover, tau
from .wraparound import full_table

REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "epsilon", "periods"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "epsilon": {"type": "string", "pattern": r"^[1-9][0-9]*/[1-9][0-9]*$"},
        "periods": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "p", "distance", "tau"],
                "additionalProperties": False,
                "properties": {
                    "word": {"type": "string", "minLength": 1},
                    "p": {"type": "integer", "minimum": 1},
                    "distance": {"type": "integer", "minimum": 0},
                    "tau": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}


def tsv_word(word: bytes) -> str:
    """Printable ASCII as is; backslash, tab, newline and other bytes as ``\\xHH``."""
    return "".join(chr(b) if 0x20 <= b < 0x7F and b != 0x5C else f"\\x{b:02x}" for b in word)


def render_report(n: int, params: RecoveryParams, reports: list[PeriodReport], fmt: str) -> str:
    if fmt == "json":
        doc = {"n": n, "epsilon": str(params), "periods": [r.as_dict() for r in reports]}
        return json.dumps(doc, separators=(",", ":")) + "\n"
    lines = ["word\tp\tdistance\ttau"]
    lines += [f"{tsv_word(r.word)}\t{r.p}\t{r.distance}\t{r.tau}" for r in reports]
    return "\n".join(lines) + "\n"


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def _epsilon(text: str) -> RecoveryParams:
    try:
        return RecoveryParams.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_recover(args, out):
    s = _read(args.input)
    if not s:
        raise InvalidInputError("input text is empty")
    reports = recover(s, args.epsilon, jobs=args.jobs)
    out.write(render_report(len(s), args.epsilon, reports, args.format))


def cmd_apm(args, out):
    s = _read(args.text)
    word = _read(args.pattern)
    if not word:
        raise InvalidInputError("pattern is empty")
    p = len(word)
    if args.engine == "kangaroo":
        if args.per_rotation:
            values = rotation_distances(s, word, args.k)
        else:
            values = list(last_row_thresholded(s, word, args.k).per_column)
    else:
        if args.per_rotation:
            row = full_table(s[::-1], word[::-1])[-1]
            row = [int(row[(p - j) % p]) for j in range(p)]
        else:
            row = [int(v) for v in full_table(s, word)[-1]]
        values = [v if v <= args.k else None for v in row]
    out.write(("rotation" if args.per_rotation else "column") + "\tvalue\n")
    for j, v in enumerate(values):
        out.write(f"{j}\t{'*' if v is None else v}\n")


def cmd_oracle(args, out):
    if args.what == "ed":
        out.write(f"{edit_distance(_read(args.a), _read(args.b))}\n")
        return
    s = _read(args.input)
    if not s:
        raise InvalidInputError("input text is empty")
    n = len(s)
    found = sorted(brute_apr(s, args.epsilon), key=lambda wd: (len(wd[0]), wd[0]))
    reports = [PeriodReport(len(w), w, d, tau(n, len(w), args.epsilon)) for w, d in found]
    out.write(render_report(n, args.epsilon, reports, args.format))


def cmd_gen(args, out):
    spec = GenSpec(p=args.p, n=args.n, edits=args.edits, alphabet_size=args.sigma, seed=args.seed)
    data = generate(spec)
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise InvalidInputError(f"cannot write {args.out}: {exc.strerror}") from None


def cmd_bench(args, out):
    engines = ENGINES if args.engine == "both" else (args.engine,)
    out.write("engine\tn\tp\tk\tnanoseconds\n")
    for row in bench(args.sizes, args.p, args.k, engines, seed=args.seed, runs=args.runs,
                     edits=args.edits, sigma=args.sigma, backend=args.backend):
        out.write("\t".join(str(x) for x in row) + "\n")
        out.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="periodrec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recover", help="approximate word-periods of a byte file")
    rec.add_argument("--input", required=True)
    rec.add_argument("--epsilon", type=_epsilon, default=RecoveryParams())
    rec.add_argument("--format", choices=("json", "tsv"), default="json")
    rec.add_argument("--jobs", type=_positive, default=default_jobs(),
                     help="parallel verification tasks (default: $PERIODREC_JOBS or 1)")
    rec.set_defaults(func=cmd_recover)

    apm = sub.add_parser("apm", help="thresholded last row / per-rotation distances")
    apm.add_argument("--text", required=True)
    apm.add_argument("--pattern", required=True)
    apm.add_argument("--k", type=_nonneg, required=True)
    apm.add_argument("--engine", choices=ENGINES, default="kangaroo")
    apm.add_argument("--per-rotation", action="store_true")
    apm.set_defaults(func=cmd_apm)

    orc = sub.add_parser("oracle", help="brute-force reference computations")
    osub = orc.add_subparsers(dest="what", required=True)
    ed = osub.add_parser("ed", help="edit distance of two files")
    ed.add_argument("--a", required=True)
    ed.add_argument("--b", required=True)
    apr = osub.add_parser("apr", help="exhaustive period recovery")
    apr.add_argument("--input", required=True)
    apr.add_argument("--epsilon", type=_epsilon, default=RecoveryParams())
    apr.add_argument("--format", choices=("json", "tsv"), default="json")
    orc.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="write a seeded periodic corpus")
    gen.add_argument("--p", type=_positive, required=True)
    gen.add_argument("--n", type=_positive, required=True)
    gen.add_argument("--edits", type=_nonneg, default=0)
    gen.add_argument("--sigma", type=_positive, default=4)
    gen.add_argument("--seed", type=_nonneg, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    ben = sub.add_parser("bench", help="time the APM engines")
    ben.add_argument("--p", type=_positive, required=True)
    ben.add_argument("--k", type=_nonneg, required=True)
    ben.add_argument("--sizes", type=_sizes, required=True)
    ben.add_argument("--engine", choices=ENGINES + ("both",), default="both")
    ben.add_argument("--seed", type=_nonneg, default=0)
    ben.add_argument("--runs", type=lambda t: max(3, _positive(t)), default=3,
                     help="timed runs per point; at least 3")
    ben.add_argument("--edits", type=_nonneg, default=8)
    ben.add_argument("--sigma", type=_positive, default=4)
    ben.add_argument("--backend", choices=sorted(_kernels.BACKENDS), default=None)
    ben.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except InvalidInputError as exc:
        print(f"periodrec: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

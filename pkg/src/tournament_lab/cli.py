"""Command-line front end.

Exit codes: 0 success, 1 failing verification, 2 parse error, 3 size cap,
4 unknown check, 5 bad form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import (
    CANON_CAP,
    Tournament,
    catalog,
    decode_code,
    decode_trn,
    encode_code,
    encode_trn,
    members,
)
from .enumeration import PREDICATES, Enumerator
from .errors import BadForm, ParseError, TooLarge, TournamentError, UnknownCheck
from .forms import FORM_ORDER, S5_NAMES, FormInstance, build_form, form_spec, match_forms
from .indices import ORACLE_CAP, Delta_of_n, delta_of_n, index_report
from .modular import is_indecomposable, minimal_comodules, nontrivial_modules
from .verify import check_ids, run_check

EXIT_FAIL, EXIT_PARSE, EXIT_CAP, EXIT_CHECK, EXIT_FORM = 1, 2, 3, 4, 5


def parse_input(source: str) -> Tournament:
    """Compact code, ``name:<catalog name>``, ``-`` (stdin .trn) or a .trn path."""
    source = source.strip()
    if source.startswith("name:"):
        return catalog(source[len("name:"):])
    if source.startswith("T") and ":" in source:
        return decode_code(source)
    if source == "-":
        return decode_trn(sys.stdin.read())
    path = Path(source)
    if not path.is_file():
        raise ParseError(f"cannot interpret input {source!r}")
    return decode_trn(path.read_text())


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A..B") from None
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return list(range(lo_i, hi_i + 1))


def parse_checks(text: str) -> list[str]:
    return check_ids() if text == "all" else [c.strip() for c in text.split(",") if c.strip()]


def analyze(t: Tournament, reps: Enumerator) -> dict:
    rep = index_report(t, witness=t.n <= ORACLE_CAP)
    forms = match_forms(t, reps) if t.n <= CANON_CAP else None
    return {
        "n": t.n,
        "code": encode_code(t),
        "indecomposable": is_indecomposable(t),
        "nontrivial_modules": [members(m) for m in nontrivial_modules(t)],
        "minimal_comodules": [members(m) for m in minimal_comodules(t)],
        "big_delta": rep.big_delta,
        "small_delta": rep.small_delta,
        "delta_decomposition": rep.decomposition.as_lists(),
        "witness_arcs": None if rep.witness_arcs is None else [list(a) for a in rep.witness_arcs],
        "delta_maximal": None if t.n < 5 else rep.small_delta == delta_of_n(t.n),
        "Delta_maximal": None if t.n < 3 else rep.big_delta == Delta_of_n(t.n),
        "forms": forms,
    }


def _emit(args, payload) -> None:
    if args.output == "json":
        print(json.dumps(payload))
    elif isinstance(payload, dict):
        for k, v in payload.items():
            print(f"{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            print(v)
    else:
        print(payload)


def cmd_analyze(args, reps: Enumerator) -> int:
    _emit(args, analyze(parse_input(args.input), reps))
    return 0


def cmd_enum(args, reps: Enumerator) -> int:
    codes = reps.filter(args.n, args.predicate) if args.predicate else list(reps.enumerate(args.n).codes)
    if args.count_only:
        print(len(codes))
    else:
        for c in codes:
            print(c)
    return 0


def cmd_verify(args, reps: Enumerator) -> int:
    checks = parse_checks(args.checks)
    known = set(check_ids())
    unknown = [c for c in checks if c not in known]
    if unknown:
        raise UnknownCheck(f"unknown check(s): {', '.join(unknown)}")
    status = 0
    for cid in checks:
        report = run_check(cid, args.n_range, reps)
        if args.output == "json":
            print(json.dumps(report.to_json()), flush=True)
        else:
            print(f"{report.status.upper():4} {cid:20} n={report.range} checked={report.checked} "
                  f"counterexamples={report.counterexample_count}", flush=True)
        if not report.passed:
            status = EXIT_FAIL
    return status


def cmd_gen(args, reps: Enumerator) -> int:
    spec = form_spec(args.form)
    k = spec.param_size(args.n)
    if k < 1:
        raise BadForm(f"{spec.tag} undefined at n={args.n}")
    param = parse_input(args.param) if args.param else catalog(f"transitive({k})")
    if args.assign is None:
        assignment = tuple(range(len(spec.specials)))
    else:
        try:
            assignment = tuple(int(x) for x in args.assign.split(",") if x.strip())
        except ValueError:
            raise BadForm(f"bad slot assignment {args.assign!r}") from None
    s5 = args.s5 if "S5" in spec.specials else None
    if "S5" in spec.specials and s5 is None:
        s5 = S5_NAMES[0]
    t = build_form(FormInstance(spec.tag, args.n, param, assignment, s5, args.dual))
    print(encode_trn(t), end="") if args.to == "trn" else print(encode_code(t))
    return 0


def cmd_match(args, reps: Enumerator) -> int:
    t = parse_input(args.input)
    if t.n > CANON_CAP:
        raise TooLarge(f"matching capped at {CANON_CAP} vertices")
    print(json.dumps(match_forms(t, reps, args.family)))
    return 0


def cmd_convert(args, reps: Enumerator) -> int:
    t = parse_input(args.input)
    print(encode_trn(t), end="") if args.to == "trn" else print(encode_code(t))
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tournament-lab", description=__doc__.splitlines()[0])
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--cache-dir", default=None, help="enumeration cache (default: $TOURNAMENT_LAB_CACHE)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="modules, indices and matching forms of one tournament")
    a.add_argument("input")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enum", help="list isomorphism-class representatives")
    e.add_argument("n", type=int)
    e.add_argument("--predicate", choices=PREDICATES)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", help="run exhaustive checks")
    v.add_argument("--checks", default="all", help="comma list or 'all'")
    v.add_argument("--n-range", type=parse_range, default=parse_range("3..7"))
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="build one instance of a form")
    g.add_argument("form", help=f"one of {', '.join(FORM_ORDER)}")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--param", help="parameter tournament (default: transitive)")
    g.add_argument("--assign", help="comma list of parameter vertices taking the special slots")
    g.add_argument("--s5", choices=S5_NAMES)
    g.add_argument("--dual", action="store_true")
    g.add_argument("--to", choices=("code", "trn"), default="code")
    g.set_defaults(func=cmd_gen)

    m = sub.add_parser("match", help="forms having an instance isomorphic to the input")
    m.add_argument("input")
    m.add_argument("--family", choices=("delta", "Delta", "all"), default="delta")
    m.set_defaults(func=cmd_match)

    c = sub.add_parser("convert", help="re-encode a tournament")
    c.add_argument("input")
    c.add_argument("--to", choices=("code", "trn"), required=True)
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    reps = Enumerator(args.cache_dir, jobs=args.jobs)
    try:
        return args.func(args, reps)
    except TournamentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


def _exit_code(exc: TournamentError) -> int:
    for kind, code in ((UnknownCheck, EXIT_CHECK), (BadForm, EXIT_FORM), (TooLarge, EXIT_CAP)):
        if isinstance(exc, kind):
            return code
    return EXIT_PARSE

if __name__ == "__main__":
    sys.exit(main())

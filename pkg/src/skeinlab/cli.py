"""Batch command-line frontend.

Subcommands compute invariants (``invariant``, ``bracket``, ``composite``,
``reform``, ``special``), run integrality and congruence checks (``lmov``,
``congruence``), and reproduce pinned fixtures and property suites
(``repro``, ``selftest``).  Output is a human summary on stdout plus an
optional machine-readable JSON document (``--output``); JSON term lists are
sorted by (t-exponent, q-exponent) so output is byte-stable for fixed inputs.

Exit codes: 0 for success / all verdicts true, 1 for a false verdict or a
fixture diff, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .chars import default_table, set_default_cache_dir
from .composite import (
    composite_invariant,
    framed_composite,
    integrality_2z,
    r_reform,
    z_reform,
    zsquare_member,
)
from .exactring import LaurentQT, format_laurent
from .fixtures import FIXTURE_SETS, run_fixture
from .lmov import congruent_skein_case, hat_h, lmov_check, plethystic_h, special_polynomial
from .partitions import Partition, PartitionPair
from .selftest import SUITES, run as run_suites
from .skein import LinkSpec, full_invariant_value, torus_framed
from .symfun import SymFunc


def _parse_int_list(text):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _parse_spec(args):
    framing = _parse_int_list(args.framing) if args.framing else None
    reversed_ = _parse_int_list(args.reversed) if args.reversed else ()
    if args.unknot is not None:
        spec = LinkSpec.unknot(args.unknot, reversed_=reversed_)
        if framing:
            raise SystemExit2("--framing does not apply to --unknot; pass the kink count to it")
        return spec
    if args.torus is None:
        raise SystemExit2("one of --torus M N L or --unknot F is required")
    m, n, L = args.torus
    if args.blackboard:
        if framing is not None or args.writhe:
            raise SystemExit2("--blackboard excludes --framing/--writhe")
        framing = [-n] * L
    elif args.writhe:
        if framing is not None:
            raise SystemExit2("--framing and --writhe are mutually exclusive")
        writhes = _parse_int_list(args.writhe)
        if len(writhes) != L:
            raise SystemExit2("--writhe needs one value per component")
        framing = [w - m * n for w in writhes]
    return LinkSpec.torus(m, n, L, framing=framing, reversed_=reversed_)


class SystemExit2(SystemExit):
    def __init__(self, message):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _add_spec_arguments(sub):
    sub.add_argument("--torus", type=int, nargs=3, metavar=("M", "N", "L"),
                     help="torus family parameters: components are (M,N)-curves, L components")
    sub.add_argument("--unknot", type=int, metavar="F", help="framed unknot with F kinks")
    sub.add_argument("--framing", help="comma-separated kinks per component (beyond surface framing)")
    sub.add_argument("--writhe", help="comma-separated absolute per-component writhes")
    sub.add_argument("--blackboard", action="store_true",
                     help="use the standard planar diagram framing (writhe n(m-1) per component)")
    sub.add_argument("--reversed", help="comma-separated indices of orientation-reversed components")


def _parse_pairs(text, L):
    data = json.loads(text)
    if not isinstance(data, list):
        raise SystemExit2("--pairs must be a JSON list with one [lam, mu] pair per component")
    pairs = []
    for item in data:
        if isinstance(item, list) and len(item) == 2 and all(isinstance(x, list) for x in item):
            pairs.append(PartitionPair(Partition(item[0]), Partition(item[1])))
        else:
            # a bare partition means [lam, empty]
            pairs.append(PartitionPair(Partition(item), Partition()))
    if len(pairs) != L:
        raise SystemExit2(f"{len(pairs)} pairs given for {L} components")
    return pairs


def _parse_labels(text, L):
    data = json.loads(text)
    if not isinstance(data, list) or len(data) != L:
        raise SystemExit2(f"--labels must be a JSON list of {L} partitions")
    return [Partition(x) for x in data]


def _rational_json(value):
    return value.to_json()


def _emit(args, document, human_lines):
    for line in human_lines:
        print(line)
    payload = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
        print(f"wrote {args.output}")
    elif args.json:
        sys.stdout.write(payload)


def _pretty_rational(value):
    if value.den == LaurentQT.one():
        return format_laurent(value.num)
    return f"({format_laurent(value.num)}) / ({format_laurent(value.den)})"


# -- subcommand handlers ------------------------------------------------------------


def cmd_invariant(args):
    spec = _parse_spec(args)
    pairs = _parse_pairs(args.pairs, spec.L)
    value = full_invariant_value(spec, pairs)
    doc = {
        "command": "invariant",
        "spec": spec.to_json(),
        "labels": [[list(p.pos), list(p.neg)] for p in pairs],
        "value": _rational_json(value),
    }
    _emit(args, doc, [f"spec: {spec.describe()}",
                      f"labels: {' '.join(p.text() for p in pairs)}",
                      f"W = {_pretty_rational(value)}"])
    return 0


def cmd_bracket(args):
    spec = _parse_spec(args)
    pairs = _parse_pairs(args.pairs, spec.L)
    decorations = [SymFunc.composite(p.pos, p.neg) for p in pairs]
    value = torus_framed(spec, decorations)
    doc = {
        "command": "bracket",
        "spec": spec.to_json(),
        "labels": [[list(p.pos), list(p.neg)] for p in pairs],
        "value": _rational_json(value),
    }
    _emit(args, doc, [f"spec: {spec.describe()}",
                      f"bracket = {_pretty_rational(value)}"])
    return 0


def cmd_composite(args):
    spec = _parse_spec(args)
    labels = _parse_labels(args.labels, spec.L)
    fn = framed_composite if args.framed else composite_invariant
    value = fn(spec, labels)
    kind = "framed composite" if args.framed else "composite"
    doc = {
        "command": "composite",
        "framed": bool(args.framed),
        "spec": spec.to_json(),
        "labels": [list(x) for x in labels],
        "value": _rational_json(value),
    }
    _emit(args, doc, [f"spec: {spec.describe()}",
                      f"{kind} H_{''.join(x.text() for x in labels)} = {_pretty_rational(value)}"])
    return 0


def cmd_reform(args):
    spec = _parse_spec(args)
    if args.rhat:
        if args.p is None:
            raise SystemExit2("--rhat needs --p")
        value = r_reform(spec, args.p)
        verdict, stage, table = integrality_2z(value)
        name = f"Rh_{args.p}"
        ring = "2Z[z^2, t^+-1]"
    else:
        if args.labels:
            labels = _parse_labels(args.labels, spec.L)
        elif args.p is not None:
            labels = [Partition([args.p])] * spec.L
        else:
            raise SystemExit2("reform needs --labels or --p")
        value = z_reform(spec, labels)
        verdict, stage, table = zsquare_member(value)
        name = "Zh_" + "".join(x.text() for x in labels)
        ring = "Z[z^2, t^+-1]"
    doc = {
        "command": "reform",
        "spec": spec.to_json(),
        "invariant": name,
        "value": _rational_json(value),
        "verdict": bool(verdict),
        "stage": stage,
        "certificate": sorted([g, Q, c] for (g, Q), c in table.items()) if table else [],
    }
    lines = [f"spec: {spec.describe()}",
             f"{name} = {_pretty_rational(value)}",
             f"membership in {ring}: {verdict}" + (f" (failed at {stage})" if stage else "")]
    _emit(args, doc, lines)
    return 0 if verdict else 1


def cmd_lmov(args):
    spec = _parse_spec(args)
    B = _parse_labels(args.B, spec.L)
    D = args.D if args.D else sum(x.size for x in B)
    table = plethystic_h(spec, D)
    value = hat_h(spec, B, table=table)
    verdict, ntable, stage = lmov_check(spec, B, table=table)
    doc = {
        "command": "lmov",
        "spec": spec.to_json(),
        "B": [list(x) for x in B],
        "D": D,
        "hat_h": _rational_json(value),
        "N": sorted([g, Q, c] for (g, Q), c in ntable.items()) if ntable else [],
        "verdict": bool(verdict),
        "stage": stage,
    }
    lines = [f"spec: {spec.describe()}",
             f"hat_h_{''.join(x.text() for x in B)} = {_pretty_rational(value)}",
             f"integer BPS-style table: {verdict}" + (f" (failed at {stage})" if stage else "")]
    if ntable:
        for (g, Q), c in sorted(ntable.items()):
            lines.append(f"  N[g={g}, Q={Q}] = {c}")
    _emit(args, doc, lines)
    return 0 if verdict else 1


def _parse_krange(text):
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def _congruence_item(pk):
    p, k = pk
    verdict, stage, _ = congruent_skein_case(p, k)
    return k, bool(verdict), stage


def cmd_congruence(args):
    if args.family != "t2":
        raise SystemExit2("only the t2 family (torus quadruples on two strands) is supported")
    ks = _parse_krange(args.k)
    items = [(args.p, k) for k in ks]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = sorted(pool.map(_congruence_item, items))
    else:
        results = sorted(_congruence_item(it) for it in items)
    doc = {
        "command": "congruence",
        "p": args.p,
        "family": args.family,
        "results": [[k, v, stage] for k, v, stage in results],
    }
    lines = [f"congruent skein relation, p={args.p}"]
    for k, v, stage in results:
        lines.append(f"  k={k}: {'true' if v else f'FALSE ({stage})'}")
    _emit(args, doc, lines)
    return 0 if all(v for _, v, _ in results) else 1


def cmd_special(args):
    spec = _parse_spec(args)
    pairs = _parse_pairs(args.pairs, spec.L)
    value = special_polynomial(spec, pairs)
    doc = {
        "command": "special",
        "spec": spec.to_json(),
        "labels": [[list(p.pos), list(p.neg)] for p in pairs],
        "value": value.to_records(),
    }
    _emit(args, doc, [f"spec: {spec.describe()}",
                      f"special polynomial = {format_laurent(value)}"])
    return 0


def _suite_item(item):
    name, deep = item
    return name, SUITES[name](deep=deep)


def cmd_selftest(args):
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise SystemExit2(f"unknown suite {name!r}; choices: {sorted(SUITES)}")
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = dict(pool.map(_suite_item, [(n, args.deep) for n in names]))
    else:
        results = run_suites(names, deep=args.deep)
    failures = 0
    doc = {"command": "selftest", "suites": {}}
    for name in names:
        checks = results[name]
        doc["suites"][name] = [[n, bool(ok), detail] for n, ok, detail in checks]
        for check, ok, detail in checks:
            status = "pass" if ok else "FAIL"
            print(f"[{status}] {name}:{check} ({detail})")
            failures += 0 if ok else 1
    default_table().persist()
    _emit(args, doc, [f"{failures} failures" if failures else "all suites passed"])
    return 1 if failures else 0


def cmd_repro(args):
    names = list(FIXTURE_SETS) if args.set == "all" else [args.set]
    failures = 0
    doc = {"command": "repro", "sets": {}}
    for name in names:
        checks = run_fixture(name)
        doc["sets"][name] = [[n, bool(ok)] for n, ok in checks]
        bad = [n for n, ok in checks if not ok]
        failures += len(bad)
        status = "ok" if not bad else f"DIFFS: {bad}"
        print(f"{name}: {len(checks)} checks, {status}")
    default_table().persist()
    _emit(args, doc, ["report clean" if not failures else f"{failures} diffs"])
    return 1 if failures else 0


def cmd_cache(args):
    table = default_table()
    if args.action == "info":
        where = table.cache_dir or "(memory only; set SKEINLAB_CACHE or --cache-dir)"
        print(f"cache directory: {where}")
        if table.cache_dir and os.path.isdir(table.cache_dir):
            files = sorted(
                f for f in os.listdir(table.cache_dir) if f.startswith("chars_")
            )
            print(f"files: {len(files)}")
            for f in files:
                print(f"  {f}")
        return 0
    removed = table.clear_disk()
    print(f"removed {removed} cache files")
    return 0


# -- argument wiring -----------------------------------------------------------------


def _load_config(path):
    values = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skeinlab",
        description="Exact colored HOMFLY-PT invariants of torus links, with "
        "integrality and congruence checking.",
    )
    parser.add_argument("--version", action="version", version=f"skeinlab {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file (flags take precedence)")
    common.add_argument("--cache-dir", help="character table cache directory")
    common.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    common.add_argument("--output", help="write the JSON document to this path")
    common.add_argument("--json", action="store_true", help="also print the JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("invariant", help="framing-independent full colored invariant")
    _add_spec_arguments(p)
    p.add_argument("--pairs", required=True, help='JSON, e.g. \'[[[1],[1]]]\'')
    p.set_defaults(func=cmd_invariant)

    p = add_parser("bracket", help="framed bracket of eigenvector-decorated links")
    _add_spec_arguments(p)
    p.add_argument("--pairs", required=True)
    p.set_defaults(func=cmd_bracket)

    p = add_parser("composite", help="composite invariant (LR-weighted label sum)")
    _add_spec_arguments(p)
    p.add_argument("--labels", required=True, help='JSON, one partition per component')
    p.add_argument("--framed", action="store_true", help="framed bracket variant")
    p.set_defaults(func=cmd_composite)

    p = add_parser("reform", help="reformulated invariants Zh / Rh with integrality verdicts")
    _add_spec_arguments(p)
    p.add_argument("--labels", help="JSON, one partition per component")
    p.add_argument("--p", type=int, help="use the one-row partition (p) on every component")
    p.add_argument("--rhat", action="store_true", help="orientation-summed Rh_p")
    p.set_defaults(func=cmd_reform)

    p = add_parser("lmov", help="transformed free energy and integer table")
    _add_spec_arguments(p)
    p.add_argument("--B", required=True, help="JSON, one partition per component")
    p.add_argument("--D", type=int, help="truncation degree (default: |B|)")
    p.set_defaults(func=cmd_lmov)

    p = add_parser("congruence", help="congruent skein relation instances")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--family", default="t2")
    p.add_argument("--k", required=True, help="range like 0..3 or list like 0,2")
    p.set_defaults(func=cmd_congruence)

    p = add_parser("special", help="q -> 1 special polynomial")
    _add_spec_arguments(p)
    p.add_argument("--pairs", required=True)
    p.set_defaults(func=cmd_special)

    p = add_parser("selftest", help="run structural property suites")
    p.add_argument("--suite", action="append", help="suite name (repeatable; default all)")
    p.add_argument("--deep", action="store_true", help="larger randomized sample sizes")
    p.set_defaults(func=cmd_selftest)

    p = add_parser("repro", help="reproduce pinned regression fixtures")
    p.add_argument("set", choices=sorted(FIXTURE_SETS) + ["all"])
    p.set_defaults(func=cmd_repro)

    p = add_parser("cache", help="character-table cache management")
    p.add_argument("action", choices=["info", "clear"])
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        config = _load_config(args.config)
        if args.cache_dir is None and "cache_dir" in config:
            args.cache_dir = config["cache_dir"]
        if args.jobs == 1 and "jobs" in config:
            args.jobs = int(config["jobs"])
    if args.cache_dir:
        set_default_cache_dir(args.cache_dir)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

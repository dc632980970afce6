"""Command-line entry point: ``levelcubics {report,table,cover,verify-paper}``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 enumeration bound exceeded.
"""
import argparse
import sys

from . import report as rp
from . import verify
from .config import EnumerationBoundError, check_bound, enumeration_bound_override
from .congruence import Kind, SubgroupSpec
from .trefoil import cover_over_K

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _level(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"level must be at least 2, got {n}")
    return n


def build_parser():
    p = _Parser(prog="levelcubics", description="Invariants of level-N structures on Weierstrass cubics.")
    p.add_argument("--bound", type=int, default=None,
                   help="enumeration bound on N (default: $LEVELCUBICS_ENUM_BOUND or 60)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    structures = [k.value for k in Kind]

    r = sub.add_parser("report", help="full report for one level")
    r.add_argument("--level", type=_level, required=True)
    r.add_argument("--structure", choices=structures, required=True)
    r.add_argument("--format", choices=["json", "md"], default="json")

    t = sub.add_parser("table", help="one row per level 2..M")
    t.add_argument("--structure", choices=structures, required=True)
    t.add_argument("--max", type=_level, required=True, dest="max_level")
    t.add_argument("--format", choices=["csv", "md"], default="md")

    c = sub.add_parser("cover", help="components of the cover over the trefoil")
    c.add_argument("--level", type=_level, required=True)
    c.add_argument("--structure", choices=structures, required=True)
    c.add_argument("--format", choices=["json", "md"], default="json")

    sub.add_parser("verify-paper", help="run the reproduction checks")
    return p


def _run(args, out):
    if args.command == "report":
        spec = SubgroupSpec(Kind(args.structure), args.level)
        check_bound(spec.reference_level)
        rep = rp.build_report(spec)
        out.write(rp.to_json(rp.report_dict(rep)) if args.format == "json" else rp.render_report_md(rep))
        return EXIT_OK
    if args.command == "table":
        kind = Kind(args.structure)
        check_bound(args.max_level)
        out.write(rp.render_table(rp.table_rows(kind, args.max_level), args.format))
        return EXIT_OK
    if args.command == "cover":
        cover = cover_over_K(Kind(args.structure), args.level)
        out.write(rp.to_json(rp.cover_dict(cover)) if args.format == "json" else rp.render_cover_md(cover))
        return EXIT_OK
    results = verify.run_checks()
    for r in results:
        out.write(f"[{r.status.upper():4}] {r.name} ({r.location}): {r.detail}\n")
    ok = verify.all_passed(results)
    skipped = sum(r.status == "skip" for r in results)
    failed = sum(r.status == "fail" for r in results)
    out.write(f"{len(results) - skipped - failed} passed, {failed} failed, {skipped} skipped\n")
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"levelcubics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    if args.bound is not None and args.bound < 2:
        print("levelcubics: error: --bound must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.bound is None:
            return _run(args, out)
        with enumeration_bound_override(args.bound):
            return _run(args, out)
    except EnumerationBoundError as exc:
        print(f"levelcubics: error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:  # malformed environment setting
        print(f"levelcubics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()

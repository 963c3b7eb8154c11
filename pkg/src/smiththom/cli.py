"""Command line front end.

Exit status: 0 on success, 1 when an input is well formed but fails
validation (violations go to stderr), 2 on malformed input or arguments
(a single ``error:`` line on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .ci_invariants import CompleteIntersection, complex_betti, euler_characteristic, hkk_equals_b2k, hodge_numbers
from .classify import COLUMNS, ScanRange, equality_rows, rows_to_csv, scan
from .errors import SmithThomError
from .hilbert_square import cubic_fano_deficiency, square_report
from .profile import RealVarietyProfile, check_betti_identities, validate
from .smith import SimplicialInvolution, smith_report, verify_relative_quotient


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one diagnostic line, exit 2
        raise UsageError(message)


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_involution(data: Any) -> SimplicialInvolution:
    if not isinstance(data, dict):
        raise UsageError("complex file must hold a JSON object")
    try:
        vc = data["vertex_count"]
        facets = data["facets"]
        inv = data["involution"]
    except KeyError as exc:
        raise UsageError(f"complex file is missing key {exc.args[0]!r}") from exc
    if not isinstance(vc, int) or not isinstance(facets, list) or not isinstance(inv, list):
        raise UsageError("complex file has fields of the wrong type")
    if not all(isinstance(f, list) and all(isinstance(v, int) for v in f) for f in facets):
        raise UsageError("facets must be lists of integers")
    if not all(isinstance(v, int) for v in inv):
        raise UsageError("involution must be a list of integers")
    return SimplicialInvolution.build(vc, facets, inv)


def _parse_degrees(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad degree list {text!r}") from exc


# -- commands ----------------------------------------------------------------

def cmd_smith(args) -> tuple[Any, int]:
    K = load_involution(_read_json(args.complex_file))
    rep = smith_report(K)
    out = rep.as_dict()
    out["relative_quotient_verified"] = verify_relative_quotient(K) if rep.maximal else None
    if not rep.exactness_verified:
        print("anomaly: Smith sequence failed the exactness self-test", file=sys.stderr)
        return out, 1
    return out, 0


def cmd_ci(args) -> tuple[Any, int]:
    ci = CompleteIntersection(args.ambient, _parse_degrees(args.degrees))
    out: dict[str, Any] = {
        "ambient": ci.ambient_dim,
        "degrees": list(ci.degrees),
        "n": ci.n,
        "euler_characteristic": euler_characteristic(ci),
    }
    if ci.n >= 1:
        out["complex_betti"] = list(complex_betti(ci))
        out["hodge_middle_row"] = list(hodge_numbers(ci).middle_row())
    if ci.n >= 2 and ci.n % 2 == 0:
        out["hkk_equals_b2k"] = hkk_equals_b2k(ci)
    return out, 0


def _load_profile(path: str) -> RealVarietyProfile:
    return RealVarietyProfile.from_dict(_read_json(path))


def _report_violations(p: RealVarietyProfile) -> bool:
    problems = validate(p)
    for v in problems:
        print(f"violation: {v}", file=sys.stderr)
    return bool(problems)


def cmd_profile_check(args) -> tuple[Any, int]:
    p = _load_profile(args.profile_file)
    problems = validate(p)
    out: dict[str, Any] = {"valid": not problems, "violations": [{"code": v.code, "message": v.message} for v in problems]}
    if problems:
        _report_violations(p)
        return out, 1
    out["betti_identities"] = check_betti_identities(p) if p.maximal else None
    return out, 0


def cmd_deficiency(args) -> tuple[Any, int]:
    p = _load_profile(args.profile_file)
    if _report_violations(p):
        return None, 1
    return square_report(p), 0


def cmd_classify(args) -> tuple[Any, int]:
    rows = scan(ScanRange(args.max_dim, args.max_codim, args.max_degree), workers=args.workers)
    families = sorted({r.degrees for r in equality_rows(rows)})
    return {
        "rows": [
            {"ambient": r.ambient, "degrees": list(r.degrees), "n": r.n, "h_kk": r.h_kk,
             "b_2k": r.b_2k, "equal": r.equal, "verdict": r.verdict}
            for r in rows
        ],
        "equality_rows": sum(r.equal for r in rows),
        "equality_families": [list(f) for f in families],
        "_csv": rows_to_csv(rows),
    }, 0


def cmd_fano(args) -> tuple[Any, int]:
    return {"n": args.n, "defi_x": args.defi_x, "defi_square": args.defi_square,
            "defi_fano": cubic_fano_deficiency(args.n, args.defi_x, args.defi_square)}, 0


# -- rendering -----------------------------------------------------------------

def render(obj: Any, fmt: str, command: str) -> str:
    if fmt == "csv":
        if command != "classify":
            raise UsageError("--format csv is only available for classify")
        return obj["_csv"]
    if isinstance(obj, dict):
        obj = {k: v for k, v in obj.items() if not k.startswith("_")}
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if command == "classify":
        return _table(obj["rows"]) + (
            f"\nequality rows: {obj['equality_rows']}; families: "
            + ", ".join("(" + ",".join(map(str, f)) + ")" for f in obj["equality_families"]) + "\n"
        )
    width = max((len(k) for k in obj), default=0)
    lines = []
    for k in sorted(obj):
        v = obj[k]
        text = json.dumps(v, sort_keys=True, separators=(",", ":")) if isinstance(v, (dict, list, bool)) or v is None else str(v)
        lines.append(f"{k.ljust(width)}  {text}")
    return "\n".join(lines) + "\n"


def _table(rows: list[dict]) -> str:
    cells = [list(COLUMNS)]
    for r in rows:
        cells.append([str(r["ambient"]), ",".join(map(str, r["degrees"])) or "-", str(r["n"]),
                      str(r["h_kk"]), str(r["b_2k"]), str(r["equal"]).lower(), r["verdict"]])
    widths = [max(len(row[i]) for row in cells) for i in range(len(COLUMNS))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)

    parser = _Parser(prog="smiththom", parents=[common],
                     description="Smith theory and Hilbert-square deficiency calculator.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("smith", parents=[common], help="Smith sequence of a complex with involution")
    p.add_argument("complex_file")
    p.set_defaults(func=cmd_smith)

    p = sub.add_parser("ci", parents=[common], help="invariants of a complete intersection")
    p.add_argument("--ambient", type=int, required=True)
    p.add_argument("--degrees", default="", help="comma separated, e.g. 2,3")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("profile-check", parents=[common], help="validate a real variety profile")
    p.add_argument("profile_file")
    p.set_defaults(func=cmd_profile_check)

    p = sub.add_parser("deficiency", parents=[common], help="deficiency and verdict for X^[2]")
    p.add_argument("profile_file")
    p.set_defaults(func=cmd_deficiency)

    p = sub.add_parser("classify", parents=[common], help="scan even-dimensional complete intersections")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--max-codim", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fano", parents=[common], help="deficiency of the Fano variety of lines of a cubic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--defi-x", type=int, required=True)
    p.add_argument("--defi-square", type=int, required=True)
    p.set_defaults(func=cmd_fano)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "json")
        payload, status = args.func(args)
        if payload is not None:
            text = render(payload, fmt, args.command)
            output = getattr(args, "output", None)
            if output:
                try:
                    with open(output, "w", encoding="utf-8") as fh:
                        fh.write(text)
                except OSError as exc:
                    raise UsageError(f"cannot write {output}: {exc.strerror or exc}") from exc
            else:
                sys.stdout.write(text)
        return status
    except (UsageError, SmithThomError) as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

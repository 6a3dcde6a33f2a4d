"""Command line interface.

Exit codes: 0 ok, 1 validation failure, 2 property violation, 3 I/O or
format error. Output is JSON unless ``--human`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braces import (
    SkewBrace,
    annihilator,
    commutator_ideal,
    fix_lambda,
    fix_lambda_op,
    is_left_brace,
    is_self_opposite,
    is_trivial_brace,
    ker_lambda,
    ker_lambda_op,
    make_radical_brace,
    make_trivial_brace,
)
from .characters import character_degrees, ird, ird_group, regular_decomposition_check
from .config import ENV_VAR
from .corpus import brace_from_json, default_corpus, dumps, group_by_name, kind_of, load, read_json
from .errors import BraceForgeError, FormatError, PropertyViolation, SizeBound, ValidationError
from .groups import FiniteGroup, center, conjugacy_classes, derived_subgroup
from .isoclinism import brace_isoclinic, group_isoclinic
from .lambda_groups import build_lambda_group, ideals
from .reports import jsonable
from .verify import first_failure, run_suite

EXIT_OK, EXIT_INVALID, EXIT_PROPERTY, EXIT_IO = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, payload: dict):
        self.code, self.payload = code, payload


def _emit(obj, human: bool, out=None) -> None:
    out = out or sys.stdout
    obj = jsonable(obj)
    if not human:
        out.write(dumps(obj) + "\n")
        return
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.write(f"{k}: {v if isinstance(v, (str, int, float, bool)) or v is None else json.dumps(v)}\n")
    else:
        out.write(f"{obj}\n")


def _load(path: str) -> FiniteGroup | SkewBrace:
    try:
        return load(path)
    except OSError as exc:
        raise _Fail(EXIT_IO, {"error": "IOError", "message": str(exc)}) from None
    except json.JSONDecodeError as exc:
        raise _Fail(EXIT_IO, {"error": "JSONDecodeError", "message": str(exc)}) from None


def _load_brace(path: str) -> SkewBrace:
    obj = _load(path)
    if not isinstance(obj, SkewBrace):
        raise _Fail(EXIT_IO, {"error": "FormatError", "message": "expected a brace file"})
    return obj


def _error_payload(exc: BraceForgeError) -> dict:
    return {"error": type(exc).__name__, "message": str(exc), "witness": list(exc.witness)}


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> dict:
    obj = _load(args.path)
    kind = "brace" if isinstance(obj, SkewBrace) else "group"
    return {"valid": True, "kind": kind, "n": obj.n}


def brace_invariants(A: SkewBrace) -> dict:
    cc_add, cc_circ = conjugacy_classes(A.add), conjugacy_classes(A.circ)
    return {
        "n": A.n,
        "Ann": list(annihilator(A)),
        "Aprime": list(commutator_ideal(A)),
        "Fix": list(fix_lambda(A)),
        "Ker": list(ker_lambda(A)),
        "FixOp": list(fix_lambda_op(A)),
        "KerOp": list(ker_lambda_op(A)),
        "center_add": list(center(A.add)),
        "center_circ": list(center(A.circ)),
        "derived_add": list(derived_subgroup(A.add)),
        "derived_circ": list(derived_subgroup(A.circ)),
        "ideals": [list(I) for I in ideals(A)],
        "k_add": cc_add.k,
        "k_circ": cc_circ.k,
        "left_brace": is_left_brace(A),
        "trivial": is_trivial_brace(A),
        "self_opposite": is_self_opposite(A),
    }


def group_invariants(G: FiniteGroup) -> dict:
    return {
        "n": G.n,
        "center": list(center(G)),
        "derived": list(derived_subgroup(G)),
        "k": conjugacy_classes(G).k,
        "abelian": G.is_abelian,
    }


def cmd_invariants(args) -> dict:
    obj = _load(args.path)
    return brace_invariants(obj) if isinstance(obj, SkewBrace) else group_invariants(obj)


def cmd_lambda_group(args) -> dict:
    A = _load_brace(args.path)
    L = build_lambda_group(A, args.flavor)
    out = L.group.to_json()
    _write_optional(args.out, out)
    return out


def cmd_char_degrees(args) -> dict:
    obj = _load(args.path)
    G = build_lambda_group(obj).group if isinstance(obj, SkewBrace) else obj
    return character_degrees(G).to_json()


def cmd_ird(args) -> dict:
    obj = _load(args.path)
    if isinstance(obj, SkewBrace):
        return {"ird": sorted(ird(obj)), "ird_circ": sorted(ird_group(obj.circ))}
    return {"ird": sorted(ird_group(obj))}


def cmd_isoclinic(args) -> dict:
    X, Y = _load(args.path_a), _load(args.path_b)
    if isinstance(X, SkewBrace) != isinstance(Y, SkewBrace):
        raise _Fail(EXIT_IO, {"error": "FormatError", "message": "both files must be groups or both braces"})
    cert = brace_isoclinic(X, Y) if isinstance(X, SkewBrace) else group_isoclinic(X, Y)
    return {"isoclinic": cert is not None, "certificate": None if cert is None else cert.to_json()}


def cmd_regular_check(args) -> dict:
    rep = regular_decomposition_check(_load_brace(args.path))
    if not rep.holds:
        raise _Fail(EXIT_PROPERTY, rep.to_json())
    return rep.to_json()


def cmd_verify(args) -> dict:
    corpus = default_corpus().select(args.select)
    for path in args.extra or []:
        try:
            obj = read_json(path)
        except OSError as exc:
            raise _Fail(EXIT_IO, {"error": "IOError", "message": str(exc)}) from None
        except json.JSONDecodeError as exc:
            raise _Fail(EXIT_IO, {"error": "JSONDecodeError", "message": str(exc)}) from None
        if kind_of(obj) != "brace":
            raise FormatError(f"{path}: expected a brace")
        corpus.add(f"file:{Path(path).name}", brace_from_json(obj))
    result = run_suite(corpus, fixtures=not args.no_fixtures)
    if not result["holds"]:
        raise _Fail(EXIT_PROPERTY, {"holds": False, "first_failure": first_failure(result), "result": result})
    return result if args.full else {"holds": True, "braces": [b["name"] for b in result["braces"]],
                                     "fixtures": len(result.get("fixtures", []))}


def cmd_make(args) -> dict:
    if args.family == "trivial":
        if not args.group:
            raise FormatError("--group is required for the trivial family")
        A = make_trivial_brace(group_by_name(args.group))
    else:
        if None in (args.p, args.n, args.r):
            raise FormatError("--p, --n and --r are required for the radical family")
        A = make_radical_brace(args.p, args.n, args.r)
    out = A.to_json()
    _write_optional(args.out, out)
    return out


def _write_optional(path: str | None, obj) -> None:
    if not path:
        return
    try:
        Path(path).write_text(dumps(jsonable(obj)) + "\n", encoding="utf-8")
    except OSError as exc:
        raise _Fail(EXIT_IO, {"error": "IOError", "message": str(exc)}) from None


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brace-forge",
        description=f"Finite skew braces and their lambda groups. {ENV_VAR} overrides the analysis size cap.",
    )
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="human", action="store_false", help="JSON output (default)")
    fmt.add_argument("--human", dest="human", action="store_true", help="key: value output")
    parser.set_defaults(human=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a group or brace file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="invariant subsets and class numbers")
    p.add_argument("path")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("lambda-group", help="export the semidirect product as a group file")
    p.add_argument("path")
    p.add_argument("--flavor", choices=["opposite", "standard"], default="opposite")
    p.add_argument("--out")
    p.set_defaults(func=cmd_lambda_group)

    p = sub.add_parser("char-degrees", help="irreducible character degrees (of the lambda group for a brace)")
    p.add_argument("path")
    p.set_defaults(func=cmd_char_degrees)

    p = sub.add_parser("ird", help="distinct irreducible degrees")
    p.add_argument("path")
    p.set_defaults(func=cmd_ird)

    p = sub.add_parser("isoclinic", help="isoclinism certificate for two groups or two braces")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_isoclinic)

    p = sub.add_parser("regular-check", help="regular representation decomposition")
    p.add_argument("path")
    p.set_defaults(func=cmd_regular_check)

    p = sub.add_parser("verify-paper", help="run the full check suite over the corpus")
    p.add_argument("--select", nargs="*", help="corpus names or families (trivial, radical, opposite)")
    p.add_argument("--extra", nargs="*", help="additional brace files")
    p.add_argument("--no-fixtures", action="store_true", help="skip the fixture checks")
    p.add_argument("--full", action="store_true", help="print every report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("make", help="build a brace file")
    p.add_argument("--family", choices=["trivial", "radical"], required=True)
    p.add_argument("--group", help="group name for the trivial family, e.g. Z4, V4, S3, D4, Q8")
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_make)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except _Fail as f:
        _emit(f.payload, args.human)
        return f.code
    except FormatError as exc:
        _emit(_error_payload(exc), args.human)
        return EXIT_IO
    except PropertyViolation as exc:
        _emit(_error_payload(exc) | {"check": exc.check}, args.human)
        return EXIT_PROPERTY
    except ValidationError as exc:
        _emit({"valid": False} | _error_payload(exc), args.human)
        return EXIT_INVALID
    except SizeBound as exc:
        _emit(_error_payload(exc), args.human)
        return EXIT_INVALID
    except BraceForgeError as exc:
        # prime search and solver failures
        _emit(_error_payload(exc), args.human)
        return EXIT_PROPERTY
    _emit(result, args.human)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

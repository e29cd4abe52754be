"""Command-line front end: ``qga VERB FILE... [options]``.

Exit status 0 on success (verdicts such as Unknown included), 1 on parse or
validation errors, 2 when an infinite object is requested without a bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import classify as cls
from . import constructions as cons
from . import dg, homology, surface
from .errors import InfiniteObjectError, ParseError, QGAError, ValidationError
from .quiver import (
    QuadraticMonomialAlgebra,
    dump_document,
    parse_algebra,
    require_gentle,
    serialize,
    to_document,
    validate_gentle,
)

DEFAULT_MAX_LEN = 64


# -- option parsing -----------------------------------------------------------


def parse_bound(text: str | None) -> int | None:
    """``inf`` means unbounded; otherwise a non-negative integer."""
    if text is None:
        text = os.environ.get("QGA_MAX_LEN", str(DEFAULT_MAX_LEN))
    if text.strip().lower() in ("inf", "unbounded", "none"):
        return None
    try:
        value = int(text)
    except ValueError:
        raise ValidationError(f"bad length bound {text!r}") from None
    if value < 0:
        raise ValidationError("length bound must be non-negative")
    return value


def parse_vertices(text: str | None) -> list[str]:
    if not text:
        return []
    return [v.strip() for v in text.split(",") if v.strip()]


def parse_relations(algebra: QuadraticMonomialAlgebra, text: str | None) -> list[tuple[str, str]]:
    """``all``, ``none``, or comma-separated ``a.b`` pairs of arrow names."""
    if text is None or text.strip().lower() == "none" or not text.strip():
        return []
    if text.strip().lower() == "all":
        return list(algebra.relations)
    pairs = []
    for item in text.split(","):
        parts = item.strip().split(".")
        if len(parts) != 2 or not all(parts):
            raise ValidationError(f"bad relation {item!r}; expected 'a.b'")
        pairs.append((parts[0], parts[1]))
    return pairs


def parse_shift(text: str | None) -> tuple[int, int] | None:
    if text is None or text == "all":
        return None
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ValidationError(f"bad shift range {text!r}; expected LO:HI") from None


def read_algebra(path: str) -> QuadraticMonomialAlgebra:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


# -- rendering ----------------------------------------------------------------


def _plain(value):
    if hasattr(value, "to_document"):
        return value.to_document()
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, list):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _scalar(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_text(value, indent: int = 0) -> list[str]:
    """An indented key/value rendering of a report."""
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines += render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                sub = render_text(v, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}" if sub else f"{pad}-")
                lines += sub[1:]
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict) and not v:
        return "{}"
    return _scalar(v)


def emit(report, as_json: bool) -> str:
    if isinstance(report, str):
        return report
    report = _plain(report)
    if as_json:
        return dump_document(report)
    return "\n".join(render_text(report)) + "\n"


# -- verbs --------------------------------------------------------------------


def _derived_document(derived: cons.Derived) -> str:
    return serialize(derived.algebra, derived.truncated_at)


def _require_finite_or_bounded(derived: cons.Derived, bound: int | None, what: str) -> None:
    if not derived.finite and bound is None:
        raise InfiniteObjectError(f"{what} is infinite; pass --max-len")


def verb_validate(algebra, args):
    report = validate_gentle(algebra)
    return {
        "gentle": report.is_gentle,
        "violations": [
            {"condition": v.condition, "witness": list(v.witness), "message": v.message}
            for v in report.violations
        ],
    }


def verb_dual(algebra, args):
    return serialize(cons.quadratic_dual(algebra))


def verb_cut(algebra, args):
    bound = parse_bound(args.max_len)
    derived = cons.idempotent_cut(algebra, parse_vertices(args.remove), bound)
    return _derived_document(derived)


def verb_corner(algebra, args):
    bound = parse_bound(args.max_len)
    build = cons.corner_via_dual if args.via_dual else cons.corner_algebra
    derived = build(algebra, parse_vertices(args.keep), bound)
    return _derived_document(derived)


def _resolution(algebra, args):
    J = parse_relations(algebra, args.J)
    bound = parse_bound(args.max_len)
    if bound is None and not dg.is_AJ_finite(algebra, J):
        raise InfiniteObjectError("A_J has infinitely many generators; pass --max-len")
    return J, dg.build_AJ(algebra, J, bound)


def verb_resolve(algebra, args):
    _, resolution = _resolution(algebra, args)
    return dump_document(resolution.to_document())


def verb_check_resolution(algebra, args):
    J, resolution = _resolution(algebra, args)
    differential = dg.check_differential(resolution)
    check_len = args.check_len
    if check_len is None:
        check_len = resolution.bound if resolution.bound is not None else max(
            (len(w) for w in resolution.words.values()), default=1
        )
        check_len = min(check_len, 6)
    homotopy = dg.check_homotopy(algebra, J, check_len)
    return {
        "generators": len(resolution.generators),
        "truncated": resolution.truncated,
        "differential_squares_to_zero": differential.ok,
        "failing_generator": differential.failing_generator,
        "homotopy": {
            "bound": homotopy.bound,
            "checked": homotopy.checked,
            "failures": [{"monomial": list(m), "residual": repr(r)} for m, r in homotopy.failures],
            "holds": homotopy.ok,
            "note": homotopy.note,
        },
    }


def verb_invariants(algebra, args):
    return surface.surface_invariants(algebra).to_document()


def verb_surface(algebra, args):
    if args.emit == "dot":
        return surface.to_dot(algebra)
    model = surface.assemble_ribbon(algebra)
    return {
        "ends": {a: [list(x), list(y)] for a, (x, y) in model.end_gluing.items()},
        "circ_points": [
            {"ends": [list(h) for h in c.ends], "kind": "puncture" if c.cyclic else "boundary"}
            for c in model.circ_points
        ],
        "faces": [{"kind": f.kind, "corners": [list(h) for h in f.corners]} for f in model.faces],
        "invariants": surface.surface_invariants(algebra).to_document(),
    }


def verb_ext(algebra, args):
    shift = parse_shift(args.shift)
    bound = None
    if shift is None and not homology.is_smooth(algebra):
        bound = parse_bound(args.max_len)
        if bound is None:
            raise InfiniteObjectError("the Ext table is infinite; pass --shift or --max-len")
    table = homology.ext_table(algebra, shift, bound)
    return {"truncated_at": bound, "entries": table.to_document()}


def _predicate(report) -> dict:
    witness = report.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {"holds": report.holds, "witness": witness, "note": report.note}


def verb_presilting(algebra, args):
    return _predicate(homology.is_presilting_projective(algebra, parse_vertices(args.keep)))


def verb_presmc(algebra, args):
    return _predicate(homology.is_preSMC_simples(algebra, parse_vertices(args.keep)))


def verb_classify(algebra, args):
    return cls.classify(algebra)


def _status(a: QuadraticMonomialAlgebra) -> dict:
    return {"smooth": bool(homology.is_smooth(a)), "proper": bool(homology.is_proper(a))}


def verb_recollement(algebra, args):
    require_gentle(algebra)
    bound = parse_bound(args.max_len)
    e = parse_vertices(args.remove)
    cut = cons.idempotent_cut(algebra, e, bound)
    corner = cons.corner_algebra(algebra, e, bound)
    _require_finite_or_bounded(cut, bound, "A_e")
    _require_finite_or_bounded(corner, bound, "eAe")
    report = {
        "cut": {**to_document(cut.algebra, cut.truncated_at), **_status(cut.algebra)},
        "algebra": {**to_document(algebra), **_status(algebra)},
        "corner": {**to_document(corner.algebra, corner.truncated_at), **_status(corner.algebra)},
    }
    if cut.finite and corner.finite:
        verdict = surface.two_out_of_three(algebra, e)
        report["two_out_of_three"] = {"consistent": verdict.consistent}
    else:
        report["two_out_of_three"] = {"consistent": None, "note": "truncated; not checked"}
    return report


def verb_iso(first, second, args):
    iso = cons.graded_iso(first, second)
    if iso is None:
        return {"isomorphic": False}
    return {"isomorphic": True, "vertices": dict(iso.vertex_map), "arrows": dict(iso.arrow_map)}


VERBS = {
    "validate": verb_validate,
    "dual": verb_dual,
    "cut": verb_cut,
    "corner": verb_corner,
    "resolve": verb_resolve,
    "check-resolution": verb_check_resolution,
    "invariants": verb_invariants,
    "surface": verb_surface,
    "ext": verb_ext,
    "presilting": verb_presilting,
    "presmc": verb_presmc,
    "classify": verb_classify,
    "recollement": verb_recollement,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qga", description="Graded gentle algebra toolkit.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help_text: str, **options):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("inputs", nargs="+", metavar="FILE", help="algebra document, '-' for stdin")
        p.add_argument("--json", action="store_true", help="emit the canonical JSON form")
        p.add_argument("--jobs", type=int, default=1, help="process several inputs in parallel")
        p.add_argument("--max-len", default=None, help="truncation bound (default $QGA_MAX_LEN or 64; 'inf' for none)")
        for flag, kw in options.items():
            p.add_argument(flag, **kw)
        return p

    add("validate", "check the gentle conditions")
    add("dual", "quadratic dual")
    add("cut", "idempotent cut A_e", **{"--remove": {"required": True, "help": "removed vertices, comma-separated"}})
    add("corner", "corner algebra eAe", **{
        "--keep": {"required": True, "help": "kept vertices, comma-separated"},
        "--via-dual": {"action": "store_true", "help": "compute as the dual of a cut of the dual"},
    })
    relation_help = "relations to resolve: 'all', 'none' or 'a.b,c.d'"
    add("resolve", "partial dg resolution A_J", **{"--J": {"default": "all", "help": relation_help}})
    add("check-resolution", "verify d^2 = 0 and the contracting homotopy", **{
        "--J": {"default": "all", "help": relation_help},
        "--check-len": {"type": int, "default": None, "help": "path length bound for the homotopy check (default min(bound, 6))"},
    })
    add("invariants", "marked-surface invariants")
    add("surface", "ribbon model", **{"--emit": {"choices": ["report", "dot"], "default": "report"}})
    add("ext", "Hom(S_i, S_j[l]) from critical paths", **{"--shift": {"default": None, "help": "LO:HI"}})
    add("presilting", "is eA pre-silting", **{"--keep": {"default": "", "help": "kept vertices"}})
    add("presmc", "are the simples at e a pre-SMC", **{"--keep": {"default": "", "help": "kept vertices"}})
    add("classify", "exceptional sequences and silting objects")
    add("recollement", "the triple (A_e, A, eAe)", **{"--remove": {"required": True, "help": "removed vertices"}})

    iso = sub.add_parser("iso", help="graded isomorphism of two algebras")
    iso.add_argument("inputs", nargs=2, metavar="FILE")
    iso.add_argument("--json", action="store_true")
    iso.add_argument("--jobs", type=int, default=1)
    iso.add_argument("--max-len", default=None)
    return parser


def _run_one(verb: str, path: str, args: argparse.Namespace) -> tuple[int, str, str]:
    """Run one verb on one input; returns ``(status, stdout, stderr)``."""
    try:
        algebra = read_algebra(path)
        return 0, emit(VERBS[verb](algebra, args), args.json), ""
    except InfiniteObjectError as exc:
        return 2, "", f"qga: {path}: {exc}\n"
    except (ParseError, ValidationError, QGAError) as exc:
        return 1, "", f"qga: {path}: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "iso":
        try:
            first, second = (read_algebra(p) for p in args.inputs)
            sys.stdout.write(emit(verb_iso(first, second, args), args.json))
            return 0
        except QGAError as exc:
            sys.stderr.write(f"qga: {exc}\n")
            return 1

    inputs = args.inputs
    if args.jobs > 1 and len(inputs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, [args.verb] * len(inputs), inputs, [args] * len(inputs)))
    else:
        results = [_run_one(args.verb, p, args) for p in inputs]

    status = 0
    for path, (code, out, err) in zip(inputs, results):
        if len(inputs) > 1 and out:
            sys.stdout.write(f"== {path} ==\n")
        sys.stdout.write(out)
        sys.stderr.write(err)
        status = max(status, code)
    return status


if __name__ == "__main__":
    sys.exit(main())

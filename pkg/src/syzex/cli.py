"""Command-line surface.

Exit codes: 0 success, 1 budget exhaustion, 2 parse/validation errors.
Reports are deterministic for fixed flags; timings appear only on request.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import corpus as corpus_mod
from . import rep as rep_mod
from .algebra import build_algebra, parse_algebra_spec
from .errors import BudgetExceeded, SpecError, SyzexError
from .extdim import (
    EdReportOptions,
    UniverseParams,
    bounded_containment,
    bullet,
    ed_report,
    generate_universe,
    layer,
    rep_type_certificate,
    syzygy_category,
    tits_classification,
)
from .homology import (
    cosyzygy,
    enumerate_ext_classes,
    ext1_space,
    extension_middle,
    syzygy,
    tilting_check,
)
from .rep import decompose, module_doc, parse_module_doc
from .reports import new_report, render_json, render_text


def _default_budget() -> int:
    env = os.environ.get("SYZEX_BUDGET")
    return int(env) if env else 2 ** 20


def _resolve_spec(ref: str, field_p):
    """Corpus id or AlgebraSpec file path -> (entry-or-None, spec)."""
    base = ref.partition(":")[0]
    if base in corpus_mod.corpus_ids():
        entry = corpus_mod.load_corpus(ref, field_p)
        return entry, entry.spec
    path = Path(ref)
    if not path.exists():
        raise SpecError("not a corpus id or readable file: %r" % ref)
    spec = parse_algebra_spec(path.read_text())
    if field_p:
        spec.field_p = field_p
    return None, spec


def _resolve_module(ref: str, entry, algebra):
    if entry is not None:
        try:
            return corpus_mod.named_module(entry, algebra, ref)
        except SpecError:
            pass
    path = Path(ref)
    if not path.exists():
        raise SpecError("not a known module name or readable file: %r" % ref)
    doc = json.loads(path.read_text())
    return parse_module_doc(doc, algebra)


def _universe_params(args) -> UniverseParams:
    return UniverseParams(
        dim_bound=args.dim_bound,
        mult_bound=args.mult_bound,
        ext_budget=args.budget,
        member_cap=args.member_cap,
    )


def _member_set(uni, names: str):
    return frozenset(uni.member_named(x.strip()) for x in names.split(",") if x.strip())


def _dims(classes):
    return [c.rep.dim_map() for c in sorted(classes, key=lambda c: c.sort_key())]


def cmd_algebra(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    report["results"] = {
        "vertices": list(spec.vertices),
        "arrows": [{"name": a["name"], "from": a["from"], "to": a["to"]} for a in spec.arrows],
        "field": algebra.p,
        "dimension": algebra.dim,
        "dimension_by_path_length": algebra.dimension_by_length(),
        "loewy_length": algebra.loewy_length(),
        "semisimple": algebra.is_semisimple(),
        "hereditary": algebra.is_hereditary(),
        "projectives": {
            algebra.vertex_label(v): algebra.projective(v).dim_map()
            for v in range(algebra.n_vertices)
        },
        "injectives": {
            algebra.vertex_label(v): algebra.injective(v).dim_map()
            for v in range(algebra.n_vertices)
        },
    }
    return 0


def cmd_mod(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    m = _resolve_module(args.module, entry, algebra)
    if args.action == "validate":
        violations = m.validate()
        report["results"] = {"module": args.module, "ok": not violations, "violations": violations}
        return 2 if violations else 0
    violations = m.validate()
    if violations:
        report["results"] = {"module": args.module, "violations": violations}
        return 2
    if args.action == "decompose":
        dec = decompose(m)
        report["warnings"].extend(dec.warnings)
        report["results"] = {
            "module": args.module,
            "factors": [
                {"multiplicity": mult, "dim": f.dim_map(), "module": module_doc(f, args.spec)}
                for f, mult in dec.factors
            ],
        }
        return 0
    out = syzygy(m, args.n) if args.action == "syzygy" else cosyzygy(m, args.n)
    report["results"] = {
        "module": args.module,
        "n": args.n,
        "dim": out.dim_map(),
        "module_file": module_doc(out, args.spec),
    }
    return 0


def cmd_ext(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    x = _resolve_module(args.x, entry, algebra)
    y = _resolve_module(args.y, entry, algebra)
    space = ext1_space(x, y)
    results = {"x": args.x, "y": args.y, "dimension": space.dimension}
    if args.enumerate:
        classes = enumerate_ext_classes(x, y, budget=args.budget)
        listing = []
        for cls in classes:
            middle, _, _ = extension_middle(cls)
            dec = decompose(middle)
            listing.append(
                {
                    "middle_dim": middle.dim_map(),
                    "summands": [{"dim": f.dim_map(), "multiplicity": mult} for f, mult in dec.factors],
                }
            )
        results["class_count"] = len(classes)
        results["classes"] = listing
    report["results"] = results
    return 0


def cmd_bullet(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    uni = generate_universe(algebra, args.dim_bound, _universe_params(args))
    left = _member_set(uni, args.left)
    right = _member_set(uni, args.right)
    got = bullet(uni, left, right, args.mult_bound)
    if args.sweep:
        wider = bullet(uni, left, right, args.mult_bound + 1)
        if wider != got:
            report["warnings"].append(
                "saturation sweep: %d new members at mult bound %d"
                % (len(wider - got), args.mult_bound + 1)
            )
    report["warnings"].extend(uni.warnings)
    if uni.is_clipped:
        report["warnings"].append("universe clipped at dim bound %d" % args.dim_bound)
    report["results"] = {
        "left": sorted(x.strip() for x in args.left.split(",") if x.strip()),
        "right": sorted(x.strip() for x in args.right.split(",") if x.strip()),
        "dim_bound": args.dim_bound,
        "mult_bound": args.mult_bound,
        "member_count": len(got),
        "members": _dims(got),
    }
    return 0


def cmd_layer(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    uni = generate_universe(algebra, args.dim_bound, _universe_params(args))
    gens = _member_set(uni, args.gen)
    got = layer(uni, gens, args.n, args.mult_bound)
    report["warnings"].extend(uni.warnings)
    if uni.is_clipped:
        report["warnings"].append("universe clipped at dim bound %d" % args.dim_bound)
    results = {
        "generators": sorted(x.strip() for x in args.gen.split(",") if x.strip()),
        "n": args.n,
        "dim_bound": args.dim_bound,
        "mult_bound": args.mult_bound,
        "member_count": len(got),
        "members": _dims(got),
    }
    if args.contains:
        target = _member_set(uni, args.contains)
        missing = bounded_containment(uni, target, gens, args.n)
        results["contains"] = {
            "query": sorted(x.strip() for x in args.contains.split(",")),
            "holds": missing is None,
            "first_missing": missing.rep.dim_map() if missing is not None else None,
        }
    report["results"] = results
    return 0


def cmd_syzcat(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    cat = syzygy_category(algebra, args.n, args.dim_bound, _universe_params(args))
    report["warnings"].extend(cat.universe.warnings)
    if cat.universe.is_clipped:
        report["warnings"].append("universe clipped at dim bound %d" % args.dim_bound)
    report["results"] = {
        "n": args.n,
        "dim_bound": args.dim_bound,
        "member_count": len(cat.members),
        "members": _dims(cat.members),
        "oversized": _dims(cat.oversized),
    }
    return 0


def cmd_ed(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    indices = [int(x) for x in args.i.split(",") if x.strip()]
    facts = []
    if args.facts:
        doc = json.loads(Path(args.facts).read_text())
        for item in doc:
            subject = item.get("subject", {})
            if subject.get("algebra") not in (None, args.spec):
                continue
            facts.append(
                {
                    "i": int(subject.get("i", item.get("i", 0))),
                    "kind": item["kind"],
                    "value": int(item["value"]),
                    "citation": item.get("citation", "unsourced"),
                }
            )
    options = EdReportOptions(
        dim_bound=args.dim_bound,
        syzygy_probes=tuple(int(x) for x in args.syzygy_probe.split(",") if x.strip()) if args.syzygy_probe else (),
        params=_universe_params(args),
    )
    intervals = ed_report(algebra, indices, facts, options, algebra_id=args.spec)
    report["results"] = {
        "indices": indices,
        "dim_bound": args.dim_bound,
        "external_facts": facts,
        "intervals": [iv.as_dict() for iv in intervals],
    }
    for iv in intervals:
        for note in iv.notes:
            if note not in report["warnings"]:
                report["warnings"].append(note)
    return 0


def cmd_tilting(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    t = _resolve_module(args.module, entry, algebra)
    verdict = tilting_check(t, args.bound)
    report["results"] = {
        "module": args.module,
        "is_tilting": verdict.is_tilting,
        "pd": verdict.pd,
        "failures": verdict.failures,
        "coresolution_dims": [list(d) for d in verdict.coresolution],
    }
    return 0


def cmd_reptype(args, report):
    entry, spec = _resolve_spec(args.spec, args.field)
    algebra = build_algebra(spec)
    cert = rep_type_certificate(algebra, args.dim_bound, _universe_params(args))
    report["results"] = {
        "dim_bound": args.dim_bound,
        "verdict": cert.verdict,
        "method": cert.method,
        "certified": cert.certified,
        "witness": cert.witness,
        "tits": tits_classification(algebra),
        "member_count": len(cert.members) if cert.verdict == "finite" else None,
        "members": _dims(cert.members) if cert.verdict == "finite" else [],
    }
    return 0


def cmd_corpus(args, report):
    if args.action == "list":
        report["results"] = {
            "entries": [
                {"id": cid, "notes": corpus_mod.load_corpus(cid).notes}
                for cid in corpus_mod.corpus_ids()
            ]
        }
        return 0
    entry = corpus_mod.load_corpus(args.id, args.field)
    report["results"] = {
        "id": args.id,
        "notes": entry.notes,
        "named_modules": sorted(entry.module_builders),
        "spec_json": entry.spec.to_json(),
    }
    return 0


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # placed on the top parser with real defaults, and on every leaf with
    # suppressed defaults so the flags work before or after the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--field", type=int, default=d(None), help="override the prime field")
    parser.add_argument("--format", choices=("text", "json"), default=d("text"))
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized search fallbacks")
    parser.add_argument("--budget", type=int, default=d(_default_budget()), help="enumeration budget")
    parser.add_argument("--member-cap", type=int, default=d(5000))
    parser.add_argument("--timings", action="store_true", default=d(False), help="include wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="syzex", description="exact path-algebra workbench")
    _add_global_flags(top, suppress=False)
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("algebra", help="inspect an algebra")
    psub = p.add_subparsers(dest="action", required=True)
    info = psub.add_parser("info")
    info.add_argument("spec")
    info.set_defaults(func=cmd_algebra)

    p = sub.add_parser("mod", help="module operations")
    psub = p.add_subparsers(dest="action", required=True)
    for action in ("validate", "decompose", "syzygy", "cosyzygy"):
        q = psub.add_parser(action)
        q.add_argument("spec")
        q.add_argument("module")
        if action in ("syzygy", "cosyzygy"):
            q.add_argument("--n", type=int, default=1)
        q.set_defaults(func=cmd_mod)

    p = sub.add_parser("ext", help="Ext^1 dimension and classes")
    p.add_argument("spec")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("bullet", help="bullet of two add-categories")
    p.add_argument("spec")
    p.add_argument("--left", required=True, help="comma list of member names (sub side)")
    p.add_argument("--right", required=True, help="comma list of member names (quotient side)")
    p.add_argument("--dim-bound", type=int, default=6)
    p.add_argument("--mult-bound", type=int, default=2)
    p.add_argument("--sweep", action="store_true", help="recheck at mult bound + 1 and warn on growth")
    p.set_defaults(func=cmd_bullet)

    p = sub.add_parser("layer", help="[T]_n layers")
    p.add_argument("spec")
    p.add_argument("--gen", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim-bound", type=int, default=6)
    p.add_argument("--mult-bound", type=int, default=2)
    p.add_argument("--contains", default=None, help="member names to test for layer membership")
    p.set_defaults(func=cmd_layer)

    p = sub.add_parser("syzcat", help="syzygy category through the window")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim-bound", type=int, default=6)
    p.add_argument("--mult-bound", type=int, default=2)
    p.set_defaults(func=cmd_syzcat)

    p = sub.add_parser("ed", help="extension-dimension intervals")
    p.add_argument("spec")
    p.add_argument("--i", required=True, help="comma list of syzygy indices")
    p.add_argument("--dim-bound", type=int, default=6)
    p.add_argument("--mult-bound", type=int, default=2)
    p.add_argument("--facts", default=None, help="external facts JSON file")
    p.add_argument("--syzygy-probe", default=None, help="indices for finiteness probes")
    p.set_defaults(func=cmd_ed)

    p = sub.add_parser("tilting", help="tilting-module check")
    p.add_argument("spec")
    p.add_argument("module")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_tilting)

    p = sub.add_parser("reptype", help="representation-type certificate")
    p.add_argument("spec")
    p.add_argument("--dim-bound", type=int, default=6)
    p.add_argument("--mult-bound", type=int, default=2)
    p.set_defaults(func=cmd_reptype)

    p = sub.add_parser("corpus", help="packaged example algebras")
    psub = p.add_subparsers(dest="action", required=True)
    lst = psub.add_parser("list")
    lst.set_defaults(func=cmd_corpus)
    show = psub.add_parser("show")
    show.add_argument("id")
    show.set_defaults(func=cmd_corpus)

    for leaf in _leaf_parsers(top):
        if leaf is not top:
            _add_global_flags(leaf, suppress=True)
    return top


def _leaf_parsers(parser):
    leaves = []
    stack = [parser]
    while stack:
        cur = stack.pop()
        subs = [
            a for a in cur._actions if isinstance(a, argparse._SubParsersAction)
        ]
        if not subs:
            leaves.append(cur)
            continue
        for action in subs:
            stack.extend(action.choices.values())
    return leaves


def run(argv) -> tuple:
    """(exit code, report dict, rendered text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    rep_mod.set_default_seed(args.seed)
    inputs = {k: v for k, v in vars(args).items() if k != "func" and v is not None}
    report = new_report(["syzex"] + list(argv), inputs)
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except BudgetExceeded as exc:
        report["results"] = {"error": str(exc), "kind": "budget"}
        code = 1
    except (SpecError, ValueError, KeyError) as exc:
        report["results"] = {"error": str(exc), "kind": "validation"}
        code = 2
    except SyzexError as exc:
        report["results"] = {"error": str(exc), "kind": "error"}
        code = 2
    if args.timings:
        report["timings"] = {"wall_seconds": round(time.perf_counter() - start, 3)}
    rendered = render_json(report) if args.format == "json" else render_text(report)
    return code, report, rendered


def main(argv=None) -> int:
    code, _, rendered = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status is 0 on success, 1 when a verified claim fails and 2 for usage,
parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
import warnings
from importlib import resources
from pathlib import Path

from . import __version__
from .algebra import AlgebraParseError, AlgebraSpec, format_algebra, load_algebra, separated_quiver
from .krullschmidt import FieldTooSmallError
from .modrep import (
    Rep,
    global_dimension,
    injective,
    is_injective,
    is_isomorphic,
    is_projective,
    min_presentation,
    projective,
    simple,
)
from .stablefun import NotRepFiniteError, all_indecomposables, is_rep_finite
from .tau import tau, tau_inverse
from .taurig import (
    classify_algebra,
    common_summand,
    construct_from_simple,
    criterion_verdict,
    generate_corpus,
    hunt_counterexample,
    is_tau_rigid,
    module_name,
    nakayama_tau_tilting,
    tau_tilting_all,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- module selectors -------------------------------------------------------

_STD = re.compile(r"^([SPI])\(?(\d+)\)?$", re.IGNORECASE)
_DIMS = re.compile(r"^\(?([\d,\s]+?)\)?(?:@(\d+))?$")
_POWER = re.compile(r"^tau(?:\^(-?\d+))?\s+(.+)$")


def select_module(a: AlgebraSpec, text: str) -> Rep:
    """Resolve ``S3``, ``P(2)``, ``I3``, ``0,1,1,1`` or ``0,1,1,1@2``, optionally prefixed ``tau^k``."""
    text = text.strip()
    m = _POWER.match(text)
    if m:
        k = int(m.group(1) or 1)
        base = select_module(a, m.group(2))
        step = tau if k > 0 else tau_inverse
        for _ in range(abs(k)):
            base = step(base)
        return base
    m = _STD.match(text)
    if m:
        v = int(m.group(2))
        if not 1 <= v <= a.n:
            raise UsageError(f"vertex {v} out of range 1..{a.n}")
        make = {"S": simple, "P": projective, "I": injective}[m.group(1).upper()]
        return make(a, v - 1)
    m = _DIMS.match(text)
    raw = m.group(1).strip() if m else ""
    if raw and ("," in raw or (raw.isdigit() and len(raw) == a.n)):
        dims = tuple(int(x) for x in (raw.split(",") if "," in raw else raw))
        if len(dims) != a.n:
            raise UsageError(f"dimension vector needs {a.n} entries")
        k = int(m.group(2) or 1)
        try:
            hits = [r for r in all_indecomposables(a) if r.dims == dims]
        except NotRepFiniteError as exc:
            raise UsageError(f"dimension-vector selectors need finite type: {exc}") from None
        if not 1 <= k <= len(hits):
            raise UsageError(f"no indecomposable number {k} with dimension vector {dims} ({len(hits)} exist)")
        return hits[k - 1]
    raise UsageError(f"invalid module selector {text!r}; use S<v>, P<v>, I<v> or a dim vector like 0,1,1,1@1")


# -- serialisation ----------------------------------------------------------

def rep_json(m: Rep) -> dict:
    a = m.algebra
    return {
        "name": module_name(m),
        "dims": list(m.dims),
        "action": {arrow.name: m.action[i].tolist() for i, arrow in enumerate(a.arrows)},
    }


def dims_str(m) -> str:
    dims = m.dims if isinstance(m, Rep) else m
    return "(" + ",".join(str(d) for d in dims) + ")"


def quiver_dot(a: AlgebraSpec, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(a.n):
        lines.append(f'  v{v} [label="{a.label(v)}"];')
    for arrow in a.arrows:
        lines.append(f'  v{arrow.source} -> v{arrow.target} [label="{arrow.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tau_graph_dot(a: AlgebraSpec, mods: list[Rep]) -> str:
    lines = ["digraph AR {"]
    for i, m in enumerate(mods):
        lines.append(f'  m{i} [label="{module_name(m)} {dims_str(m)}"];')
    for i, m in enumerate(mods):
        if is_projective(m):
            continue
        tm = tau(m)
        j = next((j for j, x in enumerate(mods) if x.dims == tm.dims and is_isomorphic(x, tm, indecomposable=True)), None)
        if j is not None:
            lines.append(f'  m{i} -> m{j} [label="tau", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _algebra(args) -> AlgebraSpec:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            return load_algebra(args.algebra)
        except OSError as exc:
            raise UsageError(f"cannot read {args.algebra}: {exc.strerror or exc}") from None


# -- subcommands ------------------------------------------------------------

def cmd_info(args) -> int:
    a = _algebra(args)
    if args.format == "dot":
        sys.stdout.write(quiver_dot(a))
        return EXIT_OK
    payload = {"vertices": a.n, "arrows": len(a.arrows), "relations": a.relations.value,
               "field": a.p, "dimension": a.dimension()}
    lines = [f"vertices {a.n}, arrows {len(a.arrows)}, relations {a.relations.value}, field F_{a.p}",
             f"dim A = {a.dimension()}"]
    if a.is_rad2:
        prof = classify_algebra(a).as_dict()
        payload["profile"] = prof
        lines += [f"{k}: {v}" for k, v in prof.items() if v is not None]
    else:
        payload["rep_finite"] = is_rep_finite(a)
        g = global_dimension(a)
        payload["gldim"] = g
        lines += [f"rep_finite: {payload['rep_finite']}", f"gldim: {g}"]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_indecomposables(args) -> int:
    a = _algebra(args)
    mods = all_indecomposables(a)
    if args.format == "dot":
        sys.stdout.write(tau_graph_dot(a, mods))
        return EXIT_OK
    rows = []
    for i, m in enumerate(mods, start=1):
        rows.append({
            "index": i,
            "name": module_name(m),
            "dims": list(m.dims),
            "projective": is_projective(m),
            "injective": is_injective(m),
            "simple": m.dim == 1,
            "tau_rigid": is_tau_rigid(m).rigid,
        })
    text = [f"{len(mods)} indecomposables"]
    for r in rows:
        flags = [k for k in ("projective", "injective", "simple", "tau_rigid") if r[k]]
        text.append(f"{r['index']:3d}  {dims_str(r['dims']):<16} {r['name']:<10} {' '.join(flags)}")
    _emit(args, {"count": len(mods), "modules": rows}, "\n".join(text))
    return EXIT_OK


def cmd_tau(args) -> int:
    a = _algebra(args)
    m = select_module(a, args.module)
    cur = m
    step = tau if args.power >= 0 else tau_inverse
    for _ in range(abs(args.power)):
        cur = step(cur)
    label = "tau" if args.power == 1 else f"tau^{args.power}"
    payload = {"module": rep_json(m), "power": args.power, "result": rep_json(cur)}
    _emit(args, payload, f"{label} {module_name(m)} = {module_name(cur)} {dims_str(cur)}")
    return EXIT_OK


def cmd_rigid(args) -> int:
    a = _algebra(args)
    m = select_module(a, args.module)
    verdict = is_tau_rigid(m)
    shared = common_summand(m)
    pres = min_presentation(m)
    payload = {
        "module": rep_json(m),
        "tau_rigid": verdict.rigid,
        "presentation": {"p1": [f"P({a.label(v)})" for v in pres.p1_vertices],
                         "p0": [f"P({a.label(v)})" for v in pres.p0_vertices]},
        "common_summand": module_name(shared) if shared is not None else None,
        "witness": [b.tolist() for b in verdict.witness.blocks] if verdict.witness is not None else None,
    }
    parts = ["τ-rigid" if verdict.rigid else "not τ-rigid"]
    if verdict.witness is not None:
        parts.append("witness map provided")
    parts.append(f"common summand {module_name(shared)}" if shared is not None else "no common summand")
    if a.is_rad2:
        try:
            cv = criterion_verdict(m)
            payload["criterion"] = {"verdict": cv.kind.value, "reason": cv.reason}
            parts.append(f"criterion: {cv.kind.value}")
        except ValueError as exc:
            payload["criterion"] = {"verdict": None, "reason": str(exc)}
    text = "; ".join(parts)
    if args.verbose and verdict.witness is not None:
        text += "\n" + repr(verdict.witness)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_tau_tilting(args) -> int:
    a = _algebra(args)
    mods = tau_tilting_all(a)
    names = [[module_name(r) for r in t.summands] for t in mods]
    text = [f"{len(mods)} τ-tilting modules"]
    text += [" ⊕ ".join(n) for n in names]
    payload = {"count": len(mods), "modules": [{"summands": [rep_json(r) for r in t.summands]} for t in mods]}
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_construct(args) -> int:
    a = _algebra(args)
    v = args.vertex - 1
    if not 0 <= v < a.n:
        raise UsageError(f"vertex {args.vertex} out of range 1..{a.n}")
    out = construct_from_simple(a, v)
    payload = {
        "vertex": args.vertex,
        "case": out.case,
        "syzygy": list(out.syzygy_multiplicities),
        "chosen_simple": a.label(out.chosen) if out.chosen is not None else None,
        "multiplicity": out.multiplicity,
        "module": rep_json(out.module) if out.module is not None else None,
        "indecomposable": out.indecomposable,
        "tau_rigid": out.rigid,
        "exhaustive_check": out.exhaustive,
        "certified": out.certified,
    }
    if out.module is None:
        text = f"case {out.case}: no non-projective indecomposable τ-rigid module with cover P({args.vertex})"
        if out.exhaustive is not None:
            text += "; exhaustive search " + ("confirms" if out.exhaustive else "CONTRADICTS")
    else:
        text = (f"case {out.case}: M = P({args.vertex}) / complement of S({a.label(out.chosen)})^{out.multiplicity}"
                f" = {module_name(out.module)} {dims_str(out.module)}; indecomposable {out.indecomposable}, "
                f"τ-rigid {out.rigid}")
    _emit(args, payload, text)
    return EXIT_OK if out.certified else EXIT_FAIL


def cmd_separated(args) -> int:
    a = _algebra(args)
    g = separated_quiver(a)
    if args.format == "dot":
        sys.stdout.write(quiver_dot(g, "Gamma"))
        return EXIT_OK
    labels = {v: g.label(v) for v in range(g.n)}
    payload = {"vertices": [labels[v] for v in range(g.n)],
               "arrows": [{"id": x.name, "source": labels[x.source], "target": labels[x.target]} for x in g.arrows]}
    text = [f"# separated quiver: vertex v' is numbered n + v (n = {a.n})", format_algebra(g).rstrip()]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def cmd_hunt(args) -> int:
    algs = None
    if args.algebras:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            algs = [load_algebra(p) for p in args.algebras]
    rep = hunt_counterexample(args.seed, args.count, args.max_vertices, args.max_arrows, args.dim_bound, algs)
    entries = []
    text = []
    for i, e in enumerate(rep.entries, start=1):
        entries.append({"algebra": e.algebra, "rep_finite": e.rep_finite, "error": e.error,
                        "samples": [{"origin": s.origin, "dims": list(s.dims), "tau_rigid": s.rigid} for s in e.samples]})
        if e.rep_finite:
            continue
        status = "non-rigid indecomposable found" if e.non_rigid_found else "all samples τ-rigid (evidence only)"
        if e.error:
            status = f"skipped: {e.error}"
        text.append(f"[{i}] infinite type, {len(e.samples)} samples: {status}")
        for s in e.samples:
            text.append(f"      {s.origin:<18} {dims_str(s.dims):<14} {'rigid' if s.rigid else 'not rigid'}")
    finite = sum(e.rep_finite for e in rep.entries)
    text.insert(0, f"seed {rep.seed}: {len(rep.entries)} algebras, {finite} of finite type (question vacuous), "
                   f"{len(rep.candidates)} candidates")
    _emit(args, {"seed": rep.seed, "candidates": len(rep.candidates), "entries": entries}, "\n".join(text))
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.max_vertices < 1 or args.max_arrows < 0 or args.count < 1:
        raise UsageError("bounds must be at least 1 (arrows at least 0)")
    algs = generate_corpus(args.seed, args.max_vertices, args.max_arrows, args.count)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(len(algs)))
        for i, a in enumerate(algs, start=1):
            (out / f"corpus_{i:0{width}d}.alg").write_text(format_algebra(a), encoding="utf-8")
        print(f"wrote {len(algs)} algebras to {out}")
    else:
        for i, a in enumerate(algs, start=1):
            sys.stdout.write(f"# algebra {i}\n{format_algebra(a)}\n")
    return EXIT_OK


# -- bundled example fixtures ---------------------------------------------

def _fixture_dir(arg: str | None) -> Path:
    if arg:
        return Path(arg)
    return Path(str(resources.files("tautilt") / "fixtures"))


def _check(a: AlgebraSpec, claim: dict) -> tuple[bool, str]:
    kind = claim["kind"]
    if kind == "iso":
        m, n = select_module(a, claim["module"]), select_module(a, claim["expect"])
        got = module_name(m)
        return is_isomorphic(m, n), got
    if kind == "gldim":
        g = global_dimension(a)
        return g == claim["expect"], str(g)
    if kind == "rep_finite":
        r = is_rep_finite(a)
        return r == claim["expect"], str(r)
    if kind == "indecomposable_count":
        k = len(all_indecomposables(a))
        return k == claim["expect"], str(k)
    if kind == "all_rigid":
        bad = [module_name(m) for m in all_indecomposables(a) if not is_tau_rigid(m).rigid]
        return not bad, "all rigid" if not bad else "not rigid: " + ", ".join(bad)
    if kind == "rigid":
        r = is_tau_rigid(select_module(a, claim["module"]))
        ok = r.rigid == claim["expect"] and (r.rigid or r.witness is not None and not r.witness.is_zero())
        return ok, "rigid" if r.rigid else "not rigid (witness found)"
    if kind == "presentation":
        pres = min_presentation(select_module(a, claim["module"]))
        p1 = sorted(f"P{a.label(v)}" for v in pres.p1_vertices)
        p0 = sorted(f"P{a.label(v)}" for v in pres.p0_vertices)
        ok = p1 == sorted(claim["p1"]) and p0 == sorted(claim["p0"])
        return ok, f"{'+'.join(p1)} -> {'+'.join(p0)}"
    if kind == "tilting_list":
        got = sorted(sorted(module_name(r) for r in t.summands) for t in tau_tilting_all(a))
        want = sorted(sorted(x) for x in claim["expect"])
        return got == want, f"{len(got)} modules"
    if kind == "nakayama_matches":
        nt = nakayama_tau_tilting(a)
        tt = tau_tilting_all(a)
        ok = len(nt) == len(tt) and all(any(x.same_as(y) for y in tt) for x in nt)
        return ok, f"{len(nt)} vs {len(tt)}"
    raise UsageError(f"unknown claim kind {kind!r}")


def verify_paper(fixtures: str | None = None) -> tuple[bool, list[dict]]:
    root = _fixture_dir(fixtures)
    rows = []
    specs = sorted(root.glob("*.expected.json"))
    if not specs:
        raise UsageError(f"no *.expected.json fixtures under {root}")
    for spec_path in specs:
        fixture = json.loads(spec_path.read_text(encoding="utf-8"))
        alg_path = root / fixture["algebra"]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            a = load_algebra(alg_path)
        for claim in fixture["claims"]:
            t0 = time.perf_counter()
            try:
                ok, got = _check(a, claim)
            except (ValueError, ArithmeticError, UsageError) as exc:
                ok, got = False, f"error: {exc}"
            rows.append({"fixture": fixture["name"], "claim": claim["id"], "pass": bool(ok),
                         "observed": got, "seconds": round(time.perf_counter() - t0, 3)})
    return all(r["pass"] for r in rows), rows


def cmd_verify_paper(args) -> int:
    ok, rows = verify_paper(args.fixtures)
    if args.format == "json":
        print(json.dumps({"pass": ok, "claims": rows}, indent=2))
    else:
        width = max(len(r["claim"]) for r in rows)
        for r in rows:
            mark = "PASS" if r["pass"] else "FAIL"
            print(f"{mark}  {r['fixture']:<10} {r['claim']:<{width}}  {r['observed']}  ({r['seconds']:.2f}s)")
        print(f"{sum(r['pass'] for r in rows)}/{len(rows)} claims pass")
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tautilt", description="tau-rigid and tau-tilting modules of quiver algebras")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, algebra=True, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        if algebra:
            sp.add_argument("algebra", help="algebra file")
        sp.add_argument("--format", choices=formats, default="text")
        sp.set_defaults(func=fn)
        return sp

    add("info", cmd_info, "algebra profile", formats=("text", "json", "dot"))
    add("indecomposables", cmd_indecomposables, "list indecomposable modules (finite type)",
        formats=("text", "json", "dot"))
    sp = add("tau", cmd_tau, "Auslander-Reiten translate of a module")
    sp.add_argument("--module", "-m", required=True)
    sp.add_argument("--power", "-k", type=int, default=1, help="negative values apply tau inverse")
    sp = add("rigid", cmd_rigid, "tau-rigidity test with witness and criteria")
    sp.add_argument("--module", "-m", required=True)
    sp.add_argument("--verbose", "-v", action="store_true")
    add("tau-tilting", cmd_tau_tilting, "enumerate basic tau-tilting modules (finite type)")
    sp = add("construct", cmd_construct, "indecomposable tau-rigid module from a simple")
    sp.add_argument("--vertex", "-v", type=int, required=True)
    add("separated", cmd_separated, "separated quiver", formats=("text", "json", "dot"))
    sp = add("verify-paper", cmd_verify_paper, "check the bundled example fixtures", algebra=False)
    sp.add_argument("--fixtures", help="directory of .alg and .expected.json files")
    sp = add("hunt", cmd_hunt, "sample infinite-type algebras for non-rigid indecomposables", algebra=False)
    sp.add_argument("algebras", nargs="*", help="algebra files (default: random corpus)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--max-vertices", type=int, default=4)
    sp.add_argument("--max-arrows", type=int, default=6)
    sp.add_argument("--dim-bound", type=int, default=12)
    sp = sub.add_parser("corpus", help="generate random connected radical-square-zero algebras")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-vertices", type=int, default=5)
    sp.add_argument("--max-arrows", type=int, default=7)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--out", help="directory for corpus_NNN.alg files (default: stdout)")
    sp.set_defaults(func=cmd_corpus, format="text")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraParseError as exc:
        print(f"parse error in {getattr(args, 'algebra', '?')}: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (NotRepFiniteError, FieldTooSmallError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: verification, catalog access, conversions,
extensions, random generation, and the acceptance selftest.

Commands are pure functions of their inputs and flags; randomized commands
are pure functions of the seed. Exit code 0 means every requested check
passed; failures print one JSON object to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .acceptance import run_all, verify_catalog_entry
from .algebra import LieAlgebra
from .alternating import AltCoeffs, format_coeffs, parse_coeffs
from .catalog import CATALOG, catalog, catalog_counts, lambda_trivector
from .convert import (all_roads, chain_to_coeffs, coeffs_to_chain,
                      coeffs_to_family, family_to_coeffs)
from .doubleext import chain_to_algebra, validate_chain
from .errors import QuadlieError, ValidationError
from .forms import QuadraticStructure, invariance_defect
from .io import (algebra_from_obj, algebra_to_obj, chain_from_obj,
                 chain_to_obj, coeffs_from_obj, coeffs_to_obj, dumps,
                 family_from_obj, family_to_obj, general_cocycle_from_obj,
                 general_cocycle_to_obj, load_json, quadratic_to_obj)
from .latex import latex_table
from .linalg import Mat, kernel, rank, scalar, scalar_str
from .quadfam import f_matrix, validate_family
from .randgen import random_coeffs
from .trivector import (Trivector, algebra_from_trivector, delta,
                        trivector_rank)
from .tstar import (CocycleCoeffs, decompose_as_tstar, find_lagrangian_ideal,
                    tstar_extend)


def _fmt(args) -> str:
    return os.environ.get("QUADLIE_FORMAT") or args.format


def _fail(message: str, law: str = "", witness=None) -> int:
    obj = {"error": message}
    if law:
        obj["law"] = law
    if witness is not None:
        obj["witness"] = list(witness) if isinstance(witness, tuple) \
            else witness
    print(json.dumps(obj), file=sys.stderr)
    return 1


def _load_coeffs(text: str, n: int | None, cls) -> AltCoeffs:
    """File path -> JSON terms; anything else -> inline '123+145' form."""
    if os.path.exists(text):
        return coeffs_from_obj(load_json(text), cls=cls)
    return parse_coeffs(text, n=n, cls=cls)


def _label(k: int, split: int | None) -> str:
    if split is not None and k > split:
        return f"e{k - split}*"
    return f"e{k}"


def _text_value(v, split) -> str:
    parts = []
    for k, c in enumerate(v, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{scalar_str(abs(c))}*"
        text = mag + _label(k, split)
        parts.append(("-" if c < 0 else "") + text if not parts
                     else (" - " if c < 0 else " + ") + text)
    return "".join(parts) if parts else "0"


def _text_table(alg: LieAlgebra, split: int | None = None) -> str:
    lines = [f"[{_label(i, split)},{_label(j, split)}] = "
             f"{_text_value(v, split)}"
             for (i, j), v in sorted(alg.brackets.items())]
    return "\n".join(lines) if lines else "(abelian)"


def _verify_report(alg: LieAlgebra, form: Mat | None) -> dict:
    rep: dict = {"dim": alg.dim}
    jd = alg.jacobi_defect()
    rep["lie"] = not jd
    if jd:
        rep["jacobi_defect"] = [list(t[:3]) for t in jd[:5]]
    ok = rep["lie"]
    if form is not None:
        defects = invariance_defect(alg, form)
        rep["invariant"] = not defects
        if defects:
            rep["invariance_defect"] = [list(t) for t in defects[:5]]
        rep["nondegenerate"] = rank(form) == alg.dim
        ok = ok and rep["invariant"] and rep["nondegenerate"]
    if rep["lie"]:
        rep["nilindex"] = alg.nilindex()
        r, s = alg.algebra_type()
        rep["type"] = [r, s]
        rep["reduced"] = alg.is_reduced()
        if form is not None and rep["nondegenerate"]:
            perp = kernel(Mat.from_rows(alg.derived().vectors(),
                                        cols=alg.dim) * form)
            rep["derived_perp_equals_centre"] = perp == alg.centre()
    rep["pass"] = ok
    return rep


def _print_verify_summary(rep: dict):
    def yn(v):
        return "yes" if v else "no"
    print(f"dim: {rep['dim']}")
    print(f"lie: {yn(rep['lie'])}")
    if "jacobi_defect" in rep:
        print(f"  jacobi defect at: {rep['jacobi_defect']}")
    if "invariant" in rep:
        print(f"invariant: {yn(rep['invariant'])}")
        if "invariance_defect" in rep:
            print(f"  invariance defect at: {rep['invariance_defect']}")
        print(f"nondegenerate: {yn(rep['nondegenerate'])}")
    if "nilindex" in rep:
        print(f"nilindex: {rep['nilindex']}")
        print(f"type: ({rep['type'][0]}, {rep['type'][1]})")
        print(f"reduced: {yn(rep['reduced'])}")
    if "derived_perp_equals_centre" in rep:
        print("derived-perp equals centre: "
              f"{yn(rep['derived_perp_equals_centre'])}")
    print(f"result: {'PASS' if rep['pass'] else 'FAIL'}")


def cmd_verify(args) -> int:
    alg, form = algebra_from_obj(load_json(args.file))
    rep = _verify_report(alg, form)
    fmt = _fmt(args)
    if fmt == "json":
        print(dumps(rep), end="")
    elif fmt == "latex":
        print(latex_table(alg), end="")
        print(f"% result: {'PASS' if rep['pass'] else 'FAIL'}")
    else:
        _print_verify_summary(rep)
    return 0 if rep["pass"] else 1


def cmd_catalog(args) -> int:
    fmt = _fmt(args)
    if args.lam is not None:
        t = lambda_trivector(scalar(args.lam))
        q = algebra_from_trivector(t)
        if fmt == "json":
            print(dumps({"lambda": args.lam, "n": t.n, "dim": q.dim,
                         "trivector": coeffs_to_obj(t),
                         "algebra": quadratic_to_obj(q)}), end="")
        elif fmt == "latex":
            print(latex_table(q.alg, split=t.n), end="")
        else:
            print(f"parametric entry  lambda={args.lam}  n={t.n}  "
                  f"dim={q.dim}")
            print(f"trivector: {format_coeffs(t)}")
            print(_text_table(q.alg, split=t.n))
        return 0
    if args.counts:
        counts = catalog_counts()
        if fmt == "json":
            print(dumps({"counts": {str(k): v for k, v in
                                    sorted(counts.items())},
                         "total": sum(counts.values())}), end="")
        else:
            row = "  ".join(f"{k}:{v}" for k, v in sorted(counts.items()))
            print(f"{row}  total:{sum(counts.values())}")
        return 0
    if args.all:
        bad = []
        for entry in CATALOG:
            problems = verify_catalog_entry(entry)
            bad.extend(problems)
            status = "PASS" if not problems else "FAIL"
            print(f"{status} {entry.label} dim={entry.expected_dim} "
                  f"trivector={format_coeffs(entry.trivector)}")
        if bad:
            return _fail(f"{len(bad)} catalog failures: {bad[:3]}")
        return 0
    if not args.label:
        return _fail("need a label, --counts, or --all")
    entry = catalog(args.label)
    q = algebra_from_trivector(entry.trivector)
    if fmt == "json":
        print(dumps({"label": entry.label, "n": entry.n,
                     "dim": entry.expected_dim,
                     "trivector": coeffs_to_obj(entry.trivector),
                     "algebra": quadratic_to_obj(q)}), end="")
    elif fmt == "latex":
        print(latex_table(q.alg, split=entry.n), end="")
    else:
        print(f"{entry.label}  n={entry.n}  dim={entry.expected_dim}")
        print(f"trivector: {format_coeffs(entry.trivector)}")
        print(_text_table(q.alg, split=entry.n))
    return 0


_KINDS = ("cocycle", "trivector", "family", "chain")


def _read_as_coeffs(kind: str, text: str, n: int | None) -> CocycleCoeffs:
    if kind in ("cocycle", "trivector"):
        c = _load_coeffs(text, n, CocycleCoeffs)
        return CocycleCoeffs(c.n, c.terms)
    if not os.path.exists(text):
        raise QuadlieError(f"{kind} input must be a JSON file")
    if kind == "family":
        return family_to_coeffs(family_from_obj(load_json(text)))
    return chain_to_coeffs(chain_from_obj(load_json(text)))


def cmd_convert(args) -> int:
    c = _read_as_coeffs(args.src, args.input, args.n)
    fmt = _fmt(args)
    to = args.dst
    if to in ("cocycle", "trivector"):
        if fmt == "summary":
            print(format_coeffs(c))
        else:
            print(dumps(coeffs_to_obj(c)), end="")
    elif to == "family":
        fam = coeffs_to_family(c)
        if fmt == "summary":
            print(f"family of {fam.n} matrices, rank {rank(f_matrix(fam))}")
        else:
            print(dumps(family_to_obj(fam)), end="")
    elif to == "chain":
        ch = coeffs_to_chain(c)
        if fmt == "summary":
            print(f"chain with {ch.n} links, nnp={ch.nnp}, 2sp={ch.two_sp}")
        else:
            print(dumps(chain_to_obj(ch)), end="")
    else:  # algebra
        rep = all_roads(c)
        if not rep.equal:
            return _fail(f"route mismatch: {rep.mismatches}")
        q = rep.algebra
        if fmt == "latex":
            print(latex_table(q.alg, split=c.n), end="")
        elif fmt == "summary":
            print(f"dim {q.dim} algebra, all three routes agree")
            print(_text_table(q.alg, split=c.n))
        else:
            print(dumps(quadratic_to_obj(q)), end="")
    return 0


def cmd_extend(args) -> int:
    ch = chain_from_obj(load_json(args.chain))
    problems = validate_chain(ch)
    if problems:
        return _fail("; ".join(problems), law="chain")
    q = chain_to_algebra(ch)
    fmt = _fmt(args)
    if fmt == "json":
        print(dumps(quadratic_to_obj(q)), end="")
    elif fmt == "latex":
        print(latex_table(q.alg, split=ch.n), end="")
    else:
        print(f"chain of {ch.n} links -> dim {q.dim} algebra, "
              f"nilindex {q.alg.nilindex()}")
        print(_text_table(q.alg, split=ch.n))
    return 0


def cmd_tstar(args) -> int:
    if os.path.exists(args.input):
        obj = load_json(args.input)
        if isinstance(obj, dict) and "pairs" in obj:
            w = general_cocycle_from_obj(obj)
            split = w.base.dim
        else:
            w = coeffs_from_obj(obj, cls=CocycleCoeffs)
            split = w.n
    else:
        w = parse_coeffs(args.input, n=args.n, cls=CocycleCoeffs)
        split = w.n
    q = tstar_extend(w)
    fmt = _fmt(args)
    if fmt == "json":
        print(dumps(quadratic_to_obj(q)), end="")
    elif fmt == "latex":
        print(latex_table(q.alg, split=split), end="")
    else:
        print(f"dual extension: dim {q.dim}, nilindex {q.alg.nilindex()}")
        print(_text_table(q.alg, split=split))
    return 0


def cmd_family(args) -> int:
    fam = family_from_obj(load_json(args.file))
    ok, problems = validate_family(fam)
    fmt = _fmt(args)
    fr = rank(f_matrix(fam))
    if fmt == "json":
        print(dumps({"n": fam.n, "valid": ok, "problems": problems,
                     "stacked_rank": fr,
                     "nondegenerate": ok and fr == fam.n}), end="")
    else:
        print(f"n: {fam.n}")
        print(f"valid: {'yes' if ok else 'no'}")
        for p in problems:
            print(f"  {p}")
        print(f"stacked rank: {fr}")
        print(f"nondegenerate: {'yes' if ok and fr == fam.n else 'no'}")
    return 0 if ok else 1


def cmd_rank(args) -> int:
    t = _load_coeffs(args.input, args.n, Trivector)
    t = Trivector(t.n, t.terms)
    r = trivector_rank(t)
    if _fmt(args) == "json":
        print(dumps({"n": t.n, "rank": r}), end="")
    else:
        print(f"rank: {r}")
    return 0


def cmd_random(args) -> int:
    density = scalar(args.density)
    c = random_coeffs(args.n, seed=args.seed, density=density)
    q = tstar_extend(c)
    summary = {
        "n": args.n, "seed": args.seed,
        "density": scalar_str(density),
        "coefficients": len(c.terms),
        "nilindex": q.alg.nilindex(),
        "reduced": q.alg.is_reduced(),
        "trivector_rank": trivector_rank(delta(c)),
    }
    if args.out:
        cpath = f"{args.out}.cocycle.json"
        apath = f"{args.out}.algebra.json"
        with open(cpath, "w", encoding="utf-8") as fh:
            fh.write(dumps(coeffs_to_obj(c)))
        with open(apath, "w", encoding="utf-8") as fh:
            fh.write(dumps(quadratic_to_obj(q)))
        print(f"wrote {cpath} and {apath}")
        print(dumps(summary), end="")
    else:
        print(dumps({"cocycle": coeffs_to_obj(c),
                     "algebra": quadratic_to_obj(q),
                     "summary": summary}), end="")
    return 0


def cmd_decompose(args) -> int:
    alg, form = algebra_from_obj(load_json(args.file))
    if form is None:
        return _fail("decompose needs an algebra file with a form")
    q = QuadraticStructure(alg, form)
    ideal = find_lagrangian_ideal(q)
    if ideal is None:
        return _fail("no abelian lagrangian ideal found", law="lagrangian")
    base, w, iso = decompose_as_tstar(q, ideal)
    fmt = _fmt(args)
    if fmt == "json":
        print(dumps({"base": algebra_to_obj(base),
                     "cocycle": general_cocycle_to_obj(w),
                     "isometry": [[scalar_str(e) for e in row]
                                  for row in iso.data]}), end="")
    else:
        print(f"base dim: {base.dim} "
              f"({'abelian' if not base.brackets else 'non-abelian'})")
        print(f"cocycle pairs: {len(w.values)}")
        print("isometry verified: yes")
    return 0


def cmd_selftest(args) -> int:
    results = run_all()
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            failed += 1
    if failed:
        return _fail(f"{failed} of {len(results)} checks failed")
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quadlie",
        description="Exact construction and verification of quadratic "
                    "2-step nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("json", "latex", "summary"),
                        default="summary",
                        help="output format (env QUADLIE_FORMAT overrides)")

    sp = sub.add_parser("verify", help="check a JSON algebra file")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("catalog", help="catalog entries and counts")
    sp.add_argument("label", nargs="?")
    sp.add_argument("--counts", action="store_true")
    sp.add_argument("--all", action="store_true",
                    help="verify every entry")
    sp.add_argument("--lam", default=None,
                    help="emit the parametric 18-dim entry with this "
                         "nonzero rational parameter")
    add_format(sp)
    sp.set_defaults(fn=cmd_catalog)

    sp = sub.add_parser("convert", help="convert between presentations")
    sp.add_argument("--from", dest="src", choices=_KINDS, required=True)
    sp.add_argument("--to", dest="dst", choices=_KINDS + ("algebra",),
                    required=True)
    sp.add_argument("input", help="file path, or inline coefficients "
                                  "like 123+145")
    sp.add_argument("--n", type=int, default=None,
                    help="ambient dimension for inline input")
    add_format(sp)
    sp.set_defaults(fn=cmd_convert)

    sp = sub.add_parser("extend", help="build the algebra of a chain file")
    sp.add_argument("--chain", required=True)
    add_format(sp)
    sp.set_defaults(fn=cmd_extend)

    sp = sub.add_parser("tstar", help="dual extension of a cocycle")
    sp.add_argument("input", help="file path or inline coefficients")
    sp.add_argument("--n", type=int, default=None)
    add_format(sp)
    sp.set_defaults(fn=cmd_tstar)

    sp = sub.add_parser("family", help="validate a matrix family file")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(fn=cmd_family)

    sp = sub.add_parser("rank", help="rank of a trivector")
    sp.add_argument("input", help="file path or inline coefficients")
    sp.add_argument("--n", type=int, default=None)
    add_format(sp)
    sp.set_defaults(fn=cmd_rank)

    sp = sub.add_parser("random", help="seeded random cocycle and algebra")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--density", default="1/2",
                    help="fill probability as a fraction, default 1/2")
    sp.add_argument("--out", default=None,
                    help="path prefix for output files")
    sp.set_defaults(fn=cmd_random)

    sp = sub.add_parser("decompose",
                        help="split a quadratic algebra as a dual extension")
    sp.add_argument("file")
    add_format(sp)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("selftest", help="run the acceptance checks")
    sp.set_defaults(fn=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as e:
        return _fail(str(e), law=e.law, witness=e.witness)
    except QuadlieError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())

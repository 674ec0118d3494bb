"""Batch command line front end.

Subcommands:

    verify-hopf    axioms of a Hopf algebra (built-in or JSON file)
    verify-dga     DGA axioms of one of the three calculi
    check-module   compatibility conditions of a module-comodule
    homology       homology tables, optionally against the cobar oracle
    tensor         tensor product of a YD-flat and an AYD-flat connection

Exit codes: 0 all checks pass, 1 a mathematical check failed (witness in
the report), 2 malformed input or usage error.  Reports are JSON on
stdout and deterministic for identical inputs; wall time is carried in a
separate "timing_ms" field that is not part of the canonical body.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Dict, List, Optional, Tuple

from .calculus import Calculus, specialization_check, verify_dga
from .fields import Field
from .hopf import (BialgebraMorphism, HopfAlgebra, build_dual_group_algebra,
                   build_group_algebra, build_sweedler, build_taft, check_group_table,
                   cyclic_table, symmetric_table, verify_axioms)
from .linalg import Matrix, Vec
from .modules import (BimoduleCoalgebra, ModComod, check_ayd, check_equivariant,
                      check_stable, check_yd, coadjoint_comodule, coassociativity_defects,
                      check_module_axioms, regular_modcomod, trivial_modcomod,
                      one_dim_modcomod)
from .reports import Report
from .homology import cobar_complex, compare_cotor, homology_dims


class CliError(Exception):
    """Usage or input error; surfaces as exit code 2."""


def _default_max_degree() -> int:
    env = os.environ.get("HOPFCALC_MAX_DEGREE")
    if env is None:
        return 3
    try:
        v = int(env)
    except ValueError:
        raise CliError(f"HOPFCALC_MAX_DEGREE={env!r} is not an integer")
    if v < 1:
        raise CliError("HOPFCALC_MAX_DEGREE must be >= 1")
    return v


def parse_field(s: str) -> Field:
    if s == "Q":
        return Field(0)
    if s.startswith("F"):
        try:
            return Field(int(s[1:]))
        except ValueError as e:
            raise CliError(f"bad field descriptor {s!r}: {e}")
    raise CliError(f"bad field descriptor {s!r} (expected Q or F<p>)")


def _load_cayley(path: str) -> Tuple[List[List[int]], Optional[List[str]]]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise CliError(f"{path} is not valid JSON: {e}")
    table = doc.get("table") if isinstance(doc, dict) else doc
    if not isinstance(table, list):
        raise CliError(f"{path}: expected a Cayley table")
    names = doc.get("names") if isinstance(doc, dict) else None
    return table, names


def builtin_hopf(name: str, field: Field) -> HopfAlgebra:
    kind, _, rest = name.partition(":")
    try:
        if kind in ("group", "dualgroup"):
            if rest.startswith("Z"):
                table, names = cyclic_table(int(rest[1:])), None
            elif rest == "S3":
                table, names = symmetric_table(3)
            elif rest:
                table, names = _load_cayley(rest)
            else:
                raise CliError(f"builtin {name!r} needs a group (Z<n>, S3 or a file)")
            build = build_group_algebra if kind == "group" else build_dual_group_algebra
            return build(table, field, names=names)
        if kind == "sweedler":
            return build_sweedler(field)
        if kind == "taft":
            parts = rest.split(":")
            if len(parts) != 2:
                raise CliError("taft builtin is taft:<n>:<q>")
            return build_taft(int(parts[0]), field.of(parts[1]), field)
    except CliError:
        raise
    except (ValueError, IndexError) as e:
        raise CliError(f"cannot build builtin {name!r}: {e}")
    raise CliError(f"unknown builtin {name!r}")


def _scalar(field: Field, v) -> object:
    try:
        return field.of(v)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise CliError(f"bad scalar literal {v!r}: {e}")


def load_hopf_file(path: str) -> HopfAlgebra:
    """Parse a Hopf algebra from sparse structure constants.

    Schema: {"field": "Q"|"F<p>", "dim": n, "basis": [...],
             "mul":      [[i, j, k, c], ...]   e_i e_j has coefficient c on e_k
             "unit":     [[i, c], ...],
             "comul":    [[i, j, k, c], ...]   Delta(e_i) has c on e_j (x) e_k
             "counit":   [[i, c], ...],
             "antipode": [[i, j, c], ...]}     S(e_i) has c on e_j
    Rationals are "p/q" strings; prime-field scalars plain integers.
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise CliError(f"{path} is not valid JSON: {e}")
    if not isinstance(doc, dict):
        raise CliError(f"{path}: top level must be an object")
    try:
        f = parse_field(doc["field"])
        dim = int(doc["dim"])
        names = doc.get("basis") or [f"e{i}" for i in range(dim)]
        mul: Dict[Tuple[int, int], Vec] = {}
        for i, j, k, c in doc["mul"]:
            mul.setdefault((i, j), {})[k] = _scalar(f, c)
        unit: Vec = {i: _scalar(f, c) for i, c in doc["unit"]}
        comul: List[Vec] = [dict() for _ in range(dim)]
        for i, j, k, c in doc["comul"]:
            comul[i][j * dim + k] = _scalar(f, c)
        counit = {i: _scalar(f, c) for i, c in doc["counit"]}
        s = Matrix(dim, dim, f)
        for i, j, c in doc["antipode"]:
            s.data[(j, i)] = _scalar(f, c)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise CliError(f"{path}: malformed Hopf spec ({e!r})")
    return HopfAlgebra(f, dim, list(names), mul, unit, comul, counit, s)


def resolve_hopf(args) -> HopfAlgebra:
    field = parse_field(getattr(args, "field", "Q") or "Q")
    if getattr(args, "builtin", None):
        return builtin_hopf(args.builtin, field)
    if getattr(args, "hopf", None):
        return load_hopf_file(args.hopf)
    raise CliError("need --builtin or --hopf")


def resolve_module(args, H: HopfAlgebra, name_attr: str = "module") -> ModComod:
    name = getattr(args, name_attr, None)
    if not name:
        raise CliError(f"need --{name_attr.replace('_', '-')}")
    if name == "trivial":
        return trivial_modcomod(H)
    if name == "regular":
        return regular_modcomod(H)
    if name == "coadjoint":
        X = coadjoint_comodule(H)
        X.action = {k: dict(v) for k, v in H.mul.items()}
        return X
    return load_module_file(name, H)


def load_module_file(path: str, H: HopfAlgebra) -> ModComod:
    """Sparse module-comodule file; either explicit tensors or the
    one-dimensional (delta, sigma) shorthand.

    Schema: {"dim": n,
             "action":   [[i, a, b, c], ...]   e_i . x_a has c on x_b
             "coaction": [[a, i, b, c], ...]   rho(x_a) has c on e_i (x) x_b
             "delta": [[i, c], ...], "sigma": [[i, c], ...]}
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise CliError(f"{path} is not valid JSON: {e}")
    f = H.field
    try:
        if "delta" in doc or "sigma" in doc:
            delta = {i: _scalar(f, c) for i, c in doc["delta"]}
            sigma = {i: _scalar(f, c) for i, c in doc["sigma"]}
            return one_dim_modcomod(H, delta, sigma, check=False)
        dim = int(doc["dim"])
        action = None
        if "action" in doc:
            action = {(i, a): {} for i in range(H.dim) for a in range(dim)}
            for i, a, b, c in doc["action"]:
                action[(i, a)][b] = _scalar(f, c)
        coaction = None
        if "coaction" in doc:
            coaction = [dict() for _ in range(dim)]
            for a, i, b, c in doc["coaction"]:
                coaction[a][i * dim + b] = _scalar(f, c)
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise CliError(f"{path}: malformed module spec ({e!r})")
    return ModComod(H, dim, action, coaction, label=os.path.basename(path))


def _morphism(H: HopfAlgebra, name: str) -> BialgebraMorphism:
    if name == "id":
        return BialgebraMorphism.identity(H)
    if name in ("s", "antipode"):
        return BialgebraMorphism.antipode(H)
    if name in ("sinv", "antipode-inverse"):
        if H.antipode_inverse() is None:
            raise CliError("antipode is not invertible")
        return BialgebraMorphism.antipode_inverse(H)
    raise CliError(f"unknown morphism {name!r} (expected id, s or sinv)")


def build_cli_calculus(args, H: HopfAlgebra, max_degree: int) -> Calculus:
    kind = args.calculus
    try:
        if kind == "k":
            return Calculus.k(H, max_degree)
        if kind == "khat":
            return Calculus.khat(H, max_degree)
        if kind == "general":
            if getattr(args, "coalgebra", "regular") != "regular":
                raise CliError("only the regular bimodule coalgebra is supported here")
            C = BimoduleCoalgebra.from_hopf(H)
            alpha = _morphism(H, getattr(args, "alpha", "id") or "id")
            beta = _morphism(H, getattr(args, "beta", "s") or "s")
            return Calculus.general(C, alpha, beta, max_degree)
    except CliError:
        raise
    except ValueError as e:
        raise CliError(str(e))
    raise CliError(f"unknown calculus {kind!r}")


def _emit(command: List[str], body: dict, ok: bool, started: float) -> int:
    body = {"command": command, "status": "pass" if ok else "fail", **body}
    canonical = json.dumps(body, indent=2, sort_keys=True, default=str)
    doc = json.loads(canonical)
    doc["timing_ms"] = int((time.time() - started) * 1000)
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify_hopf(args, started: float) -> int:
    H = resolve_hopf(args)
    rep = verify_axioms(H)
    return _emit(["verify-hopf"], {"checks": rep.to_json()}, rep.passed, started)


def cmd_verify_dga(args, started: float) -> int:
    H = resolve_hopf(args)
    hrep = verify_axioms(H)
    if not hrep.passed:
        raise CliError(f"input fails Hopf axiom {hrep.failures()[0].name}")
    max_degree = args.max_degree or _default_max_degree()
    calc = build_cli_calculus(args, H, max_degree)
    rep = verify_dga(calc, max_degree)
    return _emit(["verify-dga", args.calculus], {"checks": rep.to_json()},
                 rep.passed, started)


def cmd_check_module(args, started: float) -> int:
    from .connections import check_connection, connection_from_coaction, is_flat

    H = resolve_hopf(args)
    hrep = verify_axioms(H)
    if not hrep.passed:
        raise CliError(f"input fails Hopf axiom {hrep.failures()[0].name}")
    X = resolve_module(args, H)
    cond = args.condition
    checks = Report()
    if cond == "ayd":
        d = check_ayd(X)
        checks.add("ayd", d.passed, d.witness())
    elif cond == "yd":
        d = check_yd(X)
        checks.add("yd", d.passed, d.witness())
    elif cond == "stable":
        checks.add("stable", check_stable(X))
    elif cond == "equivariant":
        C = BimoduleCoalgebra.from_hopf(H)
        alpha = _morphism(H, args.alpha or "id")
        beta = _morphism(H, args.beta or "s")
        d = check_equivariant(X, C, alpha, beta)
        checks.add("equivariant", d.passed, d.witness())
    elif cond in ("connection", "flat"):
        max_degree = args.max_degree or _default_max_degree()
        calc = build_cli_calculus(args, H, max_degree)
        conn = connection_from_coaction(calc, X)
        if cond == "connection":
            d = check_connection(conn)
            checks.add("connection", d.passed, d.witness())
        else:
            defects = coassociativity_defects(X)
            flat = is_flat(conn)
            checks.add("flat", flat,
                       None if flat else {"basis": min(defects),
                                          "defect": defects[min(defects)]})
    else:
        raise CliError(f"unknown condition {cond!r}")
    return _emit(["check-module", cond], {"checks": checks.to_json()},
                 checks.passed, started)


def cmd_homology(args, started: float) -> int:
    from .connections import coefficient_complex, connection_from_coaction

    H = resolve_hopf(args)
    hrep = verify_axioms(H)
    if not hrep.passed:
        raise CliError(f"input fails Hopf axiom {hrep.failures()[0].name}")
    max_degree = args.max_degree or _default_max_degree()
    calc = build_cli_calculus(args, H, max_degree)
    X = resolve_module(args, H) if args.module else None
    body: dict = {}
    ok = True
    if args.compare_cotor:
        rep = compare_cotor(calc, X, max_degree)
        body["checks"] = rep.to_json()
        ok = rep.passed
    if X is None:
        from .homology import ChainComplex
        cx = ChainComplex(calc.field,
                          [calc.degree_dim(n) for n in range(max_degree + 1)],
                          [calc.differential(n) for n in range(max_degree)])
    else:
        conn = connection_from_coaction(calc, X)
        cx = coefficient_complex(calc, conn, max_degree)
    table = homology_dims(cx, max_degree)
    body["homology"] = {f"H_{n}": d for n, d in table.entries}
    return _emit(["homology"], body, ok, started)


def cmd_tensor(args, started: float) -> int:
    from .connections import (check_connection, connection_from_coaction, is_flat,
                              tensor_connection)

    H = resolve_hopf(args)
    hrep = verify_axioms(H)
    if not hrep.passed:
        raise CliError(f"input fails Hopf axiom {hrep.failures()[0].name}")
    max_degree = args.max_degree or _default_max_degree()
    try:
        ck = Calculus.k(H, max_degree)
    except ValueError as e:
        raise CliError(str(e))
    ckhat = Calculus.khat(H, max_degree)
    Xyd = resolve_module(args, H, "yd_module")
    Xayd = resolve_module(args, H, "ayd_module")
    try:
        conn = tensor_connection(connection_from_coaction(ckhat, Xyd),
                                 connection_from_coaction(ck, Xayd))
    except ValueError as e:
        raise CliError(str(e))
    rep = Report()
    d = check_connection(conn)
    rep.add("tensor_connection", d.passed, d.witness())
    rep.add("tensor_flat", is_flat(conn))
    d = check_ayd(conn.X)
    rep.add("tensor_ayd", d.passed, d.witness())
    body: dict = {"checks": rep.to_json(), "result_dim": conn.X.dim}
    if conn.X.dim == 1:
        f = H.field
        body["character"] = {H.basis[i]: f.to_str(v.get(0, f.zero()))
                             for (i, _), v in sorted(conn.X.action.items()) if v}
        body["grouplike"] = {H.basis[i]: f.to_str(c)
                             for i, c in sorted(conn.X.coaction[0].items())}
    return _emit(["tensor"], body, rep.passed, started)


# ---------------------------------------------------------------------------


def _add_hopf_args(p):
    p.add_argument("--builtin", help="group:Z<n>|group:S3|group:<file>, dualgroup:..., "
                                     "sweedler, taft:<n>:<q>")
    p.add_argument("--hopf", help="path to a Hopf spec JSON file")
    p.add_argument("--field", default="Q", help="Q or F<p> (built-ins only)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfcalc",
                                 description="exact checks for differential calculi "
                                             "over finite-dimensional Hopf algebras")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-hopf", help="verify the Hopf algebra axioms")
    _add_hopf_args(p)
    p.set_defaults(fn=cmd_verify_hopf)

    p = sub.add_parser("verify-dga", help="verify d^2, Leibniz and associativity")
    _add_hopf_args(p)
    p.add_argument("--calculus", default="k", choices=["k", "khat", "general"])
    p.add_argument("--max-degree", type=int)
    p.add_argument("--coalgebra", default="regular")
    p.add_argument("--alpha", default="id")
    p.add_argument("--beta", default="s")
    p.set_defaults(fn=cmd_verify_dga)

    p = sub.add_parser("check-module", help="compatibility conditions of a module")
    _add_hopf_args(p)
    p.add_argument("--module", required=True,
                   help="trivial|regular|coadjoint or a module spec file")
    p.add_argument("--condition", required=True,
                   choices=["ayd", "yd", "stable", "equivariant", "connection", "flat"])
    p.add_argument("--calculus", default="k", choices=["k", "khat", "general"])
    p.add_argument("--max-degree", type=int)
    p.add_argument("--coalgebra", default="regular")
    p.add_argument("--alpha", default="id")
    p.add_argument("--beta", default="s")
    p.set_defaults(fn=cmd_check_module)

    p = sub.add_parser("homology", help="homology dimensions, optionally vs the cobar oracle")
    _add_hopf_args(p)
    p.add_argument("--module", help="trivial|regular|coadjoint or a module spec file")
    p.add_argument("--calculus", default="k", choices=["k", "khat", "general"])
    p.add_argument("--max-degree", type=int)
    p.add_argument("--compare-cotor", action="store_true")
    p.add_argument("--coalgebra", default="regular")
    p.add_argument("--alpha", default="id")
    p.add_argument("--beta", default="s")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("tensor", help="tensor a YD-flat with an AYD-flat connection")
    _add_hopf_args(p)
    p.add_argument("--yd-module", required=True)
    p.add_argument("--ayd-module", required=True)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(fn=cmd_tensor)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    started = time.time()
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args, started)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:          # malformed input must never crash the tool
        print(f"error: unexpected failure: {e!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""``workbench``: command-line front end.

Examples::

    workbench datum validate --datum GL3
    workbench check theorem-star --datum A2 --lmax 4 --q 3
    workbench emit tstar --datum A1sc --lmax 3 --out tstar.json
    workbench cwx --datum A1sc --w '{"nu": [-1]}' --x '{"nu": [0]}'
    workbench satake T --datum GL2 --psi 0,0 --J 0 --Jp '' --z 1,0
    workbench satake invert --datum GL2 --psi 0,0 --J '' --Jp 0 --in h.json
    workbench cow --datum GL2 --psi 0,0 --J 0 --alpha 0 --z 1,0
    workbench levi-satake --datum A2 --psi 0,0 --J 0,1 --Jp 0 --JM 0 --z 1,1

Coweights on the command line (``--z``) and the JSON field ``"lambda"`` use
v-coordinates.  Exit status: 0 on success, 1 when a check fails, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .rootdata import BasedRootDatum, load_datum, nu_to_v
from .satake import NotInImage, SatakeModel
from .suites import (DEFAULT_GRID, SCHEMA_VERSION, SUITES, TABLE_KINDS, Bounds, SuiteReport,
                     emit_table, run_suite)

CACHE_ENV = "WORKBENCH_CACHE_DIR"


class UsageError(Exception):
    pass


# -- parsing helpers -----------------------------------------------------------

def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _datum(args) -> BasedRootDatum:
    try:
        return load_datum(args.datum, args.q)
    except (KeyError, ValueError, OSError) as exc:
        raise UsageError(f"bad datum {args.datum!r}: {exc}") from None


def _json_arg(text: str) -> dict:
    path = Path(text)
    try:
        raw = path.read_text() if path.suffix == ".json" else text
        return json.loads(raw)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2, sort_keys=True) + "\n" \
        if args.format == "json" else text.rstrip("\n") + "\n"
    if args.out:
        try:
            Path(args.out).write_text(out)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(out)


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _tau_text(h) -> str:
    terms = h.to_json()["tau"]
    if not terms:
        return "0"
    return " + ".join(f"{t['coeff']}*tau{tuple(t['lambda'])}" for t in terms)


# -- commands -----------------------------------------------------------------------

def cmd_datum(args) -> int:
    d = _datum(args)
    info = {"datum": d.to_json(), "q": d.q, "cartan": [list(r) for r in d.cartan],
            "positive_roots": len(d.positive_roots), "weyl_order": len(d.weyl), "valid": True}
    text = _table([["name", d.name], ["rank", str(d.rank)], ["q", str(d.q)],
                   ["cartan", str([list(r) for r in d.cartan])],
                   ["positive roots", str(len(d.positive_roots))], ["|W_0|", str(len(d.weyl))],
                   ["valid", "yes"]])
    _emit(args, info, text)
    return 0


def cmd_check(args) -> int:
    bounds = Bounds(lmax=args.lmax, seed=args.seed, samples=args.samples, box=args.box)
    if args.datum is None:
        grid = [(n, args.q if args.q is not None else q) for n, q in DEFAULT_GRID[args.suite]]
        grid = list(dict.fromkeys(grid))
        data = [load_datum(n, q) for n, q in grid]
    else:
        data = [_datum(args)]
    reports: list[SuiteReport] = []
    for d in data:
        try:
            reports.append(run_suite(args.suite, d, bounds))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    ok = all(r.ok for r in reports)
    payload = {"suite": args.suite, "seed": args.seed, "ok": ok,
               "reports": [r.to_json(timing=not args.no_timing) for r in reports]}
    lines = [f"# suite={args.suite} seed={args.seed}"]
    for r in reports:
        lines.append(r.summary())
        for w in r.failures:
            lines.append("  witness " + json.dumps(w, sort_keys=True))
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _cache_path(kind: str, d: BasedRootDatum, lmax: int) -> Path | None:
    base = os.environ.get(CACHE_ENV)
    if not base:
        return None
    key = json.dumps({"v": SCHEMA_VERSION, "kind": kind, "datum": d.to_json(), "lmax": lmax}, sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return Path(base) / f"{kind}-{d.name}-q{d.q}-l{lmax}-{digest}.json"


def cmd_emit(args) -> int:
    d = _datum(args)
    lmax = 3 if args.lmax is None else args.lmax
    cache = _cache_path(args.kind, d, lmax)
    rows = None
    if cache is not None and cache.exists():
        rows = json.loads(cache.read_text())
    if rows is None:
        rows = emit_table(args.kind, d, lmax)
        if cache is not None:
            try:
                cache.parent.mkdir(parents=True, exist_ok=True)
                cache.write_text(json.dumps(rows))  # keep column order
            except OSError as exc:
                raise UsageError(f"cannot write cache {cache}: {exc}") from None
    payload = {"kind": args.kind, "datum": d.name, "q": d.q, "lmax": lmax, "rows": rows}
    text = _table([[json.dumps(v, sort_keys=True, separators=(",", ":")) for v in r.values()] for r in rows])
    _emit(args, payload, f"# {args.kind} datum={d.name} q={d.q} lmax={lmax}\n{text}")
    return 0


def cmd_cwx(args) -> int:
    from .hecke import hecke_algebra
    from .star import StarCalculus

    d = _datum(args)
    H = hecke_algebra(d)
    G = H.G
    try:
        w, x = G.from_json(_json_arg(args.w)), G.from_json(_json_arg(args.x))
        c = StarCalculus(H).c_wx(w, x)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    terms = [{"t": list(t), "coeff": n} for t, n in sorted(c.items())]
    text = _table([["t", "coeff"]] + [[str(tuple(r["t"])), str(r["coeff"])] for r in terms])
    _emit(args, {"w": G.to_json(w), "x": G.to_json(x), "c": terms}, text)
    return 0


def _weights(args, M: SatakeModel):
    try:
        psi = _ints(args.psi) if args.psi else tuple(0 for _ in range(M.datum.rank))
        V = M.weight(psi, _ints(args.J))
        Vp = M.weight(psi, _ints(args.Jp)) if getattr(args, "Jp", None) is not None else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return V, Vp


def cmd_satake(args) -> int:
    d = _datum(args)
    M = SatakeModel(d)
    V, Vp = _weights(args, M)
    if Vp is None:
        Vp = V
    try:
        if args.action == "invert":
            if not args.inp:
                raise UsageError("satake invert needs --in")
            h = M.spherical_from_json(_json_arg(args.inp))
            b = M.inverse_satake(h, V, Vp)
            rows = [{"lambda": list(nu_to_v(z)), "coeff": b.terms[z]} for z in b.support()]
            text = _table([["lambda", "coeff"]] + [[str(tuple(r["lambda"])), str(r["coeff"])] for r in rows])
            _emit(args, b.to_json(), text)
            return 0
        if args.z is None:
            raise UsageError("--z is required")
        z = M.z_from_v(_ints(args.z))
        img = M.satake_image_of_phi(z, V, Vp) if args.action == "phi" else M.satake_of_T(z, V, Vp)
    except NotInImage as exc:
        sys.stderr.write(f"not in image: {exc}\n")
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"source": V.to_json(), "target": Vp.to_json(), "action": args.action, **img.to_json()}
    _emit(args, payload, f"S({args.action}_{tuple(_ints(args.z))}) = {_tau_text(img)}")
    return 0


def cmd_cow(args) -> int:
    d = _datum(args)
    M = SatakeModel(d)
    V, _ = _weights(args, M)
    try:
        Vp = M.weight(V.psi, V.J - {args.alpha})
        z = M.z_from_v(_ints(args.z))
        r = M.change_of_weight(z, args.alpha, V, Vp)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"source": V.to_json(), "target": Vp.to_json(), "alpha": args.alpha, "c_alpha": r.c_alpha,
               "phi": r.phi.to_json(), "phi_prime": r.phi_prime.to_json(),
               "image_phi_phiprime": r.image_phi_phiprime.to_json(),
               "image_phiprime_phi": r.image_phiprime_phi.to_json(),
               "expected": r.expected.to_json(), "holds": r.holds}
    text = _table([["c_alpha", str(r.c_alpha)],
                   ["S(phi o phi')", _tau_text(r.image_phi_phiprime)],
                   ["S(phi' o phi)", _tau_text(r.image_phiprime_phi)],
                   ["expected", _tau_text(r.expected)],
                   ["holds", "yes" if r.holds else "NO"]])
    _emit(args, payload, text)
    return 0 if r.holds else 1


def cmd_levi(args) -> int:
    d = _datum(args)
    M = SatakeModel(d)
    V, Vp = _weights(args, M)
    try:
        z = M.z_from_v(_ints(args.z))
        r = M.levi_satake(z, V, Vp, _ints(args.JM))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    levi_T = [{"lambda": list(nu_to_v(x)), "coeff": c} for x, c in sorted(r.levi_T.items(), key=lambda kv: M.sort_key(kv[0]))]
    payload = {"source": V.to_json(), "target": Vp.to_json(), "JM": sorted(_ints(args.JM)),
               "lhs": r.lhs.to_json(), "rhs": r.rhs.to_json(), "levi_T": levi_T,
               "simple_form": r.simple_form, "holds": r.holds}
    text = _table([["G side", _tau_text(r.lhs)], ["Levi side", _tau_text(r.rhs)],
                   ["simple form", "yes" if r.simple_form else "no"], ["holds", "yes" if r.holds else "NO"]])
    _emit(args, payload, text)
    return 0 if r.holds else 1


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--datum", default=None, help="preset name or path to a datum JSON file")
    common.add_argument("--q", type=int, default=None, help="residue field size (prime power)")
    common.add_argument("--lmax", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="text")

    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--psi", default="", help="character exponents, e.g. 0,0")
    weight.add_argument("--J", default="", help="Delta(V) as simple root indices")

    p = argparse.ArgumentParser(prog="workbench", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("datum", parents=[common], help="inspect a root datum")
    sp.add_argument("action", choices=("validate",))
    sp.set_defaults(func=cmd_datum, need_datum=True)

    sp = sub.add_parser("check", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--box", type=int, default=None)
    sp.add_argument("--no-timing", action="store_true", help="omit wall times (byte-stable output)")
    sp.set_defaults(func=cmd_check, need_datum=False)

    sp = sub.add_parser("emit", parents=[common], help="emit an expansion table")
    sp.add_argument("kind", choices=TABLE_KINDS)
    sp.set_defaults(func=cmd_emit, need_datum=True)

    sp = sub.add_parser("cwx", parents=[common], help="the coefficient c_w^x")
    sp.add_argument("--w", required=True, help='JSON {"nu": [...], "t": [...], "w0": [...]}')
    sp.add_argument("--x", required=True)
    sp.set_defaults(func=cmd_cwx, need_datum=True)

    sp = sub.add_parser("satake", parents=[common, weight], help="Satake images and their inverse")
    sp.add_argument("action", choices=("phi", "T", "invert"))
    sp.add_argument("--Jp", default=None, help="Delta(V') (defaults to Delta(V))")
    sp.add_argument("--z", default=None, help="v-coordinates of z")
    sp.add_argument("--in", dest="inp", default=None, help='JSON file or string {"tau": [...]}')
    sp.set_defaults(func=cmd_satake, need_datum=True)

    sp = sub.add_parser("cow", parents=[common, weight], help="change of weight at a simple root")
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--z", required=True)
    sp.set_defaults(func=cmd_cow, need_datum=True)

    sp = sub.add_parser("levi-satake", parents=[common, weight], help="Levi decomposition of S(phi_z)")
    sp.add_argument("--Jp", required=True)
    sp.add_argument("--JM", required=True)
    sp.add_argument("--z", required=True)
    sp.set_defaults(func=cmd_levi, need_datum=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.need_datum and args.datum is None:
        parser.error("--datum is required for this command")
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"workbench: error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

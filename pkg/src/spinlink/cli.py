"""Command-line interface: polynomial evaluation, verification suites, dumps.

Exit codes: 0 when everything passes, 1 when a gating verification fails,
2 on usage errors.  The conjecture probes never gate.  Output ordering is
deterministic (exponent-sorted terms, no timestamps) so reports can be
used as golden files.  SPINLINK_THREADS caps the suite worker pool.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import xcalc
from .qalg import GradedScalar, appendixA_suite
from .spinpoly import BraidParseError, eval_spin, parse_braid


def _scalar_out(value: GradedScalar, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"terms": value.json_terms()})
    return str(value)


def _emit_report(report: list[dict], fmt: str) -> bool:
    ok = all(e["status"] == "pass" for e in report)
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for e in report:
            line = f"{e['status'].upper():4} {e['identity_id']} {e['parameters']}"
            if "witness" in e:
                line += f" witness={e['witness']}"
            print(line)
    return ok


def _pool_run(items, threads: int) -> list[dict]:
    if threads <= 1:
        out = []
        for fn in items:
            out.extend(fn())
        return out
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda f: f(), items))
    return [e for chunk in chunks for e in chunk]


# -- verification suites ---------------------------------------------------------


def _suite_qalg(args):
    return [lambda: appendixA_suite(args.bound)]


def _suite_rep(args):
    return [(lambda n=n: _rep_one(n)) for n in range(1, args.n + 1)]


def _rep_one(n: int) -> list[dict]:
    from . import rep

    items = []

    def entry(name, ok):
        items.append({"identity_id": name, "parameters": {"n": n}, "status": "pass" if ok else "fail"})

    idS = rep.LinOp.identity(("S",), n)
    cup, cap = rep.cup_n(n), rep.cap_n(n)
    entry("snake-identities", (cap.tensor(idS) @ idS.tensor(cup)) == idS
          and (idS.tensor(cap) @ cup.tensor(idS)) == idS)
    entry("circle-value", (cap @ cup).entry((), ()) == rep.RatFunc.from_poly(rep.circle_value(n)))
    entry("cupcap-intertwiners", rep.is_intertwiner(cup, n) and rep.is_intertwiner(cap, n))
    entry("trivalent-intertwiner", rep.is_intertwiner(rep.Y1(n), n))
    entry("h-intertwiner", rep.is_intertwiner(rep.H(n), n))
    ok = True
    for i in range(0, n + 1):
        J = (1 << i) - 1
        K = ((1 << n) - 1) ^ J
        col = rep.lusztig_T_w0(n).cols.get((J,), {})
        ok = ok and col == {(K,): rep.RatFunc.from_poly(rep.qJ(K, n))}
    entry("longest-weyl-on-flags", ok)
    return items


def _suite_clifford(args):
    return [(lambda n=n: _clifford_one(n)) for n in range(1, args.n + 1)]


def _clifford_one(n: int) -> list[dict]:
    from . import clifford, rep

    action_ok = all(
        clifford.qgrp_via_clifford(kind, i, n) == rep.spin_action(kind, i, n)
        for kind in ("e", "f", "k", "k_inv")
        for i in range(1, n + 1)
    )
    c_ok = clifford.wenzl_C(n) == rep.H(n)
    return [
        {"identity_id": "clifford-action-matches", "parameters": {"n": n},
         "status": "pass" if action_ok else "fail"},
        {"identity_id": "wenzl-c-equals-h", "parameters": {"n": n},
         "status": "pass" if c_ok else "fail"},
    ]


def _suite_xcalc(args):
    items = []
    for n in range(1, args.n + 1):
        items.append(lambda n=n: xcalc.change_of_basis_check(n, exact_rank=args.exact_rank))
        items.append(lambda n=n: xcalc.relation_suite(n))
    return items


def _suite_iq(args):
    return [lambda: _iq_all()]


def _iq_all() -> list[dict]:
    from . import iqsym

    return iqsym.gk_ops(3)


def _suite_schur_inner(args) -> list[dict]:
    from . import schur
    from .qalg import RatFunc, qbinom

    report = []
    ok = True
    for N in range(0, min(args.n + 2, 5) + 1):
        for a1 in range(0, N + 1):
            x = schur.SchurElement.idempotent((a1,), N)
            if schur.bilinear_form(x) != GradedScalar(0, RatFunc.from_poly(qbinom(N, a1))):
                ok = False
    report.append(
        {"identity_id": "bilinear-base-case", "parameters": {}, "status": "pass" if ok else "fail"}
    )
    tre = parse_braid("s1 s1 s1")
    su = eval_spin(tre, 1, normalization="unframed")
    d2 = su == schur.spin1_from_jones(tre)
    d3 = schur.eval_slN(tre, (1, 1), 2) == schur.sl2_from_spin1(tre, su)
    report.append(
        {
            "identity_id": "normalization-dictionary-trefoil",
            "parameters": {},
            "status": "pass" if (d2 and d3) else "fail",
        }
    )
    return report


def _suite_schur(args):
    return [lambda: _suite_schur_inner(args)]


def _suite_conjectures(args):
    return [lambda: xcalc.relation_suite(args.n, probe=True)]


_SUITES = {
    "qalg": _suite_qalg,
    "rep": _suite_rep,
    "clifford": _suite_clifford,
    "xcalc": _suite_xcalc,
    "iq": _suite_iq,
    "schur": _suite_schur,
    "conjectures": _suite_conjectures,
}


# -- dump -------------------------------------------------------------------------


def _dump_operator(name: str, n: int):
    from . import clifford, rep

    lname = name.lower()
    if lname in ("h",):
        return rep.H(n)
    if lname == "wenzl-c":
        return clifford.wenzl_C(n)
    if lname.startswith("x"):
        k = int(lname[1:])
        fam = xcalc.build_X(n, check_product_route=False)
        return fam[k]
    if lname == "braiding":
        return xcalc.braiding(n)
    if lname == "inverse-braiding":
        return xcalc.inverse_braiding(n)
    if lname == "cup":
        return rep.cup_n(n)
    if lname == "cap":
        return rep.cap_n(n)
    if lname == "y1":
        return rep.Y1(n)
    if lname[0] in "efk" and lname[1:].isdigit():
        kind = {"e": "e", "f": "f", "k": "k"}[lname[0]]
        return rep.spin_action(kind, int(lname[1:]), n)
    if lname.startswith("t") and lname[1:].isdigit():
        return rep.lusztig_T(int(lname[1:]), n)
    raise ValueError(f"unknown operator {name!r}")


# -- main -------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="spinlink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="evaluate a link polynomial of a braid closure")
    polysub = poly.add_subparsers(dest="flavor", required=True)

    spin = polysub.add_parser("spin", help="spin-colored type B polynomial")
    spin.add_argument("--n", type=int, required=True, help="rank of so(2n+1)")
    spin.add_argument("--strands", type=int, default=None)
    spin.add_argument("--braid", type=str, default="")
    spin.add_argument("--normalize", choices=("raw", "unframed", "intro"), default="raw")
    spin.add_argument("--mirror", action="store_true")
    spin.add_argument("--engine", choices=("matrix", "symbolic"), default="matrix")
    spin.add_argument("--format", choices=("text", "json"), default="text")

    sln = polysub.add_parser("sln", help="colored sl_N polynomial")
    sln.add_argument("--N", type=int, required=True)
    sln.add_argument("--colors", type=str, required=True, help="comma-separated strand colors")
    sln.add_argument("--braid", type=str, default="")
    sln.add_argument("--strands", type=int, default=None)
    sln.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(_SUITES))
    verify.add_argument("--bound", type=int, default=10, help="parameter bound (qalg)")
    verify.add_argument("--n", type=int, default=2, help="max rank (rep/clifford/xcalc/iq) or probe rank")
    verify.add_argument("--exact-rank", action="store_true", help="use fraction-free elimination for ranks")
    verify.add_argument("--format", choices=("text", "json"), default="text")

    dump = sub.add_parser("dump", help="dump an operator as canonical JSON rows")
    dump.add_argument("operator")
    dump.add_argument("--n", type=int, required=True)

    args = parser.parse_args(argv)

    try:
        if args.command == "poly" and args.flavor == "spin":
            braid = parse_braid(args.braid, args.strands)
            if args.engine == "symbolic" and args.n > 3:
                print("the symbolic engine is restricted to n <= 3", file=sys.stderr)
                return 2
            value = eval_spin(
                braid, args.n, normalization=args.normalize, mirror=args.mirror, engine=args.engine
            )
            print(_scalar_out(value, args.format))
            return 0
        if args.command == "poly" and args.flavor == "sln":
            from .schur import eval_slN

            braid = parse_braid(args.braid, args.strands)
            colors = tuple(int(c) for c in args.colors.split(",") if c.strip() != "")
            value = eval_slN(braid, colors, args.N)
            print(_scalar_out(value, args.format))
            return 0
        if args.command == "verify":
            threads = int(os.environ.get("SPINLINK_THREADS", "1"))
            report = _pool_run(_SUITES[args.suite](args), threads)
            ok = _emit_report(report, args.format)
            if args.suite == "conjectures":
                return 0  # probes never gate
            return 0 if ok else 1
        if args.command == "dump":
            op = _dump_operator(args.operator, args.n)
            print(json.dumps(op.dump_rows()))
            return 0
    except BraidParseError as exc:
        print(f"braid parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

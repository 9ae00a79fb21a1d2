"""
Command-line interface: ``tilting-lab <command> --n N [--format json|table]``.

Output goes to stdout as either an indented JSON document or a plain table
derived from the same payload.  Timings and other diagnostics go to stderr so
that stdout is byte-identical across runs.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import re
import sys
import time

from .algebra import DomainError
from .checks import verify_all
from .filtration import classify_module, node_of
from .homology import ext_dims, global_dimension_cap
from .morphisms import end_dim, hom_dim
from .oracles import (
    _hom_M_into,
    ext_oracle_delta_to_simple,
    ext_oracle_eq1,
    ext_oracle_eq2,
    ext_oracle_eq3,
    ext_simples_oracle,
)
from .sequences import enumerate_sequences, verify_sequence
from .strings import (
    OmegaDescriptor,
    costandard_desc,
    count_indecomposables,
    enumerate_indecomposables,
    injective_desc,
    omega,
    projective_desc,
    simple_desc,
    standard_desc,
    tilting_desc,
)
from .tilting import build_poset, classify_tilting

SCHEMA_VERSION = "1.0"
DEFAULT_MAX_N = 8

_SYMBOLIC = {
    "delta": standard_desc,
    "nabla": costandard_desc,
    "l": simple_desc,
    "p": projective_desc,
    "i": injective_desc,
    "t": tilting_desc,
}


class UsageError(Exception):
    pass


def max_n():
    raw = os.environ.get("TILTING_LAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TILTING_LAB_MAX_N must be an integer, got {raw!r}")


def parse_descriptor(text, n):
    """'i,j,k' or a name such as Delta3, Nabla2, L1, P2, I2, T3."""
    text = text.strip()
    try:
        if "," in text:
            parts = [int(p) for p in text.split(",")]
            if len(parts) != 3:
                raise UsageError(f"descriptor {text!r} needs three entries")
            return OmegaDescriptor(*parts).validate(n)
        m = re.fullmatch(r"([A-Za-z]+)\(?(\d+)\)?", text)
        if m is None or m.group(1).lower() not in _SYMBOLIC:
            raise UsageError(f"cannot read module {text!r}")
        x = int(m.group(2))
        if not 1 <= x <= n:
            raise UsageError(f"index {x} in {text!r} is outside 1..{n}")
        return _SYMBOLIC[m.group(1).lower()](x, n)
    except (ValueError, DomainError) as e:
        raise UsageError(str(e))


# serialisation

def jd(d):
    return {"i": d[0], "j": d[1], "k": d[2]}


def jnode(v):
    return {"i": v[0], "k": v[1]}


def _plain(obj):
    """Descriptors and nodes inside failure records become plain JSON."""
    if isinstance(obj, OmegaDescriptor):
        return jd(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def fmt_d(d):
    return f"({d['i']},{d['j']},{d['k']})"


def fmt_node(v):
    return f"({v['i']},{v['k']})"


def document(command, n, payload):
    return {"schema_version": SCHEMA_VERSION, "command": command, "n": n, "payload": payload}


# commands; each returns (payload, ok)

def cmd_indecomposables(n, args):
    rows = []
    for d in enumerate_indecomposables(n):
        c = classify_module(d, n)
        rows.append({"descriptor": jd(d), "dims": list(omega(d, n).dims),
                     "f_delta": c.in_f_delta, "f_nabla": c.in_f_nabla,
                     "self_orthogonal": c.self_orthogonal, "exceptional": c.exceptional})
    formula = n * (n + 1) * (2 * n + 1) // 6
    ok = len(rows) == formula == count_indecomposables(n)
    return {"modules": rows, "count": len(rows), "formula": formula, "count_matches": ok}, ok


def _standard_index(d, n):
    for x in range(1, n + 1):
        if d == standard_desc(x, n):
            return x
    return None


def _ext_oracles(ds, dt, n, top):
    """Closed-form values, keyed by degree, for whatever formula covers the pair."""
    out = {}
    x = _standard_index(ds, n)
    if x is not None and dt[0] == dt[1] == dt[2]:
        for m in range(top + 1):
            out[m] = ("Delta->L", ext_oracle_delta_to_simple(x, dt[0], m))
    if ds[0] == ds[1] == ds[2] and dt[0] == dt[1] == dt[2]:
        for m in range(top + 1):
            out[m] = ("L->L", ext_simples_oracle(ds[0], dt[0], m, n))
    try:
        (i, k), (j, l) = node_of(ds), node_of(dt)
    except DomainError:
        pass
    else:
        out[0] = ("Hom M->M", _hom_M_into(i, k, j, l))
        if top >= 1:
            out[1] = ("Ext1 M->M", ext_oracle_eq1(i, k, j, l, n))
        if top >= 2:
            out[2] = ("Ext2 M->M", ext_oracle_eq2(i, k, j, l, n))
        for m in range(3, top + 1):
            out[m] = ("Ext>=3 M->M", ext_oracle_eq3(i, k, j, l, m, n))
    if ds in {projective_desc(y, n) for y in range(1, n + 1)}:
        for m in range(1, top + 1):
            out.setdefault(m, ("projective source", 0))
    return out


def cmd_ext(n, args):
    ds = parse_descriptor(args.source, n)
    dt = parse_descriptor(args.target, n)
    top = args.max_degree
    dims = ext_dims(omega(ds, n), omega(dt, n))
    oracles = _ext_oracles(ds, dt, n, top)
    rows = []
    agree = True
    for m in range(top + 1):
        v = dims[m] if m < len(dims) else 0
        row = {"degree": m, "dim": v, "oracle": None, "formula": None, "agrees": None}
        if m in oracles:
            row["formula"], row["oracle"] = oracles[m]
            row["agrees"] = row["oracle"] == v
            agree &= row["agrees"]
        rows.append(row)
    payload = {"source": jd(ds), "target": jd(dt), "max_degree": top,
               "degrees": rows, "oracles_agree": agree}
    return payload, agree


def cmd_hom(n, args):
    ds = parse_descriptor(args.source, n)
    dt = parse_descriptor(args.target, n)
    M, N = omega(ds, n), omega(dt, n)
    v = hom_dim(M, N)
    payload = {"source": jd(ds), "target": jd(dt), "hom": v, "reverse_hom": hom_dim(N, M),
               "end_source": end_dim(M), "end_target": end_dim(N),
               "oracle": None, "agrees": None}
    try:
        (i, k), (j, l) = node_of(ds), node_of(dt)
    except DomainError:
        return payload, True
    payload["oracle"] = _hom_M_into(i, k, j, l)
    payload["agrees"] = payload["oracle"] == v
    return payload, payload["agrees"]


def cmd_tilting(n, args):
    mods = classify_tilting(n)
    rows = [{"side": t.side, "params": list(t.params), "tier": t.tier,
             "tier_conventional": t.tier_conventional,
             "summands": [jd(d) for d in t.summands],
             "certificate": _plain(t.certificate.as_dict())} for t in mods]
    ok = len(mods) == n * (n - 1) + 1 and all(t.certificate.passed for t in mods)
    return {"modules": rows, "count": len(rows), "formula": n * (n - 1) + 1,
            "all_verified": ok}, ok


def cmd_poset(n, args):
    P = build_poset(n)
    payload = {
        "nodes": [jnode(v) for v in P.nodes],
        "covers": [[jnode(a), jnode(b)] for a, b in sorted(P.hasse_edges())],
        "relations": [[jnode(a), jnode(b)] for a, b in sorted(P.relation_pairs())],
        "problems": P.check(),
    }
    return payload, not payload["problems"]


def cmd_sequences(n, args):
    rows = []
    ok = True
    for s in enumerate_sequences(n):
        cert = verify_sequence(s)
        ok &= cert.passed
        rows.append({"mask": s.mask, "text": str(s),
                     "entries": [{"kind": e.kind, "index": e.index,
                                  "descriptor": jd(e.descriptor(n))} for e in s.entries],
                     "certificate": _plain(cert.as_dict())})
    return {"sequences": rows, "count": len(rows), "formula": 2 ** (n - 1),
            "all_verified": ok and len(rows) == 2 ** (n - 1)}, ok


def _fault_closure(n, text):
    """Flip one entry 'i,k:j,l' of the order relation (testing hook)."""
    P = build_poset(n)
    try:
        a, b = (tuple(int(x) for x in part.split(",")) for part in text.split(":"))
        ia, ib = P.index(a), P.index(b)
    except (ValueError, TypeError):
        raise UsageError(f"cannot read closure fault {text!r}")
    C = P.closure.copy()
    C[ia, ib] = not C[ia, ib]
    return build_poset(n, closure=C)


def cmd_verify_all(n, args):
    poset = _fault_closure(n, args.inject_closure_fault) if args.inject_closure_fault else None
    suites = []
    for r in _timed_suites(n, poset):
        suites.append(_plain(r.as_dict()))
    ok = all(s["passed"] for s in suites)
    return {"suites": suites, "passed": ok}, ok


def _timed_suites(n, poset):
    start = time.perf_counter()
    results = verify_all(n, poset)
    print(f"verify-all n={n}: {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return results


# table rendering

def _b(v):
    return "yes" if v else "no"


def table_indecomposables(p):
    lines = [f"{'descriptor':<12} {'dims':<24} F(D) F(N) s-o  exc"]
    for r in p["modules"]:
        lines.append(f"{fmt_d(r['descriptor']):<12} {str(r['dims']):<24} "
                     f"{_b(r['f_delta']):<4} {_b(r['f_nabla']):<4} "
                     f"{_b(r['self_orthogonal']):<4} {_b(r['exceptional'])}")
    lines.append(f"count {p['count']} (formula n(n+1)(2n+1)/6 = {p['formula']}): "
                 f"{'ok' if p['count_matches'] else 'MISMATCH'}")
    return lines


def table_ext(p):
    lines = [f"Ext({fmt_d(p['source'])}, {fmt_d(p['target'])})",
             f"{'m':>3} {'dim':>4} {'oracle':>6}  formula"]
    for r in p["degrees"]:
        o = "-" if r["oracle"] is None else str(r["oracle"])
        mark = "" if r["agrees"] is None else ("" if r["agrees"] else "  DISAGREES")
        lines.append(f"{r['degree']:>3} {r['dim']:>4} {o:>6}  {r['formula'] or '-'}{mark}")
    lines.append(f"oracles agree: {_b(p['oracles_agree'])}")
    return lines


def table_hom(p):
    lines = [f"dim Hom({fmt_d(p['source'])}, {fmt_d(p['target'])}) = {p['hom']}",
             f"dim Hom({fmt_d(p['target'])}, {fmt_d(p['source'])}) = {p['reverse_hom']}",
             f"dim End source = {p['end_source']}, dim End target = {p['end_target']}"]
    if p["oracle"] is not None:
        lines.append(f"closed form = {p['oracle']}: {'agrees' if p['agrees'] else 'DISAGREES'}")
    return lines


def table_tilting(p):
    lines = []
    for r in p["modules"]:
        conv = " (conventional)" if r["tier_conventional"] else ""
        params = ",".join(str(x) for x in r["params"]) or "-"
        status = "ok" if r["certificate"]["passed"] else "FAIL"
        lines.append(f"{r['side']:<14} params {params:<5} tier {r['tier']}{conv:<15} {status}  "
                     + " + ".join(fmt_d(d) for d in r["summands"]))
    lines.append(f"count {p['count']} (formula n(n-1)+1 = {p['formula']}), "
                 f"all verified: {_b(p['all_verified'])}")
    return lines


def table_poset(p):
    lines = ["nodes: " + " ".join(fmt_node(v) for v in p["nodes"]), "covers:"]
    lines += [f"  {fmt_node(a)} < {fmt_node(b)}" for a, b in p["covers"]]
    lines.append(f"relations: {len(p['relations'])}")
    lines += [f"  {fmt_node(a)} < {fmt_node(b)}" for a, b in p["relations"]]
    if p["problems"]:
        lines.append("problems: " + "; ".join(p["problems"]))
    return lines


def table_sequences(p):
    lines = []
    for r in p["sequences"]:
        status = "ok" if r["certificate"]["passed"] else "FAIL"
        lines.append(f"{r['mask']:>4} {r['text']}  {status}")
    lines.append(f"count {p['count']} (formula 2^(n-1) = {p['formula']}), "
                 f"all verified: {_b(p['all_verified'])}")
    return lines


def table_verify_all(p):
    lines = []
    for s in p["suites"]:
        lines.append(f"{'PASS' if s['passed'] else 'FAIL'} {s['name']:<20} "
                     f"{s['checked']} checks, {s['failure_count']} failures")
        for f in s["failures"]:
            lines.append("     " + json.dumps(f, sort_keys=True))
    lines.append("all suites pass" if p["passed"] else "VERIFICATION FAILED")
    return lines


COMMANDS = {
    "indecomposables": (cmd_indecomposables, table_indecomposables),
    "ext": (cmd_ext, table_ext),
    "hom": (cmd_hom, table_hom),
    "tilting": (cmd_tilting, table_tilting),
    "poset": (cmd_poset, table_poset),
    "sequences": (cmd_sequences, table_sequences),
    "verify-all": (cmd_verify_all, table_verify_all),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="tilting-lab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=["json", "table"], default="table")
        if name in ("ext", "hom"):
            p.add_argument("source", help="'i,j,k' or a name like Delta3, Nabla2, L1, P2, I2, T3")
            p.add_argument("target")
        if name == "ext":
            p.add_argument("--max-degree", type=int, default=None)
        if name == "verify-all":
            p.add_argument("--inject-closure-fault", default=None, help=argparse.SUPPRESS)
    return parser


def run(argv=None):
    """Returns ``(exit_code, stdout_text)``; usage errors go to stderr."""
    try:
        args = build_parser().parse_args(argv)
        cap = max_n()
        if not 2 <= args.n <= cap:
            raise UsageError(f"--n must lie in 2..{cap} (set TILTING_LAB_MAX_N to raise the cap)")
        n = args.n
        if args.command == "ext":
            if args.max_degree is None:
                args.max_degree = global_dimension_cap(n)
            if args.max_degree < 0:
                raise UsageError("--max-degree must be non-negative")
        compute, render = COMMANDS[args.command]
        payload, ok = compute(n, args)
    except UsageError as e:
        print(f"tilting-lab: error: {e}", file=sys.stderr)
        return 2, ""
    doc = document(args.command, n, payload)
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(render(payload)) + "\n"
    return (0 if ok else 1), text


def main(argv=None):
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: `hecke-ip COMMAND SPEC [options]`.

SPEC is shorthand (`A3[0,0,1]`, `D4[1,0,0,1]`, `E7[...]`, sums with `+`,
`q=0010110`), inline JSON, or the path of a JSON file.  Exit codes: 0 ok,
1 user error, 2 guard refusal, 3 failed invariant.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .combinat import Partition
from .coxeter import DEFAULT_MAX_ORDER, build_diagram, classify
from .errors import DiagramError, GuardExceeded, HeckeError, InvariantError
from .formal import FormalSum
from .heckealg import DEFAULT_MAX_DIM, block_partition, dimension, dimension_table, hecke_monoid, \
    prepare
from .indres import QModuleDescriptor, duality_all, induce, restrict
from .repthy import IrrLabel, cartan_matrix_hq, context, finite_rep_type, label_dims, quiver_hq, \
    regular_decomposition_check, rep_type_brute
from .tower import QTerm, TowerLabel, coproduct, hat_tensor, join, parse_label, q_term, split
from .zerohecke import cartan_matrix

COMMANDS = ("info", "dim", "basis", "cartan", "cartan0", "quiver", "irr", "decompose-regular",
            "induce", "restrict", "duality", "tower-prod", "tower-coprod", "reptype", "selftest")


class UserError(DiagramError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


# ------------------------------------------------------------------ input

class Job:
    """A parsed diagram plus what happened to it on the way in."""

    def __init__(self, text: str, raw: bool = False):
        self.text = text
        self.raw = raw
        source = text
        path = Path(text)
        if not text.lstrip().startswith("{") and (text.endswith(".json") or path.is_file()):
            try:
                source = json.loads(path.read_text())
            except OSError as exc:
                raise UserError(f"cannot read {text}: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise UserError(f"invalid JSON in {text} at position {exc.pos}: {exc.msg}") \
                    from None
        self.original = build_diagram(source)
        self.collapsed: frozenset = frozenset()
        if raw or self.original.params is None:
            self.diagram = self.original
        else:
            self.diagram, self.collapsed = prepare(self.original)
        stripped = text.strip()
        self.q = stripped[2:].strip() if stripped.startswith("q=") else None

    def node(self, text: str):
        for v in self.diagram.nodes:
            if str(v) == text.strip():
                return v
        if any(str(v) == text.strip() for v in self.original.nodes):
            raise UserError(f"node {text} was collapsed away")
        raise UserError(f"unknown node {text!r}; nodes are {list(self.diagram.nodes)}")

    def describe(self) -> dict:
        return {"spec": self.text, "raw": self.raw, "diagram": self.diagram.to_json(),
                "collapsed": sorted(map(str, self.collapsed))}


def parse_spec(text: str, raw: bool = False):
    """(diagram, params) after collapse_reduce and normalization unless raw."""
    job = Job(text, raw)
    return job.diagram, job.diagram.params


_KIND = re.compile(r"\s*([PC])\s*:(.*)$", re.S)
_IRR = re.compile(r"\s*\{([^}]*)\}\s*\|(.*)$", re.S)
_TOWER = re.compile(r"\s*([PC])\[([01]*)\](.*)$", re.S)


def _split_kind(text: str) -> tuple[str, str]:
    m = _KIND.match(text)
    if not m:
        raise UserError(f"label {text!r} must start with P: or C:")
    return m.group(1), m.group(2).strip()


def _partition(text: str) -> Partition:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise UserError(f"expected a partition like [2,1], got {text!r}")
    try:
        return Partition(int(x) for x in t[1:-1].split(",") if x.strip())
    except ValueError:
        raise UserError(f"bad partition {text!r}") from None


def parse_irr(text: str, diagram, node_of) -> IrrLabel:
    """`{1,3}|[2];[1,1]`: the set I, then one partition per one block."""
    m = _IRR.match(text)
    if not m:
        raise UserError(f"cannot read label {text!r}; expected {{I}}|lam1;lam2")
    I = frozenset(node_of(x) for x in m.group(1).split(",") if x.strip())
    body = m.group(2).strip()
    lam = tuple(_partition(p) for p in body.split(";")) if body else ()
    label = IrrLabel(I, lam)
    context(diagram).check_label(label)
    return label


def parse_tower(text: str) -> TowerLabel:
    """`C[001](3),[2]` (kind, q, label) or `S_empty`."""
    if text.strip() == "S_empty":
        return TowerLabel.unit()
    m = _TOWER.match(text)
    if not m:
        raise UserError(f"cannot read tower label {text!r}; expected e.g. C[01](2),[2]")
    return parse_label(m.group(3), m.group(2), m.group(1))


# ---------------------------------------------------------------- render

def irr_text(label: IrrLabel) -> str:
    return repr(label)


def _tower_or_irr(job: Job, kind: str, label: IrrLabel) -> str:
    if job.q is not None:
        return f"{kind}:" + TowerLabel.from_irr(kind, job.q, label).text()
    return f"{kind}:{irr_text(label)}"


def _sum_rows(terms: FormalSum, render) -> list[dict]:
    rows = [{"label": render(t), "multiplicity": m} for t, m in terms.items()]
    return sorted(rows, key=lambda r: r["label"])


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, (frozenset, set)):
        return sorted((_jsonable(v) for v in x), key=str)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# --------------------------------------------------------------- commands

def cmd_info(job: Job, args) -> tuple[dict, str]:
    d = job.diagram
    res = {"nodes": list(d.nodes), "types": [f"{a}{n}" for a, n in classify(d)],
           "collapsed": sorted(map(str, job.collapsed))}
    lines = [f"nodes: {' '.join(map(str, d.nodes)) or '(none)'}",
             f"type: {' + '.join(res['types']) or 'scalar algebra'}"]
    if job.collapsed:
        lines.append(f"collapsed to scalars: {', '.join(res['collapsed'])}")
    if d.params is not None:
        part = block_partition(d)
        blocks = []
        for k, b in enumerate(part.blocks):
            t = classify(d, b)[0]
            blocks.append({"nodes": list(d.ordered(b)), "type": f"{t[0]}{t[1]}",
                           "q": 0 if k in part.zero_blocks else 1})
        res["params"] = [_jsonable(q) for q in d.params]
        res["blocks"] = blocks
        res["dimension"] = dimension(d)
        lines.append("params: " + " ".join(map(str, res["params"])))
        for b in blocks:
            lines.append(f"block q={b['q']} {b['type']}: {' '.join(map(str, b['nodes']))}")
        lines.append(f"dimension: {res['dimension']}")
        if context(d).type_a:
            res["irreducibles"] = len(label_dims(d))
            res["finite_rep_type"] = finite_rep_type(d)
            lines.append(f"irreducibles: {res['irreducibles']}")
            lines.append(f"finite representation type: {res['finite_rep_type']}")
    return res, "\n".join(lines)


def cmd_dim(job: Job, args):
    d = job.diagram
    n = dimension(d)
    rows = [{"J": sorted(J), "one_factor": a, "zero_factor": b, "term": a * b}
            for J, a, b in dimension_table(d)]
    text = str(n)
    if job.collapsed:
        text += f"\ncollapsed to scalars: {', '.join(sorted(map(str, job.collapsed)))}"
    return {"dimension": n, "table": rows}, text


def cmd_basis(job: Job, args):
    m = hecke_monoid(job.diagram)
    basis = m.basis_positions(args.max_dim)
    shown = [repr(m.element(x)) for x in basis[:args.limit]]
    text = f"{len(basis)} basis elements" + "".join("\n  " + s for s in shown)
    if len(basis) > args.limit:
        text += f"\n  ... ({len(basis) - args.limit} more)"
    return {"count": len(basis), "elements": shown, "truncated": len(basis) > args.limit}, text


def _matrix_text(labels, matrix) -> str:
    width = max((len(s) for s in labels), default=0)
    lines = []
    for s, row in zip(labels, matrix):
        lines.append(f"{s:>{width}}  " + " ".join(f"{x:3d}" for x in row))
    return "\n".join(lines)


def cmd_cartan(job: Job, args):
    labels, matrix = cartan_matrix_hq(job.diagram)
    names = [irr_text(x) for x in labels]
    return {"labels": names, "matrix": matrix}, _matrix_text(names, matrix)


def cmd_cartan0(job: Job, args):
    d = job.diagram
    labels, matrix = cartan_matrix(d, d.nodes)
    names = ["{" + ",".join(map(str, d.ordered(x))) + "}" for x in labels]
    return {"labels": names, "matrix": matrix}, _matrix_text(names, matrix)


def _vertex(label: IrrLabel) -> str:
    return f"C[{irr_text(label)}]"


def cmd_quiver(job: Job, args):
    q = quiver_hq(job.diagram)
    if args.format == "dot":
        return None, q.to_dot(_vertex)
    res = q.to_json(_vertex)
    res["loops"] = len(q.loops())
    lines = [f"{len(q.vertices)} vertices, {q.arrow_count()} arrows",
             "shape: " + ", ".join(f"{k}x{v}" for k, v in sorted(q.shape().items()))]
    lines += [f"  {a} -> {b}" + (f" (x{m})" if m > 1 else "") for a, b, m in res["arrows"]]
    return res, "\n".join(lines)


def cmd_irr(job: Job, args):
    rows = []
    for lab, sd, pd, s0 in label_dims(job.diagram):
        row = {"label": irr_text(lab), "simple_dim": sd, "projective_dim": pd, "s0_size": s0}
        if job.q is not None:
            row["tower"] = TowerLabel.from_irr("C", job.q, lab).text()
        rows.append(row)
    lines = [f"{r['label']}  dim C = {r['simple_dim']}  dim P = {r['projective_dim']}"
             + (f"  [{r['tower']}]" if "tower" in r else "") for r in rows]
    return {"labels": rows}, "\n".join(lines)


def cmd_decompose_regular(job: Job, args):
    res = regular_decomposition_check(job.diagram)
    text = (f"{res['labels']} labels, sum of d_lam dim P = {res['sum']} = dim {res['dimension']}"
            + "".join(f"\n  J={r['J']}: {r['labels_sum']}" for r in res["per_J"]))
    return res, text


def _target_text(job: Job, d, node, kind: str):
    """Renderer for labels over S minus node."""
    if job.q is None:
        return lambda t: f"{kind}:{irr_text(t)}" if isinstance(t, IrrLabel) else _qdesc_text(d, t)
    k = d.index[node] + 1

    def render(t):
        if isinstance(t, QModuleDescriptor):
            qt = q_term(job.q, k, t)
            return _qterm_text(qt)
        a, b = split(job.q, k, t, kind)
        return f"{kind}:{a.text()} | {b.text()}"
    return render


def _qdesc_text(d, t: QModuleDescriptor) -> str:
    def fmt(x):
        return "{" + ",".join(map(str, d.ordered(x))) + "}"
    flag = "projective" if t.projective else "nonprojective"
    return f"Q:{irr_text(t.top)} inner={fmt(t.inner)} ambient={fmt(t.ambient)} ({flag})"


def _qterm_text(qt: QTerm) -> str:
    sides = " | ".join(",".join(map(str, p)) for p in qt.parts)
    flag = "projective" if qt.projective else "nonprojective"
    top = " | ".join(x.text() for x in qt.top)
    return f"Q:{sides} ({flag}, top C:{top})"


def _parse_source_label(job: Job, text: str, R, node):
    kind, body = _split_kind(text)
    if body.lstrip().startswith("{") or job.q is None:
        return kind, parse_irr(body, R, job.node)
    if "|" not in body:
        raise UserError("on q= diagrams the induced label is written LEFT | RIGHT, "
                        "e.g. P:(3,1),[2] | [1],(2)")
    k = job.diagram.index[node] + 1
    left, right = body.split("|", 1)
    x = parse_label(left, job.q[:k - 1], kind)
    y = parse_label(right, job.q[k:], kind)
    return kind, join(x, y, job.q[k - 1])[2]


def cmd_induce(job: Job, args):
    d = job.diagram
    node = job.node(args.node)
    R = d.subdiagram([v for v in d.nodes if v != node])
    kind, label = _parse_source_label(job, args.label, R, node)
    res = induce(d, node, label, kind)
    rows = _sum_rows(res.terms, lambda t: _tower_or_irr(job, kind, t))
    text = "\n".join(f"{r['multiplicity']} x {r['label']}" for r in rows) or "0"
    return {"kind": kind, "node": node, "case": 1 if res.parameter == 0 else 2,
            "terms": rows}, text


def cmd_restrict(job: Job, args):
    d = job.diagram
    node = job.node(args.node)
    kind, body = _split_kind(args.label)
    if body.lstrip().startswith("{") or job.q is None:
        label = parse_irr(body, d, job.node)
    else:
        label = parse_label(body, job.q, kind).to_irr()
    res = restrict(d, node, label, kind)
    rows = _sum_rows(res.terms, _target_text(job, d, node, kind))
    text = "\n".join(f"{r['multiplicity']} x {r['label']}" for r in rows) or "0"
    return {"kind": kind, "node": node, "case": 1 if res.parameter == 0 else 2,
            "terms": rows}, text


def cmd_duality(job: Job, args):
    d = job.diagram
    nodes = [job.node(args.node)] if args.node else list(d.nodes)
    rows, bad = [], 0
    for v in nodes:
        n, fails = duality_all(d, v)
        bad += len(fails)
        rows.append({"node": v, "pairs": n, "failures": len(fails)})
    if bad:
        raise InvariantError(f"{bad} duality failures: {rows}")
    text = "\n".join(f"node {r['node']}: {r['pairs']} label pairs, both adjunctions hold"
                     for r in rows)
    return {"nodes": rows, "ok": True}, text


def cmd_tower_prod(job, args):
    x, y = parse_tower(args.x), parse_tower(args.y)
    rows = _sum_rows(hat_tensor(x, y), repr)
    return {"x": repr(x), "y": repr(y), "terms": rows}, \
        "\n".join(f"{r['multiplicity']} x {r['label']}" for r in rows) or "0"


def cmd_tower_coprod(job, args):
    x = parse_tower(args.x)
    rows = _sum_rows(coproduct(x), lambda p: f"{p[0]!r} (x) {p[1]!r}")
    return {"x": repr(x), "terms": rows}, \
        "\n".join(f"{r['multiplicity']} x {r['label']}" for r in rows)


def cmd_reptype(job: Job, args):
    d = job.diagram
    part = block_partition(d)
    sizes = [len(part.blocks[i]) for i in sorted(part.zero_blocks)]
    res = {"finite": finite_rep_type(d), "zero_block_sizes": sizes}
    if args.brute:
        res["brute"] = rep_type_brute(d)
        if res["brute"] != res["finite"]:
            raise InvariantError(f"criterion {res['finite']} but quiver check {res['brute']}")
    text = ("finite" if res["finite"] else "infinite") + \
        f" representation type (zero blocks of sizes {sizes or 'none'})"
    return res, text


def cmd_selftest(job, args):
    from .acceptance import run_all
    only = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_all(only)
    rows = [{"criterion": r.number, "name": r.name, "ok": r.ok, "detail": r.detail}
            for r in results]
    text = "\n".join(r.line() for r in results)
    if not all(r.ok for r in results):
        print(text)
        raise InvariantError(f"{sum(not r.ok for r in results)} acceptance criteria failed")
    return {"criteria": rows, "ok": True}, text


HANDLERS = {
    "info": cmd_info, "dim": cmd_dim, "basis": cmd_basis, "cartan": cmd_cartan,
    "cartan0": cmd_cartan0, "quiver": cmd_quiver, "irr": cmd_irr,
    "decompose-regular": cmd_decompose_regular, "induce": cmd_induce,
    "restrict": cmd_restrict, "duality": cmd_duality, "tower-prod": cmd_tower_prod,
    "tower-coprod": cmd_tower_coprod, "reptype": cmd_reptype, "selftest": cmd_selftest,
}
NO_SPEC = {"tower-prod", "tower-coprod", "selftest"}


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--raw", action="store_true",
                        help="skip collapse reduction and parameter normalization")
    common.add_argument("--max-group-order", type=int, default=None,
                        help=f"largest group to enumerate (default {DEFAULT_MAX_ORDER}, "
                             "or HECKE_IP_MAX_ORDER)")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                        help="largest basis to materialize")
    common.add_argument("--timings", action="store_true",
                        help="fill the JSON timings field (off keeps output byte-stable)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = _Parser(prog="hecke-ip", description="Hecke algebras with independent parameters.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "tower-prod":
            sp.add_argument("x", help="tower label, e.g. C[1](1),[2]")
            sp.add_argument("y")
        elif name == "tower-coprod":
            sp.add_argument("x")
        elif name == "selftest":
            sp.add_argument("--only", help="comma-separated criterion numbers")
        else:
            sp.add_argument("spec", help="shorthand, inline JSON or a JSON file")
        if name in ("induce", "restrict"):
            sp.add_argument("--node", required=True)
            sp.add_argument("--label", required=True,
                            help="e.g. P:(3),[2],(1,2) on q= diagrams or P:{1,3}|[2]")
        if name == "duality":
            sp.add_argument("--node")
        if name == "basis":
            sp.add_argument("--limit", type=int, default=50)
        if name == "reptype":
            sp.add_argument("--brute", action="store_true",
                            help="also read the answer off computed quivers")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("max_group_order", "max_dim"):
        value = getattr(args, flag)
        if value is not None and value <= 0:
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    if args.format == "dot" and args.command != "quiver":
        parser.error("--format dot is only available for quiver")
    saved = os.environ.get("HECKE_IP_MAX_ORDER")
    if args.max_group_order is not None:
        os.environ["HECKE_IP_MAX_ORDER"] = str(args.max_group_order)
    try:
        return _execute(args)
    finally:
        if saved is None:
            os.environ.pop("HECKE_IP_MAX_ORDER", None)
        else:
            os.environ["HECKE_IP_MAX_ORDER"] = saved


def _execute(args) -> int:
    try:
        t0 = time.perf_counter()
        job = None if args.command in NO_SPEC else Job(args.spec, args.raw)
        t1 = time.perf_counter()
        result, text = HANDLERS[args.command](job, args)
        t2 = time.perf_counter()
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 3
    except HeckeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        doc = {"command": args.command,
               "input": job.describe() if job else {k: getattr(args, k) for k in ("x", "y", "only")
                                                     if hasattr(args, k)},
               "result": _jsonable(result),
               "timings": {"parse": round(t1 - t0, 6), "run": round(t2 - t1, 6)}
               if args.timings else {}}
        out = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()

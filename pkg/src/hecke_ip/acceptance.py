"""The acceptance suite, shared by `hecke-ip selftest` and the test-suite.

Each check returns a Result; `run_all` runs them in order.  Expected values
are either worked examples or brute-force oracles computed here.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import comb, factorial

from . import coxeter
from .combinat import Composition, Partition, hook_dim, lr_coefficient, partitions, \
    restrict_composition, shuffle_product
from .coxeter import build_diagram, group_order_by_type
from .formal import FormalSum
from .heckealg import dimension, dimension_table, hecke_monoid, prepare
from .indres import duality_all
from .repthy import finite_rep_type, lambda_component, quiver_hq, regular_decomposition_check, \
    rep_type_brute
from .tower import C, P, counterexample, duality_failures, induce_pair, parse_label, \
    restrict_at, tokens
from .zerohecke import cartan_matrix, composition_factors, module_socle, projective_module, \
    subsets, zero_hecke_quiver

# D4 (parameter 1) - E7 (parameter 0) - A2 (parameter c = 2), nodes named by block
MIXED_DIAGRAM = {
    "nodes": [{"id": v, "q": 1} for v in ("d1", "d2", "d3", "d4")]
    + [{"id": f"e{i}", "q": 0} for i in range(1, 8)]
    + [{"id": "a1", "q": 2}, {"id": "a2", "q": 2}],
    "edges": [["d1", "d3"], ["d2", "d3"], ["d3", "d4"], ["d4", "e1"],
              ["e1", "e2"], ["e2", "e3"], ["e3", "e4"], ["e2", "e5"], ["e5", "e6"],
              ["e6", "e7"], ["e4", "a1"], ["a1", "a2"]],
}


@dataclass
class Result:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _diag(q: str):
    return build_diagram("q=" + q)


def _strings(max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _timed(number, name, limit, body) -> Result:
    t0 = time.perf_counter()
    ok, detail = body()
    dt = time.perf_counter() - t0
    if limit is not None and dt > limit:
        ok, detail = False, f"{detail}; took {dt:.1f}s, limit {limit}s"
    return Result(number, name, ok, detail, dt)


# ------------------------------------------------------------------ checks

def check_1() -> Result:
    def body():
        d = dimension(_diag("001"))
        return d == 8, f"dim H(0,0,1) = {d}"
    return _timed(1, "dimension of H(0,0,1)", 1.0, body)


def check_2() -> Result:
    def body():
        misses = coxeter._table.cache_info().misses
        diagram, collapsed = prepare(build_diagram(MIXED_DIAGRAM))
        d = dimension(diagram)
        rows = {tuple(sorted(J)): a * b for J, a, b in dimension_table(diagram)}
        expected = {(): 72 * factorial(8), (0,): 191 * factorial(7),
                    (2,): 5 * 2 ** 5 * factorial(6), (0, 2): 191 * 5 * factorial(6)}
        enumerated = coxeter._table.cache_info().misses != misses
        ok = d == 4668480 and rows == expected and not collapsed and not enumerated
        return ok, f"dim = {d}, per-J table {'matches' if rows == expected else rows}" + \
            (", enumerated a group" if enumerated else "")
    return _timed(2, "mixed D4/E7/A2 dimension", 1.0, body)


def check_3() -> Result:
    def body():
        bad = []
        for n in range(1, 15):
            for start in "01":
                q = "".join(start if i % 2 == 0 else "10"[int(start)] for i in range(n))
                if dimension(_diag(q)) != fib(n + 2):
                    bad.append(q)
        cases = 0
        for k, r, n in product(range(7), range(7), range(1, 6)):
            left = "".join("0" if i % 2 == 0 else "1" for i in range(k))[::-1]
            right = "".join("0" if i % 2 == 0 else "1" for i in range(r))
            if not left + right and n == 1:
                continue
            want = fib(k + 2) * fib(r + 2) + (factorial(n) - 1) * fib(k + 1) * fib(r + 1)
            cases += 1
            if dimension(_family(left, n, right)) != want:
                bad.append((left, n, right))
        return not bad, f"28 alternating strings and {cases} family members" + \
            (f"; failures {bad[:5]}" if bad else " agree")
    return _timed(3, "Fibonacci dimensions", 5.0, body)


def _family(left: str, n: int, right: str):
    """left . 1^(n-1) . right; for n = 1 the empty one block keeps the sides apart."""
    if n > 1 or not left or not right:
        return _diag(left + "1" * (n - 1) + right)
    return build_diagram(f"A{len(left)}[{','.join(left)}] + A{len(right)}[{','.join(right)}]")


def _closure(diagram, rng, triples: int) -> str | None:
    import numpy as np

    m = hecke_monoid(diagram)
    basis = m.basis_positions()
    if len(basis) != dimension(diagram):
        return "basis size"
    if len(set(basis)) != len(basis) or not all(m.is_valid(x) for x in basis):
        return "basis not valid"
    arr = np.array(basis, dtype=np.int64)
    idx = rng.integers(0, len(basis), size=(3, triples))
    x, y, z = arr[idx[0]], arr[idx[1]], arr[idx[2]]
    xy, yz = m.multiply_batch(x, y), m.multiply_batch(y, z)
    if not (m.multiply_batch(xy, z) == m.multiply_batch(x, yz)).all():
        return "associativity"
    # the batch kernel against the scalar product on a sample
    for i in range(0, triples, max(1, triples // 50)):
        if tuple(xy[i]) != m.multiply_positions(tuple(x[i]), tuple(y[i])):
            return "batch product"
    return None


def check_4(triples: int = 10_000) -> Result:
    def body():
        import numpy as np

        rng = np.random.default_rng(20240601)
        bad, count = [], 0
        for q in _strings(6):
            count += 1
            err = _closure(_diag(q), rng, triples)
            if err:
                bad.append((q, err))
        for bits in product((0, 1), repeat=4):
            count += 1
            err = _closure(build_diagram(f"D4[{','.join(map(str, bits))}]"), rng, triples)
            if err:
                bad.append(("D4", bits, err))
        return not bad, f"{count} algebras, {triples} triples each" + \
            (f"; failures {bad[:5]}" if bad else ", closed and associative")
    return _timed(4, "basis and monoid closure", 120.0, body)


def check_5() -> Result:
    def body():
        count = 0
        for q in _strings(6):
            regular_decomposition_check(_diag(q))
            count += 1
        return True, f"{count} strings decompose"
    return _timed(5, "regular decomposition", None, body)


def check_6() -> Result:
    def body():
        bad = []
        for name in ("A1", "A2", "A3", "A4", "D4"):
            d = build_diagram(name)
            S = d.nodes
            dims = [projective_module(d, S, J).dim for J in subsets(S)]
            if len(dims) != 2 ** len(S) or sum(dims) != group_order_by_type(d):
                bad.append((name, "Norton"))
            for J in subsets(S):
                if module_socle(projective_module(d, S, J)).dim != 1:
                    bad.append((name, "socle", sorted(J)))
            labels, mat = cartan_matrix(d, S)
            if any(mat[i][j] != mat[j][i] for i in range(len(mat)) for j in range(len(mat))):
                bad.append((name, "symmetry"))
            if name in ("A2", "A3"):
                for i, I in enumerate(labels):
                    facs = composition_factors(projective_module(d, S, I))
                    if [facs.get(J, 0) for J in labels] != mat[i]:
                        bad.append((name, "radical series", sorted(I)))
        return not bad, "Norton sums, simple socles, symmetric Cartan matrices" + \
            (f"; failures {bad[:5]}" if bad else " confirmed")
    return _timed(6, "0-Hecke internals", None, body)


def check_7() -> Result:
    def body():
        bad = []
        if quiver_hq(_diag("0")).shape() != {"point": 2}:
            bad.append("H2(0)")
        if quiver_hq(_diag("00")).shape() != {"point": 2, "path2": 1}:
            bad.append("H3(0)")
        q4 = lambda_component(quiver_hq(_diag("0011100")), (Partition([4]),))
        if q4.shape() != {"point": 4, "path2": 4, "cycle4": 1}:
            bad.append(("Q_[4]", q4.shape()))
        count = 0
        for q in _strings(4):
            count += 1
            if quiver_hq(_diag(q)).loops():
                bad.append(("loop", q))
        for bits in product((0, 1), repeat=4):
            count += 1
            d = build_diagram(f"D4[{','.join(map(str, bits))}]")
            zeros = [v for v in d.nodes if d.q(v) == 0]
            if zero_hecke_quiver(d, zeros).loops():
                bad.append(("loop", "D4", bits))
        return not bad, f"named shapes match, {count} quivers loopless" + \
            (f"; failures {bad}" if bad else "")
    return _timed(7, "quivers", 60.0, body)


def _pairs(text: str, q1: str, q2: str, kind: str) -> FormalSum:
    """'a | b + c | d' as a formal sum of label pairs."""
    out = FormalSum()
    for term in text.split("+"):
        a, b = term.split("|")
        out.add((parse_label(a, q1, kind), parse_label(b, q2, kind)), 1)
    return out


def _labels(text: str, q: str, kind: str) -> FormalSum:
    return FormalSum.of(parse_label(t, q, kind) for t in text.split("+"))


def examples() -> list[tuple[str, bool]]:
    """The worked induction/restriction examples, one (name, ok) per identity."""
    out = []
    L = parse_label

    def ind(x, q1, y, q2, bit, kind, want, q):
        got = induce_pair(L(x, q1, kind), L(y, q2, kind), bit)
        return got == _labels(want, q, kind)

    q, q1, q2 = "00100011", "00100", "11"
    out.append(("P-induction at a zero node, [2,1] side", ind("(3),[2],(1,2)", q1, "(1),[2,1]", q2, "0", P,
                                    "(3),[2],(1,2),[2,1]", q)))
    out.append(("P-induction at a zero node, [3] side", ind("(3),[2],(1,2)", q1, "(1),[3]", q2, "0", P,
                                     "(3),[2],(1,3),[3] + (3),[2],(1,2,1),[3]", q)))
    out.append(("C-induction at a zero node", ind("(3),[2],(1,1)", "0010", "(1),[2,1]", "011", "0", C,
                               "(3),[2],(1,2),[2,1] + (3),[2],(2,1),[2,1]"
                               " + (3),[2],(1,1,1),[2,1]", q)))
    # node 2 touches the nontrivial [2,1] block, so the first composition has size 2
    q, q1, q2 = "00110000111", "001100", "0111"
    x = L("(2),[2,1],(1,2),[2,1,1]", q, P)
    out.append(("P-restriction at a zero node", restrict_at(x, 7) == _pairs(
        "(2),[2,1],(1,1) | (1),[2,1,1] + (2),[2,1],(2) | (1),[2,1,1]", q1, q2, P)))
    out.append(("C-restriction at a zero node", restrict_at(x.with_kind(C), 7) == _pairs(
        "(2),[2,1],(1,1) | (1),[2,1,1]", q1, q2, C)))
    q, q1, q2 = "000110", "0001", "0"
    for kind in (P, C):
        out.append((f"{kind}-induction at a one node, (3,1) side", ind("(3,1),[2]", q1, "[1],(2)", q2, "1", kind,
                                             "(3,1),[3],(2)", q)))
        out.append((f"{kind}-induction at a one node, (1,3) side", ind("(1,3),[2]", q1, "[1],(2)", q2, "1", kind,
                                              "(1,3),[3],(2) + (1,2),[2,1],(1)", q)))
    x = L("(1,2),[2,1],(1)", q, P)
    out.append(("C-restriction at a one node", restrict_at(x.with_kind(C), 5) == _pairs(
        "(1,3),[2] | [1],(2) + (1,2),[1,1] | [1],(2)", q1, q2, C)))
    terms = restrict_at(x, 5)
    want = {
        # written P_{(1,2),[2]} (x) P_{[1],(1)}, isomorphic to Q_{(1,3)}^{(3,1)} (x) S_[2]
        (("(1,2),[2]", "[1],(1)"), False, ("(1,3)", "(3,1)")),
        (("(1,2),[1,1]", "[1],(1)"), True, None),
    }
    got = set()
    for t, m in terms.items():
        if m != 1 or isinstance(t, tuple):
            got.add(("unexpected", t, m))
            continue
        texts = tuple(",".join(map(str, p)) for p in t.parts)
        first = tuple(map(str, t.factors[0])) if not t.projective else None
        got.add((texts, t.projective, first))
    norm = {(tuple(_norm_text(s) for s in texts), proj, f) for texts, proj, f in want}
    out.append(("P-restriction at a one node, Q-module term", got == norm))
    return out


def _norm_text(text: str) -> str:
    """Drop a leading `[1]` placeholder and supply a final `[1]`."""
    toks = tokens(text)
    if toks and isinstance(toks[0], Partition):
        toks = toks[1:]
    if len(toks) % 2:
        toks.append(Partition([1]))
    return ",".join(map(str, toks))


def check_8() -> Result:
    def body():
        rows = examples()
        bad = [n for n, ok in rows if not ok]
        return not bad, f"{len(rows) - len(bad)}/{len(rows)} identities reproduced" + \
            (f"; failing {bad}" if bad else "")
    return _timed(8, "induction/restriction examples", None, body)


def check_9(max_len: int = 5) -> Result:
    def body():
        total, bad = 0, []
        for q in _strings(max_len):
            d = _diag(q)
            for node in d.nodes:
                n, fails = duality_all(d, node)
                total += n
                bad += [(q, node)] if fails else []
        return not bad, f"{total} label pairs, both adjunctions" + \
            (f"; failures at {bad[:5]}" if bad else " hold")
    return _timed(9, "two-sided duality", 300.0, body)


def check_10() -> Result:
    def body():
        bad = []
        c = Composition
        want = FormalSum.of([c([4]), c([2, 2]), c([3, 1]), c([1, 3]), c([1, 2, 1]), c([2, 2])])
        if shuffle_product([2], [2]) != want:
            bad.append("(2) sh (2)")
        if shuffle_product([1, 1], [1], u=(2, 1), v=(1,)) != \
                FormalSum.of([c([1, 2]), c([2, 1]), c([1, 1, 1])]):
            bad.append("21 sh 1")
        if restrict_composition([1, 2], 2) != FormalSum.of([(c([1, 1]), c([1])),
                                                           (c([2]), c([1]))]):
            bad.append("(1,2) restricted at 2")
        p = Partition
        if not (lr_coefficient(p([2]), p([1]), p([3])) == lr_coefficient(p([2]), p([1]),
                                                                       p([2, 1])) == 1):
            bad.append("c^[3], c^[2,1]")
        if any(lr_coefficient(p([2]), p([1]), lam) for lam in partitions(3)
               if lam not in (p([3]), p([2, 1]))):
            bad.append("other c^lam_[2],[1]")
        pairs = 0
        for a, b in product(range(1, 5), repeat=2):
            for mu in partitions(a):
                for nu in partitions(b):
                    pairs += 1
                    lhs = sum(lr_coefficient(mu, nu, lam) * hook_dim(lam)
                              for lam in partitions(a + b))
                    if lhs != hook_dim(mu) * hook_dim(nu) * comb(a + b, a):
                        bad.append(("LR sum", mu, nu))
        for n in range(1, 9):
            if sum(hook_dim(lam) ** 2 for lam in partitions(n)) != factorial(n):
                bad.append(("d^2", n))
        return not bad, f"shuffles, restriction, LR values, {pairs} LR sums, sum d^2" + \
            (f"; failures {bad[:5]}" if bad else " agree")
    return _timed(10, "combinatorics oracles", None, body)


def check_11(max_grade: int = 7) -> Result:
    def body():
        checked, fails = duality_failures(max_grade)
        ce = counterexample()
        ok = not fails and ce["in_delta_of_product"] == 0 and ce["in_product_of_deltas"] != 0
        return ok, (f"{checked} duality identities to grade {max_grade}"
                    f"{'' if not fails else f', {len(fails)} failures'}; counterexample "
                    f"coefficients {ce['in_delta_of_product']} vs {ce['in_product_of_deltas']}")
    return _timed(11, "tower duality", None, body)


def _runs_oracle(q: str) -> bool:
    zs = [len(r) for r in q.split("1") if r]
    return all(k <= 2 for k in zs) and zs.count(2) <= 1


def check_12() -> Result:
    def body():
        bad, count, brute = [], 0, 0
        for q in _strings(7):
            count += 1
            got = finite_rep_type(_diag(q))
            if got != _runs_oracle(q):
                bad.append(q)
            if max((len(r) for r in q.split("1")), default=0) <= 4:
                brute += 1
                if rep_type_brute(_diag(q)) != got:
                    bad.append(("brute", q))
        if finite_rep_type(_diag("0011100")):
            bad.append("0011100")
        return not bad, f"{count} patterns, {brute} also by quiver shapes; 0011100 infinite" + \
            (f"; failures {bad[:5]}" if bad else "")
    return _timed(12, "representation type", None, body)


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9,
          check_10, check_11, check_12]


def run_all(only=None) -> list[Result]:
    out = []
    for k, fn in enumerate(CHECKS, start=1):
        if only and k not in only:
            continue
        try:
            out.append(fn())
        except Exception as exc:  # a crash is a failed criterion, not a crashed suite
            out.append(Result(k, fn.__name__, False, f"{type(exc).__name__}: {exc}", 0.0))
    return out

"""Grothendieck groups of the type-A tower H(q), q in {0,1}^(n-1).

A label over q = 0^m1 1^n1 ... 0^ml 1^nl is an alternating sequence
alpha^1, lam^1, ..., alpha^l, lam^l of compositions and partitions, with
lam^i a partition of n_i + 1 and alpha^i a composition of one more than
the number of zero nodes in run i that commute with every nontrivial
neighbouring one block.  Labels print as in `(3),[2],(1,2),[2,1]`; a
trailing `[1]` for an empty last one-run is omitted.

Products insert a zero node between two strings and induce (case 1);
the coproduct restricts at every zero position.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from .combinat import Composition, Partition
from .coxeter import CoxeterDiagram, build_diagram
from .errors import DiagramError
from .formal import FormalSum
from .indres import QModuleDescriptor, induce, restrict
from .repthy import IrrLabel, context, irr_labels

P, C = "P", "C"


@lru_cache(maxsize=None)
def q_diagram(q: str) -> CoxeterDiagram:
    return build_diagram("q=" + q)


def runs(q: str) -> list[tuple[list[int], list[int]]]:
    """[(zero-run nodes, one-run nodes)] with nodes numbered from 1."""
    out = []
    i, n = 0, len(q)
    while True:
        zs = []
        while i < n and q[i] == "0":
            zs.append(i + 1)
            i += 1
        os_ = []
        while i < n and q[i] == "1":
            os_.append(i + 1)
            i += 1
        out.append((zs, os_))
        if i >= n:
            return out


@dataclass(frozen=True)
class TowerLabel:
    """P or C label over q; grade = len(q) + 1, or 0 for the unit S_empty."""

    kind: str
    q: str | None
    parts: tuple

    @property
    def grade(self) -> int:
        return 0 if self.q is None else len(self.q) + 1

    @classmethod
    def unit(cls, kind: str = C) -> "TowerLabel":
        return cls(kind, None, ())

    def is_unit(self) -> bool:
        return self.q is None

    def text(self) -> str:
        if self.is_unit():
            return "S_empty"
        parts = list(self.parts)
        if self.q[-1:] != "1":
            parts.pop()
        return ",".join(map(str, parts))

    def __repr__(self) -> str:
        if self.is_unit():
            return "S_empty"
        return f"{self.kind}[{self.q}]{self.text()}"

    def with_kind(self, kind: str) -> "TowerLabel":
        return TowerLabel(kind, self.q, self.parts)

    # conversions to and from IrrLabel over the path diagram
    def to_irr(self) -> IrrLabel:
        if self.is_unit():
            raise DiagramError("S_empty has no Irr label")
        blocks = runs(self.q)
        if len(self.parts) != 2 * len(blocks):
            raise DiagramError(f"{self.text()} does not match the block structure of q={self.q}")
        alphas = [Composition(p) for p in self.parts[0::2]]
        lams = [Partition(p) for p in self.parts[1::2]]
        for (zs, os_), lam in zip(blocks, lams):
            if lam.size != len(os_) + 1:
                raise DiagramError(f"partition {lam} does not fit a one-run of {len(os_)} nodes")
        I = set()
        for i, ((zs, os_), alpha) in enumerate(zip(blocks, alphas)):
            seg = _segment(blocks, lams, i)
            if alpha.size != len(seg) + 1:
                raise DiagramError(f"composition {alpha} should have size {len(seg) + 1} "
                                   f"in q={self.q}")
            I |= {seg[d - 1] for d in alpha.descent_set()}
        lam_tuple = tuple(lam for (zs, os_), lam in zip(blocks, lams) if os_)
        return IrrLabel(frozenset(I), lam_tuple)

    @classmethod
    def from_irr(cls, kind: str, q: str, label: IrrLabel) -> "TowerLabel":
        blocks = runs(q)
        it = iter(label.lam)
        lams = [next(it) if os_ else Partition([1]) for zs, os_ in blocks]
        parts = []
        for i in range(len(blocks)):
            seg = _segment(blocks, lams, i)
            desc = {k + 1 for k, v in enumerate(seg) if v in label.I}
            parts.append(Composition.from_descents(desc, len(seg) + 1))
            parts.append(Partition(lams[i]))
        return cls(kind, q, tuple(parts))


def _segment(blocks, lams, i) -> list[int]:
    """Zero nodes of run i in S^{0,lam}: drop ends touching nontrivial one-runs."""
    zs = list(blocks[i][0])
    if not zs:
        return zs
    if i > 0 and not lams[i - 1].is_row():
        zs = zs[1:]
    if zs and blocks[i][1] and not lams[i].is_row():
        zs = zs[:-1]
    return zs


_TOKEN = re.compile(r"\s*(\(([\d,\s]*)\)|\[([\d,\s]*)\])\s*(,|$)")


def tokens(text: str) -> list:
    """Split `(3),[2],(1,2)` into Composition and Partition objects."""
    text = text.strip()
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DiagramError(f"cannot parse label {text!r} at position {pos}")
        if m.group(2) is not None:
            nums = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
            out.append(Composition(nums))
        else:
            nums = [int(x) for x in m.group(3).replace(" ", "").split(",") if x]
            out.append(Partition(nums))
        pos = m.end()
    return out


def normalize_tokens(toks: list, want: int, text: str = "") -> list:
    """Drop placeholder `[1]` / `(1)` tokens and supply a missing final `[1]`."""
    toks = list(toks)
    if toks and isinstance(toks[0], Partition):
        if toks[0] != Partition([1]):
            raise DiagramError(f"label {text!r} must start with a composition")
        toks = toks[1:]
    while len(toks) > want and toks[-1] in (Composition([1]), Partition([1])):
        toks.pop()
    if len(toks) == want - 1:
        toks.append(Partition([1]))
    if len(toks) != want:
        raise DiagramError(f"label {text!r} has {len(toks)} parts; {want} are needed")
    for k, tok in enumerate(toks):
        expect = Composition if k % 2 == 0 else Partition
        if not isinstance(tok, expect):
            raise DiagramError(f"part {k + 1} of {text!r} should be a {expect.__name__.lower()}")
    return toks


def parse_label(text: str, q: str, kind: str = C) -> TowerLabel:
    """Read `(3),[2],(1,2)` over q, tolerating empty-block placeholders.

    A leading `[1]` before the first composition and surplus trailing
    `(1)` / `[1]` tokens stand for empty blocks and are dropped; a missing
    final `[1]` is supplied.
    """
    text = text.strip()
    if kind not in (P, C):
        raise DiagramError(f"kind must be P or C, got {kind!r}")
    if text in ("", "S_empty") and q is None:
        return TowerLabel.unit(kind)
    if q is None or any(c not in "01" for c in q):
        raise DiagramError(f"q must be a 0/1 string, got {q!r}")
    toks = normalize_tokens(tokens(text), 2 * len(runs(q)), text)
    label = TowerLabel(kind, q, tuple(toks))
    label.to_irr()
    return label


def labels_of_grade(n: int, kind: str = C) -> list[TowerLabel]:
    if n == 0:
        return [TowerLabel.unit(kind)]
    out = []
    for bits in cartesian("01", repeat=n - 1):
        q = "".join(bits)
        out += [TowerLabel.from_irr(kind, q, lab) for lab in irr_labels(q_diagram(q))]
    return out


# ------------------------------------------------------- splitting labels

def _side_blocks(q: str, off: int) -> list[frozenset]:
    return [frozenset(v + off for v in b) for b in context(q_diagram(q)).one_blocks]


def join(x: TowerLabel, y: TowerLabel, bit: str) -> tuple:
    """(S, k, label over S minus k) for x (x) y with node k = grade(x) set to bit."""
    if x.is_unit() or y.is_unit():
        raise DiagramError("join needs two labels of positive grade")
    if bit not in ("0", "1"):
        raise DiagramError(f"bit must be '0' or '1', got {bit!r}")
    q = x.q + bit + y.q
    S, k = q_diagram(q), x.grade
    a, b = x.to_irr(), y.to_irr()
    lam = dict(zip(_side_blocks(x.q, 0), a.lam))
    lam.update(zip(_side_blocks(y.q, k), b.lam))
    R = S.subdiagram([v for v in S.nodes if v != k])
    I = a.I | frozenset(v + k for v in b.I)
    return S, k, IrrLabel(I, tuple(lam[blk] for blk in context(R).one_blocks))


def split(q: str, k: int, label: IrrLabel, kind: str = C) -> tuple:
    """Inverse of join: a label over q minus node k as a pair of tower labels."""
    R = q_diagram(q).subdiagram([v for v in range(1, len(q) + 1) if v != k])
    lam = dict(zip(context(R).one_blocks, label.lam))
    left_q, right_q = q[:k - 1], q[k:]
    left = IrrLabel(frozenset(v for v in label.I if v < k),
                    tuple(lam[b] for b in _side_blocks(left_q, 0)))
    right = IrrLabel(frozenset(v - k for v in label.I if v > k),
                     tuple(lam[b] for b in _side_blocks(right_q, k)))
    return TowerLabel.from_irr(kind, left_q, left), TowerLabel.from_irr(kind, right_q, right)


@dataclass(frozen=True)
class QTerm:
    """A Q-module summand of a restriction, written over q1 (x) q2.

    `parts` holds, per side, the composition/partition sequence with each
    composition read on the inner zero nodes only; that is how such a
    summand is written as a P label.  `factors` lists per zero run the pair
    (alpha, beta) of Q_alpha^beta, alpha the top and beta the block sizes
    of the inner set inside the run.
    """

    parts: tuple
    factors: tuple
    top: tuple
    projective: bool

    def text(self) -> str:
        sides = [",".join(map(str, p)) for p in self.parts]
        tag = "" if self.projective else " (nonprojective)"
        return "Q[" + " x ".join(sides) + "]" + tag


def q_term(q: str, k: int, d) -> QTerm:
    """Render a QModuleDescriptor over q minus node k."""
    R = q_diagram(q).subdiagram([v for v in range(1, len(q) + 1) if v != k])
    lam = dict(zip(context(R).one_blocks, d.mu))
    parts, factors = [], []
    for side_q, off in ((q[:k - 1], 0), (q[k:], k)):
        side = []
        for zs, os_ in runs(side_q):
            zs = [v + off for v in zs]
            seg = [v for v in zs if v in d.inner]
            side.append(Composition.from_descents(
                {j + 1 for j, v in enumerate(seg) if v in d.I}, len(seg) + 1))
            blk = frozenset(v + off for v in os_)
            side.append(Partition(lam[blk]) if os_ else Partition([1]))
            amb = [v for v in zs if v in d.ambient]
            if amb:
                alpha = Composition.from_descents(
                    {j + 1 for j, v in enumerate(amb) if v in d.I}, len(amb) + 1)
                beta = Composition.from_descents(
                    {j + 1 for j, v in enumerate(amb) if v not in d.inner}, len(amb) + 1)
                factors.append((alpha, beta))
        parts.append(tuple(side))
    return QTerm(tuple(parts), tuple(factors), split(q, k, d.top, P), d.projective)


def induce_pair(x: TowerLabel, y: TowerLabel, bit: str) -> FormalSum:
    """(x (x) y) induced from H(q1) (x) H(q2) to H(q1 bit q2)."""
    if x.kind != y.kind:
        raise DiagramError("cannot induce a mixed P/C pair")
    S, k, lab = join(x, y, bit)
    res = induce(S, k, lab, x.kind)
    q = x.q + bit + y.q
    return FormalSum((TowerLabel.from_irr(x.kind, q, t), m) for t, m in res.terms.items())


def restrict_at(x: TowerLabel, k: int) -> FormalSum:
    """x restricted to H(q[:k-1]) (x) H(q[k:]); Q-module summands become QTerms."""
    if x.is_unit() or not 1 <= k <= len(x.q):
        raise DiagramError(f"cannot remove node {k} from {x!r}")
    res = restrict(q_diagram(x.q), k, x.to_irr(), x.kind)
    out = FormalSum()
    for t, m in res.terms.items():
        if isinstance(t, QModuleDescriptor):
            out.add(q_term(x.q, k, t), m)
        else:
            out.add(split(x.q, k, t, x.kind), m)
    return out


# ----------------------------------------------------------------- product

@lru_cache(maxsize=None)
def _hat(x: TowerLabel, y: TowerLabel) -> tuple:
    if x.kind != y.kind:
        raise DiagramError("cannot multiply a P label with a C label")
    if x.is_unit():
        return ((y, 1),)
    if y.is_unit():
        return ((x, 1),)
    return tuple(induce_pair(x, y, "0").items())


def hat_tensor(x, y) -> FormalSum:
    """Bilinear graded product; accepts labels or formal sums of labels."""
    xs = x if isinstance(x, dict) else FormalSum.single(x)
    ys = y if isinstance(y, dict) else FormalSum.single(y)
    out = FormalSum()
    for a, m in xs.items():
        for b, n in ys.items():
            for t, c in _hat(a, b):
                out.add(t, m * n * c)
    return out


# --------------------------------------------------------------- coproduct

@lru_cache(maxsize=None)
def _delta(x: TowerLabel) -> tuple:
    unit = TowerLabel.unit(x.kind)
    if x.is_unit():
        return (((unit, unit), 1),)
    out = FormalSum()
    out.add((unit, x), 1)
    for i, bit in enumerate(x.q, start=1):
        if bit == "0":
            for pair, m in restrict_at(x, i).items():
                out.add(pair, m)
    out.add((x, unit), 1)
    return tuple(out.items())


def coproduct(x) -> FormalSum:
    xs = x if isinstance(x, dict) else FormalSum.single(x)
    out = FormalSum()
    for a, m in xs.items():
        for pair, c in _delta(a):
            out.add(pair, m * c)
    return out


def tensor_product_of_pairs(u: FormalSum, v: FormalSum) -> FormalSum:
    """(a (x) b) * (c (x) d) = (a hat c) (x) (b hat d), extended bilinearly."""
    out = FormalSum()
    for (a, b), m in u.items():
        for (c, d), n in v.items():
            left = hat_tensor(a, c)
            right = hat_tensor(b, d)
            for l, i in left.items():
                for r, j in right.items():
                    out.add((l, r), m * n * i * j)
    return out


# ----------------------------------------------------------------- pairing

def _key(label: TowerLabel):
    return (label.q, label.parts)


def pairing(x, y) -> int:
    """<P_a, C_b> = delta_ab, zero across grades; on pairs it is the product."""
    xs = x if isinstance(x, dict) else FormalSum.single(x)
    ys = y if isinstance(y, dict) else FormalSum.single(y)
    yk: dict = {}
    for b, n in ys.items():
        k = tuple(_key(t) for t in b) if isinstance(b, tuple) else _key(b)
        yk[k] = yk.get(k, 0) + n
    total = 0
    for a, m in xs.items():
        k = tuple(_key(t) for t in a) if isinstance(a, tuple) else _key(a)
        total += m * yk.get(k, 0)
    return total


# ------------------------------------------------------------ the checks

def duality_failures(max_grade: int) -> tuple[int, list]:
    """<x hat x', y> = <x (x) x', Delta y> and <Delta x, y (x) y'> = <x, y hat y'>.

    Checked for all monomials with positive grades summing to at most
    max_grade.  Since <P_a, C_b> = delta_ab, each identity says that a
    product coefficient equals a coproduct coefficient, so both sides are
    compared as sparse matrices.  Returns (identities checked, failures).
    """
    labels = {n: labels_of_grade(n, C) for n in range(1, max_grade + 1)}
    checked = 0
    failures = []
    for total in range(2, max_grade + 1):
        for kind in (P, C):
            other = C if kind == P else P
            prod: dict = {}
            for g in range(1, total):
                for a in labels[g]:
                    for b in labels[total - g]:
                        xa, xb = a.with_kind(kind), b.with_kind(kind)
                        for t, m in hat_tensor(xa, xb).items():
                            prod[(_key(xa), _key(xb), _key(t))] = m
            cop: dict = {}
            for y in labels[total]:
                y = y.with_kind(other)
                for (u, v), m in coproduct(y).items():
                    if u.is_unit() or v.is_unit():
                        continue
                    cop[(_key(u), _key(v), _key(y))] = m
            pairs = sum(len(labels[g]) * len(labels[total - g]) for g in range(1, total))
            checked += pairs * len(labels[total])
            for key in set(prod) | set(cop):
                if prod.get(key, 0) != cop.get(key, 0):
                    failures.append((kind, key, prod.get(key, 0), cop.get(key, 0)))
    return checked, failures


def coassociativity_failures(max_grade: int, kind: str = C) -> tuple[int, list]:
    """(Delta (x) 1) Delta = (1 (x) Delta) Delta on every label up to max_grade."""
    checked, failures = 0, []
    for n in range(1, max_grade + 1):
        for x in labels_of_grade(n, kind):
            left, right = FormalSum(), FormalSum()
            for (a, b), m in coproduct(x).items():
                for (c, d), k in coproduct(a).items():
                    left.add((c, d, b), m * k)
                for (c, d), k in coproduct(b).items():
                    right.add((a, c, d), m * k)
            checked += 1
            if left != right:
                failures.append(x)
    return checked, failures


def counterexample() -> dict:
    """x = C_{(1),[2]}, y = C_{(2)}: the term C_{(2)} (x) C_{(1),[2]}."""
    x = parse_label("(1),[2]", "1", C)
    y = parse_label("(2)", "0", C)
    term = (y, x)
    lhs = coproduct(hat_tensor(x, y))
    rhs = tensor_product_of_pairs(coproduct(x), coproduct(y))
    return {"x": x, "y": y, "product": hat_tensor(x, y), "term": term,
            "in_delta_of_product": lhs.get(term, 0), "in_product_of_deltas": rhs.get(term, 0)}

"""Induction and restriction between H_R(q) and H_S(q) for R = S minus one node.

Case 1 removes a zero node s: the one blocks are untouched and everything
reduces to the 0-Hecke formulas on S^{0,lam}.  Case 2 removes a one node
t: the block B holding t splits, lam branches by Littlewood-Richardson
coefficients, and restricted projectives become Q-modules.

Larger gaps S minus R are handled by removing nodes one at a time.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .combinat import Partition, hook_dim, lr_coefficient, partitions
from .coxeter import CoxeterDiagram, path_order
from .errors import DiagramError, GuardExceeded, OutOfScopeError
from .formal import FormalSum
from .heckealg import dimension, hecke_monoid
from .repthy import IrrLabel, context, irr_labels, pim_dim
from .zerohecke import induce_C0, projective_module, restrict_P0

P, C, Q = "P", "C", "Q"


@dataclass(frozen=True)
class QModuleDescriptor:
    """Q_{I,inner}^{ambient} (x) S_mu over H_R(q); its top is C_{I,mu}."""

    I: frozenset
    inner: frozenset
    ambient: frozenset
    mu: tuple
    projective: bool

    @property
    def top(self) -> IrrLabel:
        return IrrLabel(self.I, self.mu)

    def __repr__(self) -> str:
        def fmt(x):
            return "{" + ",".join(map(str, sorted(x, key=str))) + "}"
        flag = "proj" if self.projective else "nonproj"
        return f"Q[{fmt(self.I)},{fmt(self.inner)},{fmt(self.ambient)}|{';'.join(map(str, self.mu))}|{flag}]"


@dataclass
class IndResResult:
    kind: str             # "P", "C" or "Q" (mixed projective/Q-module sum)
    terms: FormalSum
    source: CoxeterDiagram
    target: CoxeterDiagram
    removed: object
    parameter: int
    direction: str        # "induce" or "restrict"

    def tops(self) -> FormalSum:
        """Terms with every Q-module replaced by its top label."""
        return self.terms.map(lambda x: x.top if isinstance(x, QModuleDescriptor) else x)


# ------------------------------------------------------------ set-up helpers

def _split(diagram: CoxeterDiagram, node):
    if diagram.params is None:
        raise DiagramError("diagram carries no parameters")
    if node not in diagram.index:
        raise DiagramError(f"unknown node {node!r}")
    R = diagram.subdiagram([v for v in diagram.nodes if v != node])
    return R, int(diagram.q(node))


def _map_lam(src_ctx, dst_ctx, lam: tuple) -> tuple:
    """Transport lam between two contexts whose one blocks coincide."""
    by_block = dict(zip(src_ctx.one_blocks, lam))
    return tuple(by_block[b] for b in dst_ctx.one_blocks)


def _check_kind(kind):
    if kind not in (P, C):
        raise DiagramError(f"kind must be 'P' or 'C', got {kind!r}")


class _Case2:
    """Branching data for removing the one node t from block B."""

    def __init__(self, S: CoxeterDiagram, R: CoxeterDiagram, t):
        self.S, self.R, self.t = S, R, t
        self.cs, self.cr = context(S), context(R)
        self.cs.require_type_a()
        self.cr.require_type_a()
        self.k = self.cs.block_index(t)
        order = path_order(S, self.cs.one_blocks[self.k])
        pos = order.index(t)
        self.sides = [frozenset(order[:pos]), frozenset(order[pos + 1:])]
        rest = {b: i for i, b in enumerate(self.cr.one_blocks)}
        self.side_index = [rest.get(side) for side in self.sides]

    def restrict_lam(self, lam: tuple) -> list[tuple[tuple, int]]:
        """[(mu, c^lam_mu)] for lam an S-character."""
        lam_b = lam[self.k]
        choices = [partitions(len(side) + 1) if side else [Partition([1])] for side in self.sides]
        out = []
        for left, right in product(*choices):
            c = lr_coefficient(left, right, lam_b)
            if not c:
                continue
            mu = self._mu_from(lam, left, right)
            out.append((mu, c))
        return out

    def _mu_from(self, lam, left, right) -> tuple:
        chosen = {}
        for b, p in zip(self.cs.one_blocks, lam):
            if b != self.cs.one_blocks[self.k]:
                chosen[b] = p
        for side, p in zip(self.sides, (left, right)):
            if side:
                chosen[side] = p
        return tuple(chosen[b] for b in self.cr.one_blocks)

    def induce_mu(self, mu: tuple) -> list[tuple[tuple, int]]:
        """[(lam, c^lam_mu)] for mu an R-character."""
        by_block = dict(zip(self.cr.one_blocks, mu))
        parts = [by_block[side] if side else Partition([1]) for side in self.sides]
        size = len(self.cs.one_blocks[self.k]) + 1
        out = []
        for lam_b in partitions(size):
            c = lr_coefficient(parts[0], parts[1], lam_b)
            if not c:
                continue
            lam = []
            for b in self.cs.one_blocks:
                lam.append(lam_b if b == self.cs.one_blocks[self.k] else by_block[b])
            out.append((tuple(lam), c))
        return out


def q_projective(diagram: CoxeterDiagram, I: frozenset, inner: frozenset,
                 ambient: frozenset) -> bool:
    """Whether Q_{I,inner}^{ambient} is projective.

    It is the tensor product over components c of the ambient set of
    Q_{I n c, inner n c}^c.  A factor with inner n c = c is P_{I n c}; one
    with I n c empty is spanned by the identity alone, so it is
    C_empty = P_empty.  Any other factor is smaller than its projective
    cover P_{I n c}^c and so is not projective.
    """
    for comp in diagram.components(ambient):
        comp = frozenset(comp)
        if I & comp and not comp <= inner:
            return False
    return True


# ------------------------------------------------------------------- case 1

def induce_case1(S: CoxeterDiagram, s, label: IrrLabel, kind: str = P,
                 guard: int | None = None) -> IndResResult:
    _check_kind(kind)
    R, qs = _split(S, s)
    if qs != 0:
        raise DiagramError(f"node {s!r} has parameter {qs}; case 1 needs a zero node")
    cs, cr = context(S), context(R)
    cr.check_label(label)
    lam = _map_lam(cr, cs, label.lam)
    s0 = cs.s0(lam)
    terms = FormalSum()
    if kind == P:
        terms.add(IrrLabel(label.I, lam))
        if s in s0:
            terms.add(IrrLabel(label.I | {s}, lam))
    else:
        for D, m in induce_C0(S, s0, s0 - {s}, label.I, guard).items():
            terms.add(IrrLabel(D, lam), m)
    return IndResResult(kind, terms, R, S, s, 0, "induce")


def restrict_case1(S: CoxeterDiagram, s, label: IrrLabel, kind: str = P,
                   guard: int | None = None) -> IndResResult:
    _check_kind(kind)
    R, qs = _split(S, s)
    if qs != 0:
        raise DiagramError(f"node {s!r} has parameter {qs}; case 1 needs a zero node")
    cs, cr = context(S), context(R)
    cs.check_label(label)
    mu = _map_lam(cs, cr, label.lam)
    s0 = cs.s0(label.lam)
    r0 = s0 - {s}
    terms = FormalSum()
    if kind == P:
        for K, m in restrict_P0(S, s0, r0, label.I, guard).items():
            terms.add(IrrLabel(K, mu), m)
    else:
        terms.add(IrrLabel(label.I & r0, mu))
    return IndResResult(kind, terms, S, R, s, 0, "restrict")


# ------------------------------------------------------------------- case 2

def induce_case2(S: CoxeterDiagram, t, label: IrrLabel, kind: str = P) -> IndResResult:
    _check_kind(kind)
    R, qt = _split(S, t)
    if qt != 1:
        raise DiagramError(f"node {t!r} has parameter {qt}; case 2 needs a one node")
    br = _Case2(S, R, t)
    br.cr.check_label(label)
    terms = FormalSum()
    for lam, c in br.induce_mu(label.lam):
        if label.I <= br.cs.s0(lam):
            terms.add(IrrLabel(label.I, lam), c)
    return IndResResult(kind, terms, R, S, t, 1, "induce")


def restrict_case2(S: CoxeterDiagram, t, label: IrrLabel, kind: str = P) -> IndResResult:
    _check_kind(kind)
    R, qt = _split(S, t)
    if qt != 1:
        raise DiagramError(f"node {t!r} has parameter {qt}; case 2 needs a one node")
    br = _Case2(S, R, t)
    br.cs.check_label(label)
    inner = br.cs.s0(label.lam)
    terms = FormalSum()
    for mu, c in br.restrict_lam(label.lam):
        if kind == C:
            terms.add(IrrLabel(label.I, mu), c)
            continue
        ambient = br.cr.s0(mu)
        if not inner <= ambient:
            raise AssertionError("S^{0,lam} must lie in R^{0,mu} when c != 0")
        terms.add(QModuleDescriptor(label.I, inner, ambient, mu,
                                    q_projective(R, label.I, inner, ambient)), c)
    return IndResResult(Q if kind == P else C, terms, S, R, t, 1, "restrict")


# --------------------------------------------------------------- dispatch

def induce(S: CoxeterDiagram, node, label: IrrLabel, kind: str = P,
           guard: int | None = None) -> IndResResult:
    if S.q(node) == 0:
        return induce_case1(S, node, label, kind, guard)
    return induce_case2(S, node, label, kind)


def restrict(S: CoxeterDiagram, node, label: IrrLabel, kind: str = P,
             guard: int | None = None) -> IndResResult:
    if S.q(node) == 0:
        return restrict_case1(S, node, label, kind, guard)
    return restrict_case2(S, node, label, kind)


def restrict_chain(S: CoxeterDiagram, removed, label: IrrLabel, kind: str = C,
                   guard: int | None = None) -> FormalSum:
    """Restrict through several single-node removals in diagram order.

    Only the C side chains cleanly (Q-modules are not labels), so P is
    accepted only while every removed node is a zero node.
    """
    removed = [v for v in S.nodes if v in set(removed)]
    cur = FormalSum.single(label)
    diagram = S
    for v in removed:
        if kind == P and diagram.q(v) != 0:
            raise OutOfScopeError("chained P-restriction through a one node gives Q-modules")
        nxt = FormalSum()
        for lab, m in cur.items():
            res = restrict(diagram, v, lab, kind, guard)
            for x, c in res.terms.items():
                nxt.add(x, m * c)
        cur = nxt
        diagram = res.target if cur else diagram.subdiagram([u for u in diagram.nodes if u != v])
    return cur


def induce_chain(S: CoxeterDiagram, removed, label: IrrLabel, kind: str = P,
                 guard: int | None = None) -> FormalSum:
    """Induce from H_R(q), R = S minus `removed`, adding nodes back in reverse order."""
    removed = [v for v in S.nodes if v in set(removed)]
    chain = [S]
    for v in removed:
        chain.append(chain[-1].subdiagram([u for u in chain[-1].nodes if u != v]))
    cur = FormalSum.single(label)
    for v, big in zip(reversed(removed), reversed(chain[:-1])):
        nxt = FormalSum()
        for lab, m in cur.items():
            for x, c in induce(big, v, lab, kind, guard).terms.items():
                nxt.add(x, m * c)
        cur = nxt
    return cur


# ---------------------------------------------------------------- duality

def pair(p_side: FormalSum, c_side: FormalSum) -> int:
    """<P, C> with <P_i, C_j> = delta_ij; a Q-module pairs through its top."""
    total = 0
    for x, m in p_side.items():
        key = x.top if isinstance(x, QModuleDescriptor) else x
        total += m * c_side.get(key, 0)
    return total


def duality_check(S: CoxeterDiagram, node, r_label: IrrLabel, s_label: IrrLabel,
                  guard: int | None = None) -> dict:
    """Both adjunctions for one pair of labels.

    up:   <P^R up, C^S> vs <P^R, C^S down>
    down: <P^S down, C^R> vs <P^S, C^R up>
    """
    up_l = pair(induce(S, node, r_label, P, guard).terms, FormalSum.single(s_label))
    up_r = pair(FormalSum.single(r_label), restrict(S, node, s_label, C, guard).terms)
    dn_l = pair(restrict(S, node, s_label, P, guard).terms, FormalSum.single(r_label))
    dn_r = pair(FormalSum.single(s_label), induce(S, node, r_label, C, guard).terms)
    return {"up": (up_l, up_r), "down": (dn_l, dn_r), "ok": up_l == up_r and dn_l == dn_r}


def duality_all(S: CoxeterDiagram, node, guard: int | None = None) -> tuple[int, list]:
    """Check every (R-label, S-label) pair; returns (pairs checked, failures)."""
    R, _ = _split(S, node)
    r_labels, s_labels = irr_labels(R), irr_labels(S)
    ind_p = {a: induce(S, node, a, P, guard).terms for a in r_labels}
    ind_c = {a: induce(S, node, a, C, guard).terms for a in r_labels}
    res_p = {b: restrict(S, node, b, P, guard).terms for b in s_labels}
    res_c = {b: restrict(S, node, b, C, guard).terms for b in s_labels}
    failures = []
    for a in r_labels:
        for b in s_labels:
            one_a, one_b = FormalSum.single(a), FormalSum.single(b)
            up = (pair(ind_p[a], one_b), pair(one_a, res_c[b]))
            down = (pair(res_p[b], one_a), pair(one_b, ind_c[a]))
            if up[0] != up[1] or down[0] != down[1]:
                failures.append((a, b, up, down))
    return len(r_labels) * len(s_labels), failures


# ------------------------------------------------------ semantic checks

SEMANTIC_MAX_DIM = 200


def _sign_of(p: Partition) -> int:
    if Partition(p).is_row():
        return 1
    if len(p) == Partition(p).size:
        return -1
    raise OutOfScopeError("explicit modules are built only for one-dimensional characters")


def module_actions(R: CoxeterDiagram, label: IrrLabel, kind: str) -> tuple[int, dict]:
    """(dim, node -> sparse columns) for P or C of H_R(q) when d_lam = 1."""
    ctx = context(R)
    ctx.check_label(label)
    signs = [_sign_of(p) for p in label.lam]
    s0 = ctx.s0(label.lam)
    if kind == P:
        M = projective_module(R, s0, label.I)
        dim = M.dim
        zero_part = M.actions
    else:
        dim = 1
        zero_part = {s: [{0: 1}] if s in label.I else [{}] for s in s0}
    acts = {}
    for v in R.nodes:
        if v in s0:
            acts[v] = zero_part[v]
        elif R.q(v) == 0:
            acts[v] = [{} for _ in range(dim)]
        else:
            sg = signs[ctx.block_index(v)]
            acts[v] = [{j: sg} for j in range(dim)]
    return dim, acts


def semantic_induction_dim(S: CoxeterDiagram, node, label: IrrLabel, kind: str,
                           max_dim: int = SEMANTIC_MAX_DIM) -> int:
    """dim of H_S(q) (x)_{H_R(q)} M computed from the monoid, by linear algebra.

    The tensor product is H_S (x) M modulo h T_r (x) m - h (x) T_r m.
    """
    R, _ = _split(S, node)
    d_s = dimension(S)
    if d_s > max_dim:
        raise GuardExceeded("H_S(q) for the semantic tensor product", d_s, max_dim)
    monoid = hecke_monoid(S)
    basis = monoid.basis_positions()
    where = {x: k for k, x in enumerate(basis)}
    dim_m, acts = module_actions(R, label, kind)
    ncols = d_s * dim_m
    rows = []
    for r in R.nodes:
        g = monoid.generator_position(r)
        for k, x in enumerate(basis):
            hk = where[monoid.multiply_positions(x, g)]
            for j in range(dim_m):
                row = {hk * dim_m + j: Fraction(1)}
                for i, c in acts[r][j].items():
                    key = k * dim_m + i
                    row[key] = row.get(key, 0) - c
                row = {a: b for a, b in row.items() if b}
                if row:
                    rows.append(row)
    return ncols - len(linalg.sparse_echelon(rows))


def predicted_induction_dim(S: CoxeterDiagram, node, label: IrrLabel, kind: str) -> int:
    res = induce(S, node, label, kind)
    if kind == P:
        return sum(m * pim_dim(S, x) for x, m in res.terms.items())
    return sum(m * _simple(x) for x, m in res.terms.items())


def _simple(label: IrrLabel) -> int:
    out = 1
    for p in label.lam:
        out *= hook_dim(p)
    return out

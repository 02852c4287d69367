"""Module theory of the 0-Hecke algebra H_S(0) of a simply-laced diagram.

Subsets of generators label simples C_I and projective indecomposables
P_I.  P_I is realized on the descent class {w : D(w) = I} with

    pi_s b_w = b_w       if s is a left descent of w,
             = 0         if not and D(sw) != I,
             = b_{sw}    otherwise.

Module radicals come from the trace form of the regular representation
(Dickson's criterion, characteristic zero).  A second route computes tops
through Hom(M, C_J), which for partial-map actions reduces to a
union-find count; the two are cross-checked in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import linalg
from .coxeter import (CoxeterDiagram, GroupElement, bruhat_leq, enumerate_group,
                      _table, group_order_by_type)
from .errors import DiagramError, GuardExceeded, InvariantError
from .formal import FormalSum
from .quiver import Quiver

RADICAL_GUARD = 2500


def subsets(nodes: Iterable) -> list[frozenset]:
    nodes = list(nodes)
    return [frozenset(c) for k in range(len(nodes) + 1) for c in combinations(nodes, k)]


@dataclass
class ModuleRealization:
    """Explicit module: basis labels and one sparse-column matrix per generator.

    actions[s][j] is the sparse image of basis vector j under pi_s.
    Relations are checked on construction.
    """

    diagram: CoxeterDiagram
    generators: tuple
    basis_labels: list
    actions: dict

    def __post_init__(self):
        self.generators = self.diagram.ordered(self.generators)
        d = self.dim
        for s in self.generators:
            cols = self.actions.get(s)
            if cols is None or len(cols) != d:
                raise InvariantError(f"missing or malformed action of generator {s!r}")
        self.check_relations()

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def check_relations(self) -> None:
        acts = self.actions
        for s in self.generators:
            a = acts[s]
            if linalg.mat_mul(a, a) != _clean(a):
                raise InvariantError(f"pi_{s} is not idempotent")
        gens = self.generators
        for i, s in enumerate(gens):
            for t in gens[i + 1:]:
                a, b = acts[s], acts[t]
                if self.diagram.adjacent(s, t):
                    lhs = linalg.mat_mul(a, linalg.mat_mul(b, a))
                    rhs = linalg.mat_mul(b, linalg.mat_mul(a, b))
                else:
                    lhs, rhs = linalg.mat_mul(a, b), linalg.mat_mul(b, a)
                if lhs != rhs:
                    raise InvariantError(f"braid relation fails for {s!r}, {t!r}")

    def is_partial_map(self) -> bool:
        """Every generator sends each basis vector to 0 or to a basis vector."""
        return all(not col or (len(col) == 1 and next(iter(col.values())) == 1)
                   for s in self.generators for col in self.actions[s])

    def restrict(self, nodes: Iterable) -> "ModuleRealization":
        nodes = frozenset(nodes)
        if not nodes <= frozenset(self.generators):
            raise DiagramError("can only restrict to a subset of the generators")
        return ModuleRealization(self.diagram, tuple(nodes), list(self.basis_labels),
                                 {s: self.actions[s] for s in nodes})

    def matrix(self, s) -> list[list]:
        return linalg.dense_columns(self.actions[s], self.dim)


def _clean(cols):
    return [{i: x for i, x in c.items() if x} for c in cols]


def _table_for(diagram: CoxeterDiagram, nodes, guard):
    return enumerate_group(diagram, nodes, guard)


# ------------------------------------------------------------ monoid products

def pi_product(u: GroupElement, v: GroupElement) -> GroupElement:
    """pi_u pi_v = pi_result, folding a reduced word of u onto v letter by letter."""
    u._check(v)
    cur = v
    for s in reversed(u.reduced_word()):
        nxt = cur.times_generator(s, "left")
        if nxt.length() > cur.length():
            cur = nxt
    return cur


def pibar_expand(w: GroupElement, guard: int | None = None) -> FormalSum:
    """pibar_w = sum over u <= w of (-1)^(l(w)-l(u)) pi_u."""
    table = _table_for(w.diagram, w.support(), guard)
    lw = w.length()
    out = FormalSum()
    for p in range(table.size):
        u = table.element(p)
        if bruhat_leq(u, w):
            out.add(u, (-1) ** (lw - table.lengths[p]))
    return out


# ------------------------------------------------------------- realizations

def _partial_map_module(diagram, generators, labels, targets) -> ModuleRealization:
    actions = {}
    for s, tgt in targets.items():
        actions[s] = [{} if t < 0 else {t: 1} for t in tgt]
    return ModuleRealization(diagram, tuple(generators), labels, actions)


@lru_cache(maxsize=1024)
def _projective_maps(nodes, edges, smask: int, imask: int, jmask: int):
    """Basis positions of {w in W_J : D(w) = I} and the partial maps pi_s.

    J = S gives P_I^S; a smaller J gives the quotient Q_{I,J}^S, in which
    moves leaving W_J and generators outside J act by zero.
    """
    table = _table(nodes, edges, jmask)
    basis = [p for p in range(table.size) if table.rdes[p] == imask]
    where = {p: k for k, p in enumerate(basis)}
    maps = {}
    for i in range(len(nodes)):
        if not smask >> i & 1:
            continue
        if not jmask >> i & 1:
            maps[i] = tuple([-1] * len(basis))
            continue
        lm = table.lmul[i]
        tgt = []
        for p in basis:
            x = lm[p]
            if table.lengths[x] < table.lengths[p]:
                tgt.append(where[p])
            else:
                tgt.append(where.get(x, -1))
        maps[i] = tuple(tgt)
    return table, tuple(basis), maps


def _check_sets(diagram, *chain):
    for small, big in zip(chain, chain[1:]):
        if not small <= big:
            raise DiagramError("expected nested generator sets")
    for v in chain[-1]:
        if v not in diagram.index:
            raise DiagramError(f"unknown node {v!r}")


def projective_module(diagram: CoxeterDiagram, ambient: Iterable, target: Iterable,
                      guard: int | None = None) -> ModuleRealization:
    """P_J over H_I(0) on the descent class of J."""
    return q_module(diagram, ambient, target, ambient, guard)


def q_module(diagram: CoxeterDiagram, ambient: Iterable, I: Iterable, J: Iterable,
             guard: int | None = None) -> ModuleRealization:
    """Q_{I,J}^S: basis {w in W_J : D(w) = I}; generators outside J act by 0."""
    S, I, J = frozenset(ambient), frozenset(I), frozenset(J)
    _check_sets(diagram, I, J, S)
    _table_for(diagram, J, guard)
    table, basis, maps = _projective_maps(diagram.nodes, diagram.edges, diagram.mask(S),
                                          diagram.mask(I), diagram.mask(J))
    labels = [table.element(p) for p in basis]
    targets = {diagram.nodes[i]: t for i, t in maps.items()}
    return _partial_map_module(diagram, S, labels, targets)


def simple_module(diagram: CoxeterDiagram, ambient: Iterable, I: Iterable) -> ModuleRealization:
    """C_I: pi_s acts by 1 for s in I and by 0 otherwise."""
    S, I = frozenset(ambient), frozenset(I)
    _check_sets(diagram, I, S)
    acts = {s: [{0: 1}] if s in I else [{}] for s in S}
    return ModuleRealization(diagram, tuple(S), [I], acts)


# -------------------------------------------------------------- Cartan data

@lru_cache(maxsize=256)
def _cartan_counts(nodes, edges, smask: int) -> dict:
    table = _table(nodes, edges, smask)
    inv = table.inverse_pos
    counts: dict[tuple[int, int], int] = {}
    for p in range(table.size):
        key = (table.rdes[inv[p]], table.rdes[p])
        counts[key] = counts.get(key, 0) + 1
    return counts


def cartan_number(diagram: CoxeterDiagram, ambient: Iterable, I: Iterable, J: Iterable,
                  guard: int | None = None) -> int:
    """#{w in W_S : D(w^{-1}) = I, D(w) = J}."""
    S = frozenset(ambient)
    _check_sets(diagram, frozenset(I), S)
    _check_sets(diagram, frozenset(J), S)
    _table_for(diagram, S, guard)
    counts = _cartan_counts(diagram.nodes, diagram.edges, diagram.mask(S))
    return counts.get((diagram.mask(I), diagram.mask(J)), 0)


def cartan_matrix(diagram: CoxeterDiagram, ambient: Iterable, guard: int | None = None):
    """(labels, matrix) with labels = all subsets of S in canonical order."""
    S = diagram.ordered(ambient)
    labels = subsets(S)
    _table_for(diagram, S, guard)
    counts = _cartan_counts(diagram.nodes, diagram.edges, diagram.mask(S))
    masks = [diagram.mask(x) for x in labels]
    return labels, [[counts.get((a, b), 0) for b in masks] for a in masks]


# ----------------------------------------------------------------- radicals

@dataclass(frozen=True)
class AlgebraRadical:
    table: object
    vectors: tuple        # sparse vectors over table positions


@lru_cache(maxsize=64)
def _algebra_radical(nodes, edges, smask: int) -> AlgebraRadical:
    table = _table(nodes, edges, smask)
    size = table.size
    prod = [[table.pi_product(a, b) for b in range(size)] for a in range(size)]
    fixed = [sum(1 for x in range(size) if prod[w][x] == x) for w in range(size)]
    gram = [[fixed[prod[u][v]] for v in range(size)] for u in range(size)]
    null = linalg.nullspace(gram, size)
    return AlgebraRadical(table, tuple(linalg.to_sparse(v) for v in null))


def algebra_radical(diagram: CoxeterDiagram, ambient: Iterable,
                    guard: int = RADICAL_GUARD) -> AlgebraRadical:
    """rad H_S(0) as the null space of the trace Gram matrix Tr(L_{pi_u pi_v})."""
    S = frozenset(ambient)
    order = group_order_by_type(diagram, S)
    if order > guard:
        raise GuardExceeded("radical computation for W_S", order, guard)
    rad = _algebra_radical(diagram.nodes, diagram.edges, diagram.mask(S))
    if len(rad.vectors) != order - 2 ** len(S):
        raise InvariantError("dim rad H_S(0) differs from |W| - 2^|S|")
    return rad


def _orbit(M: ModuleRealization, table, j: int) -> list:
    """pi_u b_j for every u in the table, built along ShortLex words."""
    node = M.diagram.nodes
    out = [None] * table.size
    out[0] = {j: 1}
    for p in range(1, table.size):
        s = table.words[p][0]
        prev = table.lmul[s][p]
        out[p] = linalg.mat_vec(M.actions[node[s]], out[prev])
    return out


def _rad_operators(M: ModuleRealization, guard: int) -> list[list[dict]]:
    """Sparse-column matrices of a basis of rad(A) acting on M."""
    rad = algebra_radical(M.diagram, M.generators, guard)
    orbits = [_orbit(M, rad.table, j) for j in range(M.dim)]
    ops = []
    for c in rad.vectors:
        cols = []
        for j in range(M.dim):
            col: dict = {}
            for p, x in c.items():
                linalg.axpy(col, x, orbits[j][p])
            cols.append(col)
        ops.append(cols)
    return ops


def submodule(M: ModuleRealization, vectors: Iterable[dict]) -> ModuleRealization:
    """The span of the given vectors, which must be M-stable, as a module.

    Basis labels are the spanning vectors (coordinates in M) of a reduced
    echelon basis, ordered by pivot.
    """
    basis = linalg.reduced_basis(vectors)
    pivots = sorted(basis)
    pos = {p: k for k, p in enumerate(pivots)}
    acts = {}
    for s in M.generators:
        cols = []
        for p in pivots:
            img = linalg.mat_vec(M.actions[s], basis[p])
            coords = linalg.coordinates(img, basis)
            if coords is None:
                raise InvariantError("subspace is not a submodule")
            cols.append({pos[q]: x for q, x in coords.items()})
        acts[s] = cols
    labels = [tuple(sorted(basis[p].items())) for p in pivots]
    return ModuleRealization(M.diagram, M.generators, labels, acts)


def hom_functionals(M: ModuleRealization, J: frozenset) -> list[list]:
    """Basis of Hom(M, C_J) as functionals f with f pi_s = chi_J(s) f."""
    rows = []
    for s in M.generators:
        chi = 1 if s in J else 0
        for j, col in enumerate(M.actions[s]):
            v = dict(col)
            linalg.axpy(v, -chi, {j: 1})
            if v:
                rows.append(linalg.to_dense(v, M.dim))
    return linalg.nullspace(rows, M.dim)


def module_radical(M: ModuleRealization, method: str = "trace",
                   guard: int = RADICAL_GUARD) -> ModuleRealization:
    """rad(M) = rad(A) M (trace route) or the common kernel of all maps to simples."""
    if method == "trace":
        vecs = [col for op in _rad_operators(M, guard) for col in op]
    elif method == "hom":
        funcs = [f for J in subsets(M.generators) for f in hom_functionals(M, J)]
        vecs = [linalg.to_sparse(v) for v in linalg.nullspace(funcs, M.dim)] if funcs else \
            [{j: 1} for j in range(M.dim)]
    else:
        raise DiagramError(f"unknown radical method {method!r}")
    return submodule(M, vecs)


def module_socle(M: ModuleRealization, guard: int = RADICAL_GUARD) -> ModuleRealization:
    """soc(M) = {m : rad(A) m = 0}."""
    rows = []
    for op in _rad_operators(M, guard):
        dense = linalg.dense_columns(op, M.dim)
        rows.extend(dense)
    null = linalg.nullspace(rows, M.dim) if rows else [
        [Fraction(int(i == j)) for i in range(M.dim)] for j in range(M.dim)]
    return submodule(M, [linalg.to_sparse(v) for v in null])


def module_top(M: ModuleRealization, guard: int = RADICAL_GUARD) -> FormalSum:
    """Simples in M / rad(M), read off as joint 0/1 eigenspaces."""
    rad = module_radical(M, "trace", guard)
    return _top_from_quotient(M, [dict(lab) for lab in rad.basis_labels])


def _top_from_quotient(M: ModuleRealization, rad_vectors: list[dict]) -> FormalSum:
    basis = linalg.reduced_basis(rad_vectors)
    free = [i for i in range(M.dim) if i not in basis]
    where = {i: k for k, i in enumerate(free)}
    k = len(free)
    mats = {}
    for s in M.generators:
        m = [[Fraction(0)] * k for _ in range(k)]
        for c, i in enumerate(free):
            img = dict(M.actions[s][i])
            for p in sorted(basis):
                x = img.get(p, 0)
                if x:
                    linalg.axpy(img, -x, basis[p])
            for r, x in img.items():
                m[where[r]][c] = Fraction(x)
        mats[s] = m
    for s, m in mats.items():
        if _dense_mul(m, m) != m:
            raise InvariantError(f"induced action of pi_{s} on the top is not idempotent")
    out = FormalSum()
    for J in subsets(M.generators):
        proj = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        for s in M.generators:
            m = mats[s] if s in J else [[Fraction(int(i == j)) - x for j, x in enumerate(row)]
                                        for i, row in enumerate(mats[s])]
            proj = _dense_mul(proj, m)
        mult = linalg.rank(proj) if k else 0
        if mult:
            out.add(J, mult)
    if out.total() != k:
        raise InvariantError("top does not split into one-dimensional simples")
    return out


def _dense_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(m)] for i in range(n)]


def top_via_hom(M: ModuleRealization) -> FormalSum:
    """Multiplicity of C_J in top(M) as dim Hom(M, C_J).

    Partial-map modules use a union-find count; others fall back to ranks.
    """
    out = FormalSum()
    if M.is_partial_map():
        targets = {s: [next(iter(c)) if c else -1 for c in M.actions[s]] for s in M.generators}
        for J in subsets(M.generators):
            mult = _hom_count(M.dim, targets, J)
            if mult:
                out.add(J, mult)
        return out
    for J in subsets(M.generators):
        mult = len(hom_functionals(M, J))
        if mult:
            out.add(J, mult)
    return out


def _hom_count(d: int, targets: dict, J: frozenset) -> int:
    parent = list(range(d))
    dead = [False] * d

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, tgt in targets.items():
        inside = s in J
        for j, t in enumerate(tgt):
            if t == j:
                if not inside:
                    dead[j] = True
            elif t < 0:
                if inside:
                    dead[j] = True
            elif inside:
                a, b = find(j), find(t)
                if a != b:
                    parent[a] = b
            else:
                dead[t] = True
    roots = set()
    killed = set()
    for x in range(d):
        r = find(x)
        roots.add(r)
        if dead[x]:
            killed.add(r)
    return len(roots - killed)


def composition_factors(M: ModuleRealization, guard: int = RADICAL_GUARD) -> FormalSum:
    """All composition factors, collected from the radical series."""
    out = FormalSum()
    cur = M
    while cur.dim:
        rad = module_radical(cur, "trace", guard)
        out = out + _top_from_quotient(cur, [dict(lab) for lab in rad.basis_labels])
        if rad.dim == cur.dim:
            raise InvariantError("radical series does not terminate")
        cur = rad
    return out


# ------------------------------------------------------------------- quiver

def zero_hecke_quiver(diagram: CoxeterDiagram, ambient: Iterable,
                      guard: int = RADICAL_GUARD) -> Quiver:
    """Quiver of H_S(0): per component from rad P / rad^2 P, then tensored."""
    S = frozenset(ambient)
    result = Quiver([frozenset()])
    for comp in diagram.components(S):
        result = result.tensor(_component_quiver(diagram, frozenset(comp), guard),
                               combine=lambda a, b: a | b)
    return result


def _component_quiver(diagram, comp: frozenset, guard: int) -> Quiver:
    labels = subsets(diagram.ordered(comp))
    q = Quiver(list(labels))
    for I in labels:
        P = projective_module(diagram, comp, I)
        rad = module_radical(P, "trace", guard)
        if not rad.dim:
            continue
        for J, m in top_via_hom(rad).items():
            q.add_arrows(I, J, m)
    return q


# ------------------------------------------------------- induction/restriction

def induce_P0(diagram: CoxeterDiagram, ambient: Iterable, J: Iterable, I: Iterable) -> FormalSum:
    """P_I^J induced to S: sum of P_{I u K} over K inside S minus J."""
    S, J, I = frozenset(ambient), frozenset(J), frozenset(I)
    _check_sets(diagram, I, J, S)
    return FormalSum.of(I | K for K in subsets(diagram.ordered(S - J)))


def induce_C0(diagram: CoxeterDiagram, ambient: Iterable, J: Iterable, I: Iterable,
              guard: int | None = None) -> FormalSum:
    """C_I^J induced to S: sum over z in ^J W of C_{D(wz)}, with w = w0(I)."""
    S, J, I = frozenset(ambient), frozenset(J), frozenset(I)
    _check_sets(diagram, I, J, S)
    table = _table_for(diagram, S, guard)
    w = 0
    imask = diagram.mask(I)
    while table.rdes[w] != imask:
        w = table.rmul[next(s for s in table.gens if imask >> s & 1 and not table.rdes[w] >> s & 1)][w]
    jmask = diagram.mask(J)
    out = FormalSum()
    for z in range(table.size):
        if table.ldes[z] & jmask:
            continue
        out.add(diagram.nodes_of(table.rdes[table.product(w, z)]), 1)
    return out


def restrict_C0(ambient: Iterable, J: Iterable, K: Iterable) -> frozenset:
    """C_K^S restricted to H_J(0) is C_{J n K}."""
    return frozenset(J) & frozenset(K)


def restrict_P0(diagram: CoxeterDiagram, ambient: Iterable, J: Iterable, K: Iterable,
                guard: int | None = None) -> FormalSum:
    """P_K^S restricted to H_J(0), as the multiset of tops of its summands."""
    S, J, K = frozenset(ambient), frozenset(J), frozenset(K)
    _check_sets(diagram, J, S)
    _check_sets(diagram, K, S)
    _table_for(diagram, S, guard)
    return FormalSum(_restrict_P0(diagram.nodes, diagram.edges, diagram.mask(S),
                                  diagram.mask(J), diagram.mask(K)))


@lru_cache(maxsize=4096)
def _restrict_P0(nodes, edges, smask, jmask, kmask) -> tuple:
    diagram = CoxeterDiagram(nodes, edges)
    table, basis, maps = _projective_maps(nodes, edges, smask, kmask, smask)
    targets = {diagram.nodes[i]: list(t) for i, t in maps.items() if jmask >> i & 1}
    jnodes = diagram.nodes_of(jmask)
    out = []
    total = 0
    for L in subsets(diagram.ordered(jnodes)):
        m = _hom_count(len(basis), targets, L)
        if m:
            out.append((L, m))
            total += m * _class_size(nodes, edges, jmask, diagram.mask(L))
    if total != len(basis):
        raise InvariantError("restricted projective is not a sum of its top's covers")
    return tuple(out)


@lru_cache(maxsize=4096)
def _class_size(nodes, edges, smask, imask) -> int:
    table = _table(nodes, edges, smask)
    return sum(1 for d in table.rdes if d == imask)

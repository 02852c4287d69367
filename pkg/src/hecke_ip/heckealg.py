"""Structure of H_S(q) for independent parameters q_s.

After collapse-free reduction and normalization every parameter is 0 or 1.
The zero nodes S^0 and the one nodes S^1 then split into connected blocks;
the zero blocks generate a 0-Hecke algebra, the one blocks a group algebra,
the two commute, and T_s T_t = T_s whenever a zero node s touches a one
node t.  So H_S(q) is the monoid algebra of pairs (u, v) with u in W_{S^0}
and v = (v_j) in the one-block groups, subject to: v_j = 1 whenever the
support of u touches block j.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable

from .coxeter import (CoxeterDiagram, GroupElement, enumerate_group, group_order_by_type)
from .errors import DiagramError, GuardExceeded

DEFAULT_MAX_DIM = 200_000


# ----------------------------------------------------------- normalization

def collapse_reduce(diagram: CoxeterDiagram) -> tuple[CoxeterDiagram, frozenset]:
    """Drop every generator that is forced to act as a scalar.

    A node collapses when a path through nonzero-parameter nodes links it
    to a node with a different parameter; within such a path all T_r = 1.
    """
    if diagram.params is None:
        raise DiagramError("diagram carries no parameters")
    nonzero = [v for v in diagram.nodes if diagram.q(v) != 0]
    collapsed = set()
    for comp in diagram.components(nonzero):
        if len({diagram.q(v) for v in comp}) > 1:
            collapsed.update(comp)
    keep = [v for v in diagram.nodes if v not in collapsed]
    return diagram.subdiagram(keep), frozenset(collapsed)


def is_collapse_free(diagram: CoxeterDiagram) -> bool:
    for e in diagram.edges:
        a, b = tuple(e)
        qa, qb = diagram.q(a), diagram.q(b)
        if qa != qb and qa * qb != 0:
            return False
    return True


def normalize_params(diagram: CoxeterDiagram) -> CoxeterDiagram:
    """q_s -> 0 if q_s = 0 else 1.

    Parameters are exact rationals, whose only root of unity other than 1
    is -1; that value is refused.
    """
    if diagram.params is None:
        raise DiagramError("diagram carries no parameters")
    if not is_collapse_free(diagram):
        raise DiagramError("normalization needs a collapse-free diagram; run collapse_reduce")
    for v, q in zip(diagram.nodes, diagram.params):
        if q == -1:
            raise DiagramError(f"parameter of node {v!r} is a root of unity (-1); "
                               "roots of unity are out of scope")
    return diagram.with_params([0 if q == 0 else 1 for q in diagram.params])


def prepare(diagram: CoxeterDiagram) -> tuple[CoxeterDiagram, frozenset]:
    """collapse_reduce followed by normalize_params."""
    reduced, collapsed = collapse_reduce(diagram)
    return normalize_params(reduced), collapsed


def _require_normalized(diagram: CoxeterDiagram) -> None:
    if diagram.params is None:
        raise DiagramError("diagram carries no parameters")
    if any(q not in (0, 1) for q in diagram.params):
        raise DiagramError("parameters must be normalized to 0/1 first")
    if not is_collapse_free(diagram):
        raise DiagramError("diagram is not collapse free")


# ------------------------------------------------------------------ blocks

@dataclass(frozen=True)
class BlockPartition:
    """Blocks S_1..S_k (0-based here) in diagram order, split into L0 and L1."""

    blocks: tuple
    zero_blocks: frozenset
    one_blocks: frozenset
    adjacency: dict = field(hash=False, compare=False)   # (i, j) -> adj(i, j)

    def block_of(self, node) -> int:
        for k, b in enumerate(self.blocks):
            if node in b:
                return k
        raise DiagramError(f"unknown node {node!r}")


def block_partition(diagram: CoxeterDiagram) -> BlockPartition:
    _require_normalized(diagram)
    zeros = [v for v in diagram.nodes if diagram.q(v) == 0]
    ones = [v for v in diagram.nodes if diagram.q(v) == 1]
    comps = diagram.components(zeros) + diagram.components(ones)
    comps.sort(key=lambda c: diagram.index[c[0]])
    blocks = tuple(frozenset(c) for c in comps)
    l0 = frozenset(k for k, b in enumerate(blocks) if diagram.q(next(iter(b))) == 0)
    l1 = frozenset(range(len(blocks))) - l0
    adjacency = {}
    for i in sorted(l0):
        for j in sorted(l1):
            adjacency[(i, j)] = frozenset(
                s for s in blocks[i] if diagram.neighbours(s) & blocks[j])
    return BlockPartition(blocks, l0, l1, adjacency)


def restricted_zero_block(diagram: CoxeterDiagram, partition: BlockPartition, i: int,
                          J: Iterable[int]) -> frozenset:
    """The nodes of zero block i with no edge into any one block j in J."""
    if i not in partition.zero_blocks:
        raise DiagramError(f"block {i} is not a zero block")
    bad = set()
    for j in J:
        if j not in partition.one_blocks:
            raise DiagramError(f"block {j} is not a one block")
        bad |= partition.adjacency[(i, j)]
    return partition.blocks[i] - bad


def dimension(diagram: CoxeterDiagram) -> int:
    """Sum over J in L1 of prod_{j in J}(|W_j| - 1) * prod_{i in L0} |W bar_i^J|."""
    _require_normalized(diagram)
    part = block_partition(diagram)
    l1 = sorted(part.one_blocks)
    one_orders = {j: group_order_by_type(diagram, part.blocks[j]) for j in l1}
    total = 0
    for k in range(len(l1) + 1):
        for J in combinations(l1, k):
            term = 1
            for j in J:
                term *= one_orders[j] - 1
            for i in sorted(part.zero_blocks):
                term *= group_order_by_type(diagram, restricted_zero_block(diagram, part, i, J))
            total += term
    return total


def dimension_table(diagram: CoxeterDiagram) -> list[tuple[frozenset, int, int]]:
    """Per-J rows (J, prod (|W_j|-1), prod |W bar_i^J|) of the dimension formula."""
    part = block_partition(diagram)
    l1 = sorted(part.one_blocks)
    rows = []
    for k in range(len(l1) + 1):
        for J in combinations(l1, k):
            a = 1
            for j in J:
                a *= group_order_by_type(diagram, part.blocks[j]) - 1
            b = 1
            for i in sorted(part.zero_blocks):
                b *= group_order_by_type(diagram, restricted_zero_block(diagram, part, i, J))
            rows.append((frozenset(J), a, b))
    return rows


# ------------------------------------------------------------------ monoid

@dataclass(frozen=True)
class HeckeMonoidElement:
    """Basis element T_u T_{v_1} ... T_{v_k} of H_S(q)."""

    u: GroupElement
    v: tuple
    monoid: "HeckeMonoid" = field(compare=False, hash=False, repr=False)

    def __mul__(self, other: "HeckeMonoidElement") -> "HeckeMonoidElement":
        return monoid_multiply(self, other)

    def __repr__(self) -> str:
        parts = [repr(self.u)] + [repr(x) for x in self.v]
        return "T[" + " | ".join(parts) + "]"


class HeckeMonoid:
    """The basis monoid of H_S(q), working with tuples of table positions.

    A basis element is the tuple (u, v_1, ..., v_k) of positions in the
    tables of W_{S^0} and of the one blocks (in L1 order).
    """

    def __init__(self, diagram: CoxeterDiagram, guard: int | None = None):
        _require_normalized(diagram)
        self.diagram = diagram
        self.partition = part = block_partition(diagram)
        self.one_blocks = [part.blocks[j] for j in sorted(part.one_blocks)]
        zeros = [v for v in diagram.nodes if diagram.q(v) == 0]
        self.zero_table = enumerate_group(diagram, zeros, guard)
        self.one_tables = [enumerate_group(diagram, b, guard) for b in self.one_blocks]
        self.adj_masks = []
        for b in self.one_blocks:
            touching = [s for s in zeros if diagram.neighbours(s) & b]
            self.adj_masks.append(diagram.mask(touching))
        self.identity = (0,) * (1 + len(self.one_blocks))

    # validity and products on position tuples
    def is_valid(self, x: tuple) -> bool:
        supp = self.zero_table.supports[x[0]]
        return all(v == 0 or not supp & m for v, m in zip(x[1:], self.adj_masks))

    def multiply_positions(self, x: tuple, y: tuple) -> tuple:
        u = self.zero_table.pi_product(x[0], y[0])
        supp = self.zero_table.supports[u]
        out = [u]
        for k, table in enumerate(self.one_tables):
            if supp & self.adj_masks[k]:
                out.append(0)
            else:
                out.append(table.product(x[k + 1], y[k + 1]))
        return tuple(out)

    def basis_positions(self, max_dim: int = DEFAULT_MAX_DIM) -> list[tuple]:
        dim = dimension(self.diagram)
        if dim > max_dim:
            raise GuardExceeded("basis of H_S(q)", dim, max_dim)
        out = []
        sizes = [t.size for t in self.one_tables]
        for u in range(self.zero_table.size):
            supp = self.zero_table.supports[u]
            ranges = [range(1) if supp & m else range(n) for m, n in zip(self.adj_masks, sizes)]
            for v in product(*ranges):
                out.append((u,) + v)
        if len(out) != dim:
            raise AssertionError(f"basis has {len(out)} elements, formula gives {dim}")
        return out

    def generator_position(self, node) -> tuple:
        """Position tuple of T_s for a single generator s."""
        i = self.diagram.index[node]
        if self.diagram.q(node) == 0:
            return (self.zero_table.lmul[i][0],) + (0,) * len(self.one_blocks)
        out = [0] * (1 + len(self.one_blocks))
        for k, b in enumerate(self.one_blocks):
            if node in b:
                out[k + 1] = self.one_tables[k].lmul[i][0]
        return tuple(out)

    def reverse_positions(self, x: tuple) -> tuple:
        """Image under the anti-automorphism reversing every word."""
        return (self.zero_table.inverse_pos[x[0]],) + tuple(
            t.inverse_pos[v] for t, v in zip(self.one_tables, x[1:]))

    # element wrappers
    def element(self, x: tuple) -> HeckeMonoidElement:
        return HeckeMonoidElement(self.zero_table.element(x[0]),
                                  tuple(t.element(v) for t, v in zip(self.one_tables, x[1:])),
                                  self)

    def positions_of(self, x: HeckeMonoidElement) -> tuple:
        return (self.zero_table.position(x.u),) + tuple(
            t.position(v) for t, v in zip(self.one_tables, x.v))

    @cached_property
    def _batch_tables(self):
        import numpy as np

        def pack(table, use_rmul):
            words = table.words
            width = max((len(w) for w in words), default=0)
            arr = np.full((table.size, max(width, 1)), -1, dtype=np.int64)
            for p, w in enumerate(words):
                if w:
                    arr[p, :len(w)] = w
            n = self.diagram.n
            mult = np.zeros((n, table.size), dtype=np.int64)
            src = table.rmul if use_rmul else table.lmul
            for s, row in src.items():
                mult[s] = row
            return arr, mult

        zero_words, zero_lmul = pack(self.zero_table, False)
        ones = [pack(t, True) for t in self.one_tables]
        return (zero_words, zero_lmul, np.array(self.zero_table.lengths, dtype=np.int64),
                np.array(self.zero_table.supports, dtype=np.int64), ones)

    def multiply_batch(self, xs, ys):
        """Vectorised multiply_positions over rows of two (N, 1+k) integer arrays."""
        import numpy as np

        xs, ys = np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64)
        zero_words, zero_lmul, lengths, supports, ones = self._batch_tables
        cur = ys[:, 0].copy()
        words = zero_words[xs[:, 0]]
        for k in range(words.shape[1] - 1, -1, -1):
            s = words[:, k]
            live = s >= 0
            cand = zero_lmul[np.where(live, s, 0), cur]
            cur = np.where(live & (lengths[cand] > lengths[cur]), cand, cur)
        out = [cur]
        supp = supports[cur]
        for k, (words_k, rmul_k) in enumerate(ones):
            acc = xs[:, k + 1].copy()
            w = words_k[ys[:, k + 1]]
            for c in range(w.shape[1]):
                s = w[:, c]
                live = s >= 0
                acc = np.where(live, rmul_k[np.where(live, s, 0), acc], acc)
            acc = np.where((supp & self.adj_masks[k]) != 0, 0, acc)
            out.append(acc)
        return np.stack(out, axis=1)


@lru_cache(maxsize=256)
def hecke_monoid(diagram: CoxeterDiagram, guard: int | None = None) -> HeckeMonoid:
    return HeckeMonoid(diagram, guard)


def enumerate_basis(diagram: CoxeterDiagram, guard: int | None = None,
                    max_dim: int = DEFAULT_MAX_DIM) -> list[HeckeMonoidElement]:
    monoid = hecke_monoid(diagram, guard)
    return [monoid.element(x) for x in monoid.basis_positions(max_dim)]


def monoid_multiply(x: HeckeMonoidElement, y: HeckeMonoidElement) -> HeckeMonoidElement:
    if x.monoid.diagram != y.monoid.diagram:
        raise DiagramError("basis elements of different algebras")
    m = x.monoid
    return m.element(m.multiply_positions(m.positions_of(x), m.positions_of(y)))

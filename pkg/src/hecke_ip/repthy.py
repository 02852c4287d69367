"""Simple and projective indecomposable modules of H_S(q).

With every parameter 0 or 1, a label (I, lam) pairs an irreducible
character lam = (lam_j) of the one-block groups W_j with a subset I of
S^{0,lam}, the zero nodes that commute with every block on which lam is
nontrivial.  Then P_{I,lam} = P_I^{S^{0,lam}} (x) S_lam and its top is
C_I^{S^{0,lam}} (x) S_lam.

Everything here needs the one blocks to be of type A, so that their
irreducibles are partitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod

from .combinat import Partition, hook_dim, partitions
from .coxeter import CoxeterDiagram, _guard, group_order_by_type, is_path, path_order
from .errors import DiagramError, GuardExceeded, InvariantError, OutOfScopeError
from .formal import FormalSum
from .heckealg import block_partition, dimension, dimension_table
from .quiver import Quiver
from .zerohecke import RADICAL_GUARD, _class_size, cartan_number, subsets, zero_hecke_quiver


@dataclass(frozen=True)
class IrrLabel:
    """(I, lam): I a set of zero nodes, lam one partition per one block."""

    I: frozenset
    lam: tuple

    def __repr__(self) -> str:
        nodes = ",".join(map(str, sorted(self.I, key=_node_key)))
        return "{" + nodes + "}|" + ";".join(map(str, self.lam))


def _node_key(v):
    return (0, v) if isinstance(v, int) else (1, str(v))


class HeckeContext:
    """Block data of a normalized diagram, shared by the label operations."""

    def __init__(self, diagram: CoxeterDiagram):
        self.diagram = diagram
        self.partition = part = block_partition(diagram)
        self.zero_nodes = frozenset(v for v in diagram.nodes if diagram.q(v) == 0)
        self.one_blocks = [part.blocks[j] for j in sorted(part.one_blocks)]
        self.type_a = all(is_path(diagram, b) for b in self.one_blocks)
        # zero nodes touching each one block
        self.touching = [frozenset(s for s in self.zero_nodes if diagram.neighbours(s) & b)
                         for b in self.one_blocks]

    def require_type_a(self) -> None:
        if not self.type_a:
            bad = next(b for b in self.one_blocks if not is_path(self.diagram, b))
            raise OutOfScopeError(
                f"one block {sorted(bad, key=_node_key)} is not of type A; representation-"
                "theoretic operations need type-A one blocks")

    def block_index(self, node) -> int:
        for k, b in enumerate(self.one_blocks):
            if node in b:
                return k
        raise DiagramError(f"{node!r} is not in a one block")

    def nontrivial(self, lam: tuple) -> frozenset:
        """L_1^lam as indices into one_blocks."""
        return frozenset(k for k, p in enumerate(lam) if not Partition(p).is_row())

    def s0(self, lam: tuple) -> frozenset:
        """S^{0,lam}."""
        out = set(self.zero_nodes)
        for k in self.nontrivial(lam):
            out -= self.touching[k]
        return frozenset(out)

    def lambdas(self) -> list[tuple]:
        self.require_type_a()
        return [tuple(ls) for ls in product(*(partitions(len(b) + 1) for b in self.one_blocks))]

    def check_label(self, label: IrrLabel) -> None:
        if len(label.lam) != len(self.one_blocks):
            raise DiagramError(f"label {label!r} needs {len(self.one_blocks)} partitions")
        for p, b in zip(label.lam, self.one_blocks):
            if Partition(p).size != len(b) + 1:
                raise DiagramError(f"partition {p} does not fit a block with {len(b)} nodes")
        if not label.I <= self.s0(label.lam):
            raise DiagramError(f"label {label!r} is not valid: I must lie in S^(0,lam)")


@lru_cache(maxsize=512)
def context(diagram: CoxeterDiagram) -> HeckeContext:
    return HeckeContext(diagram)


def irr_labels(diagram: CoxeterDiagram) -> list[IrrLabel]:
    """Irr(H_S(q)) ordered by lam (product order), then by I."""
    ctx = context(diagram)
    out = []
    for lam in ctx.lambdas():
        for I in subsets(diagram.ordered(ctx.s0(lam))):
            out.append(IrrLabel(I, lam))
    return out


# -------------------------------------------------------------- dimensions

def _beta(n: int, descents: list[int]) -> int:
    """Permutations of n letters with descent set exactly `descents`."""
    total = 0
    for k in range(len(descents) + 1):
        for T in combinations(descents, k):
            bounds = [0, *T, n]
            term = factorial(n)
            for a, b in zip(bounds, bounds[1:]):
                term //= factorial(b - a)
            total += (-1) ** (len(descents) - k) * term
    return total


def class_size(diagram: CoxeterDiagram, ambient, I, guard: int | None = None) -> int:
    """#{w in W_ambient : D(w) = I}, a product over components of ambient."""
    ambient, I = frozenset(ambient), frozenset(I)
    out = 1
    for comp in diagram.components(ambient):
        if is_path(diagram, comp):
            order = path_order(diagram, comp)
            pos = [k + 1 for k, v in enumerate(order) if v in I]
            out *= _beta(len(order) + 1, pos)
        else:
            order = group_order_by_type(diagram, comp)
            if order > _guard(guard):
                raise GuardExceeded("parabolic subgroup W_I", order, _guard(guard))
            out *= _class_size(diagram.nodes, diagram.edges, diagram.mask(comp),
                               diagram.mask(I & frozenset(comp)))
    return out


def simple_dim(diagram: CoxeterDiagram, label: IrrLabel) -> int:
    context(diagram).check_label(label)
    return prod(hook_dim(p) for p in label.lam)


def pim_dim(diagram: CoxeterDiagram, label: IrrLabel, guard: int | None = None) -> int:
    ctx = context(diagram)
    ctx.check_label(label)
    return class_size(diagram, ctx.s0(label.lam), label.I, guard) * simple_dim(diagram, label)


def regular_decomposition_check(diagram: CoxeterDiagram, guard: int | None = None) -> dict:
    """Sum of d_lam * dim P_{I,lam} against dim H_S(q), also grouped by L_1^lam.

    Raises InvariantError on any mismatch.
    """
    ctx = context(diagram)
    ctx.require_type_a()
    by_j: dict[frozenset, int] = {}
    total = 0
    count = 0
    for label in irr_labels(diagram):
        d = simple_dim(diagram, label)
        term = d * pim_dim(diagram, label, guard)
        blocks = frozenset(sorted(ctx.partition.one_blocks)[k] for k in ctx.nontrivial(label.lam))
        by_j[blocks] = by_j.get(blocks, 0) + term
        total += term
        count += 1
    expected = dimension(diagram)
    rows = []
    for J, a, b in dimension_table(diagram):
        got = by_j.get(J, 0)
        rows.append({"J": sorted(J), "labels_sum": got, "formula": a * b})
        if got != a * b:
            raise InvariantError(f"per-J mismatch at J={sorted(J)}: {got} != {a * b}")
    if total != expected:
        raise InvariantError(f"regular decomposition gives {total}, dimension is {expected}")
    return {"labels": count, "sum": total, "dimension": expected, "per_J": rows}


# ------------------------------------------------------- cartan and quiver

def cartan_matrix_hq(diagram: CoxeterDiagram, guard: int | None = None):
    """(labels, matrix) with entry delta_{lam,mu} * c^{S^{0,lam}}_{I,J}."""
    ctx = context(diagram)
    labels = irr_labels(diagram)
    matrix = []
    for a in labels:
        row = []
        for b in labels:
            if a.lam != b.lam:
                row.append(0)
            else:
                row.append(cartan_number(diagram, ctx.s0(a.lam), a.I, b.I, guard))
        matrix.append(row)
    return labels, matrix


def quiver_hq(diagram: CoxeterDiagram, guard: int = RADICAL_GUARD) -> Quiver:
    """Disjoint union over lam of the quiver of H_{S^{0,lam}}(0)."""
    ctx = context(diagram)
    parts = []
    cache: dict[frozenset, Quiver] = {}
    for lam in ctx.lambdas():
        S0 = ctx.s0(lam)
        if S0 not in cache:
            cache[S0] = zero_hecke_quiver(diagram, S0, guard)
        parts.append(cache[S0].relabel(lambda I, lam=lam: IrrLabel(I, lam)))
    return Quiver.disjoint_union(parts)


def lambda_component(q: Quiver, lam: tuple) -> Quiver:
    """The part of a quiver_hq result living over one lam."""
    verts = [v for v in q.vertices if v.lam == lam]
    out = Quiver(verts)
    for (a, b), m in q.arrows.items():
        if a.lam == lam:
            out.add_arrows(a, b, m)
    return out


def finite_rep_type(diagram: CoxeterDiagram) -> bool:
    """Zero blocks have at most two nodes, and at most one of them has two."""
    part = block_partition(diagram)
    sizes = [len(part.blocks[i]) for i in part.zero_blocks]
    return all(k <= 2 for k in sizes) and sum(1 for k in sizes if k == 2) <= 1


def rep_type_brute(diagram: CoxeterDiagram, guard: int = RADICAL_GUARD) -> bool:
    """Cross-check of finite_rep_type read off the computed zero-block quivers.

    A zero block counts as small when its quiver is a union of points and
    paths, and as large when some path has two or more vertices.  Finite
    type means no block is beyond small and at most one is large.
    """
    part = block_partition(diagram)
    big = 0
    for i in part.zero_blocks:
        shape = _block_shape(diagram, part.blocks[i], guard)
        if any(not (k == "point" or k.startswith("path")) for k in shape):
            return False
        if any(k.startswith("path") for k in shape):
            big += 1
    return big <= 1


def _block_shape(diagram: CoxeterDiagram, block: frozenset, guard: int) -> dict:
    # path blocks are all isomorphic to the standard A_k, so share one cache entry
    if is_path(diagram, block):
        return _path_shape(len(block), guard)
    return zero_hecke_quiver(diagram, block, guard).shape()


@lru_cache(maxsize=None)
def _path_shape(k: int, guard: int) -> dict:
    nodes = tuple(range(1, k + 1))
    path = CoxeterDiagram(nodes, frozenset(frozenset((i, i + 1)) for i in range(1, k)))
    return zero_hecke_quiver(path, nodes, guard).shape()


def label_dims(diagram: CoxeterDiagram, guard: int | None = None) -> list[tuple]:
    """(label, simple_dim, pim_dim, |S^{0,lam}|) rows for reporting."""
    ctx = context(diagram)
    return [(lab, simple_dim(diagram, lab), pim_dim(diagram, lab, guard), len(ctx.s0(lab.lam)))
            for lab in irr_labels(diagram)]


def formal_labels(labels) -> FormalSum:
    return FormalSum.of(labels)

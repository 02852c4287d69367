"""Finite simply-laced Coxeter groups in the geometric representation.

A group element is stored as the integer matrix of its action on the root
lattice, columns indexed by simple roots: column j holds the coordinates
of w(alpha_j).  With the simply-laced Cartan matrix a (a_ii = 2, a_ij = -1
on edges, 0 otherwise) a simple reflection acts by

    s_i(alpha_j) = alpha_j - a_ij alpha_i,

so right multiplication by s_i touches only the columns of i and its
neighbours, and left multiplication touches only row i.  Equality of
elements is equality of matrices, so no rewriting system is needed.

Right descents are read off directly: s is a right descent of w exactly
when the column w(alpha_s) is a negative root.  Whole subgroups W_I are
enumerated into a GroupTable whose order is (length, ShortLex reduced
word); all the heavier algebra code works with positions in such a table.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import DiagramError, GuardExceeded, UnclassifiableError

DEFAULT_MAX_ORDER = 60_000


def default_max_order() -> int:
    env = os.environ.get("HECKE_IP_MAX_ORDER")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise DiagramError(f"HECKE_IP_MAX_ORDER={env!r} is not an integer") from None
        if value <= 0:
            raise DiagramError("HECKE_IP_MAX_ORDER must be positive")
        return value
    return DEFAULT_MAX_ORDER


def _guard(guard: int | None) -> int:
    return default_max_order() if guard is None else guard


# ---------------------------------------------------------------- parameters

def as_param(q) -> Fraction:
    """Exact parameter value. Floats are refused on purpose."""
    if isinstance(q, bool) or isinstance(q, float):
        raise DiagramError(f"parameter {q!r} must be an exact integer or rational")
    if isinstance(q, (int, Fraction)):
        return Fraction(q)
    if isinstance(q, str):
        try:
            return Fraction(q.strip())
        except ValueError:
            raise DiagramError(f"cannot parse parameter {q!r}") from None
    raise DiagramError(f"unsupported parameter type {type(q).__name__}")


# ------------------------------------------------------------------ diagrams

@dataclass(frozen=True)
class CoxeterDiagram:
    """Simple graph on generator ids; an edge means m_st = 3.

    `params` is aligned with `nodes` (or None when no parameters were given).
    The node order fixes every canonical ordering in the library.
    """

    nodes: tuple
    edges: frozenset = frozenset()
    params: tuple | None = None

    def __post_init__(self):
        nodes = tuple(self.nodes)
        if len(set(nodes)) != len(nodes):
            raise DiagramError("duplicate node ids")
        for v in nodes:
            if not isinstance(v, (int, str)) or isinstance(v, bool):
                raise DiagramError(f"node id {v!r} must be an int or a string")
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) == 1:
                raise DiagramError(f"self-loop at node {next(iter(e))!r}")
            if len(e) != 2:
                raise DiagramError(f"malformed edge {sorted(map(str, e))}")
            missing = [v for v in e if v not in nodes]
            if missing:
                raise DiagramError(f"edge mentions unknown node {missing[0]!r}")
            edges.add(e)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", frozenset(edges))
        if self.params is not None:
            params = tuple(as_param(q) for q in self.params)
            if len(params) != len(nodes):
                raise DiagramError("one parameter per node is required")
            object.__setattr__(self, "params", params)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def shape(self) -> tuple:
        """Hashable key ignoring parameters; group data depends only on it."""
        return (self.nodes, self.edges)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.nodes)}

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in self.nodes]
        for e in self.edges:
            a, b = (self.index[v] for v in e)
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(x) for x in adj)

    @cached_property
    def cartan(self) -> tuple:
        n = self.n
        return tuple(tuple(2 if i == j else (-1 if j in self.adjacency[i] else 0)
                           for j in range(n)) for i in range(n))

    def q(self, node) -> Fraction:
        if self.params is None:
            raise DiagramError("diagram carries no parameters")
        return self.params[self.index[node]]

    @property
    def param_map(self) -> dict:
        if self.params is None:
            raise DiagramError("diagram carries no parameters")
        return dict(zip(self.nodes, self.params))

    def with_params(self, params) -> "CoxeterDiagram":
        if isinstance(params, dict):
            params = [params[v] for v in self.nodes]
        return CoxeterDiagram(self.nodes, self.edges, tuple(params))

    def mask(self, nodes: Iterable) -> int:
        m = 0
        for v in nodes:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise DiagramError(f"unknown node {v!r}") from None
        return m

    def nodes_of(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.nodes) if mask >> i & 1)

    def ordered(self, nodes: Iterable) -> tuple:
        """Nodes sorted by diagram position."""
        return tuple(sorted(nodes, key=self.index.__getitem__))

    def adjacent(self, a, b) -> bool:
        return frozenset((a, b)) in self.edges

    def neighbours(self, v) -> frozenset:
        return frozenset(self.nodes[j] for j in self.adjacency[self.index[v]])

    def subdiagram(self, nodes: Iterable) -> "CoxeterDiagram":
        keep = set(nodes)
        for v in keep:
            if v not in self.index:
                raise DiagramError(f"unknown node {v!r}")
        order = tuple(v for v in self.nodes if v in keep)
        edges = frozenset(e for e in self.edges if e <= keep)
        params = None
        if self.params is not None:
            params = tuple(self.q(v) for v in order)
        return CoxeterDiagram(order, edges, params)

    def components(self, nodes: Iterable | None = None) -> list[tuple]:
        """Connected components of the induced subgraph, in diagram order."""
        pool = set(self.nodes if nodes is None else nodes)
        seen = set()
        out = []
        for v in self.nodes:
            if v not in pool or v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours(x):
                    if y in pool and y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(self.ordered(comp))
        return out

    def to_json(self) -> dict:
        nodes = []
        for i, v in enumerate(self.nodes):
            entry = {"id": v}
            if self.params is not None:
                q = self.params[i]
                entry["q"] = q.numerator if q.denominator == 1 else str(q)
            nodes.append(entry)
        edges = sorted(tuple(sorted(self.index[v] for v in e)) for e in self.edges)
        return {"nodes": nodes,
                "edges": [[self.nodes[a], self.nodes[b]] for a, b in edges]}

    def __repr__(self) -> str:
        edges = sorted(tuple(sorted(self.index[v] for v in e)) for e in self.edges)
        text = ",".join(f"{self.nodes[a]}-{self.nodes[b]}" for a, b in edges)
        par = ""
        if self.params is not None:
            par = " q=" + ",".join(str(q) for q in self.params)
        return f"CoxeterDiagram(nodes={list(self.nodes)} edges=[{text}]{par})"


# -------------------------------------------------------------- classification

def classify(diagram: CoxeterDiagram, nodes: Iterable | None = None) -> list[tuple[str, int]]:
    """Cartan type (letter, rank) of every component of the induced subgraph."""
    out = []
    for comp in diagram.components(nodes):
        out.append(_classify_component(diagram, comp))
    return out


def _classify_component(diagram: CoxeterDiagram, comp: tuple) -> tuple[str, int]:
    pool = set(comp)
    deg = {v: len(diagram.neighbours(v) & pool) for v in comp}
    n = len(comp)
    n_edges = sum(deg.values()) // 2
    name = "{" + ",".join(map(str, comp)) + "}"
    if n_edges != n - 1:
        raise UnclassifiableError(f"component {name} contains a cycle (affine or infinite type)")
    branch = [v for v in comp if deg[v] >= 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or deg[branch[0]] > 3:
        raise UnclassifiableError(f"component {name} is not of type A, D or E")
    centre = branch[0]
    legs = []
    for start in diagram.neighbours(centre) & pool:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [y for y in diagram.neighbours(cur) & pool if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == legs[1] == 1:
        return ("D", n)
    if legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4):
        return ("E", n)
    raise UnclassifiableError(f"component {name} with legs {legs} has infinite type")


def type_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {6: 51840, 7: 72 * factorial(8), 8: 696729600}[rank]


def group_order_by_type(diagram: CoxeterDiagram, nodes: Iterable | None = None) -> int:
    """|W_I| from the Cartan types of the components of I; no enumeration."""
    order = 1
    for letter, rank in classify(diagram, nodes):
        order *= type_order(letter, rank)
    return order


def is_path(diagram: CoxeterDiagram, nodes: Iterable) -> bool:
    comps = diagram.components(nodes)
    if len(comps) != 1:
        return False
    try:
        return _classify_component(diagram, comps[0])[0] == "A"
    except UnclassifiableError:
        return False


def path_order(diagram: CoxeterDiagram, nodes: Iterable) -> tuple:
    """Nodes of a type-A component listed along the path.

    The walk starts at the end with the smaller diagram position, so the
    result is canonical.
    """
    pool = set(nodes)
    if not is_path(diagram, pool):
        raise DiagramError("node set is not a path")
    if len(pool) == 1:
        return tuple(pool)
    ends = [v for v in pool if len(diagram.neighbours(v) & pool) == 1]
    start = min(ends, key=diagram.index.__getitem__)
    out, prev = [start], None
    while len(out) < len(pool):
        cur = out[-1]
        nxt = [y for y in diagram.neighbours(cur) & pool if y != prev]
        prev = cur
        out.append(nxt[0])
    return tuple(out)


# ------------------------------------------------------------- lattice kernel

class _Lattice:
    """Matrix arithmetic for one diagram shape. Keys are flat column-major tuples."""

    def __init__(self, nodes: tuple, edges: frozenset):
        diagram = CoxeterDiagram(nodes, edges)
        self.diagram = diagram
        self.n = n = diagram.n
        self.adj = diagram.adjacency
        self.identity = tuple(1 if i == j else 0 for j in range(n) for i in range(n))

    def col(self, key: tuple, j: int) -> tuple:
        n = self.n
        return key[j * n:(j + 1) * n]

    def rmul(self, key: tuple, i: int) -> tuple:
        """key * s_i: col_i -> -col_i, col_j -> col_j + col_i for neighbours j."""
        n = self.n
        cols = [key[j * n:(j + 1) * n] for j in range(n)]
        ci = cols[i]
        for j in self.adj[i]:
            cols[j] = tuple(a + b for a, b in zip(cols[j], ci))
        cols[i] = tuple(-a for a in ci)
        return sum(cols, ())

    def lmul(self, key: tuple, i: int) -> tuple:
        """s_i * key: in every column, v_i -> -v_i + sum of neighbour coordinates."""
        n = self.n
        out = list(key)
        nb = self.adj[i]
        for j in range(n):
            base = j * n
            out[base + i] = -key[base + i] + sum(key[base + k] for k in nb)
        return tuple(out)

    def mul(self, a: tuple, b: tuple) -> tuple:
        n = self.n
        out = []
        for j in range(n):
            bj = b[j * n:(j + 1) * n]
            col = [0] * n
            for k, c in enumerate(bj):
                if c:
                    ak = a[k * n:(k + 1) * n]
                    for i in range(n):
                        col[i] += c * ak[i]
            out.extend(col)
        return tuple(out)

    @staticmethod
    def negative(col: Sequence[int]) -> bool:
        for x in col:
            if x:
                return x < 0
        raise AssertionError("zero column in a group element")

    def descent_mask(self, key: tuple, mask: int | None = None) -> int:
        n = self.n
        out = 0
        for j in range(n):
            if mask is not None and not mask >> j & 1:
                continue
            if self.negative(key[j * n:(j + 1) * n]):
                out |= 1 << j
        return out

    @cached_property
    def cartan_inverse(self) -> list[list[Fraction]]:
        n = self.n
        a = self.diagram.cartan
        aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if aug[r][c] != 0)
            aug[c], aug[p] = aug[p], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return [row[n:] for row in aug]

    def inverse(self, key: tuple) -> tuple:
        """w^{-1} = A^{-1} w^T A, since w preserves the form given by A."""
        n = self.n
        a = self.diagram.cartan
        ainv = self.cartan_inverse
        m = [[key[j * n + i] for j in range(n)] for i in range(n)]  # m[i][j]
        mt_a = [[sum(m[k][i] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        res = [[sum(ainv[i][k] * mt_a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        out = []
        for j in range(n):
            for i in range(n):
                x = res[i][j]
                if x.denominator != 1:
                    raise AssertionError("non-integral inverse")
                out.append(int(x))
        return tuple(out)

    def reduced_word(self, key: tuple) -> tuple:
        """ShortLex-minimal reduced word, as diagram positions.

        The first letter of the lexicographically least reduced word is the
        least left descent; left descents of w are right descents of w^{-1},
        and stripping s on the left of w is right multiplication on w^{-1}.
        """
        inv = self.inverse(key)
        word = []
        while inv != self.identity:
            m = self.descent_mask(inv)
            s = (m & -m).bit_length() - 1
            word.append(s)
            inv = self.rmul(inv, s)
        return tuple(word)

    def evaluate(self, word: Iterable[int]) -> tuple:
        key = self.identity
        for s in word:
            key = self.rmul(key, s)
        return key

    @cached_property
    def positive_roots(self) -> list[tuple]:
        """Positive roots by height, then lexicographically; finite type only."""
        group_order_by_type(self.diagram)  # raises for infinite type
        n = self.n
        simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        seen = set(simple)
        queue = list(simple)
        a = self.diagram.cartan
        while queue:
            beta = queue.pop()
            for i in range(n):
                pair = sum(beta[j] * a[j][i] for j in range(n))
                gamma = tuple(beta[k] - (pair if k == i else 0) for k in range(n))
                if all(x >= 0 for x in gamma) and any(gamma) and gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        return sorted(seen, key=lambda r: (sum(r), r))

    def apply(self, key: tuple, vec: Sequence[int]) -> tuple:
        n = self.n
        out = [0] * n
        for j, c in enumerate(vec):
            if c:
                for i in range(n):
                    out[i] += c * key[j * n + i]
        return tuple(out)

    def inversions(self, key: tuple) -> int:
        return sum(1 for r in self.positive_roots if self.negative(self.apply(key, r)))


@lru_cache(maxsize=None)
def _lattice(nodes: tuple, edges: frozenset) -> _Lattice:
    return _Lattice(nodes, edges)


def lattice_of(diagram: CoxeterDiagram) -> _Lattice:
    return _lattice(diagram.nodes, diagram.edges)


# --------------------------------------------------------------- elements

class GroupElement:
    """Element of W, held as its integer matrix on the simple-root basis."""

    __slots__ = ("diagram", "key")

    def __init__(self, diagram: CoxeterDiagram, key: tuple):
        self.diagram = diagram
        self.key = key

    @classmethod
    def identity(cls, diagram: CoxeterDiagram) -> "GroupElement":
        return cls(diagram, lattice_of(diagram).identity)

    @classmethod
    def from_word(cls, diagram: CoxeterDiagram, word: Iterable) -> "GroupElement":
        lat = lattice_of(diagram)
        return cls(diagram, lat.evaluate(diagram.index[s] for s in word))

    @property
    def _lat(self) -> _Lattice:
        return lattice_of(self.diagram)

    @property
    def matrix(self) -> tuple:
        """Row-major matrix; entry (i, j) is the alpha_i coefficient of w(alpha_j)."""
        n = self.diagram.n
        return tuple(tuple(self.key[j * n + i] for j in range(n)) for i in range(n))

    def _check(self, other: "GroupElement") -> None:
        if self.diagram.shape != other.diagram.shape:
            raise DiagramError("group elements live on different diagrams")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.diagram, self._lat.mul(self.key, other.key))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupElement) and self.key == other.key
                and self.diagram.shape == other.diagram.shape)

    def __hash__(self) -> int:
        return hash(self.key)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.diagram, self._lat.inverse(self.key))

    def length(self) -> int:
        return self._lat.inversions(self.key)

    def is_identity(self) -> bool:
        return self.key == self._lat.identity

    def right_descents(self) -> frozenset:
        return self.diagram.nodes_of(self._lat.descent_mask(self.key))

    def left_descents(self) -> frozenset:
        return self.diagram.nodes_of(self._lat.descent_mask(self._lat.inverse(self.key)))

    def reduced_word(self) -> tuple:
        return tuple(self.diagram.nodes[i] for i in self._lat.reduced_word(self.key))

    def support(self) -> frozenset:
        return frozenset(self.reduced_word())

    def times_generator(self, s, side: str = "right") -> "GroupElement":
        i = self.diagram.index[s]
        lat = self._lat
        key = lat.rmul(self.key, i) if side == "right" else lat.lmul(self.key, i)
        return GroupElement(self.diagram, key)

    def __repr__(self) -> str:
        word = self.reduced_word()
        return "e" if not word else "s" + ".s".join(map(str, word))


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    return u * v


def inverse(w: GroupElement) -> GroupElement:
    return w.inverse()


def length(w: GroupElement) -> int:
    return w.length()


def right_descents(w: GroupElement) -> frozenset:
    return w.right_descents()


def left_descents(w: GroupElement) -> frozenset:
    return w.left_descents()


def reduced_word(w: GroupElement) -> tuple:
    return w.reduced_word()


def bruhat_leq(u: GroupElement, w: GroupElement) -> bool:
    """Subword criterion, run as the descent recursion along a reduced word of w.

    For a right descent s of w: u <= w iff min(u, us) <= ws.
    """
    u._check(w)
    lat = u._lat
    uk = u.key
    wk = w.key
    for s in reversed(lat.reduced_word(wk)):
        if lat.negative(lat.col(uk, s)):
            uk = lat.rmul(uk, s)
        wk = lat.rmul(wk, s)
    return uk == lat.identity


def weak_leq_left(u: GroupElement, w: GroupElement) -> bool:
    """u <=_L w iff l(w) = l(u) + l(w u^{-1})."""
    u._check(w)
    return w.length() == u.length() + (w * u.inverse()).length()


def longest_element(diagram: CoxeterDiagram, nodes: Iterable) -> GroupElement:
    """Greedy ascent inside W_I; no enumeration."""
    nodes = list(nodes)
    group_order_by_type(diagram, nodes)
    lat = lattice_of(diagram)
    gens = [diagram.index[v] for v in nodes]
    key = lat.identity
    while True:
        ascent = next((i for i in gens if not lat.negative(lat.col(key, i))), None)
        if ascent is None:
            return GroupElement(diagram, key)
        key = lat.rmul(key, ascent)


def parabolic_decompose(w: GroupElement, nodes: Iterable) -> tuple[GroupElement, GroupElement]:
    """w = w^J * _J w with w^J in W^J (no descents in J) and _J w in W_J."""
    lat = w._lat
    jmask = w.diagram.mask(nodes)
    key = w.key
    while True:
        d = lat.descent_mask(key) & jmask
        if not d:
            break
        key = lat.rmul(key, (d & -d).bit_length() - 1)
    head = GroupElement(w.diagram, key)
    return head, head.inverse() * w


# ------------------------------------------------------------ enumeration

class GroupTable:
    """All elements of W_I in (length, ShortLex) order, with lookup tables.

    Positions index everything; element 0 is the identity.  Descent sets
    and supports are bitmasks over diagram positions.
    """

    def __init__(self, diagram: CoxeterDiagram, mask: int):
        self.diagram = diagram
        self.mask = mask
        self.gens = tuple(i for i in range(diagram.n) if mask >> i & 1)
        lat = lattice_of(diagram)
        self._lat = lat
        keys = [lat.identity]
        words = [()]
        index = {lat.identity: 0}
        layer = [0]
        while layer:
            found: dict[tuple, tuple[int, int]] = {}
            for p in layer:
                k = keys[p]
                for s in self.gens:
                    x = lat.lmul(k, s)
                    if x in index:
                        continue
                    best = found.get(x)
                    if best is None or s < best[0]:
                        found[x] = (s, p)
            new = sorted(found, key=lambda x: (found[x][0],) + words[found[x][1]])
            layer = []
            for x in new:
                s, p = found[x]
                index[x] = len(keys)
                layer.append(len(keys))
                keys.append(x)
                words.append((s,) + words[p])
        self.keys = keys
        self.index = index
        self.words = words
        self.lengths = [len(w) for w in words]
        self.size = len(keys)

    def __len__(self) -> int:
        return self.size

    @cached_property
    def rdes(self) -> list[int]:
        lat = self._lat
        return [lat.descent_mask(k, self.mask) for k in self.keys]

    @cached_property
    def ldes(self) -> list[int]:
        out = []
        for p in range(self.size):
            m = 0
            for s in self.gens:
                if self.lengths[self.lmul[s][p]] < self.lengths[p]:
                    m |= 1 << s
            out.append(m)
        return out

    @cached_property
    def supports(self) -> list[int]:
        out = []
        for w in self.words:
            m = 0
            for s in w:
                m |= 1 << s
            out.append(m)
        return out

    @cached_property
    def lmul(self) -> dict[int, list[int]]:
        lat, idx = self._lat, self.index
        return {s: [idx[lat.lmul(k, s)] for k in self.keys] for s in self.gens}

    @cached_property
    def rmul(self) -> dict[int, list[int]]:
        lat, idx = self._lat, self.index
        return {s: [idx[lat.rmul(k, s)] for k in self.keys] for s in self.gens}

    @cached_property
    def inverse_pos(self) -> list[int]:
        out = []
        for w in self.words:
            p = 0
            for s in w:
                p = self.lmul[s][p]
            out.append(p)
        return out

    def element(self, p: int) -> GroupElement:
        return GroupElement(self.diagram, self.keys[p])

    @property
    def elements(self) -> list[GroupElement]:
        return [self.element(p) for p in range(self.size)]

    def position(self, w: GroupElement) -> int:
        try:
            return self.index[w.key]
        except KeyError:
            raise DiagramError(f"{w!r} is not in this parabolic subgroup") from None

    def product(self, a: int, b: int) -> int:
        """Group product by positions."""
        rm = self.rmul
        for s in self.words[b]:
            a = rm[s][a]
        return a

    def pi_product(self, a: int, b: int) -> int:
        """0-Hecke monoid product pi_a pi_b by positions."""
        lm, ln = self.lmul, self.lengths
        cur = b
        for s in reversed(self.words[a]):
            t = lm[s][cur]
            if ln[t] > ln[cur]:
                cur = t
        return cur

    def word_nodes(self, p: int) -> tuple:
        return tuple(self.diagram.nodes[i] for i in self.words[p])

    @cached_property
    def longest(self) -> int:
        return self.size - 1


@lru_cache(maxsize=256)
def _table(nodes: tuple, edges: frozenset, mask: int) -> GroupTable:
    return GroupTable(CoxeterDiagram(nodes, edges), mask)


def enumerate_group(diagram: CoxeterDiagram, nodes: Iterable | None = None,
                    guard: int | None = None) -> GroupTable:
    """Enumerate W_I after checking its order against the guard."""
    nodes = diagram.nodes if nodes is None else tuple(nodes)
    order = group_order_by_type(diagram, nodes)
    guard = _guard(guard)
    if order > guard:
        raise GuardExceeded("parabolic subgroup W_I", order, guard)
    table = _table(diagram.nodes, diagram.edges, diagram.mask(nodes))
    if table.size != order:
        raise AssertionError(f"enumerated {table.size} elements, expected {order}")
    return table


def descent_class(diagram: CoxeterDiagram, ambient: Iterable, target: Iterable,
                  guard: int | None = None):
    """(members, w0(J), w1(J)) for the descent class of J inside W_I."""
    ambient = frozenset(ambient)
    target = frozenset(target)
    if not target <= ambient:
        raise DiagramError("target set must lie in the ambient set")
    table = enumerate_group(diagram, ambient, guard)
    jmask = diagram.mask(target)
    members = [table.element(p) for p in range(table.size) if table.rdes[p] == jmask]
    w0 = longest_element(diagram, target)
    w1 = longest_element(diagram, ambient) * longest_element(diagram, ambient - target)
    for w in members:
        if not (weak_leq_left(w0, w) and weak_leq_left(w, w1)):
            raise AssertionError(f"{w!r} escapes the weak-order interval")
    return members, w0, w1


def min_coset_reps(diagram: CoxeterDiagram, ambient: Iterable, target: Iterable,
                   side: str = "right", guard: int | None = None) -> list[GroupElement]:
    """W^J = {w : D(w) avoids J} for side='right'; ^J W via left descents."""
    ambient = frozenset(ambient)
    table = enumerate_group(diagram, ambient, guard)
    jmask = diagram.mask(target)
    des = table.rdes if side == "right" else table.ldes
    if side not in ("left", "right"):
        raise DiagramError("side must be 'left' or 'right'")
    return [table.element(p) for p in range(table.size) if not des[p] & jmask]


# ------------------------------------------------------------------ parsing

_TERM = re.compile(r"\s*([ADE])(\d+)\s*(\[([^\]]*)\])?\s*")


def _type_edges(letter: str, n: int, offset: int) -> list[tuple[int, int]]:
    if letter == "A":
        pairs = [(i, i + 1) for i in range(1, n)]
    elif letter == "D":
        if n < 4:
            raise DiagramError(f"D{n} is not defined; use A{n}")
        pairs = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    else:
        if n not in (6, 7, 8):
            raise DiagramError(f"E{n} is not a finite type")
        pairs = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
    return [(a + offset, b + offset) for a, b in pairs]


def _parse_param_list(text: str, where: int) -> list[Fraction]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise DiagramError(f"empty parameter near position {where}")
        try:
            out.append(as_param(tok))
        except DiagramError as exc:
            raise DiagramError(f"{exc} near position {where}") from None
    return out


def parse_shorthand(text: str) -> CoxeterDiagram:
    """`A3[0,0,1]`, `D4`, `E6[...]`, sums with `+`, or the sugar `q=0010`.

    Nodes are numbered 1, 2, ... consecutively across summands; D and E
    summands use Bourbaki numbering (E: 1-3-4-5-6-7-8 with 2 on 4).
    """
    stripped = text.strip()
    if stripped.startswith("q="):
        bits = stripped[2:].strip()
        if not bits:
            return CoxeterDiagram((), frozenset(), ())
        bad = next((i for i, c in enumerate(bits) if c not in "01"), None)
        if bad is not None:
            raise DiagramError(f"expected 0 or 1 at position {bad + 2} of {text!r}")
        n = len(bits)
        return CoxeterDiagram(tuple(range(1, n + 1)),
                              frozenset(frozenset((i, i + 1)) for i in range(1, n)),
                              tuple(int(c) for c in bits))
    nodes: list[int] = []
    edges: list[tuple[int, int]] = []
    params: list[Fraction] = []
    have_params: list[bool] = []
    pos = 0
    for piece in text.split("+"):
        m = _TERM.fullmatch(piece)
        if not m:
            raise DiagramError(f"cannot parse {piece.strip()!r} at position {pos}")
        letter, n = m.group(1), int(m.group(2))
        if n < 1:
            raise DiagramError(f"rank must be positive at position {pos}")
        offset = len(nodes)
        edges += _type_edges(letter, n, offset)
        nodes += list(range(offset + 1, offset + n + 1))
        if m.group(3):
            ps = _parse_param_list(m.group(4), pos + m.start(4))
            if len(ps) != n:
                raise DiagramError(f"{letter}{n} needs {n} parameters, got {len(ps)} "
                                   f"at position {pos}")
            params += ps
            have_params.append(True)
        else:
            params += [Fraction(0)] * n
            have_params.append(False)
        pos += len(piece) + 1
    if any(have_params) and not all(have_params):
        raise DiagramError("either every summand or no summand must carry parameters")
    return CoxeterDiagram(tuple(nodes), frozenset(frozenset(e) for e in edges),
                          tuple(params) if all(have_params) else None)


def parse_json_diagram(obj) -> CoxeterDiagram:
    """{"nodes": [{"id": .., "q": ..}], "edges": [[a, b] or [a, b, m]]}."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
    if not isinstance(obj, dict) or "nodes" not in obj:
        raise DiagramError("JSON diagram needs a 'nodes' list")
    ids, params = [], []
    for entry in obj["nodes"]:
        if isinstance(entry, dict):
            if "id" not in entry:
                raise DiagramError("every node needs an 'id'")
            ids.append(entry["id"])
            params.append(entry.get("q"))
        else:
            ids.append(entry)
            params.append(None)
    if any(p is None for p in params) and not all(p is None for p in params):
        raise DiagramError("either every node or no node must carry 'q'")
    edges = []
    seen = set()
    for e in obj.get("edges", []):
        if not isinstance(e, (list, tuple)) or len(e) not in (2, 3):
            raise DiagramError(f"malformed edge {e!r}")
        label = e[2] if len(e) == 3 else 3
        if label not in (2, 3):
            raise DiagramError(f"edge {list(e[:2])} has label {label}; only 2 and 3 "
                               "(simply laced) are supported")
        key = frozenset(e[:2])
        if key in seen:
            raise DiagramError(f"multi-edge between {e[0]!r} and {e[1]!r}")
        seen.add(key)
        if label == 3:
            edges.append(key)
    p = None if all(x is None for x in params) else tuple(params)
    return CoxeterDiagram(tuple(ids), frozenset(edges), p)


def build_diagram(spec) -> CoxeterDiagram:
    """Diagram from shorthand text, JSON text, or an already-decoded JSON object."""
    if isinstance(spec, CoxeterDiagram):
        return spec
    if isinstance(spec, dict):
        return parse_json_diagram(spec)
    if not isinstance(spec, str):
        raise DiagramError(f"cannot build a diagram from {type(spec).__name__}")
    if spec.lstrip().startswith("{"):
        return parse_json_diagram(spec)
    return parse_shorthand(spec)

"""Partitions, compositions and the type-A combinatorics built on them."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial

from .errors import DiagramError
from .formal import FormalSum


class Composition(tuple):
    """Sequence of positive integers, printed as (a,b,...)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise DiagramError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def descent_set(self) -> frozenset:
        """D(alpha) = partial sums alpha_1, alpha_1+alpha_2, ... (all but the last)."""
        out, acc = set(), 0
        for p in self[:-1]:
            acc += p
            out.add(acc)
        return frozenset(out)

    @classmethod
    def from_descents(cls, descents, n: int) -> "Composition":
        if n == 0:
            if descents:
                raise DiagramError("the empty composition has no descents")
            return cls(())
        cuts = sorted(descents)
        if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
            raise DiagramError(f"descent set {cuts} is not inside [1, {n - 1}]")
        bounds = [0] + cuts + [n]
        return cls(b - a for a, b in zip(bounds, bounds[1:]))

    def concat(self, other: "Composition") -> "Composition":
        """alpha . beta"""
        return Composition(tuple(self) + tuple(other))

    def near_concat(self, other: "Composition") -> "Composition":
        """alpha |> beta: the last part of alpha merges with the first of beta."""
        if not self or not other:
            raise DiagramError("near-concatenation needs two nonempty compositions")
        return Composition(self[:-1] + (self[-1] + other[0],) + other[1:])

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"

    __str__ = __repr__


class Partition(tuple):
    """Weakly decreasing positive integers, printed as [a,b,...]."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise DiagramError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DiagramError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def is_row(self) -> bool:
        """True for the single-row partition, i.e. the trivial character."""
        return len(self) <= 1

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]" if self else "[]"

    __str__ = __repr__


def partitions(n: int) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order: [n], [n-1,1], ..."""
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, n, [])
    return out


def compositions(n: int) -> list[Composition]:
    """Compositions of n, ordered by descent set (as sorted tuples, shortest first)."""
    subsets = [frozenset(c) for k in range(n) for c in combinations(range(1, n), k)]
    return [Composition.from_descents(d, n) for d in subsets]


def hook_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.size) // hooks


def lr_coefficient(mu, nu, lam) -> int:
    """c^lam_{mu,nu}: LR tableaux of shape lam/mu and content nu.

    Cells are filled row by row from the top, each row right to left, which
    is the reverse reading order; the running content must stay a lattice
    word, rows weakly increase left to right and columns strictly increase.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if mu.size + nu.size != lam.size or len(mu) > len(lam):
        return 0
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    return _lr(tuple(mu), tuple(nu), tuple(lam))


@lru_cache(maxsize=None)
def _lr(mu: tuple, nu: tuple, lam: tuple) -> int:
    rows = len(lam)
    mu = mu + (0,) * (rows - len(mu))
    cells = [(i, j) for i in range(rows) for j in range(lam[i] - 1, mu[i] - 1, -1)]
    fill: dict[tuple[int, int], int] = {}
    count = [0] * (len(nu) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        total = 0
        right = fill.get((i, j + 1))
        above = fill.get((i - 1, j), 0) if i > 0 and j >= mu[i - 1] else 0
        hi = len(nu) if right is None else right
        for v in range(max(1, above + 1), hi + 1):
            if count[v] >= nu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            fill[(i, j)] = v
            count[v] += 1
            total += rec(k + 1)
            count[v] -= 1
            del fill[(i, j)]
        return total

    return rec(0)


# ------------------------------------------------------------- permutations

def descents_of_permutation(perm) -> frozenset:
    return frozenset(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def min_permutation(alpha: Composition) -> tuple:
    """The shortest permutation with descent set D(alpha), in one-line notation.

    This is w0(D(alpha)): each maximal run of consecutive descent positions
    i..j reverses the window of values i..j+1, everything else is fixed.
    """
    alpha = Composition(alpha)
    n = alpha.size
    perm = list(range(1, n + 1))
    d = sorted(alpha.descent_set())
    k = 0
    while k < len(d):
        start = d[k]
        while k + 1 < len(d) and d[k + 1] == d[k] + 1:
            k += 1
        end = d[k] + 1
        perm[start - 1:end] = perm[start - 1:end][::-1]
        k += 1
    return tuple(perm)


def shuffle_permutations(u, v) -> list[tuple]:
    """Shuffles of u with v shifted up by len(u)."""
    a, b = len(u), len(v)
    shifted = [x + a for x in v]
    out = []
    for pos in combinations(range(a + b), a):
        word, iu, iv = [], 0, 0
        chosen = set(pos)
        for k in range(a + b):
            if k in chosen:
                word.append(u[iu])
                iu += 1
            else:
                word.append(shifted[iv])
                iv += 1
        out.append(tuple(word))
    return out


def shuffle_product(alpha, beta, u=None, v=None) -> FormalSum:
    """alpha shuffle beta as a multiset of compositions.

    u, v may be any permutations with descent sets D(alpha), D(beta); the
    minimal ones are used by default.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    u = min_permutation(alpha) if u is None else tuple(u)
    v = min_permutation(beta) if v is None else tuple(v)
    if descents_of_permutation(u) != alpha.descent_set() or len(u) != alpha.size:
        raise DiagramError("u does not represent alpha")
    if descents_of_permutation(v) != beta.descent_set() or len(v) != beta.size:
        raise DiagramError("v does not represent beta")
    n = alpha.size + beta.size
    return FormalSum.of(Composition.from_descents(descents_of_permutation(w), n)
                        for w in shuffle_permutations(u, v))


def split_composition(alpha, m: int) -> tuple[Composition, Composition]:
    """(alpha_{<=m}, alpha_{>m}): the descent set cut at m."""
    alpha = Composition(alpha)
    n = alpha.size
    if not 0 <= m <= n:
        raise DiagramError(f"cut point {m} outside [0, {n}]")
    d = alpha.descent_set()
    left = Composition.from_descents({x for x in d if x < m}, m)
    right = Composition.from_descents({x - m for x in d if x > m}, n - m)
    return left, right


def restrict_composition(alpha, m: int) -> FormalSum:
    """alpha restricted at m, as a multiset of pairs (beta, gamma).

    Computed from the 0-Hecke modules themselves: P_alpha over H_n(0) is
    restricted to H_m(0) x H_{n-m}(0) and its top is read off.
    """
    from .coxeter import CoxeterDiagram
    from .zerohecke import restrict_P0

    alpha = Composition(alpha)
    n = alpha.size
    if not 0 <= m <= n:
        raise DiagramError(f"cut point {m} outside [0, {n}]")
    if m in (0, n):
        pair = (Composition(()), alpha) if m == 0 else (alpha, Composition(()))
        return FormalSum.single(pair)
    nodes = tuple(range(1, n))
    diagram = CoxeterDiagram(nodes, frozenset(frozenset((i, i + 1)) for i in range(1, n - 1)))
    keep = frozenset(nodes) - {m}
    terms = restrict_P0(diagram, frozenset(nodes), keep, alpha.descent_set())
    out = FormalSum()
    for k, c in terms.items():
        left = Composition.from_descents({x for x in k if x < m}, m)
        right = Composition.from_descents({x - m for x in k if x > m}, n - m)
        out.add((left, right), c)
    return out

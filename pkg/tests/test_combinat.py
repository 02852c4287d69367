from collections import Counter
from itertools import combinations_with_replacement, permutations, product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hecke_ip.combinat import (Composition, Partition, compositions, descents_of_permutation,
                               hook_dim, lr_coefficient, min_permutation, partitions,
                               restrict_composition, shuffle_product, split_composition)
from hecke_ip.errors import DiagramError


# ---- brute oracles: polynomials as Counter{exponent tuple: coeff}

def syt_count(lam) -> int:
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    count = 0
    for order in permutations(range(len(cells))):
        val = dict(zip(cells, order))
        if all(val[(i, j)] < val[(i, j + 1)] for i, j in cells if (i, j + 1) in val) and \
           all(val[(i, j)] < val[(i + 1, j)] for i, j in cells if (i + 1, j) in val):
            count += 1
    return count


def schur(lam, k) -> Counter:
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    out = Counter()
    for vals in product(range(k), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(i, j)] <= t[(i, j + 1)] for i, j in cells if (i, j + 1) in t) and \
           all(t[(i, j)] < t[(i + 1, j)] for i, j in cells if (i + 1, j) in t):
            e = [0] * k
            for v in vals:
                e[v] += 1
            out[tuple(e)] += 1
    return out


def fundamental(alpha, k) -> Counter:
    n = sum(alpha)
    d = Composition(alpha).descent_set()
    out = Counter()
    for idx in combinations_with_replacement(range(k), n):
        if all(idx[p - 1] < idx[p] for p in d):
            e = [0] * k
            for v in idx:
                e[v] += 1
            out[tuple(e)] += 1
    return out


def mul(a: Counter, b: Counter) -> Counter:
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def expand(poly: Counter, basis: dict) -> Counter:
    """Peel off basis elements by their leading (lex-largest) monomial."""
    poly, coeffs = Counter(poly), Counter()
    lead = {max(b): key for key, b in basis.items()}
    while True:
        poly = Counter({e: c for e, c in poly.items() if c})
        if not poly:
            return coeffs
        top = max(poly)
        key = lead[top]
        c = poly[top]
        coeffs[key] += c
        for e, v in basis[key].items():
            poly[e] -= c * v


def schur_basis(n, k):
    return {lam: schur(lam, k) for lam in partitions(n) if len(lam) <= k}


def fundamental_basis(n):
    return {a: fundamental(a, n) for a in compositions(n)}


# ---- tests

@pytest.mark.parametrize("n", range(1, 7))
def test_hook_dim_counts_tableaux(n):
    for lam in partitions(n):
        assert hook_dim(lam) == syt_count(lam)


def test_partition_listing():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(3) == [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    assert len(compositions(5)) == 16


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_lr_against_schur_products(a, b):
    n = a + b
    basis = schur_basis(n, n)
    for mu in partitions(a):
        for nu in partitions(b):
            got = expand(mul(schur(mu, n), schur(nu, n)), basis)
            for lam in partitions(n):
                assert lr_coefficient(mu, nu, lam) == got.get(lam, 0), (mu, nu, lam)


parts = st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions(n)))


@settings(max_examples=150, deadline=None)
@given(parts, parts)
def test_lr_symmetric_and_dims(mu, nu):
    n = mu.size + nu.size
    total = 0
    for lam in partitions(n):
        c = lr_coefficient(mu, nu, lam)
        assert c == lr_coefficient(nu, mu, lam)
        total += c * hook_dim(lam)
    assert total == comb(n, mu.size) * hook_dim(mu) * hook_dim(nu)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (1, 3), (3, 2)])
def test_shuffle_is_quasisymmetric_product(a, b):
    basis = fundamental_basis(a + b)
    for alpha in compositions(a):
        for beta in compositions(b):
            want = expand(mul(fundamental(alpha, a + b), fundamental(beta, a + b)), basis)
            assert dict(shuffle_product(alpha, beta)) == dict(want)


@pytest.mark.parametrize("n", range(2, 6))
def test_restriction_dual_to_shuffle(n):
    # restriction of projectives is adjoint to the product of fundamentals
    basis = fundamental_basis(n)
    for m in range(1, n):
        prods = {(b, g): expand(mul(fundamental(b, n), fundamental(g, n)), basis)
                 for b in compositions(m) for g in compositions(n - m)}
        for alpha in compositions(n):
            got = restrict_composition(alpha, m)
            want = {k: v[alpha] for k, v in prods.items() if v[alpha]}
            assert dict(got) == want


comps = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(Composition)


small = st.lists(st.integers(1, 2), min_size=1, max_size=3).map(Composition)


@settings(max_examples=100, deadline=None)
@given(small, comps)
def test_shuffle_size_and_representative_choice(alpha, beta):
    s = shuffle_product(alpha, beta)
    assert s.total() == comb(alpha.size + beta.size, alpha.size)
    # any permutation in the descent class gives the same multiset
    u = max(p for p in permutations(range(1, alpha.size + 1))
            if descents_of_permutation(p) == alpha.descent_set())
    assert shuffle_product(alpha, beta, u=u) == s


@settings(max_examples=200, deadline=None)
@given(comps, st.data())
def test_descent_round_trip_and_split(alpha, data):
    n = alpha.size
    assert Composition.from_descents(alpha.descent_set(), n) == alpha
    assert descents_of_permutation(min_permutation(alpha)) == alpha.descent_set()
    m = data.draw(st.integers(0, n))
    left, right = split_composition(alpha, m)
    assert left.size == m and right.size == n - m
    if m in (0, n):
        return
    glued = left.concat(right) if m in alpha.descent_set() else left.near_concat(right)
    assert glued == alpha


def test_bad_inputs():
    with pytest.raises(DiagramError):
        Partition([1, 2])
    with pytest.raises(DiagramError):
        Composition([2, 0])
    with pytest.raises(DiagramError):
        shuffle_product((2,), (1,), u=(2, 1))
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hecke_ip.coxeter import build_diagram
from hecke_ip.errors import DiagramError, OutOfScopeError
from hecke_ip.heckealg import dimension, hecke_monoid
from hecke_ip.repthy import (IrrLabel, cartan_matrix_hq, class_size, context, finite_rep_type,
                             irr_labels, lambda_component, pim_dim, quiver_hq,
                             regular_decomposition_check, rep_type_brute, simple_dim)
from hecke_ip.zerohecke import _class_size, subsets


def semisimple_quotient_dim(d) -> int:
    """dim A / rad A for the monoid algebra, from the trace form.

    Left multiplication by a basis element permutes-or-merges basis vectors,
    so its trace is its number of fixed points.
    """
    m = hecke_monoid(d)
    basis = m.basis_positions()
    n = len(basis)
    fix = {}
    for x in basis:
        fix[x] = sum(1 for z in basis if m.multiply_positions(x, z) == z)
    gram = np.array([[fix[m.multiply_positions(x, y)] for y in basis] for x in basis], dtype=float)
    return int(np.linalg.matrix_rank(gram)) if n else 0


@pytest.mark.parametrize("text", ["q=0", "q=1", "q=01", "q=10", "q=11", "q=010", "q=101",
                                  "q=0110", "q=1001", "q=0011", "D4[1,0,0,0]", "D4[0,1,1,1]"])
def test_simples_against_trace_form(text):
    d = build_diagram(text)
    assert sum(simple_dim(d, lab) ** 2 for lab in irr_labels(d)) == semisimple_quotient_dim(d)


patterns = st.lists(st.sampled_from("01"), min_size=1, max_size=7).map("".join)


@settings(max_examples=80, deadline=None)
@given(patterns)
def test_regular_decomposition(p):
    d = build_diagram(f"q={p}")
    report = regular_decomposition_check(d)
    assert report["sum"] == dimension(d)
    assert sum(simple_dim(d, lab) * pim_dim(d, lab) for lab in irr_labels(d)) == dimension(d)


@pytest.mark.parametrize("name", ["A5", "D5", "E6"])
def test_class_size_against_enumeration(name):
    d = build_diagram(name)
    subsets_of = [frozenset(s) for s in subsets(d.nodes)]
    for ambient in [frozenset(d.nodes), frozenset(d.nodes[:3])]:
        for I in subsets_of:
            if not I <= ambient:
                continue
            want = _class_size(d.nodes, d.edges, d.mask(ambient), d.mask(I))
            assert class_size(d, ambient, I) == want


@pytest.mark.parametrize("p", ["".join(x) for n in range(1, 5) for x in product("01", repeat=n)])
def test_rep_type_rule_against_quivers(p):
    d = build_diagram(f"q={p}")
    assert finite_rep_type(d) == rep_type_brute(d)


def test_labels_and_s0():
    d = build_diagram("q=0110")
    ctx = context(d)
    labs = irr_labels(d)
    # lam = [3]: both zero nodes free; lam = [2,1] or [1,1,1]: both blocked
    assert len(labs) == 4 + 1 + 1
    assert ctx.s0((ctx.lambdas()[1][0],)) == frozenset()
    with pytest.raises(DiagramError):
        ctx.check_label(IrrLabel(frozenset({1}), ((2, 1),)))


def test_cartan_block_diagonal_and_quiver():
    d = build_diagram("q=00100")
    labels, C = cartan_matrix_hq(d)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            if a.lam != b.lam:
                assert C[i][j] == 0
        assert C[i][i] >= 1
    q = quiver_hq(d)
    assert len(q.vertices) == len(labels)
    for lam in {lab.lam for lab in labels}:
        part = lambda_component(q, lam)
        assert all(a.lam == b.lam == lam for a, b in part.arrows)


def test_non_type_a_one_block_refused():
    d = build_diagram("D4[1,1,1,1]")
    with pytest.raises(OutOfScopeError):
        irr_labels(d)

import pytest
from hypothesis import given, settings, strategies as st

from hecke_ip.combinat import Composition, Partition, restrict_composition, shuffle_product
from hecke_ip.errors import DiagramError
from hecke_ip.formal import FormalSum
from hecke_ip.tower import (C, P, TowerLabel, coassociativity_failures, coproduct, counterexample,
                            duality_failures, hat_tensor, labels_of_grade, pairing, parse_label,
                            restrict_at, runs)


def zero_label(alpha, kind=C) -> TowerLabel:
    alpha = Composition(alpha)
    return TowerLabel(kind, "0" * (alpha.size - 1), (alpha, Partition([1])))


def as_compositions(s: FormalSum) -> dict:
    return {Composition(t.parts[0]): m for t, m in s.items()}


COMPS = [Composition(c) for c in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 2), (1, 1, 1)]]


@pytest.mark.parametrize("a", COMPS)
@pytest.mark.parametrize("b", COMPS[:4])
def test_zero_tower_products(a, b):
    # the all-zero strings are the 0-Hecke tower
    assert as_compositions(hat_tensor(zero_label(a), zero_label(b))) == dict(shuffle_product(a, b))
    got = as_compositions(hat_tensor(zero_label(a, P), zero_label(b, P)))
    assert got == {a.concat(b): 1, a.near_concat(b): 1}


@pytest.mark.parametrize("alpha", COMPS + [Composition((2, 2)), Composition((1, 3))])
def test_zero_tower_coproduct(alpha):
    x = zero_label(alpha, P)
    for m in range(1, alpha.size):
        got = {(Composition(u.parts[0]), Composition(v.parts[0])): c
               for (u, v), c in restrict_at(x, m).items()}
        assert got == dict(restrict_composition(alpha, m))


labels_small = st.integers(1, 2).flatmap(lambda n: st.sampled_from(labels_of_grade(n, C)))


@settings(max_examples=60, deadline=None)
@given(labels_small, labels_small, labels_small)
def test_product_associative(x, y, z):
    assert hat_tensor(hat_tensor(x, y), z) == hat_tensor(x, hat_tensor(y, z))
    px, py, pz = (t.with_kind(P) for t in (x, y, z))
    assert hat_tensor(hat_tensor(px, py), pz) == hat_tensor(px, hat_tensor(py, pz))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(labels_of_grade(n, P))))
def test_unit_and_counit(x):
    unit = TowerLabel.unit(P)
    assert hat_tensor(unit, x) == hat_tensor(x, unit) == FormalSum.single(x)
    delta = coproduct(x)
    assert delta[(unit, x)] == 1 and delta[(x, unit)] == 1
    for (u, v), m in delta.items():
        assert u.grade + v.grade == x.grade and m > 0


@pytest.mark.parametrize("n", range(1, 6))
def test_text_round_trip(n):
    for x in labels_of_grade(n, C):
        assert parse_label(x.text(), x.q, C) == x
        assert TowerLabel.from_irr(C, x.q, x.to_irr()) == x


def test_parse_placeholders_and_errors():
    x = parse_label("(1),[2]", "1", C)
    assert parse_label("[1],(1),[2]", "1", C) == x
    assert parse_label("(2)", "0", C) == parse_label("(2),[1]", "0", C)
    with pytest.raises(DiagramError):
        parse_label("(3)", "0", C)
    with pytest.raises(DiagramError):
        parse_label("(1),[3]", "1", C)
    assert runs("0110") == [([1], [2, 3]), ([4], [])]


def test_duality_and_coassociativity():
    checked, failures = duality_failures(5)
    assert checked and not failures
    for kind in (C, P):
        checked, failures = coassociativity_failures(4, kind)
        assert checked and not failures


def test_not_a_bialgebra():
    ce = counterexample()
    assert (ce["in_delta_of_product"], ce["in_product_of_deltas"]) == (0, 1)


def test_pairing():
    x = parse_label("(2)", "0", P)
    y = parse_label("(2)", "0", C)
    z = parse_label("(1,1)", "0", C)
    assert pairing(x, y) == 1 and pairing(x, z) == 0
    assert pairing(FormalSum({x: 3}), FormalSum({y: 2, z: 5})) == 6

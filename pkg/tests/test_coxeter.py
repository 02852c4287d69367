import json
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hecke_ip.coxeter import (GroupElement, bruhat_leq, build_diagram, classify,
                              enumerate_group, group_order_by_type, longest_element,
                              min_coset_reps, parabolic_decompose)
from hecke_ip.errors import DiagramError, GuardExceeded, UnclassifiableError


# type A oracle: s_i swaps positions i, i+1 of a one-line permutation

def perm_of(w: GroupElement, n: int) -> tuple:
    p = list(range(1, n + 2))
    for s in w.reduced_word():
        p[s - 1], p[s] = p[s], p[s - 1]
    return tuple(p)


def inversions(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def ehresmann_leq(u, w) -> bool:
    for i in range(1, len(u)):
        a, b = sorted(u[:i]), sorted(w[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def test_shorthand_shapes():
    assert build_diagram("A2").n == 2
    d4 = build_diagram("D4")
    assert sorted(len(d4.neighbours(v)) for v in d4.nodes) == [1, 1, 1, 3]
    two = build_diagram("A1+A1")
    assert two.n == 2 and not two.edges


def test_orders_by_type():
    assert group_order_by_type(build_diagram("D4")) == 192
    assert group_order_by_type(build_diagram("A2")) == 6
    assert group_order_by_type(build_diagram("E7")) == 72 * factorial(8)
    assert group_order_by_type(build_diagram("E8")) == 696729600
    assert classify(build_diagram("E6+A2")) == [("E", 6), ("A", 2)]


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "A2+A1"])
def test_enumeration_matches_order(name):
    d = build_diagram(name)
    t = enumerate_group(d)
    assert t.size == group_order_by_type(d)
    assert len({t.element(p) for p in range(t.size)}) == t.size


def test_guard_refuses():
    with pytest.raises(GuardExceeded):
        enumerate_group(build_diagram("E6"), guard=1000)


def test_parse_errors_carry_position():
    with pytest.raises(DiagramError, match="position"):
        build_diagram("A3[0,1]")
    with pytest.raises(DiagramError, match="position 4"):
        build_diagram("q=01x1")
    with pytest.raises(DiagramError):
        build_diagram('{"nodes": [1, 2], "edges": [[1, 2, 4]]}')
    with pytest.raises(DiagramError, match="multi-edge"):
        build_diagram('{"nodes": [1, 2], "edges": [[1, 2], [2, 1]]}')


def test_affine_is_unclassifiable():
    cyc = build_diagram('{"nodes": [1, 2, 3], "edges": [[1, 2], [2, 3], [3, 1]]}')
    with pytest.raises(UnclassifiableError):
        group_order_by_type(cyc)


def test_type_a_against_permutations():
    n = 4
    d = build_diagram(f"A{n}")
    t = enumerate_group(d)
    perms = {perm_of(t.element(p), n): p for p in range(t.size)}
    assert set(perms) == set(permutations(range(1, n + 2)))
    for p, pos in perms.items():
        w = t.element(pos)
        assert w.length() == inversions(p)
        assert w.right_descents() == {i for i in range(1, n + 1) if p[i - 1] > p[i]}


def test_bruhat_against_ehresmann():
    n = 3
    t = enumerate_group(build_diagram(f"A{n}"))
    elems = [t.element(p) for p in range(t.size)]
    for u in elems:
        for w in elems:
            assert bruhat_leq(u, w) == ehresmann_leq(perm_of(u, n), perm_of(w, n))


words = st.lists(st.sampled_from([1, 2, 3, 4]), max_size=14)


@settings(max_examples=200, deadline=None)
@given(words)
def test_words_and_lengths(word):
    d = build_diagram("D4")
    w = GroupElement.from_word(d, word)
    red = w.reduced_word()
    assert len(red) == w.length() <= len(word)
    assert GroupElement.from_word(d, red) == w
    assert (w * w.inverse()).is_identity()
    for s in d.nodes:
        ws = w.times_generator(s)
        assert ws.length() == w.length() + (-1 if s in w.right_descents() else 1)


@settings(max_examples=100, deadline=None)
@given(words, st.sets(st.sampled_from([1, 2, 3, 4])))
def test_parabolic_decomposition(word, J):
    d = build_diagram("D4")
    w = GroupElement.from_word(d, word)
    head, tail = parabolic_decompose(w, J)
    assert head * tail == w
    assert not head.right_descents() & J
    assert tail.support() <= J
    assert head.length() + tail.length() == w.length()


def test_longest_and_cosets():
    d = build_diagram("A3")
    w0 = longest_element(d, d.nodes)
    assert w0.length() == 6
    reps = min_coset_reps(d, d.nodes, {1, 2})
    assert len(reps) == 24 // 6


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from(["0", "1", "2", "-1/2"]), min_size=1, max_size=6))
def test_json_round_trip(params):
    d = build_diagram(f"A{len(params)}[{','.join(params)}]")
    assert build_diagram(json.loads(json.dumps(d.to_json()))) == d

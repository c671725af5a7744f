from fractions import Fraction as Fr

import pytest
from hypothesis import given

from discdisp import (
    ConditionOneViolated,
    IndexOutOfRange,
    from_pmf,
    nn_set,
    rel_and,
    rel_join,
    rel_or,
    to_approx,
    uniform_range,
)
from discdisp.experiments import HALF_GRID, draw_rng, random_dist
from discdisp.relations import (
    condition_one_holds,
    rel_and_via_nn,
    rel_join_bruteforce,
    rel_or_via_nn,
)

from conftest import exact_dists


def on_integers(*weights, denom=1):
    return from_pmf([(i + 1, Fr(w, denom)) for i, w in enumerate(weights)])


def join_oracle(F, G):
    """Overlap of open intervals, written out from scratch."""
    def intervals(d):
        lo = [Fr(0)] + list(d.cum[:-1])
        return list(zip(lo, d.cum))

    out = set()
    for a, (l1, h1) in enumerate(intervals(F), 1):
        for b, (l2, h2) in enumerate(intervals(G), 1):
            if l1 < h2 and l2 < h1:
                out.add((a, b))
    return out


THIRDS_PAIR = (on_integers(1, 1, 1, denom=3), on_integers(4, 1, 1, 2, 2, 1, 1, 4, denom=16))


def test_join_two_uniforms():
    assert rel_join(uniform_range(2), uniform_range(5)).sorted() == [
        (1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5)]


def test_join_second_example():
    F, G = on_integers(1, 3, denom=4), on_integers(1, 2, 5, denom=8)
    assert rel_join(F, G).sorted() == [(1, 1), (1, 2), (2, 2), (2, 3)]


def test_and_or_example():
    F, G = THIRDS_PAIR
    assert rel_and(F, G).sorted() == [(2, 3), (2, 4), (3, 6), (3, 7)]
    assert set(rel_or(F, G)) == {(2, 2), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5),
                                 (2, 6), (3, 6), (3, 7), (3, 8)}


def test_nn_example():
    F, G = THIRDS_PAIR
    assert nn_set(F, G, 2) == (Fr(5, 16), Fr(3, 8))
    assert nn_set(uniform_range(2), uniform_range(5), 2) == (Fr(2, 5), Fr(3, 5))
    # a coinciding level comes back alone
    assert nn_set(uniform_range(2), uniform_range(4), 2) == (Fr(1, 2),)
    with pytest.raises(IndexOutOfRange):
        nn_set(F, G, 1)
    with pytest.raises(IndexOutOfRange):
        nn_set(F, G, 4)


def test_via_nn_example():
    F, G = THIRDS_PAIR
    assert rel_and_via_nn(F, G) == rel_and(F, G)
    assert rel_or_via_nn(F, G) == rel_or(F, G)


def test_via_nn_needs_condition_one():
    with pytest.raises(ConditionOneViolated):
        rel_and_via_nn(uniform_range(5), uniform_range(2))


def test_touching_intervals_do_not_relate():
    # both have a jump ending at level 1/2
    F, G = uniform_range(2), uniform_range(4)
    assert (1, 3) not in rel_join(F, G)
    assert (2, 2) not in rel_join(F, G)


def test_approx_mode_agrees():
    F, G = THIRDS_PAIR
    assert rel_join(to_approx(F), to_approx(G)) == rel_join(F, G)
    assert rel_or(to_approx(F), to_approx(G)) == rel_or(F, G)


@given(exact_dists())
def test_self_relations_diagonal(d):
    assert set(rel_join(d, d)) == {(a, a) for a in range(1, d.n + 1)}
    assert set(rel_and(d, d)) == {(a, a) for a in range(2, d.n + 1)}
    assert set(rel_or(d, d)) == {(a, a) for a in range(2, d.n + 1)}


@given(exact_dists(), exact_dists())
def test_join_matches_oracles(F, G):
    j = rel_join(F, G)
    assert set(j) == join_oracle(F, G)
    assert j == rel_join_bruteforce(F, G)


@given(exact_dists(), exact_dists())
def test_tiling_and_transposes(F, G):
    j = rel_join(F, G)
    for a in range(1, F.n + 1):
        row = j.row(a)
        assert row == list(range(row[0], row[-1] + 1))
    assert {b for _, b in j} == set(range(1, G.n + 1))
    assert rel_join(G, F) == j.transpose()
    assert rel_and(G, F).pairs == rel_and(F, G).transpose().pairs
    assert rel_or(G, F).pairs == rel_or(F, G).transpose().pairs
    assert rel_and(F, G).pairs <= rel_or(F, G).pairs


def test_nn_cross_check_random():
    """Nearest-neighbour forms agree with the direct sets on 1000 condition-(i) pairs."""
    seen = draws = 0
    while seen < 1000:
        rng = draw_rng("nn", draws)
        draws += 1
        F, G = random_dist(HALF_GRID, rng), random_dist(HALF_GRID, rng)
        if not condition_one_holds(F, G):
            continue
        seen += 1
        assert rel_and_via_nn(F, G) == rel_and(F, G)
        assert rel_or_via_nn(F, G) == rel_or(F, G)


def test_relation_json():
    assert rel_join(uniform_range(2), uniform_range(3)).to_json() == {
        "kind": "join", "pairs": [[1, 1], [1, 2], [2, 2], [2, 3]]}

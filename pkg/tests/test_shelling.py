"""Shelling orders of D_n, both verifiers, restrictions, Γ and exchange witnesses."""

import numpy as np
import pytest

from src.combinatorics.partitions import enumerate_d_njk
from src.complex.faces import PartialPartition
from src.complex.simplicial import build_dn
from src.shelling.gamma import gamma_matches_d_njk, gamma_table, h_counts
from src.shelling.order import (
    ShellingOrder,
    default_shelling_order,
    random_perturbation,
    sort_facets,
    swapped,
)
from src.shelling.verify import (
    exchange_witness,
    restriction,
    restrictions,
    split_block,
    verify_shelling_definition,
    verify_shelling_lemma,
)
from src.utils.errors import PreconditionError

P = PartialPartition.parse


# =============================================================================
# Orders
# =============================================================================

def test_default_order_d2():
    assert default_shelling_order(2).facets == (P("1,2"), P("12"))


@pytest.mark.parametrize("n", range(0, 7))
def test_default_order_is_size_decreasing(n):
    order = default_shelling_order(n)
    assert order.is_size_decreasing()
    assert set(order) == set(build_dn(n).facets)


def test_tiebreaks():
    lex = default_shelling_order(3, "lex")
    revlex = default_shelling_order(3, "revlex")
    assert lex.facets[1:4] == (P("1,23"), P("12,3"), P("13,2"))
    assert revlex.facets[1:4] == (P("13,2"), P("12,3"), P("1,23"))
    with pytest.raises(ValueError):
        sort_facets(lex.facets, "random")


def test_perturbation_is_deterministic_permutation():
    order = default_shelling_order(4)
    a = random_perturbation(order, 3, np.random.default_rng(0))
    b = random_perturbation(order, 3, np.random.default_rng(0))
    assert a == b
    assert sorted(a, key=lambda f: f.key) == sorted(order, key=lambda f: f.key)


# =============================================================================
# Verifiers
# =============================================================================

@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("tiebreak", ["lex", "revlex"])
def test_default_order_is_a_shelling(n, tiebreak):
    c = build_dn(n)
    order = default_shelling_order(n, tiebreak)
    assert verify_shelling_definition(c, order)
    assert verify_shelling_lemma(c, order)


@pytest.mark.slow
def test_default_order_is_a_shelling_six():
    c = build_dn(6)
    order = default_shelling_order(6)
    assert verify_shelling_definition(c, order)
    assert verify_shelling_lemma(c, order)


def test_reversed_d2_is_rejected():
    c = build_dn(2)
    order = ShellingOrder((P("12"), P("1,2")))
    by_definition = verify_shelling_definition(c, order)
    by_lemma = verify_shelling_lemma(c, order)
    assert not by_definition and not by_lemma
    assert by_definition.failing_position == 2
    assert by_lemma.failing_position == 2


def test_singleton_partition_too_early_is_rejected():
    c = build_dn(3)
    order = swapped(default_shelling_order(3), P("1,2,3"), P("12,3"))
    assert not verify_shelling_definition(c, order)
    assert not verify_shelling_lemma(c, order)


def test_d4_swap_of_total_and_matching_partition_is_rejected():
    c = build_dn(4)
    order = swapped(default_shelling_order(4), P("1,2,3,4"), P("12,34"))
    assert order[0] == P("12,34")
    assert not verify_shelling_definition(c, order)
    assert not verify_shelling_lemma(c, order)


@pytest.mark.parametrize("n", range(2, 6))
def test_verifiers_agree_on_perturbed_orders(n):
    c = build_dn(n)
    order = default_shelling_order(n)
    rng = np.random.default_rng(n)
    for _ in range(20):
        perturbed = random_perturbation(order, int(rng.integers(1, 4)), rng)
        assert bool(verify_shelling_definition(c, perturbed)) == bool(verify_shelling_lemma(c, perturbed))


def test_order_must_be_a_permutation_of_facets():
    with pytest.raises(PreconditionError):
        verify_shelling_definition(build_dn(3), [P("123")])


# =============================================================================
# Restrictions and Γ
# =============================================================================

def test_restrictions_d3():
    c = build_dn(3)
    order = default_shelling_order(3)
    sizes = [len(r) for r in restrictions(c, order)]
    # 1,2,3 | 1,23 12,3 13,2 | 123
    assert sizes == [0, 1, 1, 1, 1]
    assert restriction(c, order, 2).removable == frozenset({0b110})
    with pytest.raises(PreconditionError):
        restriction(c, order, 0)


def test_h_counts_d4():
    c = build_dn(4)
    table = gamma_table(c, default_shelling_order(4))
    assert h_counts(table) == {(1, 1): 1, (2, 1): 4, (2, 2): 3, (3, 1): 6, (4, 0): 1}
    assert table.cell(2, 2) == frozenset(enumerate_d_njk(4, 2, 2))
    assert table.to_json()["2,2"] == [[3, 12], [5, 10], [9, 6]]


@pytest.mark.parametrize("n", range(0, 7))
def test_gamma_equals_d_njk(n):
    c = build_dn(n)
    lex = gamma_table(c, default_shelling_order(n, "lex"))
    assert gamma_matches_d_njk(lex, n)
    assert gamma_table(c, default_shelling_order(n, "revlex")).entries == lex.entries


# =============================================================================
# Exchange witness
# =============================================================================

def test_split_block():
    assert split_block(0b1101) == (0b0001, 0b1100)


@pytest.mark.parametrize(
    "f_q,f_s,x,f_r",
    [
        ("1,2,3,4", "12,3,4", "12", "1,2,3,4"),
        ("12,34", "13,24", "13", "1,3,24"),
        ("1,2,34", "123,4", "123", "1,23,4"),
    ],
)
def test_exchange_witness(f_q, f_s, x, f_r):
    block, facet = exchange_witness(P(f_q), P(f_s))
    assert P(x).blocks == (block,)
    assert facet == P(f_r)


@pytest.mark.parametrize("n", range(2, 6))
def test_exchange_witness_precedes_in_default_order(n):
    order = default_shelling_order(n)
    position = {f: i for i, f in enumerate(order)}
    for s, f_s in enumerate(order):
        for f_q in order.facets[:s]:
            x, f_r = exchange_witness(f_q, f_s)
            assert position[f_r] < s
            assert f_r.intersection(f_s) == f_s.without(x)
            assert f_q.intersection(f_s).issubset(f_r.intersection(f_s))


@pytest.mark.parametrize(
    "f_q,f_s",
    [("12,3", "12,3"), ("1,2", "123"), ("123", "1,23")],
)
def test_exchange_witness_preconditions(f_q, f_s):
    with pytest.raises(PreconditionError):
        exchange_witness(P(f_q), P(f_s))

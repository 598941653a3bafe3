"""Set-partition and partial-partition generators."""

import pytest

from src.combinatorics.counting import bell, d_count
from src.combinatorics.partitions import (
    enumerate_d_njk,
    enumerate_partial_partitions,
    enumerate_set_partitions,
    is_non_singleton,
    partitions_of,
)
from src.complex.faces import EMPTY_FACE, PartialPartition, block_elements
from src.utils.config import ENV_MAX_N
from src.utils.errors import ResourceLimitError

P = PartialPartition.parse


def test_two_element_ground_set_in_growth_string_order():
    assert enumerate_set_partitions({1, 2}) == [P("12"), P("1,2")]


def test_empty_ground_set_has_one_partition():
    assert enumerate_set_partitions(set()) == [EMPTY_FACE]


def test_three_element_order():
    assert enumerate_set_partitions({1, 2, 3}) == [P("123"), P("12,3"), P("13,2"), P("1,23"), P("1,2,3")]


def test_arbitrary_ground_set():
    parts = enumerate_set_partitions({2, 5, 7})
    assert len(parts) == 5
    assert all(p.support == (1 << 1) | (1 << 4) | (1 << 6) for p in parts)


@pytest.mark.parametrize("n", range(0, 8))
def test_partition_count_is_bell(n):
    parts = partitions_of(n)
    assert len(parts) == bell(n)
    assert len(set(parts)) == len(parts)
    assert all(p.is_partition_of(n) for p in parts)


def test_partial_partitions_of_two():
    assert enumerate_partial_partitions(2) == [EMPTY_FACE, P("1"), P("2"), P("12"), P("1,2")]


@pytest.mark.parametrize("n", range(0, 8))
def test_partial_partition_count(n):
    faces = enumerate_partial_partitions(n)
    assert len(faces) == bell(n + 1)
    assert len(set(faces)) == len(faces)


def test_size_filter():
    vertices = enumerate_partial_partitions(3, 1)
    assert len(vertices) == 7
    assert all(len(f) == 1 for f in vertices)
    assert enumerate_partial_partitions(3, 0) == [EMPTY_FACE]


def test_enumerate_d_njk_anchor():
    assert enumerate_d_njk(4, 2, 2) == [P("12,34"), P("13,24"), P("14,23")]
    assert enumerate_d_njk(4, 1, 1) == [P("1234")]


def test_enumerate_d_njk_block_sizes():
    faces = enumerate_d_njk(6, 3, 3)
    assert len(faces) == 15
    for face in faces:
        assert sorted(len(block_elements(b)) for b in face) == [2, 2, 2]
        assert is_non_singleton(face)


@pytest.mark.parametrize("n,j,k", [(4, 5, 0), (4, 2, 3), (3, -1, 0)])
def test_enumerate_d_njk_out_of_range(n, j, k):
    assert enumerate_d_njk(n, j, k) == []
    assert d_count(n, j, k) == 0


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv(ENV_MAX_N, "3")
    assert len(partitions_of(3)) == 5
    with pytest.raises(ResourceLimitError, match=ENV_MAX_N):
        partitions_of(4)
    with pytest.raises(ResourceLimitError):
        enumerate_partial_partitions(4)


def test_default_ceiling():
    with pytest.raises(ResourceLimitError):
        partitions_of(13)

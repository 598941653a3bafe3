import pytest

from src.complex.faces import (
    EMPTY_FACE,
    PartialPartition,
    block_elements,
    block_from_elements,
    block_key,
    canonical_sorted,
    format_block,
    is_singleton,
    parse_block,
)
from src.utils.errors import PreconditionError


def test_block_bitmask_encoding():
    assert block_from_elements([1, 3]) == 0b101
    assert block_elements(0b1010) == (2, 4)
    assert is_singleton(0b100)
    assert not is_singleton(0b110)


def test_block_order_is_min_element_then_mask():
    blocks = [0b110, 0b001, 0b100, 0b011, 0b010, 0b101]
    assert sorted(blocks, key=block_key) == [0b001, 0b011, 0b101, 0b010, 0b110, 0b100]


def test_faces_are_canonical_regardless_of_input_order():
    assert PartialPartition((0b1100, 0b0011)) == PartialPartition((0b0011, 0b1100))
    assert PartialPartition((0b1100, 0b0011)).blocks == (0b0011, 0b1100)


def test_overlapping_blocks_rejected():
    with pytest.raises(PreconditionError):
        PartialPartition((0b011, 0b110))


@pytest.mark.parametrize("text", ["", "{}", "∅"])
def test_parse_empty(text):
    assert PartialPartition.parse(text) == EMPTY_FACE


@pytest.mark.parametrize("text", ["12,34", "1,23", "13,2", "5"])
def test_format_parse_inverse(text):
    assert str(PartialPartition.parse(text)) == text


def test_wide_notation_for_two_digit_elements():
    face = PartialPartition((block_from_elements([1, 10]), block_from_elements([2])))
    assert str(face) == "1.10,2"
    assert PartialPartition.parse("1.10,2") == face
    assert format_block(block_from_elements([1, 10]), wide=True) == "1.10"


@pytest.mark.parametrize("token", ["11", "1.x", ""])
def test_bad_block_tokens(token):
    with pytest.raises(PreconditionError):
        parse_block(token)


def test_face_queries():
    face = PartialPartition.parse("12,3,45")
    assert face.dim == 2
    assert face.support == 0b11111
    assert face.is_partition_of(5)
    assert not face.is_partition_of(6)
    assert face.singleton_blocks() == (0b100,)
    assert face.non_singleton_blocks() == (0b11, 0b11000)
    assert face.without(0b100) == PartialPartition.parse("12,45")
    assert PartialPartition.parse("12,45").issubset(face)
    assert face.intersection(PartialPartition.parse("12,34,5")) == PartialPartition.parse("12")
    assert face.difference(PartialPartition.parse("12")) == PartialPartition.parse("3,45")
    assert face.to_json() == [3, 4, 24]


def test_subfaces_cover_closure():
    face = PartialPartition.parse("12,34")
    subs = list(face.subfaces())
    assert subs[0] == EMPTY_FACE
    assert set(subs) == {EMPTY_FACE, PartialPartition.parse("12"), PartialPartition.parse("34"), face}


def test_canonical_sorted():
    faces = [PartialPartition.parse(t) for t in ["2", "1,2", "∅", "12", "1"]]
    assert [str(f) for f in canonical_sorted(faces)] == ["∅", "1", "12", "2", "1,2"]

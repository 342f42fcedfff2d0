#!/usr/bin/env python3
"""
Test script for ribbon operations and shifted skew shapes
"""

import sys
import os

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from gamma.combinat import compositions_of
from gamma.diagram import (Ribbon, ShiftedSkewShape, basic_blocks, comp_transpose, concat, corners,
                           from_star_word, head_length, near_concat, reflect_boxes, ribbon_boxes,
                           ribbon_from_boxes, ribbon_shape, rotate, rotate_boxes, shape_ops,
                           stacked_shape, star_word, tail_length, transpose, triangle)
from gamma.errors import PartitionError, ShapeError


def test_star_word():
    assert star_word((1, 3)) == "·⊙⊙", f"Got {star_word((1, 3))}"
    assert star_word((1,)) == ""
    assert from_star_word("·⊙⊙") == (1, 3)
    try:
        from_star_word("x")
        assert False, "Unknown symbols must be rejected"
    except ShapeError:
        pass
    print("Star word: ok")


def test_transpose_and_rotation():
    assert transpose((1, 3)) == (1, 1, 2), f"Got {transpose((1, 3))}"
    assert transpose((1, 2)) == (1, 2)
    assert transpose((4,)) == (1, 1, 1, 1)
    assert rotate((1, 3)) == (3, 1)
    for n in range(1, 8):
        for alpha in compositions_of(n):
            assert transpose(transpose(alpha)) == alpha, f"Transpose is not an involution on {alpha}"
            boxes = ribbon_boxes(alpha)
            assert reflect_boxes(boxes) == ribbon_boxes(transpose(alpha)), f"Reflection differs for {alpha}"
            assert rotate_boxes(boxes) == ribbon_boxes(rotate(alpha)), f"Rotation differs for {alpha}"
            assert ribbon_from_boxes(boxes) == alpha
    print("Transpose and rotation: ok")


def test_concatenations():
    assert concat((1, 2), (3,)) == (1, 2, 3)
    assert near_concat((1, 2), (3,)) == (1, 5)
    result = comp_transpose((2,), (1, 3, 1, 1, 2))
    assert result == (1, 3, 1, 1, 3, 4, 1, 2), f"Got {result}"
    assert comp_transpose((1, 1), (2,)) == (2, 1, 1)
    print("Concatenations: ok")


def test_triangles_and_blocks():
    assert triangle(5, 3) == (1, 1, 3)
    assert triangle(4, 1) == (4,)
    try:
        triangle(3, 4)
        assert False, "k > n must be rejected"
    except ShapeError:
        pass
    assert basic_blocks(2) == {(2,), (1, 1)}
    assert basic_blocks(4) == {(4,), (1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 1, 1), (3, 1)}
    print("Triangles and basic blocks: ok")


def test_corners_head_tail():
    assert corners((1, 2)) == 1
    assert corners((1, 1, 1)) == 1
    assert corners((1, 2, 2, 2)) == 3
    assert corners((3,)) == 0
    assert head_length((1, 1, 3)) == 3
    assert head_length((2, 1)) == 1
    for statistic in (head_length, tail_length):
        try:
            statistic((1, 1, 1))
            assert False, f"{statistic.__name__} is undefined on a single column"
        except ShapeError:
            pass
    try:
        Ribbon(())
        assert False, "An empty ribbon must be rejected"
    except ShapeError:
        pass
    print("Corners, head and tail: ok")


def test_shifted_shapes():
    shape = ribbon_shape((1, 2))
    assert shape.outer == (3, 2) and shape.inner == (2,), f"Got {shape}"
    assert str(shape) == "3,2/2"
    assert shape.size == 3
    for n in range(1, 7):
        for alpha in compositions_of(n):
            ops = shape_ops(ribbon_shape(alpha))
            assert ops["is_connected"], f"ribbon_shape({alpha}) is disconnected"
            assert ops["as_ribbon"] == alpha, f"ribbon_shape({alpha}) reads back as {ops['as_ribbon']}"
    full = shape_ops(ShiftedSkewShape((3, 1)))
    assert full["as_ribbon"] is None
    assert full["has_2x2_witness"] == ((1, 1), (1, 2), (2, 2)), f"Got {full['has_2x2_witness']}"
    plain = ShiftedSkewShape.parse("2,2", shifted=False)
    assert plain.boxes == {(1, 1), (1, 2), (2, 1), (2, 2)}
    unshifted = shape_ops(ShiftedSkewShape((4, 2, 2), (1, 1), shifted=False))
    assert unshifted["as_ribbon"] == (3, 1, 2), f"Got {unshifted['as_ribbon']}"
    shifted = shape_ops(ShiftedSkewShape((4, 3, 2), (3, 2)))
    assert shifted["as_ribbon"] == (1, 1, 2), f"Got {shifted['as_ribbon']}"
    stacked = shape_ops(stacked_shape([(1,), (2,)]))
    assert not stacked["is_connected"] and len(stacked["components"]) == 2
    try:
        ShiftedSkewShape((3,), (4,))
        assert False, "Inner shape must fit inside the outer one"
    except ShapeError:
        pass
    try:
        ShiftedSkewShape((2, 2))
        assert False, "Shifted shapes need strict partitions"
    except ShapeError:
        pass
    try:
        ShiftedSkewShape.parse("2,3/1")
        assert False, "'2,3' is not a partition"
    except (ShapeError, PartitionError):
        pass
    print("Shifted shapes: ok")


if __name__ == "__main__":
    test_star_word()
    test_transpose_and_rotation()
    test_concatenations()
    test_triangles_and_blocks()
    test_corners_head_tail()
    test_shifted_shapes()
    print("\nAll tests passed!")

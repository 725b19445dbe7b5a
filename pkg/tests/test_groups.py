from fractions import Fraction
from math import factorial

import pytest

from frobstat.errors import OutOfRange
from frobstat.groups import (
    GroupShape,
    class_size,
    cycle_type_of,
    full_cycle_probability,
    partitions_of,
    predict,
    wreath_cycle_counts,
    wreath_oracle,
)


def test_partitions_counts():
    assert partitions_of(1) == ((1,),)
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(5)) == 7
    assert len(partitions_of(10)) == 42


def test_partitions_are_canonical():
    for d in range(1, 9):
        parts = partitions_of(d)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert sum(lam) == d
            assert all(a >= b for a, b in zip(lam, lam[1:]))
            assert all(p >= 1 for p in lam)


def test_partitions_out_of_range():
    with pytest.raises(OutOfRange):
        partitions_of(0)
    with pytest.raises(OutOfRange):
        partitions_of(41)


def test_class_size_examples():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2


def test_class_sizes_sum_to_factorial():
    for d in range(1, 11):
        assert sum(class_size(lam) for lam in partitions_of(d)) == factorial(d)


def test_class_size_out_of_range():
    with pytest.raises(OutOfRange):
        class_size((21,))


def test_shape_validation():
    with pytest.raises(OutOfRange):
        GroupShape((2, 3), (1,))
    with pytest.raises(OutOfRange):
        GroupShape((0,), (1,))
    shape = GroupShape((3, 2), (2, 1))
    assert shape.total_degree == 8


def test_predict_examples():
    trivial = predict(GroupShape((1,), (1,)))
    assert trivial == {((1,),): Fraction(1)}
    cubic = predict(GroupShape((3,), (1,)))
    assert cubic[((3,),)] == Fraction(1, 3)
    wreath = predict(GroupShape((2,), (2,)))
    assert wreath == {((2, 2),): Fraction(1, 2), ((4,),): Fraction(1, 2)}


def test_predict_sums_to_one():
    for degrees, splittings in [
        ((4,), (1,)),
        ((2, 3), (2, 1)),
        ((5,), (2,)),
        ((12,), (6,)),
        ((1, 1, 2), (3, 1, 2)),
    ]:
        assert sum(predict(GroupShape(degrees, splittings)).values()) == 1


def test_predict_label_constraints():
    shape = GroupShape((3, 2), (2, 3))
    for label in predict(shape):
        for part, (d, nu) in zip(label, zip(shape.degrees, shape.splittings)):
            assert sum(part) == d * nu
            assert all(piece % nu == 0 for piece in part)


def test_predict_bounds():
    with pytest.raises(OutOfRange):
        predict(GroupShape((13,), (1,)))
    with pytest.raises(OutOfRange):
        predict(GroupShape((2,), (7,)))


def test_wreath_oracle_examples():
    assert wreath_oracle(1, 3) == {(3,): Fraction(1)}
    assert wreath_oracle(2, 1) == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    assert wreath_oracle(2, 2) == {(2, 2): Fraction(1, 2), (4,): Fraction(1, 2)}


def test_wreath_oracle_bounds():
    with pytest.raises(OutOfRange):
        wreath_oracle(5, 1)
    with pytest.raises(OutOfRange):
        wreath_oracle(2, 4)


def test_predict_matches_wreath_oracle_everywhere():
    for d in range(1, 5):
        for nu in range(1, 4):
            by_formula = {label[0]: p for label, p in predict(GroupShape((d,), (nu,))).items()}
            assert by_formula == wreath_oracle(d, nu)


def test_full_cycle_examples():
    assert full_cycle_probability(GroupShape((3, 2), (1, 1))) == Fraction(1, 6)
    assert full_cycle_probability(GroupShape((2,), (2,))) == Fraction(1, 2)
    assert full_cycle_probability(GroupShape((1,), (5,))) == Fraction(1)


def test_full_cycle_matches_joint_sum():
    for degrees, splittings in [((2, 3), (2, 1)), ((4, 2), (1, 2))]:
        shape = GroupShape(degrees, splittings)
        joint = sum(
            p
            for label, p in predict(shape).items()
            if all(len(part) == 1 for part in label)
        )
        assert full_cycle_probability(shape) == joint


def test_cycle_type_of():
    assert cycle_type_of([1, 2, 0, 4, 3]) == (3, 2)
    assert cycle_type_of([0, 1, 2]) == (1, 1, 1)


def test_wreath_full_cycle_counts():
    # the coset of S_d wr Z/nu holds exactly (d!)^nu / d full cycles
    for d, nu in [(2, 2), (3, 2), (2, 3), (4, 2)]:
        counts, total = wreath_cycle_counts(d, nu)
        assert total == factorial(d) ** nu
        assert counts[(d * nu,)] == factorial(d) ** nu // d

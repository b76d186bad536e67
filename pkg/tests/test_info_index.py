import math
import random

import pytest

from choicetrust import (
    EmptyListError,
    GradeError,
    IfsElement,
    IfsList,
    choice_correspondence,
    choose_from_list,
    entropy,
    entropy_of_grades,
    fold_pairwise,
    make_list,
)


def test_entropy_balanced_half_is_one():
    assert entropy_of_grades(0.5, 0.5) == 1.0


def test_entropy_certain_message_is_zero():
    assert entropy_of_grades(1.0, 0.0) == 0.0
    assert entropy_of_grades(0.0, 1.0) == 0.0


def test_entropy_equal_quarter_grades_hit_one():
    assert abs(entropy_of_grades(0.25, 0.25) - 1.0) < 1e-12


def test_entropy_peaks_at_one_over_e():
    peak = 2 / (math.e * math.log(2))
    grid = [i / 100 for i in range(101)]
    values = [entropy_of_grades(g, g) for g in grid if 2 * g <= 1]
    assert max(values) <= peak + 1e-12
    assert abs(entropy_of_grades(1 / math.e, 1 / math.e) - peak) < 1e-12


def test_entropy_symmetric_on_grid():
    steps = [i / 20 for i in range(21)]
    worst = 0.0
    for mu in steps:
        for nu in steps:
            if mu + nu <= 1.0:
                worst = max(worst, abs(entropy_of_grades(mu, nu) - entropy_of_grades(nu, mu)))
    assert worst < 1e-12


def test_choose_prefers_balanced_grades():
    lst = make_list([("a", 0.5, 0.5), ("b", 0.9, 0.1)])
    assert choose_from_list(lst).id == "a"


def test_choose_picks_highest_index():
    lst = make_list([("a", 0.7, 0.1), ("b", 0.4, 0.4), ("c", 0.2, 0.1)])
    assert choose_from_list(lst).id == "b"
    hs = [entropy(e) for e in lst.elements]
    assert hs[1] == max(hs)


def test_choose_breaks_ties_by_position():
    lst = make_list([("a", 0.5, 0.5), ("b", 0.5, 0.5)])
    assert choose_from_list(lst).id == "a"


def test_choose_breaks_entropy_ties_by_indeterminacy():
    # equal index, the lower-indeterminacy grading wins regardless of order
    lst = make_list([("low-pi", 0.5, 0.5), ("high-pi", 0.25, 0.25)])
    assert choose_from_list(lst).id == "low-pi"
    lst = make_list([("high-pi", 0.25, 0.25), ("low-pi", 0.5, 0.5)])
    assert choose_from_list(lst).id == "low-pi"


def test_choice_correspondence_returns_all_maximizers():
    lst = make_list([("a", 0.5, 0.5), ("b", 0.9, 0.1), ("c", 0.5, 0.5)])
    assert [e.id for e in choice_correspondence(lst)] == ["a", "c"]


def test_fold_singleton():
    lst = make_list([("only", 0.3, 0.3)])
    assert fold_pairwise(lst).id == "only"


def test_fold_keeps_earlier_winner_on_ties():
    lst = make_list([("a", 0.5, 0.5), ("b", 0.9, 0.1), ("c", 0.5, 0.5)])
    assert fold_pairwise(lst).id == "a"


def test_fold_agrees_with_choose_on_random_lists():
    rng = random.Random(42)
    for _ in range(10000):
        k = rng.randint(1, 8)
        grades = []
        for i in range(k):
            a = rng.randint(0, 20)
            b = rng.randint(0, 20 - a)
            grades.append((f"x{i}", a / 20, b / 20))
        lst = make_list(grades)
        assert fold_pairwise(lst) is choose_from_list(lst)


def test_partition_identity_on_quantized_grid_small():
    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    grades = [(m, n) for m in grid for n in grid if m + n <= 1.0]
    elements = [
        [IfsElement(id=f"p{pos}", mu=m, nu=n) for (m, n) in grades] for pos in range(4)
    ]
    import itertools

    for length in (2, 3):
        for combo in itertools.product(range(len(grades)), repeat=length):
            full = IfsList(tuple(elements[pos][g] for pos, g in enumerate(combo)))
            winner = fold_pairwise(full)
            for split in range(1, length):
                left = IfsList(full.elements[:split])
                right = IfsList(full.elements[split:])
                pair = IfsList((fold_pairwise(left), fold_pairwise(right)))
                assert fold_pairwise(pair) is winner


def test_deleting_unchosen_element_preserves_choice():
    rng = random.Random(24)
    for _ in range(2000):
        k = rng.randint(2, 6)
        grades = []
        for i in range(k):
            a = rng.randint(0, 10)
            b = rng.randint(0, 10 - a)
            grades.append((f"x{i}", a / 10, b / 10))
        lst = make_list(grades)
        chosen = choose_from_list(lst)
        for drop in range(k):
            if lst.elements[drop] is chosen:
                continue
            smaller = IfsList(lst.elements[:drop] + lst.elements[drop + 1 :])
            assert choose_from_list(smaller) is chosen


def test_empty_list_rejected():
    with pytest.raises(EmptyListError):
        choose_from_list(IfsList(()))
    with pytest.raises(EmptyListError):
        fold_pairwise(IfsList(()))


def test_invalid_grades_name_the_element():
    with pytest.raises(GradeError) as err:
        IfsElement(id="bad", mu=0.7, nu=0.5)
    assert err.value.element_id == "bad"
    with pytest.raises(GradeError):
        IfsElement(id="oob", mu=1.2, nu=0.0)


def test_indeterminacy_complement():
    e = IfsElement(id="e", mu=0.2, nu=0.3)
    assert abs(e.indeterminacy - 0.5) < 1e-12

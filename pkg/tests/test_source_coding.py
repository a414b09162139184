import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prefixcast.source_coding import (
    CodeLengthSet,
    KraftViolation,
    ProbabilityMassFunction,
    arithmetic_progression_satisfies_kraft,
    code_from_lengths,
    consecutive_lengths_sum,
    expected_length,
    huffman_code,
    huffman_lengths,
    kraft_alphabet_monotonicity,
    kraft_sum,
    satisfies_kraft,
    shannon_entropy,
)

from oracles import is_prefix_free, optimal_expected_length


def words_as_strings(code):
    return {label: str(w) for label, w in code.assignments.items()}


# ---------------------------------------------------------------- kraft sums


def test_kraft_sum_binary_lengths_1_2_3():
    # 1/2 + 1/4 + 1/8
    assert kraft_sum(CodeLengthSet((1, 2, 3), 2)) == pytest.approx(0.875, abs=1e-15)
    assert satisfies_kraft(CodeLengthSet((1, 2, 3), 2))


def test_kraft_sum_saturated_and_violated():
    assert kraft_sum(CodeLengthSet((1, 1), 2)) == pytest.approx(1.0, abs=0.0)
    assert satisfies_kraft(CodeLengthSet((1, 1), 2))
    assert kraft_sum(CodeLengthSet((1, 1, 1), 2)) == pytest.approx(1.5)
    assert not satisfies_kraft(CodeLengthSet((1, 1, 1), 2))


def test_consecutive_closed_form_matches_direct_sum():
    for d in (2, 3, 5):
        for n1 in (1, 2, 4):
            for m in (1, 2, 7, 13):
                direct = kraft_sum(
                    CodeLengthSet(tuple(range(n1, n1 + m)), d)
                )
                assert consecutive_lengths_sum(n1, m, d) == pytest.approx(
                    direct, abs=1e-12
                )


def test_consecutive_binary_from_one_is_one_minus_half_power():
    for m in range(1, 21):
        assert consecutive_lengths_sum(1, m, 2) == pytest.approx(
            1.0 - 2.0**-m, abs=1e-12
        )


def test_arithmetic_progression_value_and_predicate():
    # n1=2, step=1, M=4, D=3: 1/9 + 1/27 + 1/81 + 1/243 = 40/243
    total, ok = arithmetic_progression_satisfies_kraft(2, 1, 4, 3)
    assert total == pytest.approx(40.0 / 243.0, abs=1e-12)
    assert ok
    # n1=2, step=2, M=3, D=2: 1/4 + 1/16 + 1/64 = 21/64
    total, ok = arithmetic_progression_satisfies_kraft(2, 2, 3, 2)
    assert total == pytest.approx(21.0 / 64.0, abs=1e-12)
    assert ok


@given(
    n1=st.integers(min_value=1, max_value=12),
    step=st.integers(min_value=1, max_value=6),
    m=st.integers(min_value=1, max_value=60),
    d=st.integers(min_value=2, max_value=10),
)
def test_arithmetic_progression_never_violates(n1, step, m, d):
    # geometric tail is bounded by D**-n1 / (1 - D**-step) <= 1
    total, ok = arithmetic_progression_satisfies_kraft(n1, step, m, d)
    direct = kraft_sum(CodeLengthSet(tuple(n1 + k * step for k in range(m)), d))
    assert total == pytest.approx(direct, abs=1e-9)
    assert ok


def test_alphabet_monotonicity_worked_case():
    # sums 0.8125 at D=2 and 25/81 at D=3
    lengths = CodeLengthSet((2, 2, 3, 3, 4), 2)
    assert kraft_sum(lengths) == pytest.approx(0.8125)
    assert kraft_alphabet_monotonicity(lengths, 3)
    assert kraft_sum(CodeLengthSet((2, 2, 3, 3, 4), 3)) == pytest.approx(
        25.0 / 81.0, abs=1e-12
    )


def test_alphabet_monotonicity_rejects_bad_base():
    with pytest.raises(KraftViolation):
        kraft_alphabet_monotonicity(CodeLengthSet((1, 1, 1), 2), 3)
    with pytest.raises(ValueError):
        kraft_alphabet_monotonicity(CodeLengthSet((1, 2), 2), 2)


@given(data=st.data())
def test_alphabet_monotonicity_random_sets(data):
    # grow a random Kraft-satisfying set greedily, then enlarge the alphabet
    d = data.draw(st.integers(min_value=2, max_value=4))
    lengths = []
    budget = Fraction(1)
    for _ in range(data.draw(st.integers(min_value=1, max_value=8))):
        n = data.draw(st.integers(min_value=1, max_value=10))
        cost = Fraction(1, d**n)
        if cost <= budget:
            lengths.append(n)
            budget -= cost
    if not lengths:
        lengths = [1]
    d_prime = data.draw(st.integers(min_value=d + 1, max_value=12))
    assert kraft_alphabet_monotonicity(CodeLengthSet(tuple(lengths), d), d_prime)


# ------------------------------------------------------------ canonical codes


def test_code_from_lengths_small_binary():
    code = code_from_lengths(CodeLengthSet((1, 2, 2), 2), ("a", "b", "c"))
    assert words_as_strings(code) == {"a": "0", "b": "10", "c": "11"}
    code = code_from_lengths(CodeLengthSet((2, 2, 2), 2), ("a", "b", "c"))
    assert words_as_strings(code) == {"a": "00", "b": "01", "c": "10"}


def test_code_from_lengths_unsorted_input_keeps_label_pairing():
    code = code_from_lengths(CodeLengthSet((3, 1, 3, 2), 2), ("w", "x", "y", "z"))
    lens = code.lengths()
    assert lens == {"w": 3, "x": 1, "y": 3, "z": 2}
    assert words_as_strings(code)["x"] == "0"


def test_code_from_lengths_rejects_violation():
    with pytest.raises(KraftViolation):
        code_from_lengths(CodeLengthSet((1, 1, 2), 2))


@given(data=st.data())
@settings(max_examples=200)
def test_code_from_lengths_is_prefix_free_with_exact_lengths(data):
    d = data.draw(st.integers(min_value=2, max_value=5))
    lengths = []
    budget = Fraction(1)
    for _ in range(data.draw(st.integers(min_value=1, max_value=12))):
        n = data.draw(st.integers(min_value=1, max_value=9))
        cost = Fraction(1, d**n)
        if cost <= budget:
            lengths.append(n)
            budget -= cost
    if not lengths:
        lengths = [1]
    code = code_from_lengths(CodeLengthSet(tuple(lengths), d))
    words = [w.digits for w in code.assignments.values()]
    assert is_prefix_free(words)
    got = sorted(w.length for w in code.assignments.values())
    assert got == sorted(lengths)


# ------------------------------------------------------------------- huffman


def test_huffman_binary_dyadic_pmf_matches_entropy():
    pmf = ProbabilityMassFunction.from_pairs(
        [("a", 0.5), ("b", 0.25), ("c", 0.125), ("d", 0.125)]
    )
    code = huffman_code(pmf, 2)
    assert sorted(code.lengths().values()) == [1, 2, 3, 3]
    assert expected_length(code, pmf) == pytest.approx(1.75)
    assert shannon_entropy(pmf) == pytest.approx(1.75)


def test_huffman_binary_non_dyadic():
    pmf = ProbabilityMassFunction.from_pairs(
        [("a", 0.4), ("b", 0.3), ("c", 0.2), ("d", 0.1)]
    )
    code = huffman_code(pmf, 2)
    assert code.lengths() == {"a": 1, "b": 2, "c": 3, "d": 3}
    assert expected_length(code, pmf) == pytest.approx(1.9)


def test_huffman_ternary_with_dummy_padding():
    pmf = ProbabilityMassFunction.from_pairs(
        [("a", 0.4), ("b", 0.3), ("c", 0.2), ("d", 0.1)]
    )
    code = huffman_code(pmf, 3)
    assert code.lengths() == {"a": 1, "b": 1, "c": 2, "d": 2}
    assert expected_length(code, pmf) == pytest.approx(1.3)
    assert words_as_strings(code) == {"a": "0", "b": "1", "c": "20", "d": "21"}


def test_huffman_deterministic_tiebreak():
    pmf = ProbabilityMassFunction.from_pairs(
        [("a", 0.5), ("b", 0.25), ("c", 0.25)]
    )
    code = huffman_code(pmf, 2)
    assert words_as_strings(code) == {"a": "0", "b": "10", "c": "11"}


def test_huffman_single_symbol_gets_length_one():
    pmf = ProbabilityMassFunction.from_pairs([("only", 1.0)])
    code = huffman_code(pmf, 2)
    assert words_as_strings(code) == {"only": "0"}
    assert expected_length(code, pmf) == pytest.approx(1.0)


def test_huffman_rerun_is_identical():
    rng = random.Random(20260814)
    for _ in range(25):
        k = rng.randint(2, 9)
        raw = [rng.random() + 1e-9 for _ in range(k)]
        total = sum(raw)
        pmf = ProbabilityMassFunction.from_pairs(
            [(f"s{i}", p / total) for i, p in enumerate(raw)]
        )
        d = rng.choice([2, 3, 4])
        first = words_as_strings(huffman_code(pmf, d))
        again = words_as_strings(huffman_code(pmf, d))
        assert first == again


def grid_pmfs(size, step=0.05):
    """All pmfs with ``size`` entries on a probability grid, as tuples."""
    ticks = round(1.0 / step)

    def rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for t in range(remaining + 1):
            for rest in rec(remaining - t, slots - 1):
                yield (t,) + rest

    for combo in rec(ticks, size):
        yield tuple(t * step for t in combo)


def test_huffman_matches_bruteforce_on_coarse_grid():
    # 0.2 grid keeps this quick; the acceptance suite runs the 0.05 grid
    for d in (2, 3):
        for size in (2, 3, 4):
            for probs in grid_pmfs(size, step=0.2):
                if any(p <= 0.0 for p in probs):
                    continue
                pmf = ProbabilityMassFunction.from_pairs(
                    [(f"s{i}", p) for i, p in enumerate(probs)]
                )
                code = huffman_code(pmf, d)
                got = expected_length(code, pmf)
                want = optimal_expected_length(probs, d)
                assert got == pytest.approx(want, abs=1e-9)


@given(
    raw=st.lists(
        st.floats(min_value=1e-3, max_value=1.0, allow_nan=False),
        min_size=2,
        max_size=9,
    ),
    d=st.integers(min_value=2, max_value=5),
)
@settings(max_examples=150)
def test_huffman_entropy_bounds(raw, d):
    total = math.fsum(raw)
    pmf = ProbabilityMassFunction.from_pairs(
        [(f"s{i}", p / total) for i, p in enumerate(raw)]
    )
    code = huffman_code(pmf, d)
    mean = expected_length(code, pmf)
    h = shannon_entropy(pmf, base=d)
    assert h - 1e-9 <= mean < h + 1.0 + 1e-9


@given(
    raw=st.lists(
        st.floats(min_value=1e-3, max_value=1.0, allow_nan=False),
        min_size=1,
        max_size=9,
    ),
    d=st.integers(min_value=2, max_value=5),
)
@settings(max_examples=150)
def test_huffman_output_is_valid_prefix_code(raw, d):
    total = math.fsum(raw)
    pmf = ProbabilityMassFunction.from_pairs(
        [(f"s{i}", p / total) for i, p in enumerate(raw)]
    )
    code = huffman_code(pmf, d)
    assert set(code.assignments) == set(pmf.labels())
    assert is_prefix_free([w.digits for w in code.assignments.values()])
    assert all(0 <= dig < d for w in code.assignments.values() for dig in w.digits)


def test_huffman_lengths_only_route_agrees_with_code():
    pmf = ProbabilityMassFunction.from_pairs(
        [("a", 0.35), ("b", 0.3), ("c", 0.2), ("d", 0.1), ("e", 0.05)]
    )
    for d in (2, 3, 4):
        assert huffman_lengths(pmf, d) == huffman_code(pmf, d).lengths()


# ---------------------------------------------------------------- validation


def test_pmf_rejects_bad_input():
    with pytest.raises(ValueError):
        ProbabilityMassFunction.from_pairs([("a", 0.5), ("b", 0.4)])
    with pytest.raises(ValueError):
        ProbabilityMassFunction.from_pairs([("a", -0.1), ("b", 1.1)])
    with pytest.raises(ValueError):
        ProbabilityMassFunction.from_pairs([("a", 0.5), ("a", 0.5)])
    with pytest.raises(ValueError):
        ProbabilityMassFunction.from_pairs([])


def test_length_set_rejects_bad_input():
    with pytest.raises(ValueError):
        CodeLengthSet((0, 1), 2)
    with pytest.raises(ValueError):
        CodeLengthSet((1, 2), 1)
    with pytest.raises(ValueError):
        CodeLengthSet((), 2)


def test_entropy_base_and_zero_handling():
    pmf = ProbabilityMassFunction.from_pairs([("a", 0.5), ("b", 0.5), ("c", 0.0)])
    assert shannon_entropy(pmf) == pytest.approx(1.0)
    assert shannon_entropy(pmf, base=4.0) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        shannon_entropy(pmf, base=1.0)

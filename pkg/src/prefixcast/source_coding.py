"""Prefix-free codes: Kraft sums, D-ary Huffman trees, canonical codeword assignment.

A set of codeword lengths ``n_1, ..., n_M`` over a D-symbol alphabet admits a
prefix-free code exactly when the Kraft sum ``sum(D**-n_i)`` is at most 1.
This module computes that sum (directly and in closed form for consecutive
and arithmetic-progression length sets), builds optimal D-ary Huffman codes
from a probability mass function, and materializes codewords canonically so
that equal inputs always produce byte-identical codes.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

KRAFT_TOL = 1e-12
PMF_TOL = 1e-9


class KraftViolation(ValueError):
    """The given lengths admit no prefix-free code (Kraft sum exceeds 1)."""


@dataclass(frozen=True)
class ProbabilityMassFunction:
    """Labeled probabilities: nonnegative, unique labels, summing to 1.

    Inputs that do not sum to 1 within ``PMF_TOL`` are rejected rather than
    renormalized, so upstream data errors surface immediately.
    """

    entries: tuple[tuple[str, float], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("probability mass function must have at least one entry")
        labels = [label for label, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels in probability mass function")
        for label, p in self.entries:
            if not (p >= 0.0):
                raise ValueError(f"negative probability {p!r} for label {label!r}")
        total = math.fsum(p for _, p in self.entries)
        if abs(total - 1.0) > PMF_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")

    @classmethod
    def from_pairs(cls, pairs) -> "ProbabilityMassFunction":
        return cls(tuple((str(label), float(p)) for label, p in pairs))

    @classmethod
    def from_dict(cls, mapping) -> "ProbabilityMassFunction":
        return cls.from_pairs(mapping.items())

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def probability(self, label: str) -> float:
        for lab, p in self.entries:
            if lab == label:
                return p
        raise KeyError(label)

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CodeLengthSet:
    """Codeword lengths plus the channel alphabet size D."""

    lengths: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self) -> None:
        if self.alphabet_size < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.alphabet_size}")
        if not self.lengths:
            raise ValueError("length set is empty")
        for n in self.lengths:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"codeword lengths must be positive integers, got {n!r}")

    def __len__(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class Codeword:
    """A sequence of digits, each in ``{0, ..., D-1}`` for the owning code's D."""

    digits: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.digits)

    def is_prefix_of(self, other: "Codeword") -> bool:
        return self.digits == other.digits[: len(self.digits)]

    def __str__(self) -> str:
        if all(d <= 9 for d in self.digits):
            return "".join(str(d) for d in self.digits)
        return ".".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class PrefixCode:
    """A prefix-free assignment of codewords to labels.

    Construction validates digit range, pairwise prefix-freeness, and the
    Kraft inequality, so a ``PrefixCode`` value is a certificate that the
    assignment is actually decodable.
    """

    alphabet_size: int
    assignments: dict[str, Codeword]

    def __post_init__(self) -> None:
        if self.alphabet_size < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.alphabet_size}")
        if not self.assignments:
            raise ValueError("prefix code has no assignments")
        for label, word in self.assignments.items():
            for d in word.digits:
                if not (0 <= d < self.alphabet_size):
                    raise ValueError(f"digit {d} out of range for D={self.alphabet_size} in {label!r}")
        words = list(self.assignments.items())
        for i, (la, wa) in enumerate(words):
            for lb, wb in words[i + 1 :]:
                if wa.is_prefix_of(wb) or wb.is_prefix_of(wa):
                    raise ValueError(f"codewords for {la!r} and {lb!r} are not prefix-free")
        if kraft_sum(self.length_set()) > 1.0 + KRAFT_TOL:
            raise KraftViolation("prefix code violates the Kraft inequality")

    def lengths(self) -> dict[str, int]:
        return {label: word.length for label, word in self.assignments.items()}

    def length_set(self) -> CodeLengthSet:
        return CodeLengthSet(
            tuple(word.length for word in self.assignments.values()), self.alphabet_size
        )


def kraft_sum(lengths: CodeLengthSet) -> float:
    """Sum of D**-n over the length set."""
    d = lengths.alphabet_size
    return math.fsum(d ** -n for n in lengths.lengths)


def satisfies_kraft(lengths: CodeLengthSet) -> bool:
    """True when the Kraft sum is at most 1 (tolerance ``KRAFT_TOL``)."""
    return kraft_sum(lengths) <= 1.0 + KRAFT_TOL


def consecutive_lengths_sum(n1: int, m: int, d: int) -> float:
    """Closed-form Kraft sum for the consecutive lengths n1, n1+1, ..., n1+M-1.

    Equals ``D**-n1 * (D**-M - 1) / (D**-1 - 1)`` by the geometric series, and
    reduces to ``1 - 2**-M`` for D=2, n1=1.
    """
    if n1 < 1 or m < 1:
        raise ValueError("n1 and M must be >= 1")
    if d < 2:
        raise ValueError("alphabet size must be >= 2")
    return d ** -n1 * (d ** float(-m) - 1.0) / (d ** -1.0 - 1.0)


def arithmetic_progression_satisfies_kraft(
    n1: int, step: int, m: int, d: int
) -> tuple[float, bool]:
    """Kraft sum and predicate for lengths in arithmetic progression.

    The lengths are ``n1, n1+step, ..., n1+(M-1)*step``. Returns the
    geometric-series value of the sum and whether it is at most 1. The
    predicate is reported rather than asserted; for n1 >= 1 and D >= 2 the
    sum is bounded by ``D**-n1 / (1 - D**-step) <= 1``, so increasing
    progressions always satisfy the inequality, which the test suite probes
    empirically.
    """
    if n1 < 1 or m < 1 or step < 1:
        raise ValueError("n1, step and M must be >= 1")
    if d < 2:
        raise ValueError("alphabet size must be >= 2")
    ratio = d ** float(-step)
    total = d ** -n1 * (1.0 - ratio**m) / (1.0 - ratio)
    return total, total <= 1.0 + KRAFT_TOL


def kraft_alphabet_monotonicity(lengths: CodeLengthSet, d_prime: int) -> bool:
    """Check the Kraft inequality at a larger alphabet size D' > D.

    Requires the inequality to already hold at the base alphabet size; each
    term D'**-n is then no larger than D**-n, so the result is always True
    when the precondition holds.
    """
    if d_prime <= lengths.alphabet_size:
        raise ValueError(
            f"D'={d_prime} must exceed the base alphabet size {lengths.alphabet_size}"
        )
    if not satisfies_kraft(lengths):
        raise KraftViolation(
            "Kraft inequality fails at the base alphabet size; monotonicity undefined"
        )
    return satisfies_kraft(CodeLengthSet(lengths.lengths, d_prime))


def _digits_of(value: int, length: int, d: int) -> tuple[int, ...]:
    digits = [0] * length
    for i in range(length - 1, -1, -1):
        digits[i] = value % d
        value //= d
    return tuple(digits)


def code_from_lengths(
    lengths: CodeLengthSet, labels: tuple[str, ...] | None = None
) -> PrefixCode:
    """Canonical prefix code for a Kraft-satisfying length set.

    Lengths are sorted ascending (ties broken by input order) and codewords
    assigned in increasing numeric order, extending with zero digits whenever
    the length grows. Raises :class:`KraftViolation` when no prefix code
    exists.
    """
    if kraft_sum(lengths) > 1.0 + KRAFT_TOL:
        raise KraftViolation(
            f"Kraft sum {kraft_sum(lengths)!r} exceeds 1; no prefix code exists"
        )
    if labels is None:
        labels = tuple(str(i) for i in range(len(lengths)))
    if len(labels) != len(lengths):
        raise ValueError("labels and lengths differ in count")
    d = lengths.alphabet_size
    order = sorted(range(len(lengths)), key=lambda i: (lengths.lengths[i], i))
    assignments: dict[str, Codeword] = {}
    value = 0
    prev_len = lengths.lengths[order[0]]
    for rank, idx in enumerate(order):
        n = lengths.lengths[idx]
        if rank > 0:
            value = (value + 1) * d ** (n - prev_len)
        assignments[labels[idx]] = Codeword(_digits_of(value, n, d))
        prev_len = n
    # re-emit in input-label order for stable downstream iteration
    ordered = {label: assignments[label] for label in labels}
    return PrefixCode(d, ordered)


def huffman_lengths(pmf: ProbabilityMassFunction, d: int = 2) -> dict[str, int]:
    """Optimal D-ary codeword lengths for the given probabilities.

    Merge ties prefer the node created earliest, so results are reproducible.
    For D > 2 the symbol list is padded with zero-probability dummies until
    the count is congruent to 1 modulo D-1; dummies never appear in the
    result. A single symbol gets length 1 by convention.
    """
    if d < 2:
        raise ValueError(f"alphabet size must be >= 2, got {d}")
    labels = pmf.labels()
    if len(labels) == 1:
        return {labels[0]: 1}

    # heap entries: (probability, creation order); creation order breaks ties
    heap: list[tuple[float, int]] = []
    parent: dict[int, int] = {}
    for i, (_, p) in enumerate(pmf.entries):
        heapq.heappush(heap, (p, i))
    next_id = len(labels)
    while (len(heap) - 1) % (d - 1) != 0:
        heapq.heappush(heap, (0.0, next_id))
        next_id += 1
    while len(heap) > 1:
        merged_p = 0.0
        for _ in range(d):
            p, node = heapq.heappop(heap)
            parent[node] = next_id
            merged_p += p
        heapq.heappush(heap, (merged_p, next_id))
        next_id += 1

    lengths: dict[str, int] = {}
    for i, label in enumerate(labels):
        depth = 0
        node = i
        while node in parent:
            node = parent[node]
            depth += 1
        lengths[label] = depth
    return lengths


def huffman_code(pmf: ProbabilityMassFunction, d: int = 2) -> PrefixCode:
    """Optimal D-ary prefix code, canonically materialized.

    Expected length is minimal over all D-ary prefix codes for ``pmf`` and
    satisfies ``H_D(pmf) <= L < H_D(pmf) + 1`` for two or more symbols.
    Codewords come from :func:`code_from_lengths` applied to the Huffman
    length profile, so equal inputs yield identical codes.
    """
    lengths = huffman_lengths(pmf, d)
    labels = pmf.labels()
    length_set = CodeLengthSet(tuple(lengths[label] for label in labels), d)
    return code_from_lengths(length_set, labels)


def expected_length(code: PrefixCode, pmf: ProbabilityMassFunction) -> float:
    """Probability-weighted mean codeword length."""
    total = 0.0
    for label, p in pmf.entries:
        if label not in code.assignments:
            raise KeyError(f"code has no codeword for label {label!r}")
        total += p * code.assignments[label].length
    return total


def shannon_entropy(pmf: ProbabilityMassFunction, base: float = 2.0) -> float:
    """Entropy of the pmf in the given log base, with 0*log(0) = 0."""
    if not base > 1.0:
        raise ValueError(f"log base must exceed 1, got {base}")
    return -math.fsum(
        p * math.log(p, base) for _, p in pmf.entries if p > 0.0
    )

"""Smooth-number streams counted with multiplicity, and their split structure.

Given bases (p_3, ..., p_k), the stream enumerates every product
``prod(p_i ** a_i)`` over nonnegative exponent vectors (a_3, ..., a_k) in
non-decreasing value order, one term per vector.  Distinct vectors with the
same value all appear, and equal values are emitted in ascending
lexicographic order of the exponent vector, so every dump is reproducible.

The index origin is 3 throughout: the first base/weight pair belongs to the
3-peg level, the next to the 4-peg level, and so on, which puts
``k = len(bases) + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import comb, prod
from typing import Iterator, Sequence


class ParameterError(ValueError):
    """An argument lies outside the operation's domain."""


class UnsupportedRegimeError(ValueError):
    """The operation needs every base >= 2 but a base equal to 1 was given."""


@dataclass(frozen=True)
class Params:
    """Pairs (p_i, q_i) for peg counts i = 3 .. k.

    ``bases[0]`` is p_3 and ``weights[0]`` is q_3; all entries are positive
    integers.
    """

    bases: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != len(self.weights):
            raise ParameterError("bases and weights must pair up")
        if not self.bases:
            raise ParameterError("at least one (p, q) pair is required")
        if any(p < 1 for p in self.bases) or any(q < 1 for q in self.weights):
            raise ParameterError("every p_i and q_i must be a positive integer")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "Params":
        pairs = list(pairs)
        return cls(tuple(p for p, _ in pairs), tuple(q for _, q in pairs))

    @property
    def k(self) -> int:
        """Peg count described by these parameters."""
        return len(self.bases) + 2

    @property
    def q(self) -> int:
        """Product q_3 * q_4 * ... * q_k of all weights."""
        return prod(self.weights)

    def with_unit_weights(self) -> "Params":
        return Params(self.bases, (1,) * len(self.weights))


@dataclass(frozen=True)
class SmoothTerm:
    """One stream term; ``value == prod(base ** e for base, e in zip(...))``."""

    value: int
    exponents: tuple[int, ...]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.value, self.exponents)


def _check_bases(bases: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(b) for b in bases)
    if not out:
        raise ParameterError("bases must be nonempty")
    if any(b < 1 for b in out):
        raise ParameterError("bases must be positive integers")
    return out


def smooth_iter(bases: Sequence[int]) -> Iterator[SmoothTerm]:
    """Unbounded iterator over the stream for ``bases``.

    Terms arrive sorted by (value, exponent vector) and every exponent
    vector appears exactly once.  Each call returns an independent,
    resumable iterator.
    """
    checked = _check_bases(bases)
    if 1 in checked:
        return _ones_iter(checked)
    return _merge_iter(checked)


def _ones_iter(bases: tuple[int, ...]) -> Iterator[SmoothTerm]:
    # With some p_i == 1 the value-1 class is infinite, so every finite
    # prefix of the stream is all ones.  The lexicographically least
    # vectors of that class put the whole exponent on the last unit base.
    slot = max(i for i, b in enumerate(bases) if b == 1)
    width = len(bases)
    m = 0
    while True:
        exps = [0] * width
        exps[slot] = m
        yield SmoothTerm(1, tuple(exps))
        m += 1


def _power_iter(p: int) -> Iterator[SmoothTerm]:
    value, m = 1, 0
    while True:
        yield SmoothTerm(value, (m,))
        value *= p
        m += 1


def _merge_iter(bases: tuple[int, ...]) -> Iterator[SmoothTerm]:
    # stream(bases) = merge(stream(bases[:-1]) with a trailing 0 exponent,
    #                       last_base * stream(bases)).
    # Both branches are sorted by (value, vector), so a key-merge keeps the
    # global order; vectors with a zero last exponent come only from the
    # first branch and all others only from the second, hence uniqueness.
    if len(bases) == 1:
        yield from _power_iter(bases[0])
        return
    p = bases[-1]
    sub = _merge_iter(bases[:-1])
    first = next(sub)
    head = SmoothTerm(first.value, first.exponents + (0,))
    emitted: list[SmoothTerm] = []  # self-feed buffer for the shifted branch
    lag = 0  # always < len(emitted) once anything is out
    while True:
        if emitted:
            seed = emitted[lag]
            shifted = SmoothTerm(
                seed.value * p,
                seed.exponents[:-1] + (seed.exponents[-1] + 1,),
            )
            if shifted.sort_key() < head.sort_key():
                yield shifted
                emitted.append(shifted)
                lag += 1
                continue
        yield head
        emitted.append(head)
        nxt = next(sub)
        head = SmoothTerm(nxt.value, nxt.exponents + (0,))


def smooth_stream(bases: Sequence[int], count: int) -> list[SmoothTerm]:
    """First ``count`` stream terms as a list; count == 0 gives []."""
    if count < 0:
        raise ParameterError("count must be nonnegative")
    return list(islice(smooth_iter(bases), count))


@dataclass(frozen=True)
class SplitIndexSequence:
    """Positions where the shorter-base stream's values surface in the full one."""

    bases: tuple[int, ...]
    indices: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, item: int) -> int:
        return self.indices[item]


def split_index_iter(bases: Sequence[int]) -> Iterator[int]:
    """Unbounded iterator of split indices k_1 < k_2 < ...

    k_1 = 1, and k_j is the first position strictly after k_{j-1} where the
    full stream's value equals the j-th value of the stream over
    ``bases[:-1]``.  Needs at least two bases, all >= 2.
    """
    checked = _check_bases(bases)
    if len(checked) < 2:
        raise ParameterError("split indices need at least two bases")
    if 1 in checked:
        raise UnsupportedRegimeError("split indices are defined only when every base is >= 2")
    return _split_iter(checked)


def _split_iter(bases: tuple[int, ...]) -> Iterator[int]:
    upper = smooth_iter(bases)
    lower = smooth_iter(bases[:-1])
    pos = 0
    while True:
        target = next(lower).value
        while True:
            pos += 1
            if next(upper).value == target:
                yield pos
                break


def split_indices(bases: Sequence[int], count: int) -> SplitIndexSequence:
    """The first ``count`` split indices (see ``split_index_iter``)."""
    if count < 0:
        raise ParameterError("count must be nonnegative")
    checked = _check_bases(bases)
    return SplitIndexSequence(checked, tuple(islice(split_index_iter(checked), count)))


def split_indices_up_to(bases: Sequence[int], limit: int) -> list[int]:
    """Every split index <= ``limit``, in order.

    Cheaper than ``split_indices`` when only a position range matters,
    since the j-th index grows much faster than j.
    """
    if limit < 0:
        raise ParameterError("limit must be nonnegative")
    out: list[int] = []
    for index in split_index_iter(bases):
        if index > limit:
            break
        out.append(index)
    return out


def constant_p_term(p: int, k: int, n: int) -> int:
    """The n-th stream value when all k - 2 bases equal ``p``.

    Equals ``p ** j`` for the unique j >= 0 with
    ``C(k+j-3, k-2) < n <= C(k+j-2, k-2)``; agrees with ``smooth_stream``
    on ``(p,) * (k - 2)`` for every n >= 1.
    """
    if p < 1:
        raise ParameterError("base must be a positive integer")
    if k < 3:
        raise ParameterError("peg count must be at least 3")
    if n < 1:
        raise ParameterError("position must be >= 1")
    if p == 1:
        return 1
    j = 0
    while comb(k + j - 2, k - 2) < n:
        j += 1
    return p ** j

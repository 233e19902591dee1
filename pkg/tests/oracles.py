"""Brute-force reference implementations used only by the tests.

Everything here is written for obviousness, not speed, and shares no code
with the package: streams come from enumerating a whole exponent box and
sorting, split indices from a literal scan, and the move numbers from the
defining recursion with a memo dict.
"""

from functools import lru_cache
from itertools import product


def exponent_limit(base: int, bound: int) -> int:
    """Largest m with base**m <= bound, for base >= 2."""
    m = 0
    while base ** (m + 1) <= bound:
        m += 1
    return m


def box_terms(bases, bound):
    """All (value, exponents) with value <= bound, sorted by (value, vector).

    Needs every base >= 2; with a unit base the box would be infinite.
    """
    limits = [exponent_limit(b, bound) for b in bases]
    out = []
    for exps in product(*(range(limit + 1) for limit in limits)):
        value = 1
        for b, e in zip(bases, exps):
            value *= b**e
        if value <= bound:
            out.append((value, exps))
    out.sort()
    return out


def brute_stream(bases, count):
    """First ``count`` stream terms, growing the box until it suffices."""
    bound = 4
    while True:
        terms = box_terms(bases, bound)
        if len(terms) >= count:
            return terms[:count]
        bound *= 2


def brute_split_indices(bases, count):
    """First ``count`` split indices straight from the definition:
    k_1 = 1 and k_j is the first position after k_{j-1} where the full
    stream's value equals term j of the stream over bases[:-1]."""
    lows = [v for v, _ in brute_stream(bases[:-1], count)]
    size = 64
    while True:
        upper = [v for v, _ in brute_stream(bases, size)]
        indices = []
        pos = 0
        for target in lows:
            while pos < len(upper) and upper[pos] != target:
                pos += 1
            if pos == len(upper):
                break
            pos += 1
            indices.append(pos)
        if len(indices) == count:
            return indices
        size *= 2


def brute_gfs(bases, weights, n):
    """The defining recursion, memoized, with no tables or streams."""

    @lru_cache(maxsize=None)
    def g(i, m):
        if m == 0:
            return 0
        if i == 3:
            return bases[0] * g(3, m - 1) + weights[0]
        p, q = bases[i - 3], weights[i - 3]
        return min(p * g(i, m - t) + q * g(i - 1, t) for t in range(1, m + 1))

    return g(len(bases) + 2, n)

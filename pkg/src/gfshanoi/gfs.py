"""Generalized Frame-Stewart numbers.

G_3(n) follows the affine recurrence ``G_3(n) = p_3 * G_3(n-1) + q_3`` and
each higher level takes a min over every split point t::

    G_k(n) = min over 1 <= t <= n of  p_k * G_k(n-t) + q_k * G_{k-1}(t)

with G_k(0) = 0.  Three independent routes to the same values live here:

* ``gfs_oracle`` / ``GfsTable`` -- direct dynamic programming over the
  recurrence (ground truth, O(k n^2) big-int work);
* ``gfs_fast`` -- the weight product times a prefix sum of the smooth
  stream (O(k n));
* ``constant_case_closed_form`` -- a binomial closed form for equal bases
  and unit weights.

The oracle deliberately shares no stream code with the fast route, so
agreement between them is a meaningful cross-check rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import comb

from .smooth import (
    ParameterError,
    Params,
    UnsupportedRegimeError,
    smooth_iter,
    split_index_iter,
)


@dataclass
class GfsTable:
    """Dense table of G_i(n) for 3 <= i <= k and 0 <= n <= n_max.

    Rows are filled bottom-up in i and left-to-right in n; build once,
    then read values and argmins at will.
    """

    params: Params
    n_max: int
    rows: dict[int, list[int]]

    @classmethod
    def build(cls, params: Params, n_max: int) -> "GfsTable":
        if n_max < 0:
            raise ParameterError("n_max must be nonnegative")
        p3, q3 = params.bases[0], params.weights[0]
        row = [0] * (n_max + 1)
        for n in range(1, n_max + 1):
            row[n] = p3 * row[n - 1] + q3
        rows = {3: row}
        for i in range(4, params.k + 1):
            p, q = params.bases[i - 3], params.weights[i - 3]
            below = rows[i - 1]
            row = [0] * (n_max + 1)
            for n in range(1, n_max + 1):
                best = p * row[n - 1] + q * below[1]
                for t in range(2, n + 1):
                    cand = p * row[n - t] + q * below[t]
                    if cand < best:
                        best = cand
                row[n] = best
            rows[i] = row
        return cls(params, n_max, rows)

    def value(self, n: int, i: int | None = None) -> int:
        """G_i(n); i defaults to the top level k."""
        return self.rows[self.params.k if i is None else i][n]

    def argmin_split(self, n: int, i: int | None = None) -> int:
        """Smallest t attaining the level-i minimum at n (i >= 4)."""
        i = self.params.k if i is None else i
        if i < 4:
            raise ParameterError("the 3-peg level has no split point")
        if not 1 <= n <= self.n_max:
            raise ParameterError("n out of table range")
        p, q = self.params.bases[i - 3], self.params.weights[i - 3]
        row, below = self.rows[i], self.rows[i - 1]
        best_t = 1
        best = p * row[n - 1] + q * below[1]
        for t in range(2, n + 1):
            cand = p * row[n - t] + q * below[t]
            if cand < best:
                best, best_t = cand, t
        return best_t


def gfs_oracle(params: Params, n: int) -> int:
    """G_k(n) straight from the recurrence (slow but assumption-free)."""
    return GfsTable.build(params, n).value(n)


def gfs_prefix(params: Params, n_max: int) -> list[int]:
    """[G_k(0), ..., G_k(n_max)] via the prefix-sum identity."""
    if n_max < 0:
        raise ParameterError("n_max must be nonnegative")
    q = params.q
    out = [0] * (n_max + 1)
    acc = 0
    for n, term in enumerate(islice(smooth_iter(params.bases), n_max), start=1):
        acc += term.value
        out[n] = q * acc
    return out


def gfs_fast(params: Params, n: int) -> int:
    """G_k(n) as the weight product times the n-term stream prefix sum."""
    if n < 0:
        raise ParameterError("n must be nonnegative")
    if n == 0:
        return 0
    acc = 0
    for term in islice(smooth_iter(params.bases), n):
        acc += term.value
    return params.q * acc


def gfs_diff(params: Params, n: int) -> int:
    """G_k(n) - G_k(n-1), i.e. the weight product times the n-th stream value."""
    if n < 1:
        raise ParameterError("differences need n >= 1")
    term = next(islice(smooth_iter(params.bases), n - 1, None))
    return params.q * term.value


def optimal_split(params: Params, n: int) -> int:
    """A split point t attaining the level-k minimum at n.

    Returns the j with k_j <= n < k_{j+1} in the split-index sequence.
    Defined for k >= 4 and every base >= 2; outside that regime use the
    table's argmin instead.
    """
    if params.k < 4:
        raise ParameterError("no split point exists at the 3-peg base level")
    if 1 in params.bases:
        raise UnsupportedRegimeError("split points need every base >= 2")
    if n < 1:
        raise ParameterError("n must be >= 1")
    j = 0
    for index in split_index_iter(params.bases):
        if index > n:
            break
        j += 1
    return j


def constant_case_closed_form(p: int, k: int, n: int) -> int:
    """G_k(n) for k - 2 equal bases ``p`` and unit weights, in closed form.

    With j the unique index satisfying ``C(k+j-3, k-2) < n <= C(k+j-2, k-2)``::

        sum over m < j of C(k+m-3, k-3) * p**m  +  (n - C(k+j-3, k-2)) * p**j
    """
    if p < 1:
        raise ParameterError("base must be a positive integer")
    if k < 3:
        raise ParameterError("peg count must be at least 3")
    if n < 0:
        raise ParameterError("n must be nonnegative")
    if n == 0:
        return 0
    j = 0
    while comb(k + j - 2, k - 2) < n:
        j += 1
    head = sum(comb(k + m - 3, k - 3) * p**m for m in range(j))
    return head + (n - comb(k + j - 3, k - 2)) * p**j


def classic_params(k: int) -> Params:
    """The all-(2, 1) family: classic k-peg Frame-Stewart numbers."""
    if k < 3:
        raise ParameterError("need at least three pegs")
    return Params((2,) * (k - 2), (1,) * (k - 2))

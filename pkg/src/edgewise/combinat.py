"""Permutation and partition statistics.

Partitions are weakly decreasing tuples of positive integers, always listed
in reverse-lexicographic order.  Words are tuples of positive integers, either
plain permutations of 1..n or permutations of a multiset.  Descent positions
are 1-based: i is a descent of w when w[i-1] > w[i].

All counts are exact Python integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


def partitions(k: int, s: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of k (into exactly s parts if given), reverse-lex order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    >>> partitions(6, s=3)
    ((4, 1, 1), (3, 2, 1), (2, 2, 2))
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if s is not None and not 1 <= s <= k:
        raise ValueError(f"part count s={s} out of range 1..{k}")
    result = _partitions_revlex(k, k)
    if s is not None:
        result = tuple(p for p in result if len(p) == s)
    return result


@lru_cache(maxsize=None)
def _partitions_revlex(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_revlex(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(parts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Multiplicity view of a partition: ((n_1, m_1), ..., (n_t, m_t)).

    >>> multiplicities((3, 2, 2, 1))
    ((3, 1), (2, 2), (1, 1))
    """
    return tuple((v, len(tuple(g))) for v, g in itertools.groupby(parts))


def validate_partition(parts: tuple[int, ...], k: int | None = None) -> None:
    """Raise ValueError unless parts is a partition (of k, if given)."""
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"not a partition: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    if k is not None and sum(parts) != k:
        raise ValueError(f"{parts} does not partition {k}")


def multiset_permutations(parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All words over the multiset {1^parts[0], 2^parts[1], ...}, lex order.

    >>> multiset_permutations((2, 1))
    ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    """
    validate_partition(parts)
    counts = list(parts)
    word: list[int] = []
    out: list[tuple[int, ...]] = []

    def emit(remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(word))
            return
        for letter in range(1, len(counts) + 1):
            if counts[letter - 1] == 0:
                continue
            counts[letter - 1] -= 1
            word.append(letter)
            emit(remaining - 1)
            word.pop()
            counts[letter - 1] += 1

    emit(sum(parts))
    return tuple(out)


def descent_set(w: tuple[int, ...]) -> tuple[int, ...]:
    """1-based positions i with w_i > w_{i+1}; valid for any nonempty word."""
    if not w:
        raise ValueError("empty word")
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des(w: tuple[int, ...]) -> int:
    """Number of descents of a word; 0 for a length-1 word."""
    return len(descent_set(w))


def is_permutation(w: tuple[int, ...]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def init(w: tuple[int, ...]) -> int:
    """Faithful initial part: least t with {w_1,...,w_t} = {1,...,t}.

    Defined only for plain permutations of 1..n.

    >>> init((2, 1, 3))
    2
    >>> init((3, 1, 2))
    3
    """
    if not is_permutation(w):
        raise ValueError(f"init is defined only for permutations of 1..n: {w}")
    seen_max = 0
    for t, letter in enumerate(w, start=1):
        seen_max = max(seen_max, letter)
        if seen_max == t:
            return t
    raise AssertionError("unreachable for a valid permutation")


class DescentStats(NamedTuple):
    descent_set: tuple[int, ...]
    des: int
    init: int


def descent_stats(w: tuple[int, ...]) -> DescentStats:
    """Descent set, descent count and faithful initial part of a permutation.

    Raises ValueError when w is a multiset word rather than a permutation of
    1..n; use descent_set/des directly for multiset words.
    """
    d = descent_set(w)
    return DescentStats(d, len(d), init(w))


@lru_cache(maxsize=None)
def eulerian(k: int, i: int) -> int:
    """Eulerian number A(k, i) = #{pi in S_k : des(pi) = i}.

    >>> eulerian(3, 1)
    4
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 0 <= i <= k - 1:
        raise ValueError(f"descent count i={i} out of range 0..{k - 1}")
    if k == 1:
        return 1
    # A(k,i) = (i+1) A(k-1,i) + (k-i) A(k-1,i-1)
    total = 0
    if i <= k - 2:
        total += (i + 1) * eulerian(k - 1, i)
    if i >= 1:
        total += (k - i) * eulerian(k - 1, i - 1)
    return total


def eulerian_vector(m: int) -> tuple[int, ...]:
    """(A(m,0), ..., A(m,m-1)), the h-vector of the barycentrically
    subdivided boundary of an (m-1)-simplex."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return tuple(eulerian(m, i) for i in range(m))


def x_sequence(n: int) -> tuple[int, ...]:
    """(X_1, ..., X_n) where X_j counts permutations of S_j with init = j.

    X_j = j! - sum_{t<j} (j-t)! X_t.

    >>> x_sequence(4)
    (1, 1, 3, 13)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    xs: list[int] = []
    for j in range(1, n + 1):
        xs.append(math.factorial(j) - sum(math.factorial(j - t) * xs[t - 1] for t in range(1, j)))
    return tuple(xs)


def convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Sequence convolution: c_j = sum_i a_i b_{j-i}. Length len(a)+len(b)-1."""
    if not a or not b:
        raise ValueError("convolve needs nonempty sequences")
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


@dataclass(frozen=True)
class DescentInitTable:
    """k x k table of counts h_{i,d} = #{pi in S_k : init(pi)=i, des(pi)=d}.

    rows[i-1][d] stores h_{i,d} for init value i in 1..k and descent count d
    in 0..k-1.  (In 1-based matrix terms, column d+1 holds descent count d.)
    Column sums are Eulerian numbers; row i sums to X_i * (k-i)!.
    """

    k: int
    rows: tuple[tuple[int, ...], ...]

    def cell(self, init_value: int, descents: int) -> int:
        if not 1 <= init_value <= self.k:
            raise ValueError(f"init value {init_value} out of range 1..{self.k}")
        if not 0 <= descents <= self.k - 1:
            raise ValueError(f"descent count {descents} out of range 0..{self.k - 1}")
        return self.rows[init_value - 1][descents]

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[d] for row in self.rows) for d in range(self.k))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)


def h_matrix(k: int) -> DescentInitTable:
    """The init/descent joint distribution over S_k, by direct enumeration."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    cells = [[0] * k for _ in range(k)]
    for pi in itertools.permutations(range(1, k + 1)):
        cells[init(pi) - 1][des(pi)] += 1
    return DescentInitTable(k, tuple(tuple(row) for row in cells))


@lru_cache(maxsize=None)
def h_rows_recursive(k: int) -> tuple[tuple[int, ...], ...]:
    """Rows of the init/descent table via the convolution recursion.

    Row 1 is the Eulerian vector of S_{k-1} padded with a trailing zero; row t
    (1 < t < k) is the convolution of row t of the size-t table with the
    Eulerian vector of S_{k-t}; row k is the Eulerian vector of S_k minus the
    earlier rows.  Agrees entrywise with h_matrix(k).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k == 1:
        return ((1,),)
    rows: list[tuple[int, ...]] = []
    for t in range(1, k):
        row = convolve(h_rows_recursive(t)[t - 1], eulerian_vector(k - t))
        rows.append(row + (0,) * (k - len(row)))
    last = list(eulerian_vector(k))
    for row in rows:
        for d in range(k):
            last[d] -= row[d]
    rows.append(tuple(last))
    return tuple(rows)


def permutations_by_init(k: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Group S_k by faithful initial part; values keep lexicographic order."""
    groups: dict[int, list[tuple[int, ...]]] = {t: [] for t in range(1, k + 1)}
    for pi in itertools.permutations(range(1, k + 1)):
        groups[init(pi)].append(pi)
    return {t: tuple(v) for t, v in groups.items()}

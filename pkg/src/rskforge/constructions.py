"""Building-block sequences and the permutation families assembled from them.

The families come in two groups: fully cyclic permutations hitting the
"hook" shapes (one long row, the rest single cells) and the two-column
shapes, and almost-cyclic variants (one fixed point) hitting the same
two-column shapes. ``build_A`` then extends any of them by one new column
of any height at least 2, preserving the cycle structure.
"""

from __future__ import annotations

from typing import Sequence, Union

from .core import InvalidInputError, IntSequence, Permutation, _as_values


def seq_L(n: int) -> IntSequence:
    """Descending run n..1 with its midpoint ceil(n/2) removed; length n-1.

    The positions 2..n-1 of the result chain into a single open path in the
    functional graph, which is what makes the concatenations below cyclic.
    """
    n = int(n)
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    mid = (n + 1) // 2
    return IntSequence(v for v in range(n, 0, -1) if v != mid)


def _missing_of_L_prime(n: int) -> int:
    # floor(n/2) for even n, floor(n/2)+2 for odd n
    return n // 2 + (2 if n % 2 else 0)


def seq_L_prime(n: int) -> IntSequence:
    """Descending run n..1 with one off-center element removed; length n-1.

    The removed element sits so that prepending any value t gives (t) + L'(n)
    a functional graph made of one self loop plus an open path over
    positions 2..n.
    """
    n = int(n)
    if n <= 1:
        raise InvalidInputError(f"need n > 1, got {n}")
    w = _missing_of_L_prime(n)
    return IntSequence(v for v in range(n, 0, -1) if v != w)


def shift_I(s: Union[IntSequence, Sequence[int]], k: int) -> IntSequence:
    """Every value increased by k (k >= 0)."""
    k = int(k)
    if k < 0:
        raise InvalidInputError(f"shift must be nonnegative, got {k}")
    return IntSequence(v + k for v in _as_values(s))


def relabel_R(s: Union[IntSequence, Sequence[int]], f: int) -> IntSequence:
    """Close the gap left by a removed value f: values above f drop by one,
    values below stay."""
    f = int(f)
    vals = _as_values(s)
    if f in vals:
        raise InvalidInputError(f"value {f} must be absent from the sequence")
    return IntSequence(v - 1 if v > f else v for v in vals)


def build_B(m: int, n: int) -> Permutation:
    """Cyclic permutation of length n whose insertion shape is the hook
    (m, 1, ..., 1) with n-m trailing ones. Requires 1 < m < n."""
    m, n = int(m), int(n)
    if not 1 < m < n:
        raise InvalidInputError(f"need 1 < m < n, got m={m}, n={n}")
    head = tuple(range(2, m))
    pivot = ((n + m) // 2,)
    block = shift_I(seq_L(n - m + 1), m - 1)
    return Permutation(head + pivot + block.values + (1,))


def build_B_prime(m: int, n: int) -> Permutation:
    """Cyclic permutation of length n whose insertion shape is m rows of 2
    followed by n-2m rows of 1. Requires 1 < m <= n/2."""
    m, n = int(m), int(n)
    if not (1 < m and 2 * m <= n):
        raise InvalidInputError(f"need 1 < m <= n/2, got m={m}, n={n}")
    return Permutation(
        ((n + m + 1) // 2,)
        + shift_I(seq_L(m - 1), 1).values
        + (1,)
        + shift_I(seq_L(n - m), m).values
        + (m // 2 + 1,)
    )


def build_A(sigma: Permutation, k: int) -> Permutation:
    """Grow sigma by k: the new permutation's insertion shape gains one cell
    in each of the first k rows, and the cycle through sigma's maximum gains
    the k new elements while every other cycle is untouched.

    Works by promoting the current maximum n to n + ceil(k/2) and appending
    the shifted descending block that chains the new values back down to n.
    Requires k > 1.
    """
    k = int(k)
    if k <= 1:
        raise InvalidInputError(f"need k > 1, got {k}")
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    n = len(sigma)
    promoted = n + (k + 1) // 2
    head = tuple(promoted if v == n else v for v in sigma.values)
    tail = shift_I(seq_L(k), n).values + (n,)
    return Permutation(head + tail)


def build_D(m: int, n: int) -> Permutation:
    """Almost-cyclic permutation (one fixed point) of length n with insertion
    shape m rows of 2 followed by n-2m rows of 1.

    Requires 1 < m <= n/2 and (m, n) != (2, 4): at (2, 4) the target shape
    (2, 2) is unreachable for any permutation with a fixed point.
    """
    m, n = int(m), int(n)
    if not (1 < m and 2 * m <= n):
        raise InvalidInputError(f"need 1 < m <= n/2, got m={m}, n={n}")
    if (m, n) == (2, 4):
        raise InvalidInputError("(m, n) = (2, 4) is excluded: no almost-cyclic witness for shape (2, 2)")
    w = _missing_of_L_prime(m)
    return Permutation(
        ((n + m + 1) // 2,)
        + seq_L_prime(m).values
        + shift_I(seq_L(n - m), m).values
        + (w,)
    )


def build_D_prime(n: int) -> Permutation:
    """Almost-cyclic permutation of length n with insertion shape
    (2, 1, ..., 1). Requires n >= 4; at n = 3 the same recipe degenerates to
    (3, 2, 1), whose shape is a single column, so callers special-case it.
    """
    n = int(n)
    if n < 4:
        raise InvalidInputError(f"need n >= 4, got {n}")
    w = _missing_of_L_prime(n)
    return Permutation((w,) + seq_L_prime(n).values)

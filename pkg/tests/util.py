"""Shared test helpers: independent oracles and random generators."""

from itertools import combinations

from rskforge import Permutation


def brute_lis(seq) -> int:
    """LIS by exhaustive subsequence check. Only for short inputs."""
    seq = list(seq)
    best = 0
    for r in range(len(seq), 0, -1):
        if r <= best:
            break
        for idx in combinations(range(len(seq)), r):
            vals = [seq[i] for i in idx]
            if all(a < b for a, b in zip(vals, vals[1:])):
                best = max(best, r)
                break
    return best


def brute_lds(seq) -> int:
    return brute_lis([-v for v in seq])


def random_cyclic(rng, n) -> Permutation:
    """Uniform cyclic permutation of {1..n} (n >= 1)."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    vals = [0] * n
    for i in range(n):
        vals[order[i] - 1] = order[(i + 1) % n]
    return Permutation(vals)


def random_almost_cyclic(rng, n) -> Permutation:
    """Uniform permutation of {1..n} with cycle type (n-1, 1) (n >= 3)."""
    fixed = rng.randrange(1, n + 1)
    order = [v for v in range(1, n + 1) if v != fixed]
    rng.shuffle(order)
    vals = [0] * n
    vals[fixed - 1] = fixed
    for i in range(n - 1):
        vals[order[i] - 1] = order[(i + 1) % (n - 1)]
    return Permutation(vals)


def random_tail_monotone(rng, n, k) -> Permutation:
    """Random permutation of {1..n+k} whose last k entries descend from n+k
    and whose first n entries include at most one value above n.

    When a high value moves into the head, the value displaced into the tail
    is n itself, matching how the column-adding construction produces these
    permutations. Displacing any smaller value can break the shape-additivity
    law even though the resulting permutation still passes is_tail_monotone:
    (2,5,6,19,7,15,9,17,3,11,1,18,16,4,20,14,13,12,10,24,23,22,21,8) with
    (n, k) = (19, 5) is such a case.
    """
    m = n + k
    high = list(range(n + 1, m + 1))
    if k >= 2 and rng.random() < 0.5:
        # promote one non-maximal high value into the head in place of n
        v = rng.choice(high[:-1])
        head = list(range(1, n)) + [v]
        tail = sorted((set(high) - {v}) | {n}, reverse=True)
    else:
        head = list(range(1, n + 1))
        tail = sorted(high, reverse=True)
    rng.shuffle(head)
    return Permutation(head + tail)

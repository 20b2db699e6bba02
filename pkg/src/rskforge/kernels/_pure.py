"""Pure-Python kernels. Behavior must match rskforge.kernels._fast exactly."""

from bisect import bisect_left
from itertools import permutations


def rsk_shape_of(values):
    """Row lengths of the insertion tableau of a sequence of distinct ints."""
    rows = []
    for x in values:
        for row in rows:
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return tuple(len(r) for r in rows)


def cycle_type_of(values):
    """Nonincreasing cycle lengths of the permutation i -> values[i-1]."""
    n = len(values)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size = 0
        v = start
        while not seen[v]:
            seen[v] = True
            size += 1
            v = values[v - 1]
        lengths.append(size)
    lengths.sort(reverse=True)
    return tuple(lengths)


def census_shard(n, first, want_witnesses=False):
    """Census over all permutations of {1..n} starting with ``first``.

    Enumerates in lexicographic order and returns (entries, witnesses):
    entries maps cycle type -> set of shapes; witnesses maps
    (cycle_type, shape) -> the first permutation realizing the pair, and is
    empty unless requested.
    """
    rest = [v for v in range(1, n + 1) if v != first]
    entries = {}
    witnesses = {}
    for suffix in permutations(rest):
        perm = (first,) + suffix
        ct = cycle_type_of(perm)
        sh = rsk_shape_of(perm)
        shapes = entries.get(ct)
        if shapes is None:
            shapes = set()
            entries[ct] = shapes
        if sh not in shapes:
            shapes.add(sh)
            if want_witnesses:
                witnesses[(ct, sh)] = perm
    return entries, witnesses

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Behavior must match rskforge.kernels._pure exactly."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

# census_shard works on stack buffers sized for the enumeration cap enforced
# by the caller (n <= 11, plus headroom)
DEF MAXN = 16


cdef int _shape_insert(int* cells, int* lens, int nrows, int cap, int x) nogil:
    """Insert x into the row buffer (row r occupies cells[r*cap : r*cap+lens[r]]).
    Returns the new row count."""
    cdef int r, lo, hi, mid, pos, tmp
    cdef int* row
    for r in range(nrows):
        row = cells + r * cap
        # leftmost entry greater than x
        lo = 0
        hi = lens[r]
        while lo < hi:
            mid = (lo + hi) >> 1
            if row[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        pos = lo
        if pos == lens[r]:
            row[pos] = x
            lens[r] += 1
            return nrows
        tmp = row[pos]
        row[pos] = x
        x = tmp
    cells[nrows * cap] = x
    lens[nrows] = 1
    return nrows + 1


def rsk_shape_of(values):
    """Row lengths of the insertion tableau of a sequence of distinct ints."""
    cdef list vals = list(values)
    cdef int n = len(vals)
    if n == 0:
        return ()
    cdef int* cells = <int*> malloc(n * n * sizeof(int))
    cdef int* lens = <int*> malloc(n * sizeof(int))
    if cells == NULL or lens == NULL:
        free(cells)
        free(lens)
        raise MemoryError()
    cdef int nrows = 0
    cdef int i
    try:
        for i in range(n):
            nrows = _shape_insert(cells, lens, nrows, n, <int> vals[i])
        return tuple(lens[i] for i in range(nrows))
    finally:
        free(cells)
        free(lens)


cdef int _cycle_lengths(int* perm, int n, bint* seen, int* lengths) nogil:
    """Cycle lengths of perm (1-based values in perm[0..n-1]), sorted
    descending into lengths. Returns the cycle count."""
    cdef int count = 0
    cdef int start, v, size, i, j, key
    memset(seen, 0, (n + 1) * sizeof(bint))
    for start in range(1, n + 1):
        if seen[start]:
            continue
        size = 0
        v = start
        while not seen[v]:
            seen[v] = True
            size += 1
            v = perm[v - 1]
        lengths[count] = size
        count += 1
    # insertion sort, descending
    for i in range(1, count):
        key = lengths[i]
        j = i - 1
        while j >= 0 and lengths[j] < key:
            lengths[j + 1] = lengths[j]
            j -= 1
        lengths[j + 1] = key
    return count


def cycle_type_of(values):
    """Nonincreasing cycle lengths of the permutation i -> values[i-1]."""
    cdef list vals = list(values)
    cdef int n = len(vals)
    cdef int* perm = <int*> malloc(n * sizeof(int))
    cdef int* lengths = <int*> malloc(n * sizeof(int))
    cdef bint* seen = <bint*> malloc((n + 1) * sizeof(bint))
    if perm == NULL or lengths == NULL or seen == NULL:
        free(perm); free(lengths); free(seen)
        raise MemoryError()
    cdef int i, count
    try:
        for i in range(n):
            perm[i] = <int> vals[i]
        count = _cycle_lengths(perm, n, seen, lengths)
        return tuple(lengths[i] for i in range(count))
    finally:
        free(perm)
        free(lengths)
        free(seen)


cdef bint _next_permutation(int* a, int n) nogil:
    """Advance a[0..n-1] to the next lexicographic arrangement."""
    cdef int i = n - 2
    cdef int j, tmp, lo, hi
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = a[lo]; a[lo] = a[hi]; a[hi] = tmp
        lo += 1
        hi -= 1
    return True


def census_shard(int n, int first, bint want_witnesses=False):
    """Census over all permutations of {1..n} starting with ``first``.

    Same contract as the pure kernel: lexicographic enumeration,
    (entries, witnesses) result.
    """
    if not 1 <= first <= n:
        raise ValueError(f"first element {first} out of range for n={n}")
    if n >= MAXN:
        raise ValueError(f"census kernel supports n < {MAXN}, got {n}")

    cdef int perm[MAXN]
    cdef int lens[MAXN]
    cdef int clens[MAXN]
    cdef int cells[MAXN * MAXN]
    cdef bint seen[MAXN + 1]
    cdef int i, k, nrows, ncycles
    cdef int m = n - 1  # suffix length

    perm[0] = first
    k = 1
    for i in range(1, n + 1):
        if i != first:
            perm[k] = i
            k += 1

    entries = {}
    witnesses = {}
    while True:
        nrows = 0
        for i in range(n):
            nrows = _shape_insert(cells, lens, nrows, MAXN, perm[i])
        ncycles = _cycle_lengths(perm, n, seen, clens)
        ct = tuple(clens[i] for i in range(ncycles))
        sh = tuple(lens[i] for i in range(nrows))
        shapes = entries.get(ct)
        if shapes is None:
            shapes = set()
            entries[ct] = shapes
        if sh not in shapes:
            shapes.add(sh)
            if want_witnesses:
                witnesses[(ct, sh)] = tuple(perm[i] for i in range(n))
        if not _next_permutation(perm + 1, m):
            break
    return entries, witnesses

"""Row-insertion tableaux and the permutation statistics built on them.

Everything here is 1-based at the public surface: sequence values, sequence
positions, and tableau column indices all start at 1. All types are immutable
and validate their invariants on construction, so a value that exists is a
valid value.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator, Sequence, Union

from .kernels import rsk_shape_of


class RskError(ValueError):
    """Domain error. ``kind`` is a stable machine-readable slug."""

    kind = "domain-error"


class InvalidInputError(RskError):
    kind = "invalid-input"


class TrivialShapeError(RskError):
    kind = "trivial-shape"


class ExcludedShapeError(RskError):
    kind = "excluded-shape-n/2-n/2"


class OutOfRangeError(RskError):
    kind = "out-of-range-n"


class IntSequence:
    """A sequence of distinct positive integers. May be empty."""

    __slots__ = ("values",)

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if any(v < 1 for v in vals):
            raise InvalidInputError(f"values must be positive, got {vals}")
        if len(set(vals)) != len(vals):
            raise InvalidInputError(f"values must be distinct, got {vals}")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, v) -> bool:
        return v in self.values

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSequence):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return self.values == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.values)})"


class Permutation(IntSequence):
    """One-line notation over {1..n}: position i holds the image of i."""

    def __init__(self, values: Iterable[int]):
        super().__init__(values)
        n = len(self.values)
        if n < 1:
            raise InvalidInputError("a permutation has length at least 1")
        if set(self.values) != set(range(1, n + 1)):
            raise InvalidInputError(
                f"values must be exactly 1..{n}, got {self.values}"
            )

    @property
    def n(self) -> int:
        return len(self.values)


class Shape:
    """An integer partition: nonincreasing positive parts. May be empty."""

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        if any(p < 1 for p in ps):
            raise InvalidInputError(f"parts must be positive, got {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise InvalidInputError(f"parts must be nonincreasing, got {ps}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Shape is immutable")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Shape":
        """Transpose: part j of the result counts parts of self that are >= j."""
        return Shape(
            sum(1 for p in self.parts if p >= j)
            for j in range(1, self.cols + 1)
        )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Shape):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Shape", self.parts))

    def __repr__(self) -> str:
        return f"Shape({list(self.parts)})"


class CycleType:
    """Nonincreasing cycle lengths of a permutation; sums to its length."""

    __slots__ = ("lengths",)

    lengths: tuple[int, ...]

    def __init__(self, lengths: Iterable[int]):
        ls = tuple(int(v) for v in lengths)
        if not ls or any(v < 1 for v in ls):
            raise InvalidInputError(f"cycle lengths must be positive, got {ls}")
        if any(ls[i] < ls[i + 1] for i in range(len(ls) - 1)):
            raise InvalidInputError(f"cycle lengths must be nonincreasing, got {ls}")
        object.__setattr__(self, "lengths", ls)

    def __setattr__(self, name, value):
        raise AttributeError("CycleType is immutable")

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, CycleType):
            return self.lengths == other.lengths
        if isinstance(other, (tuple, list)):
            return self.lengths == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("CycleType", self.lengths))

    def __repr__(self) -> str:
        return f"CycleType({list(self.lengths)})"


class Tableau:
    """Rows of distinct cells, weakly increasing along rows, strictly
    increasing down columns, with nonincreasing row lengths."""

    __slots__ = ("rows",)

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        cells = [x for row in rs for x in row]
        if any(x < 1 for x in cells):
            raise InvalidInputError("cell values must be positive")
        if len(set(cells)) != len(cells):
            raise InvalidInputError("cell values must be distinct")
        for r, row in enumerate(rs):
            if not row:
                raise InvalidInputError("rows must be nonempty")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise InvalidInputError(f"row {r + 1} is not increasing: {row}")
        for r in range(len(rs) - 1):
            if len(rs[r]) < len(rs[r + 1]):
                raise InvalidInputError("row lengths must be nonincreasing")
            if any(rs[r][c] >= rs[r + 1][c] for c in range(len(rs[r + 1]))):
                raise InvalidInputError(f"column not strictly increasing at row {r + 2}")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def shape(self) -> Shape:
        return Shape(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def is_standard(self) -> bool:
        """True when the cells are exactly {1..n}."""
        n = self.size
        return {x for row in self.rows for x in row} == set(range(1, n + 1))

    def cells(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __contains__(self, v) -> bool:
        return any(v in row for row in self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tableau):
            return self.rows == other.rows
        if isinstance(other, (tuple, list)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.to_lists()})"


class DisplacementRecord:
    """Per-row modification trace of a single insertion.

    ``columns[r]`` is the 1-based column touched in row r+1; ``displaced[r]``
    is the value bumped out of that row. The final touched row receives a new
    cell, so there is one fewer displaced value than touched columns.
    """

    __slots__ = ("columns", "displaced")

    columns: tuple[int, ...]
    displaced: tuple[int, ...]

    def __init__(self, columns: Iterable[int], displaced: Iterable[int]):
        cols = tuple(int(c) for c in columns)
        disp = tuple(int(v) for v in displaced)
        if not cols or any(c < 1 for c in cols):
            raise InvalidInputError(f"columns must be positive, got {cols}")
        if len(disp) != len(cols) - 1:
            raise InvalidInputError(
                f"expected {len(cols) - 1} displaced values, got {len(disp)}"
            )
        if any(disp[i] >= disp[i + 1] for i in range(len(disp) - 1)):
            raise InvalidInputError(f"displaced values must increase, got {disp}")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "displaced", disp)

    def __setattr__(self, name, value):
        raise AttributeError("DisplacementRecord is immutable")

    @property
    def depth(self) -> int:
        """Number of rows touched."""
        return len(self.columns)

    def __eq__(self, other) -> bool:
        if isinstance(other, DisplacementRecord):
            return self.columns == other.columns and self.displaced == other.displaced
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.columns, self.displaced))

    def __repr__(self) -> str:
        return f"DisplacementRecord(columns={list(self.columns)}, displaced={list(self.displaced)})"


SequenceLike = Union[IntSequence, Sequence[int]]


def _as_values(s: SequenceLike, *, nonempty: bool = False) -> tuple[int, ...]:
    vals = s.values if isinstance(s, IntSequence) else IntSequence(s).values
    if nonempty and not vals:
        raise InvalidInputError("sequence must be nonempty")
    return vals


def _insert_into_rows(rows: list[list[int]], x: int) -> tuple[list[int], list[int]]:
    """Displace x through mutable rows; returns (1-based columns, displaced)."""
    cols: list[int] = []
    displaced: list[int] = []
    for row in rows:
        pos = bisect_left(row, x)
        if pos == len(row):
            row.append(x)
            cols.append(pos + 1)
            return cols, displaced
        cols.append(pos + 1)
        displaced.append(row[pos])
        row[pos], x = x, row[pos]
    rows.append([x])
    cols.append(1)
    return cols, displaced


def rsk_insert(t: Tableau, x: int) -> tuple[Tableau, DisplacementRecord]:
    """Row-insert x into t, returning the new tableau and its displacement
    record.

    The inserted value lands in the first row, bumping the leftmost larger
    cell into the next row, and so on until a value comes to rest at the end
    of a row (possibly a new one).
    """
    x = int(x)
    if x < 1:
        raise InvalidInputError(f"inserted value must be positive, got {x}")
    if x in t:
        raise InvalidInputError(f"value {x} already present in tableau")
    rows = t.to_lists()
    cols, displaced = _insert_into_rows(rows, x)
    return Tableau(rows), DisplacementRecord(cols, displaced)


def rsk_insertions(s: SequenceLike) -> tuple[Tableau, list[DisplacementRecord]]:
    """Insert a whole sequence left to right, keeping every displacement
    record. Validation runs once on the final tableau."""
    vals = _as_values(s, nonempty=True)
    rows: list[list[int]] = []
    records: list[DisplacementRecord] = []
    for x in vals:
        cols, displaced = _insert_into_rows(rows, x)
        records.append(DisplacementRecord(cols, displaced))
    return Tableau(rows), records


def rsk_tableau(s: SequenceLike) -> Tableau:
    """The insertion tableau of a sequence of distinct integers."""
    return rsk_insertions(s)[0]


def rsk_shape(s: SequenceLike) -> Shape:
    """Shape of the insertion tableau. Uses the selected kernel, which skips
    tableau materialization."""
    return Shape(rsk_shape_of(_as_values(s, nonempty=True)))


def lis_length(s: SequenceLike) -> int:
    """Length of the longest increasing subsequence (patience piles).

    Deliberately shares no code with the insertion engine so the two can
    cross-check each other.
    """
    vals = _as_values(s, nonempty=True)
    tails: list[int] = []
    for v in vals:
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
    return len(tails)


def lds_length(s: SequenceLike) -> int:
    """Length of the longest decreasing subsequence."""
    vals = _as_values(s, nonempty=True)
    bound = max(vals) + 1
    return lis_length([bound - v for v in vals])


def cycle_type(p: Union[Permutation, Sequence[int]]) -> CycleType:
    """Sorted cycle lengths of the functional graph i -> p_i."""
    if not isinstance(p, Permutation):
        p = Permutation(p)
    vals = p.values
    seen = [False] * (len(vals) + 1)
    lengths = []
    for start in range(1, len(vals) + 1):
        if seen[start]:
            continue
        size = 0
        v = start
        while not seen[v]:
            seen[v] = True
            size += 1
            v = vals[v - 1]
        lengths.append(size)
    lengths.sort(reverse=True)
    return CycleType(lengths)


def shape_add(a: Union[Shape, Sequence[int]], b: Union[Shape, Sequence[int]]) -> Shape:
    """Elementwise sum with implicit zero padding.

    Raises when the sum is not nonincreasing; the callers that matter only
    ever add prefix columns, so a bad result means a caller bug.
    """
    pa = tuple(a.parts if isinstance(a, Shape) else (int(v) for v in a))
    pb = tuple(b.parts if isinstance(b, Shape) else (int(v) for v in b))
    width = max(len(pa), len(pb))
    total = [
        (pa[i] if i < len(pa) else 0) + (pb[i] if i < len(pb) else 0)
        for i in range(width)
    ]
    if any(total[i] < total[i + 1] for i in range(len(total) - 1)):
        raise InvalidInputError(f"sum {tuple(total)} is not a partition")
    return Shape(v for v in total if v > 0)


def is_tail_monotone(p: Union[Permutation, Sequence[int]], n: int, k: int) -> bool:
    """True when the last k entries descend from the maximum n+k and at most
    one of the first n entries exceeds n."""
    if not isinstance(p, Permutation):
        p = Permutation(p)
    n, k = int(n), int(k)
    if k < 1 or n < 0 or len(p) != n + k:
        raise InvalidInputError(
            f"permutation length {len(p)} does not match n={n}, k={k}"
        )
    tail = p.values[n:]
    if tail[0] != n + k:
        return False
    if any(tail[i] <= tail[i + 1] for i in range(len(tail) - 1)):
        return False
    return sum(1 for v in p.values[:n] if v > n) <= 1


GRAPH_CYCLE = "cycle"
GRAPH_PATH = "path"
GRAPH_SHIFTED_PATH = "shifted-path"
GRAPH_SELF_LOOP_PLUS_PATH = "self-loop-plus-path"
GRAPH_OTHER = "other"


def functional_graph_kind(s: SequenceLike, lo: int, hi: int) -> str:
    """Classify the directed graph with edges {(i, s_i) : lo <= i <= hi}.

    Positions are 1-based. Returns one of "cycle" (a single closed cycle of
    length >= 2), "path" (a single open chain whose vertex set is {1..k}),
    "shifted-path" (an open chain on any other vertex set),
    "self-loop-plus-path" (exactly one self loop, disjoint from an open
    chain, which may be empty), or "other".

    An empty edge range (lo > hi) is allowed and classifies as a degenerate
    "path"; the chain conditions it stands in for hold vacuously.
    """
    vals = _as_values(s)
    lo, hi = int(lo), int(hi)
    if lo <= hi and not (1 <= lo and hi <= len(vals)):
        raise InvalidInputError(
            f"range {lo}..{hi} invalid for sequence of length {len(vals)}"
        )
    if lo > hi:
        return GRAPH_PATH

    edges = {i: vals[i - 1] for i in range(lo, hi + 1)}
    loops = [i for i, t in edges.items() if i == t]
    if len(loops) > 1:
        return GRAPH_OTHER
    chain_sources = [i for i in edges if i not in loops]
    chain_targets = {edges[i] for i in chain_sources}

    if not chain_sources:
        # a single self loop and nothing else
        return GRAPH_SELF_LOOP_PLUS_PATH

    starts = [i for i in chain_sources if i not in chain_targets]
    if not starts:
        # every source is targeted: the only in/out-degree-1 option is one
        # closed cycle through all sources
        if loops or not chain_targets <= set(chain_sources):
            return GRAPH_OTHER
        v = chain_sources[0]
        seen = set()
        while v not in seen:
            seen.add(v)
            v = edges[v]
        if seen == set(chain_sources):
            return GRAPH_CYCLE
        return GRAPH_OTHER
    if len(starts) > 1:
        return GRAPH_OTHER

    # walk the open chain
    v = starts[0]
    visited = set()
    while v in edges and v not in loops:
        if v in visited:
            return GRAPH_OTHER
        visited.add(v)
        v = edges[v]
    if visited != set(chain_sources) or v in loops:
        return GRAPH_OTHER

    if loops:
        return GRAPH_SELF_LOOP_PLUS_PATH
    verts = set(chain_sources) | chain_targets
    if verts == set(range(1, len(verts) + 1)):
        return GRAPH_PATH
    return GRAPH_SHIFTED_PATH


def parse_sequence(text: str) -> IntSequence:
    """Parse comma-separated positive integers; empty text is the empty
    sequence."""
    text = text.strip()
    if not text:
        return IntSequence()
    try:
        vals = [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"not a comma-separated integer list: {text!r}")
    return IntSequence(vals)


def parse_permutation(text: str) -> Permutation:
    return Permutation(parse_sequence(text).values)


def parse_shape(text: str) -> Shape:
    text = text.strip()
    if not text:
        return Shape()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"not a comma-separated integer list: {text!r}")
    return Shape(parts)


def format_ints(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)

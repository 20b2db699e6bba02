"""Exhaustive ground truth over S_n: which insertion shapes each cycle type
achieves, plus the checks that pin down the completeness characterization.

Enumeration is sharded by the first element of the permutation; shards are
independent and merge by set union, so census content never depends on the
worker count or the order shards finish in.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import warnings
from dataclasses import dataclass, field
from itertools import permutations as iter_permutations
from pathlib import Path
from typing import Iterator, Optional, Union

from . import kernels
from .core import InvalidInputError, OutOfRangeError

FORMAT_VERSION = 1
DEFAULT_MAX_N = 9
HARD_MAX_N = 11

CACHE_ENV_VAR = "RSKFORGE_CACHE"

PartTuple = tuple[int, ...]


def partitions(n: int) -> Iterator[PartTuple]:
    """All partitions of n as nonincreasing tuples, in decreasing
    lexicographic order, starting with (n,) and ending with (1,)*n."""
    n = int(n)
    if n < 0:
        raise InvalidInputError(f"need n >= 0, got {n}")
    if n == 0:
        yield ()
        return

    def rec(remaining: int, cap: int, prefix: PartTuple) -> Iterator[PartTuple]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def trivial_shapes(n: int) -> set[PartTuple]:
    return {(n,), (1,) * n}


@dataclass
class Census:
    """Achievability map for one n: cycle type -> set of insertion shapes.

    ``witnesses`` optionally holds, per (cycle type, shape) pair, the
    lexicographically first permutation realizing the pair.
    """

    n: int
    entries: dict[PartTuple, frozenset[PartTuple]]
    witnesses: Optional[dict[tuple[PartTuple, PartTuple], PartTuple]] = None
    meta: dict = field(default_factory=dict)

    def shapes_for(self, ct) -> frozenset[PartTuple]:
        return self.entries.get(tuple(ct), frozenset())


@dataclass
class CompletenessReport:
    """Which cycle types achieve every nontrivial partition of n."""

    n: int
    complete_types: frozenset[PartTuple]
    expected: frozenset[PartTuple]
    match: bool
    vacuous: bool = False


def _validate_n(n: int, allow_large: bool = False) -> int:
    n = int(n)
    cap = HARD_MAX_N if allow_large else DEFAULT_MAX_N
    if not 2 <= n <= cap:
        raise OutOfRangeError(
            f"census supports 2 <= n <= {cap}"
            + ("" if allow_large else f" (pass allow_large=True for up to {HARD_MAX_N})")
            + f", got {n}"
        )
    if n > DEFAULT_MAX_N:
        warnings.warn(
            f"census over S_{n} enumerates {n}! permutations; expect a long run",
            RuntimeWarning,
            stacklevel=3,
        )
    return n


def _run_shard(args: tuple[int, int, bool]):
    n, first, want_witnesses = args
    return kernels.census_shard(n, first, want_witnesses)


def census(
    n: int,
    workers: int = 1,
    want_witnesses: bool = False,
    allow_large: bool = False,
) -> Census:
    """Exact census over all n! permutations of S_n."""
    n = _validate_n(n, allow_large)
    workers = max(1, int(workers))
    shard_args = [(n, first, want_witnesses) for first in range(1, n + 1)]
    if workers > 1 and n >= 7:
        with multiprocessing.Pool(min(workers, n)) as pool:
            results = pool.map(_run_shard, shard_args)
    else:
        results = [_run_shard(a) for a in shard_args]

    merged: dict[PartTuple, set[PartTuple]] = {}
    witnesses: dict[tuple[PartTuple, PartTuple], PartTuple] = {}
    for entries, shard_witnesses in results:  # prefix order: keeps lex-first witnesses
        for ct, shapes in entries.items():
            merged.setdefault(ct, set()).update(shapes)
        for key, perm in shard_witnesses.items():
            witnesses.setdefault(key, perm)
    return Census(
        n=n,
        entries={ct: frozenset(shapes) for ct, shapes in merged.items()},
        witnesses=witnesses if want_witnesses else None,
        meta={"backend": kernels.BACKEND, "workers": workers},
    )


def rsk_complete_types(
    n: int,
    census_result: Optional[Census] = None,
    workers: int = 1,
    allow_large: bool = False,
) -> CompletenessReport:
    """Cycle types achieving every nontrivial partition of n, against the
    expectation: only (n) for even n, plus (n-1, 1) for odd n.

    For n <= 2 there are no nontrivial partitions, so every cycle type is
    vacuously complete; the report flags that instead of calling it a
    match or mismatch.
    """
    if census_result is None:
        census_result = census(n, workers=workers, allow_large=allow_large)
    n = census_result.n
    nontrivial = set(partitions(n)) - trivial_shapes(n)
    expected = {(n,)} if n % 2 == 0 else {(n,), (n - 1, 1)}
    if not nontrivial:
        complete = frozenset(census_result.entries)
        return CompletenessReport(
            n=n,
            complete_types=complete,
            expected=frozenset(expected),
            match=complete == frozenset(expected),
            vacuous=True,
        )
    complete = frozenset(
        ct
        for ct, shapes in census_result.entries.items()
        if nontrivial <= shapes
    )
    return CompletenessReport(
        n=n,
        complete_types=complete,
        expected=frozenset(expected),
        match=complete == frozenset(expected),
    )


def check_excluded_two_row(n: int, census_result: Optional[Census] = None) -> bool:
    """True iff no cycle type containing a fixed point achieves the shape
    (n/2, n/2). Requires even n."""
    n = int(n)
    if n % 2:
        raise InvalidInputError(f"need even n, got {n}")
    if census_result is None:
        census_result = census(n)
    half = (n // 2, n // 2)
    return all(
        half not in shapes
        for ct, shapes in census_result.entries.items()
        if 1 in ct
    )


def _scan_sn(n: int) -> Iterator[tuple[PartTuple, PartTuple]]:
    """(permutation, shape) pairs over all of S_n, lexicographically."""
    n = _validate_n(n)
    for perm in iter_permutations(range(1, n + 1)):
        yield perm, kernels.rsk_shape_of(perm)


def check_two_row_classification(n: int) -> bool:
    """True iff every permutation with shape (n-1, 1) has cycle type
    (k, 1, ..., 1) for some 1 < k <= n."""
    target = (n - 1, 1)
    for perm, shape in _scan_sn(n):
        if shape != target:
            continue
        ct = kernels.cycle_type_of(perm)
        k = ct[0]
        if not (1 < k <= n and ct == (k,) + (1,) * (n - k)):
            return False
    return True


def check_fixed_point_row_bound(n: int) -> bool:
    """Over all two-row-shape permutations of S_n: with r fixed points the
    first row exceeds the second by at least r, and everything left of a
    fixed point is smaller than it."""
    for perm, shape in _scan_sn(n):
        if len(shape) != 2:
            continue
        fixed = [i for i in range(1, n + 1) if perm[i - 1] == i]
        if shape[0] < shape[1] + len(fixed):
            return False
        for i in fixed:
            if any(perm[j] >= i for j in range(i - 1)):
                return False
    return True


def _canonical_entries(census_result: Census) -> list[dict]:
    entries = []
    for ct in sorted(census_result.entries, reverse=True):
        shapes = sorted(census_result.entries[ct], reverse=True)
        entry: dict = {
            "cycle_type": list(ct),
            "shapes": [list(s) for s in shapes],
        }
        if census_result.witnesses is not None:
            entry["witnesses"] = [
                list(census_result.witnesses[(ct, s)]) for s in shapes
            ]
        entries.append(entry)
    return entries


def _payload(census_result: Census) -> dict:
    return {
        "format": FORMAT_VERSION,
        "n": census_result.n,
        "entries": _canonical_entries(census_result),
    }


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, separators=(",", ":"), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def census_to_json(census_result: Census) -> str:
    """Canonical serialization: entries sorted by decreasing cycle type,
    shapes sorted decreasingly within each entry, plus an integrity
    checksum. Byte-stable for a given census content."""
    payload = _payload(census_result)
    payload["sha256"] = _checksum(_payload(census_result))
    return json.dumps(payload, separators=(",", ":"))


def census_from_json(text: str) -> Census:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"census file is not valid JSON: {e}")
    if payload.get("format") != FORMAT_VERSION:
        raise InvalidInputError(
            f"unsupported census format {payload.get('format')!r}"
        )
    stored = payload.get("sha256")
    expected = _checksum({k: payload[k] for k in ("format", "n", "entries")})
    if stored != expected:
        raise InvalidInputError("census checksum mismatch: file is corrupt or stale")
    entries = {}
    witnesses = {}
    has_witnesses = False
    for entry in payload["entries"]:
        ct = tuple(entry["cycle_type"])
        shapes = [tuple(s) for s in entry["shapes"]]
        entries[ct] = frozenset(shapes)
        if "witnesses" in entry:
            has_witnesses = True
            for s, w in zip(shapes, entry["witnesses"]):
                witnesses[(ct, s)] = tuple(w)
    return Census(
        n=int(payload["n"]),
        entries=entries,
        witnesses=witnesses if has_witnesses else None,
        meta={"loaded": True},
    )


def census_filename(n: int) -> str:
    return f"census-n{n}-v{FORMAT_VERSION}.json"


def save_census(census_result: Census, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(census_to_json(census_result) + "\n")
    return path


def load_census(path: Union[str, Path]) -> Census:
    return census_from_json(Path(path).read_text())


def cached_census(
    n: int,
    cache_dir: Optional[Union[str, Path]] = None,
    workers: int = 1,
    want_witnesses: bool = False,
    allow_large: bool = False,
) -> Census:
    """Load the census for n from the cache directory (default: the
    RSKFORGE_CACHE environment variable) or compute and store it. Loaded
    files are checksum-validated, not recomputed."""
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir is None:
        return census(n, workers, want_witnesses, allow_large)
    cache_dir = Path(cache_dir)
    path = cache_dir / census_filename(n)
    if path.exists():
        cached = load_census(path)
        if cached.n == int(n) and (not want_witnesses or cached.witnesses):
            return cached
    result = census(n, workers, want_witnesses, allow_large)
    cache_dir.mkdir(parents=True, exist_ok=True)
    save_census(result, path)
    return result

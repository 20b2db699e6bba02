"""Witness synthesis: a permutation of prescribed cycle structure realizing a
prescribed insertion shape.

Any shape with at least two rows and two columns is reachable by a fully
cyclic permutation. The same holds for almost-cyclic permutations (cycle
type (n-1, 1)) with one genuine exception: two equal rows of length n/2,
which no permutation with a fixed point can realize.

Both synthesizers follow the same plan: pick a base permutation whose shape
matches the target in every column beyond the first two, then repeatedly
append columns with ``build_A``. Since every step is validated and the
final output is checked against the request, a returned witness is correct
by construction and by verification.
"""

from __future__ import annotations

from typing import Sequence, Union

from .constructions import build_B, build_B_prime, build_D, build_D_prime, build_A
from .core import (
    ExcludedShapeError,
    InvalidInputError,
    Permutation,
    Shape,
    TrivialShapeError,
    cycle_type,
    rsk_shape,
    shape_add,
)

ShapeLike = Union[Shape, Sequence[int]]


def _as_shape(gamma: ShapeLike) -> Shape:
    return gamma if isinstance(gamma, Shape) else Shape(gamma)


def plan_column_additions(gamma: ShapeLike, gamma_base: ShapeLike) -> list[int]:
    """Column heights to append, largest first, to grow gamma_base into gamma.

    The difference gamma - gamma_base must be elementwise nonnegative,
    nonincreasing, and equal in its first two entries; the heights are then
    the conjugate-partition columns of that difference, each necessarily of
    height >= 2. Returns [] when the shapes already agree.
    """
    gamma = _as_shape(gamma)
    base = _as_shape(gamma_base)
    if base.rows > gamma.rows:
        raise InvalidInputError(
            f"base shape {base.parts} has more rows than target {gamma.parts}"
        )
    chi = [
        gamma.parts[i] - (base.parts[i] if i < base.rows else 0)
        for i in range(gamma.rows)
    ]
    if any(v < 0 for v in chi):
        raise InvalidInputError(f"difference {tuple(chi)} has negative entries")
    if any(chi[i] < chi[i + 1] for i in range(len(chi) - 1)):
        raise InvalidInputError(f"difference {tuple(chi)} is not nonincreasing")
    if len(chi) > 1 and chi[0] != chi[1]:
        raise InvalidInputError(
            f"difference {tuple(chi)} must have equal first two entries"
        )
    return [sum(1 for v in chi if v >= j) for j in range(1, chi[0] + 1)] if chi else []


def _require_nontrivial(gamma: Shape) -> None:
    if gamma.n < 1:
        raise TrivialShapeError("empty shape has no witness")
    if gamma.rows < 2:
        raise TrivialShapeError(
            f"shape {gamma.parts} is a single row: only the identity realizes it"
        )
    if gamma.cols < 2:
        raise TrivialShapeError(
            f"shape {gamma.parts} is a single column: only the reversal realizes it"
        )


def _fold_additions(
    base: Permutation, base_shape: Shape, gamma: Shape, fixed_points: int
) -> Permutation:
    """Apply the planned column additions, checking the cycle structure and
    the running shape after every step."""
    perm = base
    expected_shape = base_shape
    for k in plan_column_additions(gamma, base_shape):
        perm = build_A(perm, k)
        # shape_add validates that the running shape stays a partition
        expected_shape = shape_add(expected_shape, (1,) * k)
        expected_type = (len(perm) - fixed_points,) + (1,) * fixed_points
        actual = cycle_type(perm)
        if actual != expected_type:
            raise RuntimeError(
                f"intermediate of length {len(perm)} has cycle type "
                f"{actual.lengths}, expected {expected_type}"
            )
    if expected_shape != gamma:
        raise RuntimeError(f"plan reaches {expected_shape.parts}, not {gamma.parts}")
    return perm


def _check_output(perm: Permutation, gamma: Shape, expected_type: tuple[int, ...]) -> Permutation:
    actual_type = cycle_type(perm)
    actual_shape = rsk_shape(perm)
    if actual_type != expected_type or actual_shape != gamma:
        raise RuntimeError(
            f"synthesized witness {perm.values} has cycle type "
            f"{actual_type.lengths} and shape {actual_shape.parts}; "
            f"wanted {expected_type} and {gamma.parts}"
        )
    return perm


def synth_cyclic(gamma: ShapeLike) -> Permutation:
    """A cyclic permutation whose insertion shape is gamma.

    gamma must have at least two rows and two columns. Base case: a hook
    witness when the first row is strictly longest, else a two-column
    witness as wide as the run of maximal rows; remaining columns are added
    one at a time.
    """
    gamma = _as_shape(gamma)
    _require_nontrivial(gamma)
    if gamma.parts[0] > gamma.parts[1]:
        excess = gamma.parts[0] - gamma.parts[1]
        base = build_B(excess + 1, excess + gamma.rows)
        base_shape = Shape((excess + 1,) + (1,) * (gamma.rows - 1))
    else:
        q = max(i + 1 for i, p in enumerate(gamma.parts) if p == gamma.parts[0])
        base = build_B_prime(q, gamma.rows + q)
        base_shape = Shape((2,) * q + (1,) * (gamma.rows - q))
    perm = _fold_additions(base, base_shape, gamma, 0)
    return _check_output(perm, gamma, (gamma.n,))


def synth_almost_cyclic(gamma: ShapeLike) -> Permutation:
    """An almost-cyclic permutation (cycle type (n-1, 1)) whose insertion
    shape is gamma.

    gamma must have at least two rows and two columns, and must not be two
    equal rows of length n/2: a fixed point forces the first row to exceed
    the second, so that shape is rejected with ExcludedShapeError.
    """
    gamma = _as_shape(gamma)
    _require_nontrivial(gamma)
    n = gamma.n
    if gamma.rows == 2 and gamma.parts[0] == gamma.parts[1]:
        raise ExcludedShapeError(
            f"shape {gamma.parts}: a permutation with a fixed point has first "
            "row strictly longer than its second"
        )

    if gamma.parts[0] == 2 and gamma.parts[1] == 1:
        # one column plus a single extra cell
        perm = Permutation((2, 1, 3)) if n == 3 else build_D_prime(n)
    elif gamma.parts[0] > gamma.parts[1]:
        # shrink the first row, synthesize cyclically, then append a new
        # maximum: a trailing fixed point that extends the first row by one
        inner = synth_cyclic(Shape((gamma.parts[0] - 1,) + gamma.parts[1:]))
        perm = Permutation(inner.values + (n,))
    else:
        q = max(i + 1 for i, p in enumerate(gamma.parts) if p == gamma.parts[0])
        base = build_D(q, gamma.rows + q)
        base_shape = Shape((2,) * q + (1,) * (gamma.rows - q))
        perm = _fold_additions(base, base_shape, gamma, 1)
    return _check_output(perm, gamma, (n - 1, 1))

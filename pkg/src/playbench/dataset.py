"""Deterministic random data: the SplitMix64 generator, stage-bounded point
clouds, and gate truth tables.

All randomness in the package flows through :class:`Rng64`.  The generator is
a value, not an object with hidden state: every draw returns the drawn value
together with the successor generator, so a run is replayable from its seed
alone and callers can fork or discard streams freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError

_MASK64 = (1 << 64) - 1

# SplitMix64 constants (Steele, Lea & Flood's mixer).
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


@dataclass(frozen=True)
class Rng64:
    """Immutable SplitMix64 state; ``Rng64(seed)`` starts a stream."""

    state: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "state", self.state & _MASK64)


def rng_next(rng: Rng64) -> tuple[int, Rng64]:
    """Draw one 64-bit value; returns ``(value, successor)``."""
    state = (rng.state + _GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    z = z ^ (z >> 31)
    return z, Rng64(state)


def uniform_int(rng: Rng64, lo: int, hi: int) -> tuple[int, Rng64]:
    """One integer in ``[lo, hi]`` (inclusive) by modular reduction.

    The reduction carries the usual modulo bias, which is negligible for the
    stage-sized ranges used here (span ≪ 2**64) and keeps the draw a single
    deterministic step.
    """
    if lo > hi:
        raise ValidationError(f"empty range: lo={lo} > hi={hi}", ("lo", "hi"))
    value, rng = rng_next(rng)
    span = hi - lo + 1
    return lo + (value % span), rng


def uniform_signed_unit(rng: Rng64) -> tuple[float, Rng64]:
    """One float in ``[-1.0, 1.0)`` from the top 53 bits of a draw."""
    value, rng = rng_next(rng)
    mantissa = value >> 11
    return (mantissa / float(1 << 53)) * 2.0 - 1.0, rng


@dataclass(frozen=True)
class StageBounds:
    """Inclusive rectangle points are drawn from. Degenerate edges allowed."""

    x_min: int = -230
    x_max: int = 230
    y_min: int = -170
    y_max: int = 170

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValidationError(
                "stage bounds must satisfy x_min <= x_max and y_min <= y_max",
                ("bounds",),
            )


DEFAULT_BOUNDS = StageBounds()

Point = tuple[int, int]


def _gen_points(n: int, bounds: StageBounds, rng: Rng64) -> tuple[list[Point], Rng64]:
    points: list[Point] = []
    for _ in range(n):
        x, rng = uniform_int(rng, bounds.x_min, bounds.x_max)
        y, rng = uniform_int(rng, bounds.y_min, bounds.y_max)
        points.append((x, y))
    return points, rng


def gen_point_cloud(n: int, bounds: StageBounds, rng: Rng64) -> tuple[list[Point], Rng64]:
    """``n`` stage points, drawn x-then-y per point."""
    if n < 1:
        raise ValidationError(f"point cloud needs n >= 1, got {n}", ("n",))
    return _gen_points(n, bounds, rng)


def gen_mass_centers(k: int, bounds: StageBounds, rng: Rng64) -> tuple[list[Point], Rng64]:
    """``k`` mass centers, same draw scheme as the cloud.

    Centers may coincide with each other or with later cloud points; the
    clustering stage resolves ties by index.
    """
    if k < 1:
        raise ValidationError(f"need k >= 1 mass centers, got {k}", ("k",))
    return _gen_points(k, bounds, rng)


@dataclass(frozen=True)
class GateSample:
    """One truth-table row: binary inputs and the desired output."""

    inputs: tuple[int, ...]
    desired: int


@dataclass(frozen=True)
class TruthTable:
    gate: str
    samples: tuple[GateSample, ...]
    zero_row_included: bool

    @property
    def arity(self) -> int:
        return len(self.samples[0].inputs)


GATES = ("and2", "or2", "and3", "or3")


def truth_table(gate: str, include_zero_row: bool = True) -> TruthTable:
    """Full truth table for a gate, rows in ascending binary order.

    ``include_zero_row=False`` drops the all-zeros row and is only meaningful
    for the 3-input gates; 2-input tables always keep all four rows.
    """
    if gate not in GATES:
        raise ValidationError(f"unknown gate {gate!r}", ("gate",))
    arity = 2 if gate in ("and2", "or2") else 3
    drop_zero = (not include_zero_row) and arity == 3
    samples = []
    for row in range(1 if drop_zero else 0, 1 << arity):
        inputs = tuple((row >> (arity - 1 - bit)) & 1 for bit in range(arity))
        if gate.startswith("and"):
            desired = 1 if all(inputs) else 0
        else:
            desired = 1 if any(inputs) else 0
        samples.append(GateSample(inputs, desired))
    return TruthTable(gate, tuple(samples), not drop_zero)

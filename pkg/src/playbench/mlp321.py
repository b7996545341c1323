"""Three-input, two-hidden-unit, one-output threshold network (3-2-1).

Layout: hidden unit 1 sees inputs 1 and 2 (weights w1, w2), hidden unit 2
sees input 3 (weight w3), and the output unit combines the two raw hidden
sums (weights w4, w5).  Only the output is thresholded, at 0; the hidden
sums pass through linearly.

Two flavours share the code path:

* ``paper`` mode — no biases anywhere (they are pinned to 0 and never move).
* ``bias`` mode — every unit gets an additive bias, trained by the same
  derivative-free rule as the weights.

The update is simultaneous: all new values are computed from the *old* state
(and the forward sums of the presentation), so update order cannot leak in.
An error of 0 returns the state object unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .dataset import GateSample, TruthTable, truth_table
from .errors import ValidationError
from .trace import IterationRecord
from .training import TrainOutcome, run_training

DEFAULT_LR = 0.1

MODES = ("paper", "bias")

Inputs3 = tuple[int, int, int]


@dataclass(frozen=True)
class MlpState:
    w1: float
    w2: float
    w3: float
    w4: float
    w5: float
    b1: float = 0.0
    b2: float = 0.0
    b3: float = 0.0
    mode: str = "paper"
    lr: float = DEFAULT_LR

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValidationError(f"unknown mode {self.mode!r}", ("mode",))
        if not self.lr > 0.0:
            raise ValidationError(f"lr must be positive, got {self.lr}", ("lr",))
        if self.mode == "paper" and (self.b1, self.b2, self.b3) != (0.0, 0.0, 0.0):
            raise ValidationError("paper mode pins all biases to 0.0", ("mode", "biases"))

    @property
    def weights(self) -> tuple[float, float, float, float, float]:
        return (self.w1, self.w2, self.w3, self.w4, self.w5)

    @property
    def biases(self) -> tuple[float, float, float]:
        return (self.b1, self.b2, self.b3)


@dataclass(frozen=True)
class MlpEval:
    """Forward sums and thresholded output; ``error`` filled in later."""

    n1: float
    n2: float
    n3: float
    output: int
    error: int | None = None


def forward(state: MlpState, inputs: Inputs3) -> MlpEval:
    n1 = inputs[0] * state.w1 + inputs[1] * state.w2 + state.b1
    n2 = inputs[2] * state.w3 + state.b2
    n3 = n1 * state.w4 + n2 * state.w5 + state.b3
    return MlpEval(n1=n1, n2=n2, n3=n3, output=1 if n3 >= 0 else 0)


def classify(state: MlpState, inputs: Inputs3) -> int:
    return forward(state, inputs).output


def update_weights(
    state: MlpState, inputs: Inputs3, error: int, ev: MlpEval
) -> MlpState:
    """Apply the derivative-free rule; all reads come from the old state."""
    if error == 0:
        return state
    lr_err = state.lr * error
    new = dict(
        w1=state.w1 + lr_err * state.w4 * inputs[0],
        w2=state.w2 + lr_err * state.w4 * inputs[1],
        w3=state.w3 + lr_err * state.w5 * inputs[2],
        w4=state.w4 + lr_err * ev.n1,
        w5=state.w5 + lr_err * ev.n2,
    )
    if state.mode == "bias":
        new.update(
            b1=state.b1 + lr_err * state.w4,
            b2=state.b2 + lr_err * state.w5,
            b3=state.b3 + lr_err,
        )
    return replace(state, **new)


def present_sample(
    state: MlpState,
    sample: GateSample,
    step: int,
    epoch: int,
    sample_idx: int,
) -> tuple[MlpState, IterationRecord]:
    ev = forward(state, sample.inputs)
    error = sample.desired - ev.output
    state = update_weights(state, sample.inputs, error, ev)
    rec = IterationRecord(
        step=step,
        epoch=epoch,
        sample=sample_idx,
        inputs=sample.inputs,
        desired=sample.desired,
        nets=(ev.n1, ev.n2, ev.n3),
        output=ev.output,
        error=error,
        weights=state.weights,
        biases=state.biases if state.mode == "bias" else None,
    )
    return state, rec


def train(state: MlpState, table: TruthTable, max_epochs: int = 1000) -> TrainOutcome:
    if table.arity != 3:
        raise ValidationError(
            f"the 3-2-1 network cannot train on gate {table.gate!r}", ("gate",)
        )
    return run_training(state, table.samples, max_epochs, present_sample)


def representable(
    gate: str,
    mode: str,
    grid: tuple[float, ...],
    include_zero_row: bool = True,
) -> tuple[bool, MlpState | None]:
    """Exhaustively search the grid for a state classifying the whole table.

    Returns ``(True, witness)`` for the first hit in lexicographic grid
    order, or ``(False, None)`` if no grid point classifies every row.
    """
    table = truth_table(gate, include_zero_row)
    if table.arity != 3:
        raise ValidationError(f"representable() covers 3-input gates, not {gate!r}", ("gate",))
    n_free = 5 if mode == "paper" else 8
    for values in itertools.product(grid, repeat=n_free):
        ws, bs = values[:5], values[5:] if mode == "bias" else (0.0, 0.0, 0.0)
        cand = MlpState(*ws, *bs, mode=mode)
        if all(classify(cand, s.inputs) == s.desired for s in table.samples):
            return True, cand
    return False, None

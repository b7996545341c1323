"""Two-input threshold unit with the classic sign-agnostic error rule.

The unit has no bias: its net sum is compared against the fixed threshold 1.
Weight updates move each weight by ``input * lr * error`` where the error is
``desired - output``, one of -1, 0, +1.  An error of 0 leaves the state
bit-identical (the update is short-circuited, not merely numerically inert).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .dataset import GateSample, TruthTable
from .errors import ValidationError
from .trace import IterationRecord
from .training import TrainOutcome, run_training

DEFAULT_LR = 0.5


@dataclass(frozen=True)
class PerceptronState:
    w1: float
    w2: float
    lr: float = DEFAULT_LR

    def __post_init__(self) -> None:
        if not self.lr > 0.0:
            raise ValidationError(f"lr must be positive, got {self.lr}", ("lr",))

    @property
    def weights(self) -> tuple[float, float]:
        return (self.w1, self.w2)


@dataclass(frozen=True)
class PerceptronEval:
    """Forward result; ``error`` stays None until a desired value is known."""

    n1: float
    y1: int
    error: int | None = None


def forward(state: PerceptronState, inputs: tuple[int, int]) -> PerceptronEval:
    n1 = inputs[0] * state.w1 + inputs[1] * state.w2
    y1 = 1 if n1 >= 1 else 0
    return PerceptronEval(n1=n1, y1=y1)


def classify(state: PerceptronState, inputs: tuple[int, int]) -> int:
    return forward(state, inputs).y1


def update_weights(
    state: PerceptronState, inputs: tuple[int, int], error: int
) -> PerceptronState:
    if error == 0:
        return state
    return replace(
        state,
        w1=state.w1 + inputs[0] * state.lr * error,
        w2=state.w2 + inputs[1] * state.lr * error,
    )


def present_sample(
    state: PerceptronState,
    sample: GateSample,
    step: int,
    epoch: int,
    sample_idx: int,
) -> tuple[PerceptronState, IterationRecord]:
    """Evaluate one table row, apply the update, and record the presentation."""
    ev = forward(state, sample.inputs)
    error = sample.desired - ev.y1
    state = update_weights(state, sample.inputs, error)
    rec = IterationRecord(
        step=step,
        epoch=epoch,
        sample=sample_idx,
        inputs=sample.inputs,
        desired=sample.desired,
        nets=(ev.n1,),
        output=ev.y1,
        error=error,
        weights=state.weights,
    )
    return state, rec


def train(state: PerceptronState, table: TruthTable, max_epochs: int = 1000) -> TrainOutcome:
    if table.arity != 2:
        raise ValidationError(
            f"the two-input unit cannot train on gate {table.gate!r}", ("gate",)
        )
    return run_training(state, table.samples, max_epochs, present_sample)

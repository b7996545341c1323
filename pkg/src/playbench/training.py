"""The shared epoch loop and its termination rule.

Both network models train the same way: present every table row once per
epoch, updating after each row.  A run stops as *converged* at the end of a
clean epoch (all errors zero) that also **confirmed** its starting weights —
i.e. the previous epoch finished without any net weight change (the very
first epoch may confirm the initial weights).  A clean epoch that follows a
weight change only proves the new weights were never contradicted *after*
the change, so one more full pass is required before declaring victory.

``epochs_used`` counts every presented epoch, including the confirming one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .dataset import GateSample
from .errors import ValidationError
from .trace import IterationRecord

StateT = TypeVar("StateT")

PresentFn = Callable[
    [StateT, GateSample, int, int, int], tuple[StateT, IterationRecord]
]


@dataclass(frozen=True)
class TrainOutcome:
    state: object
    records: tuple[IterationRecord, ...]
    converged: bool
    epochs_used: int


def run_training(
    state: StateT,
    samples: Sequence[GateSample],
    max_epochs: int,
    present: PresentFn,
) -> TrainOutcome:
    if max_epochs < 1:
        raise ValidationError(f"max_epochs must be >= 1, got {max_epochs}", ("max_epochs",))
    records: list[IterationRecord] = []
    converged = False
    prev_stable = True  # the initial weights count as "unchanged so far"
    epochs_used = 0
    step = 0
    while epochs_used < max_epochs:
        epoch_start = state
        clean = True
        for sample_idx, sample in enumerate(samples):
            state, rec = present(state, sample, step, epochs_used, sample_idx)
            records.append(rec)
            clean = clean and rec.error == 0
            step += 1
        epochs_used += 1
        if clean and prev_stable:
            converged = True
            break
        prev_stable = state == epoch_start
    return TrainOutcome(state, tuple(records), converged, epochs_used)

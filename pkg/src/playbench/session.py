"""Stepping sessions: configuration, lifecycle, and trace export.

A session wraps one experiment — a training run of either network, or a
single-shot clustering — behind a uniform surface: create, step, run, reset,
export.  Everything a session does is a pure function of its config, so any
exported trace can be replayed byte-for-byte by rebuilding a session from the
config echoed inside it.

One step is one sample presentation.  Status only changes at epoch
boundaries: ``running`` → ``converged`` when a clean epoch confirms weights
the previous epoch left unchanged, or → ``exhausted`` when the epoch budget
runs out first.  Clustering sessions are born ``converged`` — their work
happens entirely at creation.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, replace
from typing import Any

from . import mlp321, perceptron
from .dataset import (
    DEFAULT_BOUNDS,
    Rng64,
    StageBounds,
    TruthTable,
    gen_mass_centers,
    gen_point_cloud,
    rng_next,
    truth_table,
    uniform_int,
    uniform_signed_unit,
)
from .errors import StateError, UnsupportedError, ValidationError
from .kmeans import ColouredCloud, assign_clusters, colour_points
from .trace import (
    IterationRecord,
    canonical_json,
    csv_header,
    record_from_dict,
    record_to_dict,
    records_to_csv,
)

RUNNING = "running"
CONVERGED = "converged"
EXHAUSTED = "exhausted"

MODELS = ("perceptron", "mlp321", "kmeans")
INITS = ("zeros", "uniform", "explicit")

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SessionConfig:
    """Complete recipe for a session; unused fields stay None.

    Build instances through :func:`normalize_config` (or the dict codec),
    which fills model-specific defaults and rejects inconsistent values.
    """

    model: str
    gate: str | None = None
    mode: str | None = None
    lr: float | None = None
    init: str = "zeros"
    init_values: tuple[float, ...] | None = None
    seed: int = 0
    include_zero_row: bool = True
    shuffle: bool = False
    max_epochs: int = 1000
    n: int | None = None
    k: int | None = None
    bounds: StageBounds | None = None


def _require(cond: bool, message: str, fields: tuple[str, ...]) -> None:
    if not cond:
        raise ValidationError(message, fields)


def normalize_config(config: SessionConfig) -> SessionConfig:
    """Fill model defaults, canonicalize, and validate a config."""
    _require(config.model in MODELS, f"unknown model {config.model!r}", ("model",))
    _require(
        isinstance(config.seed, int) and 0 <= config.seed <= _MASK64,
        "seed must be an integer in [0, 2**64)",
        ("seed",),
    )

    if config.model == "kmeans":
        for field in ("gate", "mode", "lr", "init_values"):
            _require(
                getattr(config, field) is None,
                f"{field} does not apply to kmeans sessions",
                (field,),
            )
        _require(config.n is not None and config.n >= 1, "kmeans needs n >= 1", ("n",))
        _require(config.k is not None and config.k >= 1, "kmeans needs k >= 1", ("k",))
        return replace(
            config,
            init="zeros",
            include_zero_row=True,
            shuffle=False,
            max_epochs=1,
            bounds=config.bounds or DEFAULT_BOUNDS,
        )

    # Network models.
    for field in ("n", "k", "bounds"):
        _require(
            getattr(config, field) is None,
            f"{field} does not apply to {config.model} sessions",
            (field,),
        )
    _require(
        isinstance(config.max_epochs, int) and config.max_epochs >= 1,
        "max_epochs must be an integer >= 1",
        ("max_epochs",),
    )
    _require(config.init in INITS, f"unknown init {config.init!r}", ("init",))
    if config.init == "explicit":
        _require(
            config.init_values is not None,
            "explicit init requires init_values",
            ("init_values",),
        )
    else:
        _require(
            config.init_values is None,
            "init_values only applies to explicit init",
            ("init_values",),
        )

    if config.model == "perceptron":
        _require(
            config.gate in ("and2", "or2"),
            f"perceptron gate must be and2 or or2, got {config.gate!r}",
            ("gate",),
        )
        _require(config.mode is None, "mode does not apply to the perceptron", ("mode",))
        lr = perceptron.DEFAULT_LR if config.lr is None else config.lr
        if config.init_values is not None:
            _require(
                len(config.init_values) == 2,
                "perceptron init_values must hold exactly 2 weights",
                ("init_values",),
            )
        config = replace(config, lr=lr, include_zero_row=True)
    else:  # mlp321
        _require(
            config.gate in ("and3", "or3"),
            f"mlp321 gate must be and3 or or3, got {config.gate!r}",
            ("gate",),
        )
        mode = config.mode or "paper"
        _require(mode in mlp321.MODES, f"unknown mode {mode!r}", ("mode",))
        lr = mlp321.DEFAULT_LR if config.lr is None else config.lr
        if config.init_values is not None:
            want = 5 if mode == "paper" else 8
            _require(
                len(config.init_values) == want,
                f"mlp321 {mode} init_values must hold exactly {want} values",
                ("init_values",),
            )
        config = replace(config, mode=mode, lr=lr)

    _require(
        isinstance(config.lr, (int, float)) and config.lr > 0,
        "lr must be a positive number",
        ("lr",),
    )
    return replace(config, lr=float(config.lr))


_NET_CONFIG_KEYS = (
    "model", "gate", "mode", "lr", "init", "init_values",
    "seed", "include_zero_row", "shuffle", "max_epochs",
)
_KMEANS_CONFIG_KEYS = ("model", "n", "k", "seed", "bounds")


def config_to_dict(config: SessionConfig) -> dict:
    """Canonical dict echo of a (normalized) config, fixed key order."""
    if config.model == "kmeans":
        b = config.bounds or DEFAULT_BOUNDS
        return {
            "model": config.model,
            "n": config.n,
            "k": config.k,
            "seed": config.seed,
            "bounds": {
                "x_min": b.x_min, "x_max": b.x_max,
                "y_min": b.y_min, "y_max": b.y_max,
            },
        }
    return {
        "model": config.model,
        "gate": config.gate,
        "mode": config.mode,
        "lr": config.lr,
        "init": config.init,
        "init_values": None if config.init_values is None else list(config.init_values),
        "seed": config.seed,
        "include_zero_row": config.include_zero_row,
        "shuffle": config.shuffle,
        "max_epochs": config.max_epochs,
    }


def config_from_dict(data: Any) -> SessionConfig:
    """Parse an untrusted config dict; unknown or misshapen keys fail."""
    _require(isinstance(data, dict), "config must be a JSON object", ("config",))
    model = data.get("model")
    _require(model in MODELS, f"unknown model {model!r}", ("model",))
    allowed = _KMEANS_CONFIG_KEYS if model == "kmeans" else _NET_CONFIG_KEYS
    unknown = sorted(set(data) - set(allowed))
    _require(not unknown, f"unknown config keys: {', '.join(unknown)}", tuple(unknown))

    kwargs: dict[str, Any] = {"model": model}
    try:
        if model == "kmeans":
            for key in ("n", "k", "seed"):
                if key in data:
                    kwargs[key] = data[key]
            if "bounds" in data and data["bounds"] is not None:
                b = data["bounds"]
                _require(
                    isinstance(b, dict)
                    and set(b) == {"x_min", "x_max", "y_min", "y_max"},
                    "bounds must hold exactly x_min, x_max, y_min, y_max",
                    ("bounds",),
                )
                kwargs["bounds"] = StageBounds(
                    int(b["x_min"]), int(b["x_max"]), int(b["y_min"]), int(b["y_max"])
                )
        else:
            for key in _NET_CONFIG_KEYS[1:]:
                if key in data and data[key] is not None:
                    kwargs[key] = data[key]
            if "init_values" in kwargs:
                values = kwargs["init_values"]
                _require(
                    isinstance(values, (list, tuple))
                    and all(isinstance(v, (int, float)) for v in values),
                    "init_values must be a list of numbers",
                    ("init_values",),
                )
                kwargs["init_values"] = tuple(float(v) for v in values)
            for key in ("include_zero_row", "shuffle"):
                if key in kwargs:
                    _require(
                        isinstance(kwargs[key], bool),
                        f"{key} must be a boolean",
                        (key,),
                    )
        for key in ("seed", "max_epochs", "n", "k"):
            if key in kwargs:
                _require(
                    isinstance(kwargs[key], int) and not isinstance(kwargs[key], bool),
                    f"{key} must be an integer",
                    (key,),
                )
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed config: {exc}", ("config",)) from exc
    return normalize_config(SessionConfig(**kwargs))


# --- session ids -----------------------------------------------------------

_id_lock = threading.Lock()
_id_rng = Rng64(secrets.randbits(64))


def new_session_id() -> str:
    """32 hex chars from an entropy-seeded SplitMix64 stream (not replayable)."""
    global _id_rng
    with _id_lock:
        hi, _id_rng = rng_next(_id_rng)
        lo, _id_rng = rng_next(_id_rng)
    return f"{hi:016x}{lo:016x}"


# --- the session itself ----------------------------------------------------


class Session:
    """One live experiment.  Not thread-safe; callers serialize access."""

    def __init__(self, config: SessionConfig, session_id: str | None = None):
        self.config = normalize_config(config)
        self.id = session_id if session_id is not None else new_session_id()
        self._initialize()

    # -- construction / reset

    def _initialize(self) -> None:
        cfg = self.config
        self.records: list[IterationRecord] = []
        self.epochs_used = 0
        rng = Rng64(cfg.seed)
        if cfg.model == "kmeans":
            centers, rng = gen_mass_centers(cfg.k, cfg.bounds, rng)
            points, rng = gen_point_cloud(cfg.n, cfg.bounds, rng)
            assignment = assign_clusters(points, centers)
            self.cloud: ColouredCloud | None = colour_points(points, centers, assignment)
            self.table: TruthTable | None = None
            self.state = None
            self.status = CONVERGED
            self._rng = rng
            return

        self.cloud = None
        self.table = truth_table(cfg.gate, cfg.include_zero_row)
        if cfg.model == "perceptron":
            weights, rng = self._draw_init(rng, 2)
            self.state = perceptron.PerceptronState(*weights, lr=cfg.lr)
            self._present = perceptron.present_sample
        else:
            n_draws = 5 if cfg.mode == "paper" else 8
            values, rng = self._draw_init(rng, n_draws)
            weights, biases = values[:5], values[5:] or (0.0, 0.0, 0.0)
            self.state = mlp321.MlpState(*weights, *biases, mode=cfg.mode, lr=cfg.lr)
            self._present = mlp321.present_sample
        self._rng = rng
        self.status = RUNNING
        self._prev_stable = True
        self._begin_epoch()

    def _draw_init(self, rng: Rng64, count: int) -> tuple[tuple[float, ...], Rng64]:
        cfg = self.config
        if cfg.init == "zeros":
            return (0.0,) * count, rng
        if cfg.init == "explicit":
            return cfg.init_values, rng
        values = []
        for _ in range(count):
            v, rng = uniform_signed_unit(rng)
            values.append(v)
        return tuple(values), rng

    def _begin_epoch(self) -> None:
        self._epoch_start = self.state
        self._clean = True
        self._pos = 0
        order = list(range(len(self.table.samples)))
        if self.config.shuffle:
            # Fisher–Yates, high index down, one draw per swap.
            rng = self._rng
            for i in range(len(order) - 1, 0, -1):
                j, rng = uniform_int(rng, 0, i)
                order[i], order[j] = order[j], order[i]
            self._rng = rng
        self._order = order

    def reset(self, new_seed: int | None = None) -> None:
        """Rewind to step zero, optionally under a different seed."""
        if new_seed is not None:
            self.config = normalize_config(replace(self.config, seed=new_seed))
        self._initialize()

    # -- stepping

    @property
    def steps(self) -> int:
        return len(self.records)

    def _step_one(self) -> IterationRecord:
        sample_idx = self._order[self._pos]
        sample = self.table.samples[sample_idx]
        self.state, rec = self._present(
            self.state, sample, self.steps, self.epochs_used, sample_idx
        )
        self.records.append(rec)
        self._clean = self._clean and rec.error == 0
        self._pos += 1
        if self._pos == len(self.table.samples):
            self.epochs_used += 1
            if self._clean and self._prev_stable:
                self.status = CONVERGED
            elif self.epochs_used >= self.config.max_epochs:
                self.status = EXHAUSTED
            else:
                self._prev_stable = self.state == self._epoch_start
                self._begin_epoch()
        return rec

    def _check_steppable(self) -> None:
        if self.config.model == "kmeans":
            raise UnsupportedError("kmeans sessions are single-shot; nothing to step")
        if self.status != RUNNING:
            raise StateError(f"session already {self.status}")

    def step(self, count: int = 1) -> list[IterationRecord]:
        """Present up to ``count`` samples; stops early if the run finishes."""
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise ValidationError(f"count must be an integer >= 0, got {count!r}", ("count",))
        self._check_steppable()
        out = []
        for _ in range(count):
            out.append(self._step_one())
            if self.status != RUNNING:
                break
        return out

    def run(self) -> tuple[bool, int]:
        """Step to a terminal status; returns ``(converged, epochs_used)``."""
        self._check_steppable()
        while self.status == RUNNING:
            self._step_one()
        return self.status == CONVERGED, self.epochs_used

    # -- views and exports

    def state_json(self) -> dict:
        if self.config.model == "kmeans":
            return self.cloud.to_json_dict()
        if self.config.model == "perceptron":
            return {"weights": list(self.state.weights)}
        if self.config.mode == "bias":
            return {"weights": list(self.state.weights), "biases": list(self.state.biases)}
        return {"weights": list(self.state.weights)}

    def session_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "config": config_to_dict(self.config),
            "state": self.state_json(),
            "steps": self.steps,
            "epochs_used": self.epochs_used,
        }

    def _csv_text(self) -> str:
        cfg = self.config
        if cfg.model == "kmeans":
            lines = ["x,y,cluster,color"]
            for (x, y), cluster, color in self.cloud.entries():
                lines.append(f"{x},{y},{cluster},{color}")
            return "\n".join(lines) + "\n"
        if cfg.model == "perceptron":
            header = csv_header(2, 1, 2, 0)
        else:
            header = csv_header(3, 3, 5, 3 if cfg.mode == "bias" else 0)
        return records_to_csv(self.records, header)

    def trace_dict(self) -> dict:
        return {
            "config": config_to_dict(self.config),
            "records": [record_to_dict(r) for r in self.records],
            "converged": self.status == CONVERGED,
            "epochs_used": self.epochs_used,
        }

    def export_trace(self, format: str) -> bytes:
        if format == "json":
            return canonical_json(self.trace_dict())
        if format == "csv":
            return self._csv_text().encode("utf-8")
        raise ValidationError(f"unknown trace format {format!r}", ("format",))


@dataclass(frozen=True)
class TrainingTrace:
    """Parsed form of a JSON trace export."""

    config: SessionConfig
    records: tuple[IterationRecord, ...]
    converged: bool
    epochs_used: int


def trace_from_json(data: bytes | str) -> TrainingTrace:
    try:
        parsed = json.loads(data)
        return TrainingTrace(
            config=config_from_dict(parsed["config"]),
            records=tuple(record_from_dict(d) for d in parsed["records"]),
            converged=bool(parsed["converged"]),
            epochs_used=int(parsed["epochs_used"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed trace JSON: {exc}", ("trace",)) from exc


def replay_trace(data: bytes | str) -> bytes:
    """Rebuild the session a JSON trace describes and re-export it.

    The result is byte-identical to the input for any trace this package
    produced — the determinism contract in executable form.
    """
    trace = trace_from_json(data)
    session = Session(trace.config, session_id="replay")
    for _ in trace.records:
        session.step(1)
    return session.export_trace("json")

"""Iteration records and their delimited/JSON codecs.

A training run is a flat list of :class:`IterationRecord`, one per sample
presentation.  Both codecs round-trip byte-identically: floats are written
with ``repr`` (shortest string that parses back to the same double), and the
JSON writer uses a canonical compact form with a fixed key order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import ValidationError


def canonical_json(obj: Any) -> bytes:
    """Compact UTF-8 JSON with insertion-ordered keys — the wire format."""
    return json.dumps(obj, separators=(",", ":")).encode("utf-8")


@dataclass(frozen=True)
class IterationRecord:
    """Everything observable about one sample presentation.

    ``nets`` holds the pre-threshold sums: ``(n1,)`` for the two-input unit,
    ``(n1, n2, n3)`` for the three-layer network (n3 is the raw third sum,
    before thresholding).  ``weights``/``biases`` are the values *after* the
    update for this presentation.
    """

    step: int
    epoch: int
    sample: int
    inputs: tuple[int, ...]
    desired: int
    nets: tuple[float, ...]
    output: int
    error: int
    weights: tuple[float, ...]
    biases: tuple[float, ...] | None = None


_NET_NAMES = ("n1", "n2", "n3")


def record_to_dict(rec: IterationRecord) -> dict:
    d: dict[str, Any] = {
        "step": rec.step,
        "epoch": rec.epoch,
        "sample": rec.sample,
        "inputs": list(rec.inputs),
        "desired": rec.desired,
    }
    for name, value in zip(_NET_NAMES, rec.nets):
        d[name] = value
    d["output"] = rec.output
    d["error"] = rec.error
    d["weights"] = list(rec.weights)
    if rec.biases is not None:
        d["biases"] = list(rec.biases)
    return d


def record_from_dict(d: dict) -> IterationRecord:
    nets = tuple(float(d[name]) for name in _NET_NAMES if name in d)
    biases = d.get("biases")
    return IterationRecord(
        step=int(d["step"]),
        epoch=int(d["epoch"]),
        sample=int(d["sample"]),
        inputs=tuple(int(v) for v in d["inputs"]),
        desired=int(d["desired"]),
        nets=nets,
        output=int(d["output"]),
        error=int(d["error"]),
        weights=tuple(float(w) for w in d["weights"]),
        biases=None if biases is None else tuple(float(b) for b in biases),
    )


def csv_header(arity: int, n_nets: int, n_weights: int, n_biases: int) -> str:
    cols = ["step", "epoch", "sample"]
    cols += [f"in{i}" for i in range(1, arity + 1)]
    cols.append("desired")
    cols += list(_NET_NAMES[:n_nets])
    cols += ["output", "error"]
    cols += [f"w{i}" for i in range(1, n_weights + 1)]
    cols += [f"b{i}" for i in range(1, n_biases + 1)]
    return ",".join(cols)


def records_to_csv(records: list[IterationRecord], header: str) -> str:
    """Render records under the given header; floats via ``repr``."""
    lines = [header]
    for rec in records:
        cells = [str(rec.step), str(rec.epoch), str(rec.sample)]
        cells += [str(v) for v in rec.inputs]
        cells.append(str(rec.desired))
        cells += [repr(v) for v in rec.nets]
        cells += [str(rec.output), str(rec.error)]
        cells += [repr(w) for w in rec.weights]
        if rec.biases is not None:
            cells += [repr(b) for b in rec.biases]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def records_from_csv(text: str) -> list[IterationRecord]:
    """Parse a trace CSV produced by :func:`records_to_csv`."""
    lines = [ln for ln in text.split("\n") if ln]
    if not lines:
        raise ValidationError("empty trace CSV", ("csv",))
    header = lines[0].split(",")
    try:
        arity = sum(1 for c in header if c.startswith("in"))
        n_nets = sum(1 for c in header if c in _NET_NAMES)
        n_weights = sum(1 for c in header if c[0] == "w" and c[1:].isdigit())
        n_biases = sum(1 for c in header if c[0] == "b" and c[1:].isdigit())
        col = {name: i for i, name in enumerate(header)}
        records = []
        for ln in lines[1:]:
            cells = ln.split(",")
            records.append(
                IterationRecord(
                    step=int(cells[col["step"]]),
                    epoch=int(cells[col["epoch"]]),
                    sample=int(cells[col["sample"]]),
                    inputs=tuple(int(cells[col[f"in{i}"]]) for i in range(1, arity + 1)),
                    desired=int(cells[col["desired"]]),
                    nets=tuple(float(cells[col[n]]) for n in _NET_NAMES[:n_nets]),
                    output=int(cells[col["output"]]),
                    error=int(cells[col["error"]]),
                    weights=tuple(
                        float(cells[col[f"w{i}"]]) for i in range(1, n_weights + 1)
                    ),
                    biases=(
                        tuple(float(cells[col[f"b{i}"]]) for i in range(1, n_biases + 1))
                        if n_biases
                        else None
                    ),
                )
            )
    except (KeyError, IndexError, ValueError) as exc:
        raise ValidationError(f"malformed trace CSV: {exc}", ("csv",)) from exc
    return records


def records_to_json(records: list[IterationRecord]) -> bytes:
    return canonical_json([record_to_dict(r) for r in records])


def records_from_json(data: bytes | str) -> list[IterationRecord]:
    try:
        parsed = json.loads(data)
        return [record_from_dict(d) for d in parsed]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed trace JSON: {exc}", ("json",)) from exc

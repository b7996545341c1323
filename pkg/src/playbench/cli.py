"""Command-line frontend.

Four subcommands: ``perceptron`` and ``mlp`` train a network and print a
one-line summary (``converged=true epochs=3 w1=0.5 w2=0.5``), ``kmeans``
emits a clustered point cloud as JSON, and ``serve`` starts the HTTP
service.  ``--trace`` writes the full run trace next to the summary
(extension picks the format: ``.json`` for JSON, anything else CSV), and
``--plot`` renders a figure of the run to an image file.

Exit codes: 0 on success (a non-converged run is still a success), 2 for
argument or configuration errors, 1 for I/O failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import PlaybenchError, ValidationError
from .session import Session, SessionConfig

_GATE_BY_FLAG = {"and": "and2", "or": "or2", "and3": "and3", "or3": "or3"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="playbench",
        description="Deterministic workbench for tiny threshold networks and one-pass clustering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_net_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lr", type=float, default=None, help="learning rate (model default if omitted)")
        p.add_argument("--init", choices=["zeros", "uniform"], default="zeros",
                       help="start from zero weights or seeded uniform [-1,1) draws")
        p.add_argument("--seed", type=int, default=0, help="64-bit unsigned seed")
        p.add_argument("--max-epochs", type=int, default=1000, help="epoch budget")
        p.add_argument("--shuffle", action="store_true",
                       help="reshuffle the sample order each epoch (seeded)")
        p.add_argument("--trace", metavar="PATH", default=None,
                       help="write the run trace here (.json for JSON, else CSV)")
        p.add_argument("--plot", metavar="PATH", default=None,
                       help="render weights and errors over steps to this image file")

    p = sub.add_parser("perceptron", help="train the two-input threshold unit")
    p.add_argument("--gate", choices=["and", "or"], required=True)
    add_net_args(p)

    p = sub.add_parser("mlp", help="train the 3-2-1 threshold network")
    p.add_argument("--gate", choices=["and3", "or3"], required=True)
    p.add_argument("--mode", choices=["paper", "bias"], default="paper",
                   help="no biases anywhere, or trainable biases on every unit")
    p.add_argument("--no-zero-row", action="store_true",
                   help="drop the all-zeros row from the truth table")
    add_net_args(p)

    p = sub.add_parser("kmeans", help="generate and cluster a point cloud")
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--k", type=int, required=True, help="number of mass centers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", default="-",
                   help="where to write the cloud JSON ('-' = stdout, the default)")
    p.add_argument("--plot", metavar="PATH", default=None,
                   help="render the colored cloud to this image file")

    p = sub.add_parser("serve", help="start the HTTP/SSE service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help="TCP port (falls back to $PLAYBENCH_PORT, then 8044)")
    p.add_argument("--data-dir", metavar="DIR", default=None,
                   help="persist finished sessions as <id>.trace.json here")
    return parser


def _summary_line(session: Session) -> str:
    parts = [
        f"converged={'true' if session.status == 'converged' else 'false'}",
        f"epochs={session.epochs_used}",
    ]
    state = session.state
    parts += [f"w{i}={w!r}" for i, w in enumerate(state.weights, start=1)]
    if session.config.model == "mlp321" and session.config.mode == "bias":
        parts += [f"b{i}={b!r}" for i, b in enumerate(state.biases, start=1)]
    return " ".join(parts)


def _write_trace(session: Session, path: str) -> None:
    format = "json" if path.endswith(".json") else "csv"
    Path(path).write_bytes(session.export_trace(format))


def _cmd_net(args: argparse.Namespace) -> int:
    config = SessionConfig(
        model="perceptron" if args.command == "perceptron" else "mlp321",
        gate=_GATE_BY_FLAG[args.gate],
        mode=getattr(args, "mode", None),
        lr=args.lr,
        init=args.init,
        seed=args.seed,
        include_zero_row=not getattr(args, "no_zero_row", False),
        shuffle=args.shuffle,
        max_epochs=args.max_epochs,
    )
    session = Session(config)
    session.run()
    print(_summary_line(session))
    if args.trace:
        _write_trace(session, args.trace)
    if args.plot:
        from . import plots

        plots.save_trace_figure(session, args.plot)
    return 0


def _cmd_kmeans(args: argparse.Namespace) -> int:
    config = SessionConfig(model="kmeans", n=args.n, k=args.k, seed=args.seed)
    session = Session(config)
    cloud_json = json.dumps(session.state_json(), separators=(",", ":"))
    if args.out == "-":
        print(cloud_json)
    else:
        Path(args.out).write_text(cloud_json + "\n", encoding="utf-8")
    if args.plot:
        from . import plots

        plots.save_cloud_figure(session, args.plot)
    return 0


def _run_uvicorn(app, host: str, port: int) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port)


def _cmd_serve(args: argparse.Namespace) -> int:
    port = args.port
    if port is None:
        port = int(os.environ.get("PLAYBENCH_PORT", "8044"))
    from .service import create_app

    _run_uvicorn(create_app(data_dir=args.data_dir), args.host, port)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("perceptron", "mlp"):
            return _cmd_net(args)
        if args.command == "kmeans":
            return _cmd_kmeans(args)
        return _cmd_serve(args)
    except ValidationError as exc:
        print(f"playbench: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except PlaybenchError as exc:
        print(f"playbench: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"playbench: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

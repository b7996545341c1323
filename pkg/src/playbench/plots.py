"""Report figures rendered to image files (headless backend).

Two views cover the two kinds of session: the colored cloud with its mass
centers, and the weight/error history of a training run.  Both take a
session and a destination path; the format follows the file extension
(anything matplotlib can save — png, svg, pdf, ...).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .kmeans import PALETTE
from .session import Session


def save_cloud_figure(session: Session, path: str) -> None:
    cloud = session.cloud
    bounds = session.config.bounds
    fig, ax = plt.subplots(figsize=(6.9, 5.1))
    xs = [p[0] for p in cloud.points]
    ys = [p[1] for p in cloud.points]
    ax.scatter(xs, ys, c=list(cloud.colors), s=18, linewidths=0)
    for idx, (cx, cy) in enumerate(cloud.centers):
        ax.scatter(
            [cx], [cy],
            c=[PALETTE[idx % len(PALETTE)]],
            s=140, marker="X", edgecolors="black", linewidths=1.2, zorder=3,
        )
    pad = 10
    ax.set_xlim(bounds.x_min - pad, bounds.x_max + pad)
    ax.set_ylim(bounds.y_min - pad, bounds.y_max + pad)
    ax.set_aspect("equal", adjustable="box")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    ax.set_title(f"{len(cloud.points)} points, {len(cloud.centers)} centers (seed {session.config.seed})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_trace_figure(session: Session, path: str) -> None:
    records = session.records
    steps = [r.step for r in records]
    fig, (ax_w, ax_e) = plt.subplots(
        2, 1, figsize=(7.5, 5.4), sharex=True, height_ratios=[3, 1]
    )
    n_weights = len(records[0].weights) if records else 0
    for i in range(n_weights):
        ax_w.plot(steps, [r.weights[i] for r in records], label=f"w{i + 1}", linewidth=1.4)
    if records and records[0].biases is not None:
        for i in range(len(records[0].biases)):
            ax_w.plot(
                steps, [r.biases[i] for r in records],
                label=f"b{i + 1}", linewidth=1.1, linestyle="--",
            )
    ax_w.set_ylabel("weights after update")
    ax_w.grid(True, linewidth=0.3, alpha=0.5)
    ax_w.legend(loc="best", fontsize=8, ncols=4)
    ax_e.step(steps, [r.error for r in records], where="mid", color="#d62728", linewidth=1.2)
    ax_e.set_yticks([-1, 0, 1])
    ax_e.set_ylabel("error")
    ax_e.set_xlabel("step")
    ax_e.grid(True, linewidth=0.3, alpha=0.5)
    status = session.status
    ax_w.set_title(
        f"{session.config.model} {session.config.gate} — {status} after {session.epochs_used} epochs"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

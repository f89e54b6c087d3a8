"""Figures for evaluation reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .features import METHOD_LABELS  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "svg.hashsalt": "hindiwsd",
}

_METRICS = {"precision": "P", "recall": "R", "f1": "F"}

# drop timestamps and version strings so reruns write identical files
_METADATA = {".png": {"Software": None}, ".svg": {"Date": None}, ".pdf": {"CreationDate": None, "Producer": None}}


def plot_report(report, path, metrics=("precision", "recall", "f1")):
    """Draw one panel per metric, one line per method across window sizes.

    The file format follows the suffix of ``path`` (png, pdf, svg, ...).
    Returns the path written.
    """
    path = Path(path)
    methods = list(dict.fromkeys(row.method.method for row in report.rows))
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, len(metrics), figsize=(3.2 * len(metrics), 3.0), sharey=True, squeeze=False)
        for ax, metric in zip(axes[0], metrics):
            for method in methods:
                pts = sorted((r.method.window, getattr(r, metric)) for r in report.rows if r.method.method == method)
                if not pts:
                    continue
                xs, ys = zip(*pts)
                ax.plot(xs, ys, marker="o", label=METHOD_LABELS.get(method, method))
            ax.set_title(_METRICS.get(metric, metric))
            ax.set_xlabel("window (±j)")
            windows = sorted({r.method.window for r in report.rows})
            if windows:
                ax.set_xticks(windows)
        axes[0][0].set_ylabel("score")
        if methods:
            axes[0][-1].legend(loc="lower right", frameon=False)
        fig.tight_layout()
        fig.savefig(path, metadata=_METADATA.get(path.suffix.lower()))
        plt.close(fig)
    return path

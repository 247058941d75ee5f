"""Figure rendering for the experiment reports (matplotlib, file output)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_comparison(report, path):
    """Per-trial relative variation errors plus their means."""
    trials = report["trials"]
    idx = [t["trial"] for t in trials]
    r_greedy = [t["r_greedy_u2"] for t in trials]
    r_lap = [t["r_laplacian_u2"] for t in trials]
    r_greedy_sum = [t["r_greedy_basis"] for t in trials]
    r_lap_sum = [t["r_laplacian_basis"] for t in trials]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(idx, r_greedy, "r.", label="greedy vs exact (u2)", alpha=0.6)
    ax1.plot(idx, r_lap, "b.", label="Laplacian vs exact (u2)", alpha=0.6)
    ax1.axhline(report["aggregate"]["mean_r_greedy_u2"], color="r", lw=1)
    ax1.axhline(report["aggregate"]["mean_r_laplacian_u2"], color="b", lw=1)
    ax1.set_xlabel("trial")
    ax1.set_ylabel("relative variation error")
    ax1.set_title(f"second basis vector (N={report['params']['n']})")
    ax1.legend(fontsize=8)

    ax2.plot(idx, r_greedy_sum, "r.", label="greedy vs exact (sum)", alpha=0.6)
    ax2.plot(idx, r_lap_sum, "b.", label="Laplacian vs exact (sum)", alpha=0.6)
    ax2.axhline(report["aggregate"]["mean_r_greedy_basis"], color="r", lw=1)
    ax2.axhline(report["aggregate"]["mean_r_laplacian_basis"], color="b", lw=1)
    ax2.set_xlabel("trial")
    ax2.set_ylabel("relative variation error")
    ax2.set_title("whole-basis variation sum")
    ax2.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_curves(curves, path, title="n-term approximation error"):
    """Approximation-error curves; ``curves`` maps label -> epsilon array."""
    fig, ax = plt.subplots(figsize=(6, 4))
    styles = {"greedy": "r-", "laplacian": "b-"}
    for label, eps in curves.items():
        ax.semilogy(range(len(eps)), eps, styles.get(label, "-"), label=label)
    ax.set_xlabel("n")
    ax.set_ylabel("relative error")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

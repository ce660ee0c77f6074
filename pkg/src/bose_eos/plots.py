"""Matplotlib rendering for the CSV-emitting subcommands.

The delimited output is the contract; these renderers are an optional
convenience that draws the same rows to a PNG next to the data file.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def render_fig1(rows: list[dict], path: str) -> None:
    """Energy-density ratio vs gamma, one curve per range ratio r."""
    by_r: dict[float, tuple[list[float], list[float]]] = {}
    for row in rows:
        xs, ys = by_r.setdefault(row["r"], ([], []))
        xs.append(row["gamma"])
        ys.append(row["energy_ratio"])
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for r in sorted(by_r):
        xs, ys = by_r[r]
        ax.plot(xs, ys, label=f"$r_s/a_s = {r:g}$")
    ax.set_xlabel(r"gas parameter $\gamma = \rho a_s^3$")
    ax.set_ylabel(r"$\mathcal{E} / (g\rho^2/2)$")
    ax.set_title("Ground-state energy density vs mean-field value")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_dispersion(rows: list[dict], path: str) -> None:
    """Gapless excitation spectrum E(k)/M^2 against the reduced wavenumber."""
    xs = [row["x"] for row in rows]
    ys = [row["e_over_m2"] for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(xs, ys, label=r"$E(k)/M^2$")
    ax.plot(xs, xs, linestyle="--", linewidth=1, label="phonon branch")
    ax.set_xlabel(r"$x = \sqrt{\epsilon_k}/M$")
    ax.set_ylabel(r"$E/M^2$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sweep(rows: list[dict], path: str) -> None:
    """2x2 panel of the four main ratios vs gamma, one curve per r."""
    panels = (
        ("depletion_fraction", r"$\rho_{ex}/\rho$"),
        ("mu_ratio", r"$\mu/(g\rho)$"),
        ("pressure_ratio", r"$P/(g\rho^2/2)$"),
        ("energy_ratio", r"$\mathcal{E}/(g\rho^2/2)$"),
    )
    by_r: dict[float, list[dict]] = {}
    for row in rows:
        by_r.setdefault(row["r"], []).append(row)
    fig, axes = plt.subplots(2, 2, figsize=(9.6, 7.2), sharex=True)
    for ax, (field, label) in zip(axes.flat, panels):
        for r in sorted(by_r):
            grouped = by_r[r]
            ax.plot(
                [row["gamma"] for row in grouped],
                [row[field] for row in grouped],
                label=f"$r_s/a_s = {r:g}$",
            )
        ax.set_ylabel(label)
    for ax in axes[1]:
        ax.set_xlabel(r"$\gamma$")
    axes[0][0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

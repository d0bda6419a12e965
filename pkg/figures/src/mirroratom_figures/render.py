"""Figure rendering from mirroratom CSVs: pure consumer, pixel-stable output.

Style is pinned (Agg backend, fixed rcParams, fixed PNG metadata) so a
byte-identical CSV always renders to a byte-identical image.  No physics is
recomputed here.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .io import AngularTable, RatioTable  # noqa: E402

__all__ = ["plot_ratios", "plot_angular_surfaces"]

_RC = {
    "figure.dpi": 150,
    "savefig.dpi": 150,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "mirroratom-figures",
}
_METADATA = {"Software": "mirroratom-figures"}


def _save(fig, out_path) -> None:
    fig.savefig(out_path, metadata=_METADATA)
    plt.close(fig)


def plot_ratios(par: RatioTable, perp: RatioTable, out_path, title: str = "") -> None:
    """Two-curve ratio plot (parallel and perpendicular kernels over the
    free-space kernel) against the dimensionless distance x."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(5.2, 3.6))
        ax.plot(par.x, par.ratio, color="C0", label=r"$m_\parallel/m_0$")
        ax.plot(perp.x, perp.ratio, color="C1", label=r"$m_\perp/m_0$")
        ax.axhline(1.0, color="k", lw=0.6, alpha=0.5)
        ax.set_xscale("log")
        ax.set_xlabel(r"$x = a\,(|\nu| - \Omega)$")
        ax.set_ylabel(r"$m/m_0$")
        if title:
            ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        _save(fig, out_path)


def _surface_mesh(table: AngularTable):
    """Radial surface r = p(theta, phi); axisymmetric tables (single phi
    column) are revolved, phi grids are closed at 2*pi for a seamless mesh."""
    theta = table.theta
    if table.phi.size == 1:
        phi = np.linspace(0.0, 2.0 * np.pi, 73)
        values = np.repeat(table.values, phi.size, axis=1)
    else:
        phi = np.concatenate([table.phi, [2.0 * np.pi]])
        values = np.concatenate([table.values, table.values[:, :1]], axis=1)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    r = values
    return (r * np.sin(th) * np.cos(ph),
            r * np.sin(th) * np.sin(ph),
            r * np.cos(th), r)


def plot_angular_surfaces(tables: list[AngularTable], out_path,
                          title: str = "") -> None:
    """One 3-D radial surface panel per input table (one table per ka)."""
    if not tables:
        raise ValueError("need at least one angular table")
    with plt.rc_context(_RC):
        fig = plt.figure(figsize=(4.0 * len(tables), 3.8))
        for i, table in enumerate(tables):
            ax = fig.add_subplot(1, len(tables), i + 1, projection="3d")
            x, y, z, r = _surface_mesh(table)
            scale = r.max() if r.max() > 0 else 1.0
            ax.plot_surface(x / scale, y / scale, z / scale,
                            rcount=len(table.theta), ccount=x.shape[1],
                            cmap="viridis", linewidth=0, antialiased=False)
            ka = table.params.get("ka", "?")
            ax.set_title(f"$k\\,a = {ka}$")
            ax.set_box_aspect((1, 1, 1))
            lim = 1.05
            ax.set_xlim(-lim, lim)
            ax.set_ylim(-lim, lim)
            ax.set_zlim(-lim, lim)
            ax.set_axis_off()
        if title:
            fig.suptitle(title)
        fig.tight_layout()
        _save(fig, out_path)

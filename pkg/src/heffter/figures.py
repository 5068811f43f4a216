"""Figure rendering for the CLI report paths.

Figures are written next to the delimited output with a suffix per plot.
PNG metadata is pinned so identical runs produce identical bytes.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_PNG_METADATA = {"Software": "heffter"}


def render_catalog_figures(rows, out_path: Path) -> list[Path]:
    """Genus and automorphism-group growth across the catalog."""
    out_path = Path(out_path)
    base = out_path.with_suffix("")
    written = []

    complete = [r for r in rows if r.genus is not None]
    qs = [r.q for r in complete]

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(qs, [r.genus for r in complete], marker="o")
    ax.set_xlabel("q")
    ax.set_ylabel("genus")
    ax.set_title("Genus of the embedding surface")
    fig.tight_layout()
    genus_path = base.parent / (base.name + "_genus.png")
    fig.savefig(genus_path, metadata=_PNG_METADATA)
    plt.close(fig)
    written.append(genus_path)

    with_aut = [r for r in rows if r.total is not None]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter([r.q for r in with_aut], [r.total for r in with_aut], marker="o", label="|Aut|")
    if with_aut:
        grid = sorted({r.q for r in with_aut})
        ax.plot(grid, [q * (q - 1) // 2 for q in grid], linestyle="--", label="q(q-1)/2")
    ax.set_xlabel("q")
    ax.set_ylabel("automorphisms")
    ax.set_title("Full automorphism group size")
    ax.legend()
    fig.tight_layout()
    aut_path = base.parent / (base.name + "_autgroup.png")
    fig.savefig(aut_path, metadata=_PNG_METADATA)
    plt.close(fig)
    written.append(aut_path)
    return written


def render_face_census_figure(census: dict[int, int], out_path: Path) -> Path:
    """Bar chart of face boundary lengths."""
    out_path = Path(out_path)
    base = out_path.with_suffix("")
    lengths = sorted(census)
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.bar([str(length) for length in lengths], [census[length] for length in lengths])
    ax.set_xlabel("face length")
    ax.set_ylabel("count")
    ax.set_title("Face census")
    fig.tight_layout()
    path = base.parent / (base.name + "_faces.png")
    fig.savefig(path, metadata=_PNG_METADATA)
    plt.close(fig)
    return path

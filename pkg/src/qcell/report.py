"""Figure rendering for the report path.

Every table emitter can drop a PNG next to its delimited output.  Figures
are deterministic: fixed size, no timestamps, stable ordering.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _coeff_degree(scalar: str) -> float | None:
    """Top doubled q-exponent of a rendered Laurent scalar, None for 0."""
    if scalar.strip() == "0":
        return None
    head = scalar.split(" + ", 1)[0]
    try:
        frac = head.split("q^(")[1].split(")")[0]
        return int(frac.split("/")[0]) / 2.0
    except (IndexError, ValueError):
        return None


def ic_table_figure(table: dict, path: str) -> None:
    """Heatmap of leading q-degrees of the expansion coefficients."""
    rows = table["rows"]
    labels = ["".join(map(str, r["a"])) for r in rows]
    cols = sorted({tuple(c["ap"]) for r in rows for c in r["coeffs"]})
    col_labels = ["".join(map(str, c)) for c in cols]
    grid = []
    for r in rows:
        by_ap = {tuple(c["ap"]): c["p"] for c in r["coeffs"]}
        grid.append([_coeff_degree(by_ap.get(c, "0")) for c in cols])
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(cols) + 2),
                                    max(3, 0.6 * len(rows) + 2)))
    shown = [[v if v is not None else float("nan") for v in row] for row in grid]
    im = ax.imshow(shown, cmap="viridis", aspect="auto")
    ax.set_xticks(range(len(cols)), col_labels, rotation=45, ha="right")
    ax.set_yticks(range(len(rows)), labels)
    ax.set_xlabel("dual PBW index a'")
    ax.set_ylabel("basis row a")
    w = table["weight"]
    ax.set_title(f"expansion degrees, n={table['n']}, weight ({w[0]},{w[1]})")
    for i, row in enumerate(grid):
        for j, v in enumerate(row):
            if v is not None:
                ax.text(j, i, f"{v:g}", ha="center", va="center",
                        color="white", fontsize=9)
    fig.colorbar(im, ax=ax, label="leading q-degree")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def gram_figure(table: dict, path: str) -> None:
    """Diagonal Gram norms as denominator degrees per partition."""
    parts = table["partitions"]
    diag = {}
    for e in table["entries"]:
        if e["a"] == e["b"]:
            diag["".join(map(str, e["a"]))] = e["value"]
    names = ["".join(map(str, p)) for p in parts]
    degs = []
    for name in names:
        val = diag.get(name, "0")
        den = val.split(" / ")[-1]
        lo = min((int(t.split("q^(")[1].split("/")[0])
                  for t in den.strip("()").split(" + ")), default=0)
        degs.append(-lo / 2.0)
    fig, ax = plt.subplots(figsize=(max(4, 0.7 * len(names) + 2), 3.5))
    ax.bar(range(len(names)), degs, color="#356a9c")
    ax.set_xticks(range(len(names)), names, rotation=45, ha="right")
    ax.set_ylabel("denominator q-span")
    w = table["weight"]
    ax.set_title(f"PBW Gram diagonal, n={table['n']}, weight ({w[0]},{w[1]})")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def verify_figure(report: dict, path: str) -> None:
    """One bar per verified invariant, green/red."""
    names = [c["name"] for c in report["checks"]]
    vals = [1 for _ in names]
    colors = ["#2e7d32" if c["passed"] else "#c62828" for c in report["checks"]]
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.45 * len(names) + 1)))
    ax.barh(range(len(names)), vals, color=colors)
    ax.set_yticks(range(len(names)), names, fontsize=8)
    ax.set_xticks([])
    ax.invert_yaxis()
    ax.set_title(f"invariant suite: n={report['n']}, "
                 f"degree <= {report['max_degree']}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)

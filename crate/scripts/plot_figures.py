#!/usr/bin/env python3
"""Render the CLI's sweep CSVs (as produced by reproduce.sh) to PNG.

Each table carries a `# key: value` metadata header, a column-name row and
a unit row; this script only draws what the tables contain.
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_table(path):
    meta, columns, units, rows = {}, None, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(":")
            meta[key.strip()] = value.strip()
        elif columns is None:
            columns = line.split(",")
        elif units is None:
            units = line.split(",")
        elif line.strip():
            rows.append(line.split(","))
    return meta, columns, units, rows


def col(columns, rows, name, cast=float):
    i = columns.index(name)
    return [cast(r[i]) if r[i] != "" else None for r in rows]


def group_by(columns, rows, *names):
    keys, out = [], {}
    idx = [columns.index(n) for n in names]
    for r in rows:
        key = tuple(r[i] for i in idx)
        if key not in out:
            keys.append(key)
            out[key] = []
        out[key].append(r)
    return [(k, out[k]) for k in keys]


def save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    print(f"wrote {path}")


def plot_pathloss_family(out_dir):
    paths = sorted(out_dir.glob("pathloss_low_*.csv"))
    if not paths:
        return
    fig, ax = plt.subplots(figsize=(7, 5))
    for path in paths:
        weather = path.stem.replace("pathloss_low_", "")
        _, columns, _, rows = read_table(path)
        for (f_ghz,), sub in group_by(columns, rows, "freq_ghz"):
            ax.plot(
                col(columns, sub, "distance_km"),
                col(columns, sub, "pl_total_db"),
                label=f"{f_ghz} GHz, {weather}",
                linewidth=1,
            )
    ax.set_xlabel("distance (km)")
    ax.set_ylabel("path loss (dB)")
    ax.set_title("Path loss vs distance, low-band carriers")
    ax.legend(fontsize=7, ncols=2)
    ax.grid(True, alpha=0.3)
    save(fig, out_dir / "pathloss_low.png")


def plot_atten(out_dir, stem):
    path = out_dir / f"{stem}.csv"
    if not path.exists():
        return
    _, columns, _, rows = read_table(path)
    groups = group_by(columns, rows, "freq_ghz")
    fig, axes = plt.subplots(1, len(groups), figsize=(4 * len(groups), 4), sharey=True)
    if len(groups) == 1:
        axes = [axes]
    for ax, ((f_ghz,), sub) in zip(axes, groups):
        d = col(columns, sub, "distance_km")
        for name in ("pl_clear_db", "pl_rain_db", "pl_fog_db", "pl_snow_db"):
            ax.plot(d, col(columns, sub, name), label=name[3:-3], linewidth=1)
        ax.set_title(f"{f_ghz} GHz")
        ax.set_xlabel("distance (km)")
        ax.grid(True, alpha=0.3)
    axes[0].set_ylabel("path loss (dB)")
    axes[-1].legend(fontsize=8)
    save(fig, out_dir / f"{stem}.png")


def plot_gas(out_dir):
    path = out_dir / "gas_attenuation.csv"
    if not path.exists():
        return
    _, columns, _, rows = read_table(path)
    f = col(columns, rows, "freq_ghz")
    fig, ax = plt.subplots(figsize=(7, 5))
    for name in ("beta_oxygen", "beta_water", "beta_total"):
        ax.semilogy(f, col(columns, rows, name), label=name[5:], linewidth=1)
    ax.set_xlabel("frequency (GHz)")
    ax.set_ylabel("specific attenuation (dB/km)")
    ax.set_title("Gaseous attenuation, standard atmosphere")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    save(fig, out_dir / "gas_attenuation.png")


def plot_array(out_dir):
    path = out_dir / "array_design.csv"
    if not path.exists():
        return
    _, columns, _, rows = read_table(path)
    f = col(columns, rows, "freq_ghz")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.loglog(f, col(columns, rows, "n_elements"), "o-", linewidth=1)
    ax1.set_xlabel("frequency (GHz)")
    ax1.set_ylabel("elements in aperture")
    ax1.grid(True, which="both", alpha=0.3)
    ax2.semilogx(f, col(columns, rows, "gain_db"), "o-", linewidth=1)
    ax2.set_xlabel("frequency (GHz)")
    ax2.set_ylabel("array gain (dB)")
    ax2.grid(True, which="both", alpha=0.3)
    fig.suptitle("Fixed 10 cm aperture across carriers")
    save(fig, out_dir / "array_design.png")


def plot_coverage(out_dir):
    for path in sorted(out_dir.glob("coverage_*.csv")):
        _, columns, _, rows = read_table(path)
        h = col(columns, rows, "h_m")
        fig, ax = plt.subplots(figsize=(7, 5))
        for name in ("radius_clear_m", "radius_rain_m", "radius_fog_m", "radius_snow_m"):
            r = col(columns, rows, name)
            if any(v is not None for v in r):
                ax.plot(h, r, label=name[7:-2], linewidth=1)
        ax.set_xlabel("UAV altitude (m)")
        ax.set_ylabel("coverage radius (m)")
        ax.set_title(path.stem.replace("_", " "))
        ax.legend()
        ax.grid(True, alpha=0.3)
        save(fig, path.with_suffix(".png"))


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    plot_pathloss_family(out_dir)
    plot_atten(out_dir, "atten_mmwave")
    plot_atten(out_dir, "atten_nearthz")
    plot_gas(out_dir)
    plot_array(out_dir)
    plot_coverage(out_dir)


if __name__ == "__main__":
    main()

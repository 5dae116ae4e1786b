from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd


def main() -> None:
	# produced by: python -m fraccalc.cli.run curve --rho-min -3.5 --rho-max 6 --step 0.01 --out results/harmonic_curve.csv
	base = Path("results")
	df = pd.read_csv(base / "harmonic_curve.csv", comment="#")

	fig, ax = plt.subplots(figsize=(7, 4))

	# break the line across poles so matplotlib does not join the branches
	rho = df["rho"].values
	gaps = (rho[1:] - rho[:-1]) > 1.5 * (rho[1] - rho[0]) if len(rho) > 1 else []
	start = 0
	for i, gap in enumerate(gaps, start=1):
		if gap:
			ax.plot(rho[start:i], df["h_rho"].values[start:i], color="C0")
			start = i
	ax.plot(rho[start:], df["h_rho"].values[start:], color="C0", label="h(rho)")

	ints = df.dropna(subset=["h_n_exact"])
	ax.scatter(ints["rho"], ints["h_n_exact"], color="C3", zorder=3, s=14, label="h(n), exact")

	ax.set_ylim(-6, 4)
	ax.axhline(0.0, linestyle=":", linewidth=1)
	ax.set_xlabel("rho")
	ax.set_ylabel("h(rho)")
	ax.legend(loc="lower right", fontsize=8)

	fig.tight_layout()
	out = base / "fig_harmonic_curve.png"
	fig.savefig(out, dpi=300)
	print(f"Saved {out}")


if __name__ == "__main__":
	main()

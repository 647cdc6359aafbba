"""Matched box vs packet deficits as eps L / c shrinks.

Shows the relative gap falling like wtilde_equiv^2 once the matched width is
small, and how far from that regime the eps = L = c = 1 point sits.

    python scripts/regime_comparison.py --scales 1 0.3 0.1 0.03 0.01
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from _config import parse_config
from boost_entropy.compare import compare_at, match_box_to_packet
from boost_entropy.galilean import BoxModel
from boost_entropy.tables import to_csv


@dataclass(frozen=True)
class Config:
    scales: tuple = (1.0, 0.3, 0.1, 0.03, 0.01)
    betas: tuple = (0.001, 0.005, 0.01, 0.02)
    mass: float = 1.0
    tol: float = 1e-11
    out: str = ""


def run(cfg: Config) -> list[dict]:
    rows = []
    for s in cfg.scales:
        model = BoxModel(cfg.mass, 0.0, float(s), 1.0, 1.0)
        wt = match_box_to_packet(model)
        for beta in cfg.betas:
            row = compare_at(model, wt, float(beta), cfg.tol)
            rows.append({"eps_L_over_c": float(s), "wtilde_equiv": wt, "beta": float(beta),
                         "deficit_galilean": row.deficit_galilean,
                         "deficit_relativistic": row.deficit_relativistic,
                         "deficit_gap": row.deficit_gap,
                         "gap_over_w2": row.deficit_gap / wt**2,
                         "entropy_ratio": row.ratio})
    return rows


def main(argv=None):
    cfg = parse_config(Config, argv, __doc__.splitlines()[0])
    text = to_csv(run(cfg))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()

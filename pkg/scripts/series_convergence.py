"""Residual of the w^4 series against full quadrature, and its order in w.

    python scripts/series_convergence.py --out series.csv
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from boost_entropy.core import boost_from_beta
from boost_entropy.relativistic import GaussianPacket, nz_prime_deficit, series_deficit
from boost_entropy.tables import to_csv


@dataclass(frozen=True)
class Config:
    wtildes: tuple = (0.01, 0.02, 0.05, 0.1, 0.2)
    gammas: tuple = (1.005, 1.25, 2.0, 7.0888)
    tol: float = 1e-12
    out: str = ""


def run(cfg: Config) -> list[dict]:
    rows = []
    for gamma in cfg.gammas:
        boost = boost_from_beta(math.sqrt(1.0 - 1.0 / gamma**2))
        for w in cfg.wtildes:
            p = GaussianPacket(w)
            res = nz_prime_deficit(p, boost, cfg.tol)
            resid = abs(res.value - series_deficit(p, boost, 4))
            rows.append({"gamma": float(gamma), "wtilde": float(w), "deficit": res.value,
                         "residual": resid, "residual_over_w6": resid / w**6,
                         "evaluations": res.evaluations})
    return rows


def main(argv=None):
    cfg = parse_config(Config, argv, __doc__.splitlines()[0])
    rows = run(cfg)
    text = to_csv(rows)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for gamma in cfg.gammas:
        sel = [r for r in rows if r["gamma"] == gamma]
        k = np.polyfit(np.log([r["wtilde"] for r in sel]), np.log([r["residual"] for r in sel]), 1)[0]
        print(f"# gamma {gamma}: residual ~ w^{k:.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()

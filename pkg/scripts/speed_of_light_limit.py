"""Box-model entropy as c grows at fixed v, with the fitted power law.

    python scripts/speed_of_light_limit.py --cs 10 100 1000 10000
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from boost_entropy.galilean import BoxModel, galilean_entropy, phase_argument, sinc_deficit
from boost_entropy.tables import to_csv


@dataclass(frozen=True)
class Config:
    cs: tuple = (10.0, 100.0, 1000.0, 10000.0)
    v: float = 0.1
    mass: float = 1.0
    eps: float = 1.0
    length: float = 1.0
    out: str = ""


def run(cfg: Config) -> list[dict]:
    rows = []
    for c in cfg.cs:
        m = BoxModel(cfg.mass, 0.0, cfg.eps, cfg.length, float(c))
        x = phase_argument(m, cfg.v)
        rows.append({"c": float(c), "x": x, "t": 0.5 * sinc_deficit(x), "entropy": galilean_entropy(m, cfg.v)})
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
    logc = np.log([r["c"] for r in rows])
    for col in ("t", "entropy"):
        k = np.polyfit(logc, np.log([r[col] for r in rows]), 1)[0]
        print(f"# {col} ~ c^{k:.4f}", file=sys.stderr)


if __name__ == "__main__":
    main()

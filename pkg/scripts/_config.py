"""Dataclass configs with argparse overrides, shared by the experiment scripts."""

from __future__ import annotations

import argparse
import dataclasses
import sys


def parse_config(cls, argv=None, description: str | None = None):
    """Every dataclass field becomes a ``--flag``; tuples take several values."""
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, tuple):
            parser.add_argument(flag, type=type(default[0]), nargs="+", default=default)
        else:
            parser.add_argument(flag, type=type(default), default=default)
    ns = parser.parse_args(sys.argv[1:] if argv is None else argv)
    return cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in vars(ns).items()})

#!/usr/bin/env python3
"""Run the full oracle cross-check suite; exit nonzero on any failure."""

from wtangles.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["check"]))

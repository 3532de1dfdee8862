"""Parameter sweeps over acceleration values, with CSV output.

A sweep fixes or sweeps the Rindler parameter of each accelerated observer,
computes the requested measures at every grid point and returns rows in
deterministic lexicographic grid order.  Rows are plain floats; the CSV
writer renders them with 17 significant digits so output is byte-identical
across runs and round-trips losslessly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import IO, Sequence

import numpy as np

from .fock import w_state
from .measures import TangleReport, tangle_report
from .rindler import observed_density

R_MAX = math.pi / 4
RANGE_TOL = 1e-12
DEFAULT_GRID_1D = 101
DEFAULT_GRID_2D = 41

OBSERVERS = ("A", "B", "C", "D")
ONE_THREE_COLUMNS = tuple(f"N_{obs}_rest" for obs in OBSERVERS)
ONE_ONE_COLUMNS = ("N_AB", "N_AC", "N_AD", "N_BC", "N_BD", "N_CD")
PI_COLUMNS = tuple(f"pi_{obs}" for obs in OBSERVERS)
SCALAR_COLUMNS = ("pi4", "Pi4", "S")
ALL_COLUMNS = ONE_THREE_COLUMNS + ONE_ONE_COLUMNS + PI_COLUMNS + SCALAR_COLUMNS
MEASURE_GROUPS = {
    "one_three": ONE_THREE_COLUMNS,
    "one_one": ONE_ONE_COLUMNS,
    "pi": PI_COLUMNS,
    "all": ALL_COLUMNS,
}


class ConfigError(ValueError):
    """Raised for an invalid sweep configuration, naming the bad field."""


@dataclass(frozen=True)
class AxisSpec:
    """One accelerated observer: fixed r when lo == hi, swept otherwise."""

    observer: str
    lo: float
    hi: float

    @property
    def fixed(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class SweepConfig:
    state: str = "W4"
    accelerated: tuple[AxisSpec, ...] = ()
    grid: int | None = None
    measures: tuple[str, ...] = ("all",)
    output_path: str | None = None
    diagonal: bool = False


def normalize_measures(tokens: Sequence[str]) -> tuple[str, ...]:
    """Expand group names and aliases into canonical column names.

    Accepts canonical names (N_A_rest, N_AB, pi_A, pi4, Pi4, S), the groups
    one_three / one_one / pi / all, and spellings that tag accelerated
    observers with their region, such as N_D1_ABC, N_A_D1 or pi_C1.
    """
    columns: list[str] = []

    def add(name: str) -> None:
        if name not in columns:
            columns.append(name)

    for raw in tokens:
        token = raw.strip()
        if not token:
            continue
        if token in MEASURE_GROUPS:
            for name in MEASURE_GROUPS[token]:
                add(name)
            continue
        if token in ALL_COLUMNS:
            add(token)
            continue
        if token == "entropy":
            add("S")
            continue
        resolved = _resolve_alias(token)
        if resolved is None:
            raise ConfigError(
                f"unknown measure {raw!r}; use column names {', '.join(ALL_COLUMNS)}, "
                f"groups {', '.join(MEASURE_GROUPS)}, or region-tagged aliases")
        add(resolved)
    if not columns:
        raise ConfigError("measures: empty selection")
    return tuple(columns)


def _resolve_alias(token: str) -> str | None:
    # strip region markers so N_D1_ABC, N_DI_ABC and N_A_D1 all resolve
    for prefix, kind in (("N_", "N"), ("pi_", "pi")):
        if not token.startswith(prefix):
            continue
        body = token[len(prefix):]
        if body.endswith("_rest"):
            body = body[:-len("_rest")]
        if set(body) - set("ABCD1I_"):
            return None
        letters = [ch for ch in body if ch in "ABCD"]
        if kind == "pi" and len(letters) == 1:
            return f"pi_{letters[0]}"
        if kind == "N" and len(letters) == 1:
            return f"N_{letters[0]}_rest"
        if kind == "N" and len(letters) == 2 and letters[0] != letters[1]:
            return "N_" + "".join(sorted(letters))
        if kind == "N" and len(letters) == 4 and sorted(letters) == list(OBSERVERS):
            return f"N_{letters[0]}_rest"
    return None


def _validated(config: SweepConfig) -> SweepConfig:
    if config.state != "W4":
        raise ConfigError(f"state: unknown state {config.state!r}, supported: W4")
    seen = set()
    for axis in config.accelerated:
        if axis.observer not in OBSERVERS:
            raise ConfigError(f"accel: unknown observer {axis.observer!r}, use one of {OBSERVERS}")
        if axis.observer in seen:
            raise ConfigError(f"accel: observer {axis.observer!r} given twice")
        seen.add(axis.observer)
        for value in (axis.lo, axis.hi):
            if not -RANGE_TOL <= value <= R_MAX + RANGE_TOL:
                raise ConfigError(f"accel: r={value!r} for {axis.observer} outside [0, pi/4]")
        if axis.lo > axis.hi:
            raise ConfigError(f"accel: range for {axis.observer} has lo > hi")
    if config.grid is not None and config.grid < 2:
        raise ConfigError(f"grid: need at least 2 points, got {config.grid}")
    swept = [a for a in config.accelerated if not a.fixed]
    if len(swept) > 2:
        raise ConfigError(f"accel: at most 2 swept axes, got {len(swept)}")
    if config.diagonal:
        if len(swept) != 2:
            raise ConfigError("diagonal: needs exactly 2 swept axes")
        if any((a.lo, a.hi) != (swept[0].lo, swept[0].hi) for a in swept):
            raise ConfigError("diagonal: swept axes must share one range")
    # fix the axis order so row order never depends on flag order
    ordered = tuple(sorted(config.accelerated, key=lambda a: a.observer))
    return replace(config, accelerated=ordered,
                   measures=normalize_measures(config.measures))


def _column_value(report: TangleReport, column: str) -> float:
    if column.endswith("_rest"):
        return report.one_three[column[2]]
    if column.startswith("N_"):
        return report.one_one[(column[2], column[3])]
    if column.startswith("pi_"):
        return report.pi_k[column[3]]
    if column == "pi4":
        return report.pi4
    if column == "Pi4":
        return report.big_pi4
    return report.entropy


def run_sweep(config: SweepConfig) -> tuple[list[str], list[list[float]]]:
    """Evaluate the sweep; returns (header, rows) in deterministic order."""
    cfg = _validated(config)
    swept = [a for a in cfg.accelerated if not a.fixed]
    fixed = {a.observer: a.lo for a in cfg.accelerated if a.fixed}
    two_axis = len(swept) == 2 and not cfg.diagonal
    points = cfg.grid or (DEFAULT_GRID_2D if two_axis else DEFAULT_GRID_1D)
    header = [f"r_{a.observer}" for a in swept] + list(cfg.measures)

    def evaluate(r_by_observer: dict[str, float]) -> list[float]:
        scenario = dict(fixed, **r_by_observer)
        rho = observed_density(w_state(4), scenario)
        report = tangle_report(rho, r_values=scenario)
        return ([r_by_observer[a.observer] for a in swept]
                + [_column_value(report, column) for column in cfg.measures])

    rows: list[list[float]] = []
    if not swept:
        rows.append(evaluate({}))
    elif len(swept) == 1:
        for r in np.linspace(swept[0].lo, swept[0].hi, points):
            rows.append(evaluate({swept[0].observer: float(r)}))
    elif cfg.diagonal:
        for r in np.linspace(swept[0].lo, swept[0].hi, points):
            rows.append(evaluate({a.observer: float(r) for a in swept}))
    else:
        first, second = swept
        for r1 in np.linspace(first.lo, first.hi, points):
            for r2 in np.linspace(second.lo, second.hi, points):
                rows.append(evaluate({first.observer: float(r1), second.observer: float(r2)}))
    return header, rows


def write_csv(header: Sequence[str], rows: Sequence[Sequence[float]], stream: IO[str]) -> None:
    """Write rows with 17 significant digits, LF endings, '.' decimals."""
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(f"{value:.17g}" for value in row) + "\n")


def _axis(observer: str, lo: float = 0.0, hi: float = R_MAX) -> AxisSpec:
    return AxisSpec(observer, lo, hi)


PRESETS: dict[str, SweepConfig] = {
    # one accelerated observer, 1-3 tangles of an inertial and the accelerated one
    "fig1a": SweepConfig(accelerated=(_axis("D"),), measures=("N_A_rest", "N_D_rest")),
    # one accelerated observer, constant and decaying pair negativities
    "fig1b": SweepConfig(accelerated=(_axis("D"),), measures=("N_AB", "N_AD")),
    # residual tangles, one accelerated observer
    "fig2": SweepConfig(accelerated=(_axis("D"),), measures=("pi_A", "pi_D")),
    # whole-entanglement means, one accelerated observer
    "fig3": SweepConfig(accelerated=(_axis("D"),), measures=("pi4", "Pi4")),
    # two accelerated observers, 1-3 tangles over the (r_c, r_d) grid
    "fig4a": SweepConfig(accelerated=(_axis("C"), _axis("D")),
                         measures=("N_A_rest", "N_B_rest")),
    "fig4b": SweepConfig(accelerated=(_axis("C"), _axis("D")),
                         measures=("N_C_rest", "N_D_rest")),
    # pair negativities along the diagonal r_c = r_d
    "fig5": SweepConfig(accelerated=(_axis("C"), _axis("D")), diagonal=True,
                        measures=("N_AB", "N_AC", "N_CD")),
    # residual tangles over the grid, inertial pair and accelerated pair
    "fig6a": SweepConfig(accelerated=(_axis("C"), _axis("D")),
                         measures=("pi_A", "pi_B", "N_A_rest", "N_B_rest")),
    "fig6b": SweepConfig(accelerated=(_axis("C"), _axis("D")),
                         measures=("pi_C", "pi_D")),
    # whole-entanglement means over the full grid; both marginals are contained
    "fig7": SweepConfig(accelerated=(_axis("C"), _axis("D")),
                        measures=("pi4", "Pi4")),
    # entropy, one and two accelerated observers
    "fig8": SweepConfig(accelerated=(_axis("D"),), measures=("S",)),
    "fig9": SweepConfig(accelerated=(_axis("C"), _axis("D")), measures=("S",)),
}

"""Parameter sweeps over acceleration grids, written as CSV."""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .fock import PureState, load_state, make_ghz_state, make_w_state
from .measures import TangleReport, equal_params, full_report, scenario_params
from .rindler import R_MAX

COLUMNS = ("r", "r_a", "N_A", "N_B", "N_C", "N_AB", "N_AC", "N_BC",
           "pi_A", "pi_B", "pi_C", "pi_tangle")
DEFAULT_STEPS = 50


@dataclass(frozen=True)
class Grid:
    min: float
    max: float
    steps: int

    def __post_init__(self):
        if not (0.0 <= self.min <= self.max <= R_MAX):
            raise ValueError(f"grid needs 0 <= min <= max <= pi/4, got [{self.min}, {self.max}]")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if self.steps == 1 and self.min != self.max:
            raise ValueError("a single-step grid needs min == max")

    def points(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.min])
        return np.linspace(self.min, self.max, self.steps)

    @classmethod
    def fixed(cls, value: float) -> "Grid":
        return cls(value, value, 1)


@dataclass(frozen=True)
class SweepConfig:
    """``scenario`` is ``"w"``, ``"ghz"`` or ``"custom"`` (with ``custom_path``).

    For W all three parties share ``r``; otherwise Alice runs over
    ``ra_grid`` and Bob and Charlie share ``r``.
    """

    scenario: str
    r_grid: Grid = Grid(0.0, R_MAX, DEFAULT_STEPS)
    ra_grid: Grid | None = None
    output_path: str | None = None
    digits: int = 10
    custom_path: str | None = None

    def __post_init__(self):
        if self.scenario not in ("w", "ghz", "custom"):
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if self.scenario == "custom" and not self.custom_path:
            raise ValueError("custom scenario needs a state file")
        if self.scenario == "w" and self.ra_grid is not None:
            raise ValueError("the W scenario has no separate r_a grid")
        if not 1 <= self.digits <= 17:
            raise ValueError(f"digits must be in 1..17, got {self.digits}")

    @property
    def effective_ra_grid(self) -> Grid | None:
        if self.scenario == "w":
            return None
        return self.ra_grid or Grid.fixed(R_MAX)

    def state(self) -> PureState:
        if self.scenario == "w":
            return make_w_state()
        if self.scenario == "ghz":
            return make_ghz_state()
        return load_state(self.custom_path)


def grid_points(cfg: SweepConfig):
    """``(r, r_a)`` pairs, ``r_a`` outer and ``r`` inner."""
    ra_grid = cfg.effective_ra_grid
    if ra_grid is None:
        return [(float(r), float(r)) for r in cfg.r_grid.points()]
    return [(float(r), float(ra)) for ra in ra_grid.points() for r in cfg.r_grid.points()]


def run_sweep(cfg: SweepConfig, state: PureState | None = None) -> list[tuple[float, float, TangleReport]]:
    state = state if state is not None else cfg.state()
    out = []
    for r, ra in grid_points(cfg):
        params = equal_params(r) if cfg.scenario == "w" else scenario_params(ra, r)
        out.append((r, ra, full_report(state, params)))
    return out


def fmt(value: float, digits: int) -> str:
    if value == 0.0:
        value = 0.0  # drop the sign of -0.0
    return f"{value:.{digits}g}"


def header_comments(cfg: SweepConfig, state: PureState) -> list[str]:
    lines = [f"# state: {cfg.scenario}" + (f" ({cfg.custom_path})" if cfg.custom_path else "")]
    if state.renormalized:
        lines.append("# note: input amplitudes were renormalized")
    g = cfg.r_grid
    lines.append(f"# r grid: min={g.min!r} max={g.max!r} steps={g.steps}")
    ra = cfg.effective_ra_grid
    if ra is None:
        lines.append("# r_a: equal to r (all three parties share one acceleration)")
    elif ra.steps == 1:
        lines.append(f"# r_a fixed at {ra.min!r}")
    else:
        lines.append(f"# r_a grid: min={ra.min!r} max={ra.max!r} steps={ra.steps}")
    lines.append(f"# digits: {cfg.digits}")
    return lines


def render_csv(cfg: SweepConfig, rows, state: PureState) -> str:
    buf = io.StringIO()
    for line in header_comments(cfg, state):
        buf.write(line + "\n")
    buf.write(",".join(COLUMNS) + "\n")
    for r, ra, rep in rows:
        values = {"r": r, "r_a": ra, **rep.as_row()}
        buf.write(",".join(fmt(values[c], cfg.digits) for c in COLUMNS) + "\n")
    return buf.getvalue()


def write_sweep(cfg: SweepConfig) -> tuple[str, list]:
    """Run the sweep and return ``(csv_text, rows)``; writes ``output_path`` if set."""
    state = cfg.state()
    rows = run_sweep(cfg, state)
    text = render_csv(cfg, rows, state)
    if cfg.output_path:
        Path(cfg.output_path).write_text(text, encoding="utf-8", newline="\n")
    return text, rows


def read_csv(text: str) -> list[dict[str, float]]:
    """Parse sweep CSV text, skipping ``#`` comment lines."""
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    header = lines[0].split(",")
    return [dict(zip(header, map(float, line.split(",")))) for line in lines[1:]]


def parse_angle(text: str) -> float:
    """Float, or an expression in ``pi`` such as ``pi/4`` or ``0.5*pi``."""
    t = text.strip().lower().replace(" ", "")
    try:
        return float(t)
    except ValueError:
        pass
    if "pi" not in t:
        raise ValueError(f"not a number: {text!r}")
    num, _, den = t.partition("/")
    num = num.replace("*pi", "").replace("pi*", "").replace("pi", "")
    coeff = float(num) if num else 1.0
    value = coeff * math.pi / (float(den) if den else 1.0)
    return min(value, R_MAX) if abs(value - R_MAX) < 1e-15 else value

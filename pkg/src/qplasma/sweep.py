"""Parameter sweeps over q for the figure-style curves, with CSV/SVG output.

A sweep fixes the model, x, xp and a list of collision frequencies y, and
evaluates the permittivity over a uniform q grid.  Output is deterministic:
points are assembled in grid order no matter how many worker threads ran
(QPLASMA_THREADS caps parallelism, 0 or unset means auto), and the CSV is
written with 17 significant digits, LF line endings and a fixed column
order (q, then one re/im pair per y).

Grid nodes that would land exactly on a y = 0 branch point (or on the
static screening pole at q = 2 for the Mermin model) are nudged by +1e-6
with a warning.  Points whose evaluation still fails are left as empty CSV
cells and summarised on stderr; they are never interpolated.
"""

from __future__ import annotations

import dataclasses
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dielectric import (
    DimensionlessPointA,
    branch_points_q,
    epsilon_collisional_a,
    epsilon_lindhard,
    epsilon_mermin,
)
from .errors import QplasmaError
from .svg import line_plot

__all__ = ["SweepConfig", "SweepResult", "run_sweep", "load_config_file", "parse_q_range"]

MODELS = ("bgk", "mermin", "lindhard")
FORMATS = ("csv", "svg", "both")
_NUDGE = 1e-6
_NODE_POLE_TOL = 1e-9


class ConfigError(ValueError):
    """Bad sweep configuration (maps to CLI exit code 2)."""


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: model, fixed x and xp, y values, uniform q grid, output
    base path and format ("csv", "svg" or "both")."""

    model: str
    x: float
    y: tuple[float, ...]
    q_min: float
    q_max: float
    q_steps: int
    xp: float
    output: str
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ConfigError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.q_steps < 2:
            raise ConfigError(f"q range needs at least 2 steps, got {self.q_steps}")
        if not self.q_max > self.q_min:
            raise ConfigError("q range needs q_min < q_max")
        if not self.y:
            raise ConfigError("at least one y value is required")
        if any(y < 0 for y in self.y):
            raise ConfigError("y values must be >= 0")
        if self.model == "lindhard" and any(y != 0 for y in self.y):
            raise ConfigError("the lindhard model is collisionless; use y=0")
        if self.xp < 0:
            raise ConfigError("xp must be >= 0")


@dataclass(frozen=True)
class SkippedPoint:
    q: float
    y: float
    reason: str


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    q_values: tuple[float, ...]
    eps: tuple[tuple[complex | None, ...], ...]  # [iq][iy]
    skipped: tuple[SkippedPoint, ...]
    nudged: tuple[tuple[float, float], ...]  # (original, shifted)
    csv_path: Path | None = None
    svg_path: Path | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def skipped_fraction(self) -> float:
        total = len(self.q_values) * len(self.config.y)
        return len(self.skipped) / total if total else 0.0

    def csv_text(self) -> str:
        header = ["q"]
        for y in self.config.y:
            label = format(y, "g")
            header += [f"re_eps_y{label}", f"im_eps_y{label}"]
        lines = [",".join(header)]
        for iq, q in enumerate(self.q_values):
            cells = [format(q, ".17g")]
            for iy in range(len(self.config.y)):
                e = self.eps[iq][iy]
                if e is None:
                    cells += ["", ""]
                else:
                    cells += [format(e.real, ".17g"), format(e.imag, ".17g")]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def svg_text(self) -> str:
        series = []
        for iy, y in enumerate(self.config.y):
            pts: list[tuple[float, float] | None] = []
            for iq, q in enumerate(self.q_values):
                e = self.eps[iq][iy]
                pts.append(None if e is None else (q, e.real))
            series.append((f"y={format(y, 'g')}", pts))
        title = f"{self.config.model}: Re eps vs q (x={self.config.x:g}, xp={self.config.xp:g})"
        return line_plot(series, title, "q = k/kF", "Re eps")


def parse_q_range(text: str) -> tuple[float, float, int]:
    """Parse a 'min:max:steps' range string."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"q range must be min:max:steps, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"bad q range {text!r}: {exc}") from None


def load_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat key=value config file ('#' comments, blank lines ok)."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _thread_count() -> int:
    raw = os.environ.get("QPLASMA_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"QPLASMA_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ConfigError(f"QPLASMA_THREADS must be >= 0, got {n}")
    if n == 0:
        n = min(8, os.cpu_count() or 1)
    return n


def _singular_q(cfg: SweepConfig) -> list[float]:
    """q values where evaluation is exactly singular for this config."""
    qs: list[float] = []
    if cfg.model == "lindhard" or 0.0 in cfg.y:
        qs.extend(branch_points_q(cfg.x))
    if cfg.model == "mermin":
        # static screening combination N0(q) hits its branch point at q = 2
        # for every y, and the x = 0 route is static for every y as well
        qs.extend((2.0, -2.0))
        if cfg.x == 0.0:
            qs.extend(branch_points_q(0.0))
    return qs


def _grid(cfg: SweepConfig) -> tuple[list[float], list[tuple[float, float]]]:
    qs = [float(q) for q in np.linspace(cfg.q_min, cfg.q_max, cfg.q_steps)]
    nudged: list[tuple[float, float]] = []
    poles = _singular_q(cfg)
    if poles:
        for i, q in enumerate(qs):
            if min(abs(q - b) for b in poles) < _NODE_POLE_TOL:
                qs[i] = q + _NUDGE
                nudged.append((q, qs[i]))
    return qs, nudged


def _evaluator(cfg: SweepConfig):
    if cfg.model == "bgk":
        return lambda q, y: epsilon_collisional_a(DimensionlessPointA(cfg.x, y, q, cfg.xp)).epsilon
    if cfg.model == "mermin":
        return lambda q, y: epsilon_mermin(DimensionlessPointA(cfg.x, y, q, cfg.xp)).epsilon
    return lambda q, y: epsilon_lindhard(cfg.x, q, cfg.xp).epsilon


def run_sweep(cfg: SweepConfig, write: bool = True) -> SweepResult:
    """Evaluate the sweep and (optionally) write <output>.csv / <output>.svg."""
    qs, nudged = _grid(cfg)
    evaluate = _evaluator(cfg)
    tasks = [(q, y) for q in qs for y in cfg.y]

    def eval_one(task: tuple[float, float]):
        q, y = task
        try:
            return evaluate(q, y)
        except QplasmaError as exc:
            return SkippedPoint(q=q, y=y, reason=f"{type(exc).__name__}: {exc}")

    n_threads = _thread_count()
    if n_threads > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            flat = list(pool.map(eval_one, tasks))
    else:
        flat = [eval_one(t) for t in tasks]

    n_y = len(cfg.y)
    eps_rows: list[tuple[complex | None, ...]] = []
    skipped: list[SkippedPoint] = []
    for iq in range(len(qs)):
        row: list[complex | None] = []
        for iy in range(n_y):
            value = flat[iq * n_y + iy]
            if isinstance(value, SkippedPoint):
                skipped.append(value)
                row.append(None)
            else:
                row.append(value)
        eps_rows.append(tuple(row))

    warns = tuple(
        f"grid node q={orig:.17g} sits on a singular point; nudged to {new:.17g}"
        for orig, new in nudged
    )
    result = SweepResult(
        config=cfg,
        q_values=tuple(qs),
        eps=tuple(eps_rows),
        skipped=tuple(skipped),
        nudged=tuple(nudged),
        warnings=warns,
    )
    if not write:
        return result

    base = Path(cfg.output)
    base.parent.mkdir(parents=True, exist_ok=True)
    csv_path = svg_path = None
    if cfg.fmt in ("csv", "both"):
        csv_path = base.with_suffix(".csv")
        with open(csv_path, "w", newline="") as fh:
            fh.write(result.csv_text())
    if cfg.fmt in ("svg", "both"):
        svg_path = base.with_suffix(".svg")
        with open(svg_path, "w", newline="") as fh:
            fh.write(result.svg_text())
    return dataclasses.replace(result, csv_path=csv_path, svg_path=svg_path)

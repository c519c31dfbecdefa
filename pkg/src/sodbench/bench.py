"""Benchmark harness: wave report, RMSE sweep, timing sweep, profile export.

Produces the quantitative benchmark artifacts: the wave-property table of the
exact solution (with both shock-speed validity checks), the 22-method RMSE
table, the relative-runtime comparison, and the CSV profile data behind the
solution plots.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import riemann, solver
from .errors import InvalidConfig, SodbenchError
from .fluxes import FluxMethod
from .gas import GasModel, PrimitiveState
from .riemann import ExactProfile, RiemannInput, WaveKind
from .solver import Grid1D, RunConfig, SolutionField

__all__ = [
    "RmseReport",
    "TimingReport",
    "WaveReport",
    "ProfileExport",
    "rmse",
    "rmse_report",
    "run_all_methods",
    "timing_sweep",
    "wave_report",
    "export_profile",
]


@dataclass(frozen=True)
class RmseReport:
    """Per-variable RMSE of one method against the exact profile.

    ``error`` is set (and the numbers are NaN) when that run blew up; a sweep
    never aborts because of one method.
    """

    method: FluxMethod
    rmse_density: float
    rmse_velocity: float
    rmse_pressure: float
    error: str | None = None

    @property
    def rmse_total(self) -> float:
        return self.rmse_density + self.rmse_velocity + self.rmse_pressure


@dataclass(frozen=True)
class TimingReport:
    method: FluxMethod
    elapsed: float
    pct_over_fastest: float


@dataclass(frozen=True)
class SideReport:
    """One outer wave of the exact solution."""

    kind: WaveKind
    head: float
    tail: float
    rho_star: float
    a_star: float
    e_star: float
    h_star: float
    mach_unshocked: float | None = None
    mach_shocked: float | None = None
    rankine_hugoniot: float | None = None


@dataclass(frozen=True)
class WaveReport:
    """Structured rendering of the wave-property table for one problem."""

    p_star: float
    u_star: float
    left: SideReport
    right: SideReport

    def lines(self) -> list[str]:
        def side(tag: str, s: SideReport) -> list[str]:
            out = []
            if s.kind is WaveKind.FAN:
                out.append(f"{tag} expansion fan: head {s.head:.5f}, tail {s.tail:.5f}")
            else:
                out.append(f"{tag} shock wave: speed {s.head:.5f}")
                out.append(
                    f"  shock-relative Mach: unshocked {s.mach_unshocked:.5f}, "
                    f"shocked {s.mach_shocked:.5f}"
                )
                out.append(f"  mass-jump cross-check speed: {s.rankine_hugoniot:.5f}")
            out.append(
                f"  star side: rho {s.rho_star:.5f}, a {s.a_star:.5f}, "
                f"e {s.e_star:.5f}, h {s.h_star:.5f}"
            )
            return out

        header = [
            f"contact discontinuity: velocity {self.u_star:.5f}, pressure {self.p_star:.5f}"
        ]
        return side("left", self.left) + header + side("right", self.right)


@dataclass(frozen=True)
class ProfileExport:
    """Columns of one solution profile, one row per cell center."""

    x: np.ndarray
    density: np.ndarray
    velocity: np.ndarray
    pressure: np.ndarray
    internal_energy: np.ndarray


def rmse(numerical: np.ndarray, exact: np.ndarray) -> tuple[float, float, float]:
    """Root mean square deviation per primitive variable over all cells."""
    numerical = np.asarray(numerical, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if numerical.shape != exact.shape:
        raise InvalidConfig(
            f"profile shapes differ: {numerical.shape} vs {exact.shape}"
        )
    err = np.sqrt(np.mean((numerical - exact) ** 2, axis=-1))
    return float(err[0]), float(err[1]), float(err[2])


def _exact_reference(cfg: RunConfig) -> ExactProfile:
    problem = RiemannInput(left=cfg.left, right=cfg.right, gas=cfg.gas)
    return riemann.exact_profile(problem, cfg.grid.centers(), cfg.jump_position, cfg.t_final)


def rmse_report(cfg: RunConfig, reference: ExactProfile | None = None) -> RmseReport:
    """Run one method and compare it with the exact profile on the same grid."""
    if reference is None:
        reference = _exact_reference(cfg)
    try:
        final = solver.run(cfg)
    except SodbenchError as exc:
        return RmseReport(
            method=cfg.method,
            rmse_density=float("nan"),
            rmse_velocity=float("nan"),
            rmse_pressure=float("nan"),
            error=f"{type(exc).__name__}: {exc}",
        )
    r_rho, r_u, r_p = rmse(final.primitives(cfg.gas), reference.w)
    return RmseReport(cfg.method, r_rho, r_u, r_p)


def run_all_methods(base_cfg: RunConfig) -> list[RmseReport]:
    """All 22 methods under identical settings, in report order."""
    reference = _exact_reference(base_cfg)
    return [
        rmse_report(solver.sweep_config(base_cfg, method), reference)
        for method in FluxMethod
    ]


def timing_sweep(base_cfg: RunConfig, repetitions: int = 3) -> list[TimingReport]:
    """Median wall time of the stepping loop per method, sorted ascending.

    Only the time integration is inside the timed region; initialization and
    the exact reference are excluded.  Runs stay sequential on one thread so
    the comparison is not skewed by contention.
    """
    if repetitions < 3:
        raise InvalidConfig(f"need at least 3 repetitions, got {repetitions}")
    timings = []
    for method in FluxMethod:
        cfg = solver.sweep_config(base_cfg, method)
        n_steps = solver.step_count(cfg)
        samples = []
        for _ in range(repetitions):
            field = solver.initialize_sod(cfg)
            q = field.cells
            w = field.primitives(cfg.gas)
            start = time.perf_counter()
            for k in range(n_steps):
                q, w, _ = solver._advance_one(q, w, cfg, k)
            samples.append(time.perf_counter() - start)
        timings.append((method, statistics.median(samples)))
    timings.sort(key=lambda pair: pair[1])
    fastest = timings[0][1]
    return [
        TimingReport(method, elapsed, 100.0 * (elapsed - fastest) / fastest)
        for method, elapsed in timings
    ]


def wave_report(problem: RiemannInput) -> WaveReport:
    """All wave properties of the exact solution of one Riemann problem."""
    star = riemann.solve_star(problem)
    speeds = star.speeds
    gas = problem.gas

    def side(which: str) -> SideReport:
        if which == "left":
            kind, head, tail = star.left_wave, speeds.left_head, speeds.left_tail
            rho_star, a_star = star.rho_star_left, speeds.a_star_left
            outer = problem.left
        else:
            kind, head, tail = star.right_wave, speeds.right_head, speeds.right_tail
            rho_star, a_star = star.rho_star_right, speeds.a_star_right
            outer = problem.right
        e_star = star.p_star / (rho_star * (gas.gamma - 1.0))
        h_star = e_star + star.p_star / rho_star
        machs = riemann.shock_relative_machs(star, problem, which)
        rh = None
        if kind is WaveKind.SHOCK:
            shocked = PrimitiveState(rho=rho_star, u=star.u_star, p=star.p_star)
            rh = riemann.rankine_hugoniot_speed(shocked, outer)
        return SideReport(
            kind=kind,
            head=head,
            tail=tail,
            rho_star=rho_star,
            a_star=a_star,
            e_star=e_star,
            h_star=h_star,
            mach_unshocked=machs[0] if machs else None,
            mach_shocked=machs[1] if machs else None,
            rankine_hugoniot=rh,
        )

    return WaveReport(
        p_star=star.p_star, u_star=star.u_star, left=side("left"), right=side("right")
    )


def export_profile(
    source: ExactProfile | SolutionField,
    gas: GasModel,
    grid: Grid1D | None = None,
) -> ProfileExport:
    """Flatten a profile to export columns; e = p / (rho (gamma - 1))."""
    if isinstance(source, ExactProfile):
        x, w = source.x, source.w
    else:
        if grid is None:
            raise InvalidConfig("exporting a solver field needs its grid for positions")
        x, w = grid.centers(), source.primitives(gas)
    e = w[2] / (w[0] * (gas.gamma - 1.0))
    return ProfileExport(
        x=x, density=w[0], velocity=w[1], pressure=w[2], internal_energy=e
    )

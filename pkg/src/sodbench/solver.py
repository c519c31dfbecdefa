"""Godunov explicit time integration on a uniform 1D grid.

Conserved variables are advanced with the conservative update
q_i^{n+1} = q_i^n - (dt/dx)(F_{i+1/2} - F_{i-1/2}); face fluxes come from
MUSCL-reconstructed primitive values fed to the configured flux method.  The
time step is fixed (derived once from the target Courant number); the solver
only monitors the Courant number actually reached.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidConfig, NonPhysicalState
from .fluxes import FluxMethod, SchemeConfig, compute_face_flux
from .gas import GasModel, PrimitiveState, conserved_array, primitive_array
from .muscl import reconstruct_faces

__all__ = [
    "SOD_LEFT",
    "SOD_RIGHT",
    "Grid1D",
    "RunConfig",
    "SolutionField",
    "derive_dt",
    "initialize_sod",
    "step",
    "step_count",
    "run",
    "sweep_config",
]

SOD_LEFT = PrimitiveState(rho=1.0, u=0.0, p=1.0)
SOD_RIGHT = PrimitiveState(rho=0.125, u=0.0, p=0.1)


@dataclass(frozen=True)
class Grid1D:
    """Uniform cell-centered grid; centers sit at x_min + (i - 1/2) dx."""

    x_min: float = 0.0
    x_max: float = 1.0
    n_cells: int = 200

    def __post_init__(self):
        if not self.x_max > self.x_min:
            raise InvalidConfig(f"x_max must exceed x_min, got [{self.x_min}, {self.x_max}]")
        if self.n_cells < 4:
            raise InvalidConfig(f"need at least 4 cells for the MUSCL stencil, got {self.n_cells}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx


@dataclass(frozen=True)
class RunConfig:
    """One shock-tube run: grid, gas, flux method, and time marching."""

    method: FluxMethod = FluxMethod.RIEMANN
    grid: Grid1D = field(default_factory=Grid1D)
    gas: GasModel = field(default_factory=GasModel)
    scheme: SchemeConfig = field(default_factory=SchemeConfig)
    dt: float = 0.001
    t_final: float = 0.2
    co_max_target: float = 0.4
    s_max_estimate: float = 2.0
    jump_position: float = 0.5
    left: PrimitiveState = SOD_LEFT
    right: PrimitiveState = SOD_RIGHT

    def __post_init__(self):
        if self.dt <= 0.0:
            raise InvalidConfig(f"dt must be positive, got {self.dt}")
        if self.t_final < 0.0:
            raise InvalidConfig(f"t_final must be non-negative, got {self.t_final}")


@dataclass(frozen=True)
class SolutionField:
    """Conserved cell data at one time, plus the Courant maximum seen so far."""

    time: float
    cells: np.ndarray  # (3, n_cells) rows of mass, momentum, energy
    max_courant_observed: float = 0.0

    def primitives(self, gas: GasModel) -> np.ndarray:
        return primitive_array(self.cells, gas.gamma)


def derive_dt(co_max_target: float, dx: float, s_max_estimate: float) -> float:
    """dt = Co_max dx / S_max."""
    if not 0.0 < co_max_target < 1.0:
        raise InvalidConfig(f"target Courant number must lie in (0, 1), got {co_max_target}")
    if s_max_estimate <= 0.0:
        raise InvalidConfig(f"wave speed estimate must be positive, got {s_max_estimate}")
    if dx <= 0.0:
        raise InvalidConfig(f"cell width must be positive, got {dx}")
    return co_max_target * dx / s_max_estimate


def initialize_sod(cfg: RunConfig) -> SolutionField:
    """Step data: left state where the cell center is left of the jump."""
    centers = cfg.grid.centers()
    on_left = centers < cfg.jump_position
    w = np.where(on_left, cfg.left.array[:, None], cfg.right.array[:, None])
    return SolutionField(time=0.0, cells=conserved_array(w, cfg.gas.gamma), max_courant_observed=0.0)


def _check_positive(w: np.ndarray, step_index: int | None) -> None:
    bad = (w[0] <= 0.0) | (w[2] <= 0.0)
    if np.any(bad):
        cell = int(np.argmax(bad))
        raise NonPhysicalState(
            f"solver produced non-positive density/pressure in cell {cell}"
            + (f" at step {step_index}" if step_index is not None else ""),
            cell=cell,
            step=step_index,
        )


def _advance_one(q: np.ndarray, w: np.ndarray, cfg: RunConfig, step_index: int | None):
    """One conservative update. Returns (q_new, w_new, courant_of_new_state)."""
    gamma = cfg.gas.gamma
    dx = cfg.grid.dx
    wl, wr = reconstruct_faces(w)
    flux = compute_face_flux(cfg.method, wl, wr, cfg.gas, cfg.scheme, dx=dx, dt=cfg.dt)
    q_new = q - (cfg.dt / dx) * (flux[:, 1:] - flux[:, :-1])
    w_new = primitive_array(q_new, gamma)
    _check_positive(w_new, step_index)
    signal = np.abs(w_new[1]) + np.sqrt(gamma * w_new[2] / w_new[0])
    courant = float(signal.max()) * cfg.dt / dx
    return q_new, w_new, courant


def step(field: SolutionField, cfg: RunConfig, step_index: int | None = None) -> SolutionField:
    """Advance the field by one time step."""
    w = primitive_array(field.cells, cfg.gas.gamma)
    _check_positive(w, step_index)
    q_new, _, courant = _advance_one(field.cells, w, cfg, step_index)
    return SolutionField(
        time=field.time + cfg.dt,
        cells=q_new,
        max_courant_observed=max(field.max_courant_observed, courant),
    )


def step_count(cfg: RunConfig) -> int:
    """Number of steps to reach t_final exactly; t_final must be a multiple of dt."""
    n = cfg.t_final / cfg.dt
    n_round = round(n)
    if abs(n - n_round) > 1e-9:
        raise InvalidConfig(
            f"t_final={cfg.t_final} is not an integer multiple of dt={cfg.dt}"
        )
    return int(n_round)


def run(cfg: RunConfig) -> SolutionField:
    """Initialize and march to t_final (which must be a multiple of dt)."""
    n_steps = step_count(cfg)
    field = initialize_sod(cfg)
    q = field.cells
    w = field.primitives(cfg.gas)
    max_courant = field.max_courant_observed
    time = field.time
    for k in range(n_steps):
        q, w, courant = _advance_one(q, w, cfg, k)
        max_courant = max(max_courant, courant)
        time += cfg.dt
    return SolutionField(time=time, cells=q, max_courant_observed=max_courant)


def sweep_config(cfg: RunConfig, method: FluxMethod) -> RunConfig:
    """Same run with only the flux method swapped."""
    return dataclasses.replace(cfg, method=method)

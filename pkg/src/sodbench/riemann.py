"""Exact Riemann solver for the 1D Euler equations with a perfect gas.

Star-region solution by Newton iteration on the two-branch pressure function,
self-similar sampling (including transonic fans), full-domain profiles, and
the mass-jump shock-speed cross check.  The ``*_arrays`` kernels solve many
independent face problems at once; the dataclass API solves one problem and
is what the wave report and the tests consume.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateJump, NoConvergence, VacuumGenerated
from .gas import GasModel, PrimitiveState, sound_speed

__all__ = [
    "WaveKind",
    "RiemannInput",
    "WaveSpeeds",
    "StarRegion",
    "ExactProfile",
    "pressure_function",
    "solve_star",
    "wave_speeds",
    "shock_relative_machs",
    "rankine_hugoniot_speed",
    "sample",
    "exact_profile",
    "interface_states",
]

PRESSURE_FLOOR = 1e-14
NEWTON_RTOL = 1e-12
NEWTON_MAX_ITER = 100


class WaveKind(enum.Enum):
    SHOCK = "shock"
    FAN = "fan"


@dataclass(frozen=True)
class RiemannInput:
    left: PrimitiveState
    right: PrimitiveState
    gas: GasModel = GasModel()


@dataclass(frozen=True)
class WaveSpeeds:
    """Signal speeds ordered left to right.

    For a fan the head/tail pair brackets the smooth wave; for a shock both
    collapse onto the single shock speed (a zero-width fan).
    """

    left_head: float
    left_tail: float
    contact: float
    right_tail: float
    right_head: float
    a_star_left: float
    a_star_right: float


@dataclass(frozen=True)
class StarRegion:
    p_star: float
    u_star: float
    rho_star_left: float
    rho_star_right: float
    left_wave: WaveKind
    right_wave: WaveKind
    speeds: WaveSpeeds


@dataclass(frozen=True)
class ExactProfile:
    """Self-similar solution sampled at cell centers at one time."""

    x: np.ndarray
    w: np.ndarray  # (3, n) primitive rows
    time: float

    @property
    def density(self) -> np.ndarray:
        return self.w[0]

    @property
    def velocity(self) -> np.ndarray:
        return self.w[1]

    @property
    def pressure(self) -> np.ndarray:
        return self.w[2]


def pressure_function(p, side, gas: GasModel = GasModel()):
    """Velocity-jump function f(p) of one side and its derivative df/dp.

    Rarefaction branch for p <= p_side, shock branch above.  ``p`` and
    ``side`` may be scalars/states or arrays (side as (3, ...) rows).
    """
    if isinstance(side, PrimitiveState):
        side = side.array
    rho_k, p_k = np.asarray(side[0]), np.asarray(side[2])
    p = np.asarray(p, dtype=float)
    g = gas.gamma
    a_k = np.sqrt(g * p_k / rho_k)

    # Shock branch (Hugoniot): f = (p - p_k) sqrt(A / (p + B))
    big_a = 2.0 / ((g + 1.0) * rho_k)
    big_b = (g - 1.0) / (g + 1.0) * p_k
    root = np.sqrt(big_a / (p + big_b))
    f_shock = (p - p_k) * root
    df_shock = root * (1.0 - 0.5 * (p - p_k) / (p + big_b))

    # Rarefaction branch (isentrope)
    z = (g - 1.0) / (2.0 * g)
    ratio = p / p_k
    f_fan = 2.0 * a_k / (g - 1.0) * (ratio**z - 1.0)
    df_fan = ratio ** (-(g + 1.0) / (2.0 * g)) / (rho_k * a_k)

    shock = p > p_k
    f = np.where(shock, f_shock, f_fan)
    df = np.where(shock, df_shock, df_fan)
    if f.ndim == 0:
        return float(f), float(df)
    return f, df


def _check_vacuum(wl: np.ndarray, wr: np.ndarray, gamma: float) -> None:
    a_l = np.sqrt(gamma * wl[2] / wl[0])
    a_r = np.sqrt(gamma * wr[2] / wr[0])
    if np.any(2.0 * (a_l + a_r) / (gamma - 1.0) <= wr[1] - wl[1]):
        raise VacuumGenerated(
            "pressure positivity condition violated: states would generate vacuum"
        )


def _two_rarefaction_guess(wl: np.ndarray, wr: np.ndarray, gamma: float) -> np.ndarray:
    a_l = np.sqrt(gamma * wl[2] / wl[0])
    a_r = np.sqrt(gamma * wr[2] / wr[0])
    z = (gamma - 1.0) / (2.0 * gamma)
    num = a_l + a_r - 0.5 * (gamma - 1.0) * (wr[1] - wl[1])
    den = a_l / wl[2] ** z + a_r / wr[2] ** z
    return (num / den) ** (1.0 / z)


def star_pressure_arrays(wl: np.ndarray, wr: np.ndarray, gamma: float) -> np.ndarray:
    """Newton iteration for the star pressure of many face problems at once."""
    wl = np.atleast_2d(np.asarray(wl, dtype=float).T).T  # keep (3,) usable as (3,1)
    wr = np.atleast_2d(np.asarray(wr, dtype=float).T).T
    _check_vacuum(wl, wr, gamma)
    gas = GasModel(gamma)
    du = wr[1] - wl[1]

    p = np.maximum(_two_rarefaction_guess(wl, wr, gamma), PRESSURE_FLOOR)
    converged = np.zeros(p.shape, dtype=bool)
    for _ in range(NEWTON_MAX_ITER):
        f_l, df_l = pressure_function(p, wl, gas)
        f_r, df_r = pressure_function(p, wr, gas)
        dp = (f_l + f_r + du) / (df_l + df_r)
        p_new = np.maximum(p - dp, PRESSURE_FLOOR)
        converged |= np.abs(dp) <= NEWTON_RTOL * p_new
        p = p_new
        if converged.all():
            break
    if not converged.all():
        raise NoConvergence(
            f"star pressure iteration did not converge within {NEWTON_MAX_ITER} steps"
        )
    return p


def star_state_arrays(wl: np.ndarray, wr: np.ndarray, gamma: float):
    """Star pressure, contact velocity, and the two star densities (arrays)."""
    wl = np.asarray(wl, dtype=float)
    wr = np.asarray(wr, dtype=float)
    gas = GasModel(gamma)
    p_star = star_pressure_arrays(wl, wr, gamma).reshape(np.shape(wl[0]))
    f_l, _ = pressure_function(p_star, wl, gas)
    f_r, _ = pressure_function(p_star, wr, gas)
    u_star = 0.5 * (wl[1] + wr[1]) + 0.5 * (np.asarray(f_r) - np.asarray(f_l))

    mu = (gamma - 1.0) / (gamma + 1.0)

    def star_density(side):
        ratio = p_star / side[2]
        shocked = side[0] * (ratio + mu) / (mu * ratio + 1.0)
        isentropic = side[0] * ratio ** (1.0 / gamma)
        return np.where(p_star > side[2], shocked, isentropic)

    return p_star, u_star, star_density(wl), star_density(wr)


def solve_star(problem: RiemannInput) -> StarRegion:
    """Solve one Riemann problem for its star region and wave pattern.

    A side is a shock when p* exceeds its pressure beyond iteration rounding;
    zero-strength waves (identical inputs) therefore classify as fans of zero
    width even when the iterate lands an ulp above the input pressure.
    """
    wl, wr = problem.left.array, problem.right.array
    gamma = problem.gas.gamma
    p_star, u_star, rho_l, rho_r = star_state_arrays(wl, wr, gamma)
    p_star, u_star = float(p_star), float(u_star)

    def classify(p_side: float) -> WaveKind:
        return WaveKind.SHOCK if p_star > p_side * (1.0 + 10.0 * NEWTON_RTOL) else WaveKind.FAN

    star = StarRegion(
        p_star=p_star,
        u_star=u_star,
        rho_star_left=float(rho_l),
        rho_star_right=float(rho_r),
        left_wave=classify(problem.left.p),
        right_wave=classify(problem.right.p),
        speeds=None,  # type: ignore[arg-type]  # filled just below
    )
    return dataclasses.replace(star, speeds=wave_speeds(star, problem))


def _shock_speed(u_k: float, a_k: float, p_ratio: float, gamma: float, sign: float) -> float:
    # Mass-conservation shock speed: u_k -/+ a_k sqrt(1 + (g+1)/(2g)(p*/p_k - 1))
    return u_k + sign * a_k * math.sqrt(1.0 + (gamma + 1.0) / (2.0 * gamma) * (p_ratio - 1.0))


def wave_speeds(star: StarRegion, problem: RiemannInput) -> WaveSpeeds:
    """Head/tail (fan) or collapsed shock speeds for both waves, plus the
    star-region sound speeds flanking the contact."""
    g = problem.gas.gamma
    left, right = problem.left, problem.right
    a_l, a_r = sound_speed(left, problem.gas), sound_speed(right, problem.gas)
    a_star_l = math.sqrt(g * star.p_star / star.rho_star_left)
    a_star_r = math.sqrt(g * star.p_star / star.rho_star_right)

    if star.left_wave is WaveKind.SHOCK:
        s = _shock_speed(left.u, a_l, star.p_star / left.p, g, -1.0)
        left_head = left_tail = s
    else:
        left_head = left.u - a_l
        left_tail = star.u_star - a_star_l

    if star.right_wave is WaveKind.SHOCK:
        s = _shock_speed(right.u, a_r, star.p_star / right.p, g, +1.0)
        right_head = right_tail = s
    else:
        right_head = right.u + a_r
        right_tail = star.u_star + a_star_r

    return WaveSpeeds(
        left_head=left_head,
        left_tail=left_tail,
        contact=star.u_star,
        right_tail=right_tail,
        right_head=right_head,
        a_star_left=a_star_l,
        a_star_right=a_star_r,
    )


def shock_relative_machs(star: StarRegion, problem: RiemannInput, side: str):
    """(unshocked, shocked) Mach numbers relative to the shock on one side,
    or None when that side is a fan."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if side == "left":
        if star.left_wave is not WaveKind.SHOCK:
            return None
        outer = problem.left
        shock = star.speeds.left_head
        a_star = star.speeds.a_star_left
    else:
        if star.right_wave is not WaveKind.SHOCK:
            return None
        outer = problem.right
        shock = star.speeds.right_head
        a_star = star.speeds.a_star_right
    ahead = abs(shock - outer.u) / sound_speed(outer, problem.gas)
    behind = abs(shock - star.u_star) / a_star
    return ahead, behind


def rankine_hugoniot_speed(shocked: PrimitiveState, unshocked: PrimitiveState) -> float:
    """Shock speed from the mass jump condition, S = d(rho u) / d(rho)."""
    d_rho = shocked.rho - unshocked.rho
    if abs(d_rho) < 1e-14:
        raise DegenerateJump("density jump below 1e-14; no shock present")
    return (shocked.rho * shocked.u - unshocked.rho * unshocked.u) / d_rho


def _sample_arrays(wl, wr, p_star, u_star, rho_star_l, rho_star_r, xi, gamma):
    """Self-similar state at speed(s) xi.  All arguments broadcast together."""
    g = gamma
    rho_l, u_l, p_l = wl[0], wl[1], wl[2]
    rho_r, u_r, p_r = wr[0], wr[1], wr[2]
    a_l = np.sqrt(g * p_l / rho_l)
    a_r = np.sqrt(g * p_r / rho_r)
    mu2 = (g - 1.0) / (g + 1.0)

    # Left of the contact -----------------------------------------------
    left_shock = p_star > p_l
    s_left = u_l - a_l * np.sqrt((g + 1.0) / (2.0 * g) * p_star / p_l + (g - 1.0) / (2.0 * g))
    a_star_l = a_l * (p_star / p_l) ** ((g - 1.0) / (2.0 * g))
    head_l = u_l - a_l
    tail_l = u_star - a_star_l

    fan_fac_l = 2.0 / (g + 1.0) + mu2 / a_l * (u_l - xi)
    fan_fac_l = np.maximum(fan_fac_l, 1e-300)  # only consumed where the fan mask holds
    rho_fan_l = rho_l * fan_fac_l ** (2.0 / (g - 1.0))
    u_fan_l = 2.0 / (g + 1.0) * (a_l + 0.5 * (g - 1.0) * u_l + xi)
    p_fan_l = p_l * fan_fac_l ** (2.0 * g / (g - 1.0))

    # Shock side: outer state ahead of the shock, star state behind.
    rho_ls = np.where(xi <= s_left, rho_l, rho_star_l)
    u_ls = np.where(xi <= s_left, u_l, u_star)
    p_ls = np.where(xi <= s_left, p_l, p_star)
    # Fan side: outer / inside fan / star.
    rho_lf = np.where(xi <= head_l, rho_l, np.where(xi >= tail_l, rho_star_l, rho_fan_l))
    u_lf = np.where(xi <= head_l, u_l, np.where(xi >= tail_l, u_star, u_fan_l))
    p_lf = np.where(xi <= head_l, p_l, np.where(xi >= tail_l, p_star, p_fan_l))

    rho_left = np.where(left_shock, rho_ls, rho_lf)
    u_left = np.where(left_shock, u_ls, u_lf)
    p_left = np.where(left_shock, p_ls, p_lf)

    # Right of the contact ------------------------------------------------
    right_shock = p_star > p_r
    s_right = u_r + a_r * np.sqrt((g + 1.0) / (2.0 * g) * p_star / p_r + (g - 1.0) / (2.0 * g))
    a_star_r = a_r * (p_star / p_r) ** ((g - 1.0) / (2.0 * g))
    head_r = u_r + a_r
    tail_r = u_star + a_star_r

    fan_fac_r = 2.0 / (g + 1.0) - mu2 / a_r * (u_r - xi)
    fan_fac_r = np.maximum(fan_fac_r, 1e-300)
    rho_fan_r = rho_r * fan_fac_r ** (2.0 / (g - 1.0))
    u_fan_r = 2.0 / (g + 1.0) * (-a_r + 0.5 * (g - 1.0) * u_r + xi)
    p_fan_r = p_r * fan_fac_r ** (2.0 * g / (g - 1.0))

    rho_rs = np.where(xi >= s_right, rho_r, rho_star_r)
    u_rs = np.where(xi >= s_right, u_r, u_star)
    p_rs = np.where(xi >= s_right, p_r, p_star)
    rho_rf = np.where(xi >= head_r, rho_r, np.where(xi <= tail_r, rho_star_r, rho_fan_r))
    u_rf = np.where(xi >= head_r, u_r, np.where(xi <= tail_r, u_star, u_fan_r))
    p_rf = np.where(xi >= head_r, p_r, np.where(xi <= tail_r, p_star, p_fan_r))

    rho_right = np.where(right_shock, rho_rs, rho_rf)
    u_right = np.where(right_shock, u_rs, u_rf)
    p_right = np.where(right_shock, p_rs, p_rf)

    on_left = xi <= u_star
    return np.stack(
        [
            np.where(on_left, rho_left, rho_right),
            np.where(on_left, u_left, u_right),
            np.where(on_left, p_left, p_right),
        ]
    )


def sample(star: StarRegion, problem: RiemannInput, xi: float) -> PrimitiveState:
    """State at similarity speed xi = x/t, covering all five regions."""
    w = _sample_arrays(
        problem.left.array,
        problem.right.array,
        star.p_star,
        star.u_star,
        star.rho_star_left,
        star.rho_star_right,
        float(xi),
        problem.gas.gamma,
    )
    return PrimitiveState(rho=float(w[0]), u=float(w[1]), p=float(w[2]))


def interface_states(wl: np.ndarray, wr: np.ndarray, gamma: float) -> np.ndarray:
    """States sampled on the face ray xi = 0 for many face problems at once.

    This is the kernel behind the exact (Godunov) flux method.
    """
    p_star, u_star, rho_l, rho_r = star_state_arrays(wl, wr, gamma)
    return _sample_arrays(wl, wr, p_star, u_star, rho_l, rho_r, 0.0, gamma)


def exact_profile(problem: RiemannInput, x: np.ndarray, jump_position: float, t: float) -> ExactProfile:
    """Exact solution at positions ``x`` and time ``t`` (step data at t = 0)."""
    x = np.asarray(x, dtype=float)
    if np.any(np.diff(x) <= 0.0):
        raise ValueError("positions must be strictly increasing")
    if t < 0.0:
        raise ValueError(f"time must be non-negative, got {t}")
    if t == 0.0:
        on_left = x < jump_position
        w = np.where(on_left, problem.left.array[:, None], problem.right.array[:, None])
        return ExactProfile(x=x, w=w, time=0.0)
    star = solve_star(problem)
    xi = (x - jump_position) / t
    w = _sample_arrays(
        problem.left.array[:, None],
        problem.right.array[:, None],
        star.p_star,
        star.u_star,
        star.rho_star_left,
        star.rho_star_right,
        xi[None, :],
        problem.gas.gamma,
    )
    return ExactProfile(x=x, w=w.reshape(3, x.size), time=t)

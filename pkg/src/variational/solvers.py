"""
============================================================================
Half-Pass: Spectral-Galerkin Multiplicity Toolkit
============================================================================

MISSION - NEVER TO BE VIOLATED:
    Compute → Evaluate the half-Laplacian and its harmonic extension exactly
    Certify → Check every explicit constant before trusting a parameter window
    Locate  → Find both minima and the mountain-pass point numerically
    Report  → Write reproducible, bit-identical reports and grids

============================================================================
Critical-Point Solvers
----------------------------------------------------------------------------
FILE VERSION: v1.0-3-3.1-1
LAST MODIFIED: 2026-10-19
PHASE: Phase 3 - Critical Points
CLEAN ARCHITECTURE: Compliant
============================================================================

RESPONSIBILITIES:
- minimize_in_ball: projected Armijo descent on {Phi < gamma²}
- global_minimize:  multistart Armijo descent (cone competitor, random
                    fields at radii {1/2, 1, 2, 4} sqrt(2) gamma, zero)
- mountain_pass:    climbing-node path method between two minima
- solve_three:      the three stages plus classification into a SolveReport

All iterations run in X-coordinates, where the energy inner product is
Euclidean. Every stage finishes with a Newton polish on the Galerkin
Hessian once the residual falls below a switch tolerance.

USAGE:
    solver = create_critical_point_solver(instance, settings, logging_manager)
    report = solver.solve_three(bundle)
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.errors import (
    BoundaryMinimumError,
    MountainPassCollapseError,
    NoConvergenceError,
    PreconditionError,
    TheoremViolationError,
)
from src.spectral.function_space import SpectralField, h_half_norm, x_distance
from src.variational.competitors import ConeFunction, project_onto_basis
from src.variational.constants import ConstantsBundle
from src.variational.energy import ProblemInstance

# Module version
__version__ = "v1.0-3-3.1-1"

# Initialize logger
logger = logging.getLogger(__name__)

# Random-start radii in units of sqrt(2) gamma
START_RADII = (0.5, 1.0, 2.0, 4.0)

# Ball projection radius factor
BALL_SHRINK = 1.0 - 1e-9

# Newton
NEWTON_MAX_STEPS = 30
PSD_TOLERANCE = 1e-10
MORSE_TOLERANCE = 1e-8

# Mountain pass
MP_ENERGY_SLACK = 1e-9
MP_NEWTON_SWITCH = 1e-3


# =============================================================================
# Settings and results
# =============================================================================


@dataclass
class SolverSettings:
    """Tolerances and budgets for all stages."""

    tol_res: float = 1e-8
    max_iterations: int = 100_000
    armijo_step: float = 1.0
    armijo_backtrack: float = 0.5
    armijo_c: float = 1e-4
    newton_switch: float = 1e-5
    path_nodes: int = 40
    mp_max_iterations: int = 20_000
    restarts: int = 4
    seed: int = 0
    threads: int = 1

    @classmethod
    def from_config(cls, config_manager: Optional[Any] = None, **overrides: Any) -> "SolverSettings":
        """Defaults <- ConfigManager 'solver'/'runtime' sections <- explicit overrides."""
        values: Dict[str, Any] = {}
        if config_manager is not None:
            section = config_manager.get_section("solver")
            for key in cls.__dataclass_fields__:
                if key in section:
                    values[key] = section[key]
            threads = config_manager.get("runtime", "threads")
            if threads is not None:
                values["threads"] = threads
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)


@dataclass
class CriticalPoint:
    """One Galerkin critical point with its diagnostics."""

    label: str
    field: SpectralField
    energy: float
    phi: float
    residual: float
    norm: float
    trace_min: float
    trace_max: float
    morse_index: int
    iterations: int
    trivial: bool = False
    nonnegative: Optional[bool] = None
    inside_ball: Optional[bool] = None
    start: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "energy": self.energy,
            "phi": self.phi,
            "residual": self.residual,
            "norm": self.norm,
            "trace_min": self.trace_min,
            "trace_max": self.trace_max,
            "morse_index": self.morse_index,
            "iterations": self.iterations,
            "trivial": self.trivial,
            "nonnegative": self.nonnegative,
            "inside_ball": self.inside_ball,
            "start": self.start,
        }


@dataclass
class SolveReport:
    """Up to three critical points plus pairwise distances and verdicts."""

    points: List[CriticalPoint]
    distances: Dict[str, float]
    bundle: Optional[ConstantsBundle]
    gamma: float
    lam: float
    tol_zero: float
    delta_dist: float
    guarantee_path: bool
    distinct_count: int
    nontrivial_distinct_count: int
    messages: List[str] = field(default_factory=list)
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @property
    def multiplicity_exhibited(self) -> bool:
        return self.distinct_count >= 2

    def point(self, label: str) -> Optional[CriticalPoint]:
        return next((p for p in self.points if p.label == label), None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam,
            "gamma": self.gamma,
            "tol_zero": self.tol_zero,
            "delta_dist": self.delta_dist,
            "guarantee_path": self.guarantee_path,
            "distinct_count": self.distinct_count,
            "nontrivial_distinct_count": self.nontrivial_distinct_count,
            "multiplicity_exhibited": self.multiplicity_exhibited,
            "points": [p.to_dict() for p in self.points],
            "distances": dict(self.distances),
            "messages": list(self.messages),
            "diagnostics": dict(self.diagnostics),
        }


@dataclass
class _Descent:
    c: np.ndarray
    energy: float
    residual: float
    iterations: int
    start: str = ""


# =============================================================================
# Solver
# =============================================================================


class CriticalPointSolver:
    """
    Finds the local minimum in the gamma-ball, the global minimum and a
    mountain-pass point of J_lambda on the Galerkin subspace.
    """

    def __init__(
        self,
        instance: ProblemInstance,
        settings: Optional[SolverSettings] = None,
        logging_manager: Optional[Any] = None,
    ):
        self.instance = instance
        self.settings = settings or SolverSettings()
        self._logger = logging_manager.get_logger("solvers") if logging_manager else logger

    def _success(self, message: str) -> None:
        # plain loggers have no success() until the logging manager patches them
        getattr(self._logger, "success", self._logger.info)(message)

    # ------------------------------------------------------------ descent core

    def _newton_minimum(self, c: np.ndarray) -> Optional[_Descent]:
        """Newton iterations accepted only while J does not increase and H is PSD."""
        inst = self.instance
        energy, grad = inst.energy_and_gradient_x(c)
        for step in range(1, NEWTON_MAX_STEPS + 1):
            hessian = inst.hessian_x(c)
            if np.min(np.linalg.eigvalsh(hessian)) < -PSD_TOLERANCE:
                return None
            try:
                delta = np.linalg.solve(hessian, -grad)
            except np.linalg.LinAlgError:
                return None
            trial = c + delta
            trial_energy, trial_grad = inst.energy_and_gradient_x(trial)
            if trial_energy > energy + 1e-14 * max(1.0, abs(energy)):
                return None
            c, energy, grad = trial, trial_energy, trial_grad
            residual = float(np.linalg.norm(grad))
            if residual < self.settings.tol_res:
                return _Descent(c, energy, residual, step)
        return None

    @staticmethod
    def _project(c: np.ndarray, radius: Optional[float]) -> np.ndarray:
        if radius is None:
            return c
        norm = float(np.linalg.norm(c))
        return c if norm <= radius else c * (radius / norm)

    def _descend(
        self,
        c0: np.ndarray,
        radius: Optional[float] = None,
        start: str = "",
    ) -> _Descent:
        """
        Armijo steepest descent, projected onto the ball |c| <= radius when
        a radius is given.

        Stops at residual < tol_res, or on the sphere at a projected
        stationary point or a line-search stall (the caller decides what a
        boundary stop means).

        Raises:
            NoConvergenceError: max_iterations reached, or an interior stall
        """
        s = self.settings
        inst = self.instance
        c = self._project(np.array(c0, dtype=float), radius)
        energy, grad = inst.energy_and_gradient_x(c)
        step = s.armijo_step
        newton_gate = s.newton_switch

        def interior(x: np.ndarray) -> bool:
            return radius is None or float(np.linalg.norm(x)) < radius * (1.0 - 1e-6)

        for iteration in range(1, s.max_iterations + 1):
            residual = float(np.linalg.norm(grad))
            if residual < s.tol_res:
                return _Descent(c, energy, residual, iteration, start)

            if not interior(c):
                projected = float(np.linalg.norm(c - self._project(c - grad, radius)))
                if projected < s.tol_res:
                    return _Descent(c, energy, residual, iteration, start)
            elif residual < newton_gate:
                polished = self._newton_minimum(c)
                if polished is not None and interior(polished.c):
                    polished.iterations += iteration
                    polished.start = start
                    return polished
                newton_gate = 0.1 * residual

            t = min(s.armijo_step, 2.0 * step)
            while True:
                trial = self._project(c - t * grad, radius)
                trial_energy, trial_grad = inst.energy_and_gradient_x(trial)
                decrease = float(np.dot(grad, c - trial))
                if trial_energy <= energy - s.armijo_c * decrease:
                    break
                t *= s.armijo_backtrack
                if t < 1e-16:
                    break

            if t < 1e-16:
                # round-off floor: only a sphere stop is handed back to the caller
                if not interior(c):
                    return _Descent(c, energy, residual, iteration, start)
                raise NoConvergenceError(
                    f"Descent stalled at residual {residual:.3e} above {s.tol_res:g}",
                    {"residual": residual, "tol_res": s.tol_res, "start": start,
                     "iterations": iteration},
                )

            c, energy, grad, step = trial, trial_energy, trial_grad, t

        raise NoConvergenceError(
            f"Descent did not reach residual {s.tol_res:g} in {s.max_iterations} iterations",
            {"residual": float(np.linalg.norm(grad)), "start": start},
        )


    def _critical_point(self, label: str, result: _Descent) -> CriticalPoint:
        inst = self.instance
        u = inst.field(result.c)
        low, high = inst.trace_extrema(u)
        eigenvalues = np.linalg.eigvalsh(inst.hessian_x(result.c))
        return CriticalPoint(
            label=label,
            field=u,
            energy=result.energy,
            phi=inst.phi_x(result.c),
            residual=result.residual,
            norm=float(np.linalg.norm(result.c)),
            trace_min=low,
            trace_max=high,
            morse_index=int(np.count_nonzero(eigenvalues < -MORSE_TOLERANCE)),
            iterations=result.iterations,
            start=result.start,
        )

    # ---------------------------------------------------------- stage 1: ball

    def minimize_in_ball(
        self,
        gamma: float,
        init: Optional[SpectralField] = None,
        mu2: Optional[float] = None,
    ) -> CriticalPoint:
        """
        Interior critical point with Phi < gamma².

        Raises:
            BoundaryMinimumError: the minimizer sits on the sphere Phi = gamma²
            NoConvergenceError: iteration cap
        """
        if gamma <= 0:
            raise PreconditionError(f"gamma must be positive, got {gamma}")
        if mu2 is not None and not self.instance.lam < mu2:
            self._logger.warning(
                f"⚠️ lambda={self.instance.lam:g} >= mu2={mu2:g}: the local-minimum "
                "guarantee lapses; searching anyway"
            )
        radius = BALL_SHRINK * math.sqrt(2.0) * gamma
        c0 = init.x_coordinates() if init is not None else np.zeros(self.instance.modes)
        result = self._descend(c0, radius, start="ball")
        norm = float(np.linalg.norm(result.c))
        if norm >= radius * (1.0 - 1e-6):
            raise BoundaryMinimumError(
                f"Constrained minimizer is pinned to the gamma-sphere (residual {result.residual:.3e})",
                {"gamma": gamma, "residual": result.residual, "norm": norm},
            )
        if result.residual >= self.settings.tol_res:
            raise NoConvergenceError(
                f"Ball descent stopped at residual {result.residual:.3e}",
                {"gamma": gamma, "residual": result.residual, "norm": norm},
            )
        point = self._critical_point("w1", result)
        point.inside_ball = True
        self._success(
            f"✅ w1: J={point.energy:.12g}, |w|={point.norm:.6g}, residual={point.residual:.2e}"
        )
        return point

    # -------------------------------------------------------- stage 2: global

    def _global_starts(self, gamma: float, competitor: Optional[SpectralField]) -> List[Tuple[str, np.ndarray]]:
        modes = self.instance.modes
        starts: List[Tuple[str, np.ndarray]] = []
        if competitor is not None:
            starts.append(("competitor", competitor.x_coordinates()))
        base = math.sqrt(2.0) * gamma
        for i, factor in enumerate(START_RADII):
            for r in range(self.settings.restarts):
                rng = np.random.default_rng([self.settings.seed, i, r])
                c = rng.standard_normal(modes)
                starts.append((f"random[{factor:g},{r}]", factor * base * c / np.linalg.norm(c)))
        starts.append(("zero", np.zeros(modes)))
        return starts

    def global_minimize(
        self,
        gamma: float,
        competitor: Optional[SpectralField] = None,
        bundle: Optional[ConstantsBundle] = None,
    ) -> CriticalPoint:
        """
        Best-of-starts unconstrained minimum of J_lambda.

        Raises:
            NoConvergenceError: every start failed
            TheoremViolationError: hypotheses certified but Phi(result) <= gamma²
        """
        inst = self.instance
        if inst.nonlinearity.subquadratic is None:
            self._logger.warning("⚠️ No subquadratic certificate: a global minimum may not exist")

        starts = self._global_starts(gamma, competitor)

        def run(item: Tuple[str, np.ndarray]):
            name, c0 = item
            try:
                return self._descend(c0, start=name)
            except NoConvergenceError as e:
                return e

        if self.settings.threads > 1:
            with ThreadPoolExecutor(max_workers=self.settings.threads) as pool:
                outcomes = list(pool.map(run, starts))
        else:
            outcomes = [run(item) for item in starts]

        finished = [
            (i, o) for i, o in enumerate(outcomes)
            if isinstance(o, _Descent) and o.residual < self.settings.tol_res
        ]
        if not finished:
            raise NoConvergenceError(
                "Global minimization failed from every start", {"starts": len(starts)}
            )
        _, best = min(finished, key=lambda pair: (pair[1].energy, pair[0]))
        self._logger.debug(
            f"🔍 Global minimum from start '{best.start}' "
            f"({len(finished)}/{len(starts)} starts converged)"
        )

        point = self._critical_point("w2", best)
        point.inside_ball = point.phi < gamma**2

        if bundle is not None and _hypotheses_certified(bundle, inst) and not point.phi > gamma**2:
            raise TheoremViolationError(
                f"Phi(w2)={point.phi:.6g} <= gamma²={gamma**2:.6g} although lambda lies in "
                "(mu1, mu2) with (AI) certified",
                {"phi": point.phi, "gamma": gamma},
            )
        self._success(
            f"✅ w2: J={point.energy:.12g}, Phi={point.phi:.6g}, residual={point.residual:.2e}"
        )
        return point

    # ------------------------------------------------- stage 3: mountain pass

    def _newton_saddle(self, c: np.ndarray) -> Optional[_Descent]:
        """Damped Newton on grad J = 0 without an energy requirement."""
        inst = self.instance
        grad = inst.gradient_x(c)
        residual = float(np.linalg.norm(grad))
        for step in range(1, NEWTON_MAX_STEPS + 1):
            try:
                delta = np.linalg.solve(inst.hessian_x(c), -grad)
            except np.linalg.LinAlgError:
                return None
            t = 1.0
            while t > 1e-4:
                trial = c + t * delta
                trial_grad = inst.gradient_x(trial)
                trial_residual = float(np.linalg.norm(trial_grad))
                if trial_residual < residual:
                    break
                t *= 0.5
            else:
                return None
            c, grad, residual = trial, trial_grad, trial_residual
            if residual < self.settings.tol_res:
                return _Descent(c, inst.energy_x(c), residual, step, "mountain-pass")
        return None

    @staticmethod
    def _redistribute(path: np.ndarray, pivot: int) -> np.ndarray:
        """Equal arclength on each side of the pivot node (pivot stays fixed)."""

        def resample(segment: np.ndarray, count: int) -> np.ndarray:
            lengths = np.linalg.norm(np.diff(segment, axis=0), axis=1)
            arc = np.concatenate([[0.0], np.cumsum(lengths)])
            if arc[-1] == 0.0:
                return np.repeat(segment[:1], count, axis=0)
            targets = np.linspace(0.0, arc[-1], count)
            return np.stack(
                [np.interp(targets, arc, segment[:, j]) for j in range(segment.shape[1])],
                axis=1,
            )

        left = resample(path[: pivot + 1], pivot + 1)
        right = resample(path[pivot:], path.shape[0] - pivot)
        return np.concatenate([left, right[1:]], axis=0)

    def mountain_pass(self, w1: CriticalPoint, w2: CriticalPoint) -> CriticalPoint:
        """
        Climbing-node path method from w1 to w2.

        Raises:
            PreconditionError: endpoints not distinct certified minima
            MountainPassCollapseError: the climbing node lands on an endpoint
            NoConvergenceError: iteration cap
        """
        s = self.settings
        inst = self.instance
        delta_dist = 1e-3 * max(1.0, w1.norm, w2.norm)
        if x_distance(w1.field, w2.field) <= delta_dist:
            raise PreconditionError(
                "Mountain pass needs two distinct minima", {"delta_dist": delta_dist}
            )
        for point in (w1, w2):
            if point.residual >= s.tol_res:
                raise PreconditionError(
                    f"Endpoint {point.label} is not a certified critical point "
                    f"(residual {point.residual:.3e})"
                )
            if point.morse_index != 0:
                raise PreconditionError(
                    f"Endpoint {point.label} is not a minimum (Morse index {point.morse_index})",
                    {"label": point.label, "morse_index": point.morse_index},
                )

        c1, c2 = w1.field.x_coordinates(), w2.field.x_coordinates()
        nodes = max(int(s.path_nodes), 4)
        path = c1 + np.linspace(0.0, 1.0, nodes + 1)[:, None] * (c2 - c1)
        ceiling = max(w1.energy, w2.energy)
        step = 0.5
        newton_gate = MP_NEWTON_SWITCH
        previous_residual = math.inf

        for iteration in range(1, s.mp_max_iterations + 1):
            values = path @ inst.scaled_table
            energies = 0.5 * np.sum(path**2, axis=1) - inst.lam * (
                inst.nonlinearity.F(values) @ inst.weighted_beta
            )
            forcing = inst.nonlinearity.f(values) * inst.weighted_beta
            grads = path - inst.lam * (forcing @ inst.scaled_table.T)

            top = 1 + int(np.argmax(energies[1:-1]))
            residual = float(np.linalg.norm(grads[top]))

            if residual < s.tol_res or residual < newton_gate:
                result = (
                    _Descent(path[top].copy(), float(energies[top]), residual, iteration, "mountain-pass")
                    if residual < s.tol_res
                    else self._newton_saddle(path[top])
                )
                if result is not None:
                    result.iterations += iteration
                    return self._accept_saddle(result, c1, c2, ceiling, delta_dist)
                newton_gate = 0.1 * residual

            # Tangents by central differences along the path
            tangents = path[2:] - path[:-2]
            tangents /= np.maximum(np.linalg.norm(tangents, axis=1, keepdims=True), 1e-300)
            interior = grads[1:-1]
            along = np.sum(interior * tangents, axis=1, keepdims=True)
            moves = -(interior - along * tangents)
            # climbing node: ascend along the tangent, descend across it
            k = top - 1
            moves[k] = -interior[k] + 2.0 * along[k] * tangents[k]

            path[1:-1] += step * moves
            path = self._redistribute(path, top)

            if residual > previous_residual:
                step = max(0.5 * step, 1e-6)
            else:
                step = min(1.1 * step, 1.0)
            previous_residual = residual

        raise NoConvergenceError(
            f"Mountain pass did not converge in {s.mp_max_iterations} iterations",
            {"residual": previous_residual},
        )

    def _accept_saddle(
        self, result: _Descent, c1: np.ndarray, c2: np.ndarray, ceiling: float, delta_dist: float
    ) -> CriticalPoint:
        d1 = float(np.linalg.norm(result.c - c1))
        d2 = float(np.linalg.norm(result.c - c2))
        if min(d1, d2) <= delta_dist or result.energy < ceiling - MP_ENERGY_SLACK:
            raise MountainPassCollapseError(
                f"Mountain-pass point collapsed (distances {d1:.3e}, {d2:.3e}; "
                f"J={result.energy:.12g} vs endpoint max {ceiling:.12g})",
                {"distance_w1": d1, "distance_w2": d2, "energy": result.energy},
            )
        point = self._critical_point("w3", result)
        self._success(
            f"✅ w3: J={point.energy:.12g}, Morse index {point.morse_index}, "
            f"residual={point.residual:.2e}"
        )
        return point

    # ------------------------------------------------------------ orchestration

    def solve_three(self, bundle: ConstantsBundle, refine: bool = False) -> SolveReport:
        """Run all three stages and classify the results; optionally re-solve on 2N modes."""
        inst = self.instance
        gamma = bundle.gamma
        tol_zero = 1e-8 * math.sqrt(2.0) * gamma
        guarantee = _hypotheses_certified(bundle, inst)
        messages: List[str] = []
        if not guarantee:
            messages.append("exploratory: theorem hypotheses not all certified")
            self._logger.warning("⚠️ Guarantee path refused; running in exploratory mode")

        cone = ConeFunction(inst.domain, np.asarray(bundle.x0), bundle.tau, bundle.rho)
        competitor = project_onto_basis(cone, inst.modes, inst.order).field

        radius = math.sqrt(2.0) * gamma
        competitor_norm = h_half_norm(competitor)
        init = competitor * (0.5 * radius / competitor_norm) if competitor_norm > 0 else None

        w1 = self.minimize_in_ball(gamma, init=init, mu2=bundle.mu2)
        w2 = self.global_minimize(gamma, competitor=competitor, bundle=bundle)
        points = [w1, w2]

        delta_dist = 1e-3 * max(1.0, w1.norm, w2.norm)
        if x_distance(w1.field, w2.field) > delta_dist:
            points.append(self.mountain_pass(w1, w2))
        else:
            messages.append("w1 and w2 coincide: mountain pass skipped")

        for p in points:
            p.trivial = p.norm < tol_zero
            p.inside_ball = p.phi < gamma**2
            if inst.nonlinearity.one_sided:
                p.nonnegative = p.trace_min >= -1e-6 * max(1.0, abs(p.trace_max))

        distances: Dict[str, float] = {}
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                key = f"{points[i].label}-{points[j].label}"
                distances[key] = x_distance(points[i].field, points[j].field)

        representatives: List[CriticalPoint] = []
        for p in points:
            if all(x_distance(p.field, q.field) > delta_dist for q in representatives):
                representatives.append(p)
        nontrivial = [p for p in representatives if not p.trivial]
        if len(representatives) < 2:
            messages.append("multiplicity not exhibited")
        if len(representatives) < len(points):
            messages.append("some critical points coincide (reported, not merged)")

        report = SolveReport(
            points=points,
            distances=distances,
            bundle=bundle,
            gamma=gamma,
            lam=inst.lam,
            tol_zero=tol_zero,
            delta_dist=delta_dist,
            guarantee_path=guarantee,
            distinct_count=len(representatives),
            nontrivial_distinct_count=len(nontrivial),
            messages=messages,
            diagnostics={
                "modes": inst.modes,
                "quadrature_nodes": inst.rule.size,
                "competitor_energy": inst.energy_x(competitor.x_coordinates()),
            },
        )
        self._success(
            f"✅ Solve finished: {report.distinct_count} distinct, "
            f"{report.nontrivial_distinct_count} nontrivial"
        )
        if refine:
            report.diagnostics["galerkin_refinement"] = self.galerkin_refinement(report)
        return report

    def galerkin_refinement(self, report: SolveReport, factor: int = 2) -> Dict[str, Any]:
        """
        Re-solve on factor*N modes and compare critical values label by label.

        Returns:
            {"modes": [N, factor*N], "<label>": {"coarse", "fine", "relative_change"}}
        """
        if report.bundle is None:
            raise PreconditionError("Galerkin refinement needs the constants bundle of the run")
        inst = self.instance
        fine_instance = ProblemInstance(
            inst.domain, inst.beta, inst.nonlinearity, inst.lam, factor * inst.modes, inst.order
        )
        fine = CriticalPointSolver(fine_instance, self.settings)
        fine._logger = self._logger
        fine_report = fine.solve_three(report.bundle)

        comparison: Dict[str, Any] = {"modes": [inst.modes, fine_instance.modes]}
        for point in report.points:
            other = fine_report.point(point.label)
            if other is None:
                continue
            scale = max(abs(point.energy), abs(other.energy), 1e-300)
            comparison[point.label] = {
                "coarse": point.energy,
                "fine": other.energy,
                "relative_change": abs(point.energy - other.energy) / scale,
            }
        self._logger.info(f"🔍 Galerkin refinement N={inst.modes} -> {fine_instance.modes} done")
        return comparison


def _hypotheses_certified(bundle: ConstantsBundle, inst: ProblemInstance) -> bool:
    return bool(
        not inst.exploratory
        and inst.lam > 0
        and bundle.ai_flag
        and bundle.rho_gamma_flag
        and bundle.interval_valid
        and bundle.mu1 is not None
        and bundle.mu2 is not None
        and bundle.mu1 < inst.lam < bundle.mu2
    )


def create_critical_point_solver(
    instance: ProblemInstance,
    settings: Optional[SolverSettings] = None,
    logging_manager: Optional[Any] = None,
) -> CriticalPointSolver:
    """Factory function for CriticalPointSolver."""
    logger.debug(f"🏭 Creating CriticalPointSolver (N={instance.modes}, lambda={instance.lam:g})")
    return CriticalPointSolver(instance, settings, logging_manager)


__all__ = [
    "SolverSettings",
    "CriticalPoint",
    "SolveReport",
    "CriticalPointSolver",
    "create_critical_point_solver",
    "START_RADII",
]

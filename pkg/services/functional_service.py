"""
Service dos funcionais de densidade.

F(ρ) = sup_v {E(v) - v·ρ} por subida de supergradiente projetada,
F̃(ρ) por busca restrita multi-start com Lagrangiano aumentado e
minimização de F(ρ) + v·ρ por descida projetada no hipersimplexo.
Segue Single Responsibility Principle.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import minimize, nnls

from models.fock import FockBasis, WaveFunction
from models.functional import FunctionalMinimum, LiebEvaluation, PureEvaluation
from models.operators import Potential, ReferenceHamiltonian
from models.spectrum import Density, GroundManifold
from models.validation import validate_density, validate_interior
from services.hamiltonian_service import HamiltonianService
from services.representability_service import RepresentabilityService
from services.spectrum_service import SpectrumService
from utils.constants import (
    DEGENERACY_TOL,
    DENSITY_TOL,
    DESCENT_MAX_ITERATIONS,
    DESCENT_STEP_TOL,
    FINITE_DIFFERENCE_STEP,
    HULL_SAMPLES,
    LIEB_GRADIENT_TOL,
    LIEB_INITIAL_STEP,
    LIEB_MAX_ITERATIONS,
    LIEB_MIN_STEP,
    PURE_MULTIPLIER_ROUNDS,
    PURE_PENALTY_SCHEDULE,
    PURE_PERTURBATION,
    PURE_RESIDUAL_TOL,
    PURE_RESTARTS,
    SURFACE_STEPS,
)
from utils.exceptions import BoundaryDensityError, InvalidInputError
from utils.helpers import make_rng, parallel_map

logger = logging.getLogger(__name__)

FunctionalHandle = Callable[[np.ndarray], float]

# Peso da linha Σλ = 1 no NNLS do fecho convexo
_HULL_SUM_WEIGHT = 1e3
_ARMIJO = 1e-4


def project_l1_ball(y: np.ndarray, radius: float) -> np.ndarray:
    """
    Projeção euclidiana na bola ‖x‖₁ <= radius (ordenação de Duchi et al.).

    Args:
        y: Vetor
        radius: Raio positivo

    Returns:
        Vetor projetado
    """
    if np.abs(y).sum() <= radius:
        return y.copy()
    u = np.sort(np.abs(y))[::-1]
    cumulative = np.cumsum(u) - radius
    k = np.arange(1, u.shape[0] + 1)
    rho = np.nonzero(u - cumulative / k > 0)[0][-1]
    theta = cumulative[rho] / (rho + 1)
    return np.sign(y) * np.maximum(np.abs(y) - theta, 0.0)


def project_gauge_ball(y: np.ndarray, radius: float) -> np.ndarray:
    """Projeta em {Σv = 0} ∩ {‖v‖₁ <= radius}."""
    v = y - y.mean()
    if np.abs(v).sum() <= radius:
        return v
    v = project_l1_ball(v, radius)
    v = v - v.mean()
    total = np.abs(v).sum()
    if total > radius:
        v *= radius / total
    return v


def project_capped_simplex(y: np.ndarray, n: float, iterations: int = 200) -> np.ndarray:
    """
    Projeção euclidiana em {0 <= x_i <= 1, Σx = n} por bissecção no deslocamento τ.

    Args:
        y: Vetor
        n: Soma alvo (0 <= n <= len(y))

    Returns:
        Ponto do hipersimplexo mais próximo de y
    """
    lo, hi = float(y.min()) - 1.0, float(y.max())
    for _ in range(iterations):
        tau = 0.5 * (lo + hi)
        if np.clip(y - tau, 0.0, 1.0).sum() > n:
            lo = tau
        else:
            hi = tau
    return np.clip(y - 0.5 * (lo + hi), 0.0, 1.0)


def _in_box(x: np.ndarray) -> bool:
    return bool(np.all(x >= 0.0) and np.all(x <= 1.0))


class FunctionalService:
    """
    Service dos funcionais F (Lieb) e F̃ (estados puros).

    Todas as avaliações são puras dada a semente; reinícios de F̃ e
    pontos da superfície podem ser distribuídos em workers.
    """

    def __init__(
        self,
        hamiltonian_service: Optional[HamiltonianService] = None,
        spectrum_service: Optional[SpectrumService] = None,
        representability_service: Optional[RepresentabilityService] = None
    ):
        self.hamiltonian_service = hamiltonian_service or HamiltonianService()
        self.spectrum_service = spectrum_service or SpectrumService()
        self.representability_service = representability_service or RepresentabilityService(
            self.spectrum_service, self.hamiltonian_service
        )

    def ground_energy(self, v: Potential, reference: ReferenceHamiltonian, basis: FockBasis) -> float:
        """
        E(v) como menor autovalor de H_0 + V.

        Raises:
            NonConvergenceError: Propagado do autossolver
        """
        op = self.hamiltonian_service.assemble_reference(reference, basis, v)
        return float(self.spectrum_service.eigendecompose(op).eigenvalues[0])

    # Cota do potencial

    def potential_bound(self, rho: Sequence[float], h0_norm: float, eps: float = 0.0) -> float:
        """
        Raio R_ρ da bola em norma 1 que contém todo maximizador v (Σv = 0).

        Para cada partição de sinais S (v_i >= 0 em S) usa o par (p, q) com
        q = min(1/max_{i∉S} ρ_i, 1 + a/(2b)) e p = 1 - (q - 1)b/a, onde
        a = ρ(S) e b = N - a. Acima de 16 vértices só as partições por
        prefixo de ρ ordenado são varridas.

        Args:
            rho: Densidade interior
            h0_norm: ‖H_0‖ (maior autovalor em módulo)
            eps: Tolerância de otimalidade ε

        Returns:
            R_ρ
        """
        vector = np.asarray(rho, dtype=float).reshape(-1)
        m = vector.shape[0]
        n = float(vector.sum())
        if m <= 16:
            masks = np.arange(1, 2 ** m - 1)
            inside = ((masks[:, None] >> np.arange(m)) & 1).astype(bool)
        else:
            order = np.argsort(-vector, kind="stable")
            inside = np.zeros((m - 1, m), dtype=bool)
            for k in range(1, m):
                inside[k - 1, order[:k]] = True

        a = inside @ vector
        b = n - a
        rest_max = np.where(~inside, vector, -np.inf).max(axis=1)
        q = np.minimum(1.0 / rest_max, 1.0 + a / (2.0 * b))
        p = 1.0 - (q - 1.0) * b / a
        factor = ((p + q + 2.0) * h0_norm + (p + q) * eps) / (q - p)
        return float(factor.max() / vector.min())

    # Funcional de Lieb

    def lieb_f(
        self,
        rho: Density | Sequence[float],
        reference: ReferenceHamiltonian,
        basis: FockBasis,
        seed: int = 0,
        max_iterations: int = LIEB_MAX_ITERATIONS,
        samples: int = HULL_SAMPLES,
        degeneracy_tol: float = DEGENERACY_TOL
    ) -> LiebEvaluation:
        """
        F(ρ) por subida de supergradiente em {Σv = 0} ∩ {‖v‖₁ <= R_ρ}.

        Args:
            rho: Densidade alvo
            reference: Parte interna H_0
            basis: Base de Fock
            seed: Semente das amostras da variedade degenerada
            max_iterations: Limite de iterações
            samples: Vetores aleatórios por variedade degenerada
            degeneracy_tol: Tolerância de degenerescência

        Returns:
            LiebEvaluation (value = +inf e finite = False fora do hipersimplexo)

        Raises:
            InvalidInputError: Dimensão incompatível com a base
            BoundaryDensityError: ρ na fronteira do hipersimplexo
        """
        vector = self._density_vector(rho, basis)
        ok, message = validate_density(vector, basis.n, DENSITY_TOL)
        if not ok:
            logger.info("ρ fora do hipersimplexo (%s): F = +inf", message)
            return LiebEvaluation(
                value=float("inf"),
                maximizer_v=None,
                iterations=0,
                certificate_gap=0.0,
                residual=float("inf"),
                converged=True,
                finite=False
            )
        ok, message = validate_interior(vector, DENSITY_TOL)
        if not ok:
            raise BoundaryDensityError(
                f"{message}; a existência de maximizador só é garantida no interior do hipersimplexo"
            )

        h0 = self.hamiltonian_service.assemble_reference(reference, basis)
        radius = self.potential_bound(vector, h0.norm())
        rng = make_rng(seed)

        def evaluate(v: np.ndarray) -> Tuple[float, np.ndarray]:
            op = h0.plus_diagonal(basis.occupation_matrix @ v)
            gm = self.spectrum_service.ground_manifold_of(
                self.spectrum_service.eigendecompose(op), degeneracy_tol, warn=False
            )
            if gm.is_degenerate:
                ground = self.closest_hull_density(gm, vector, rng, samples)
            else:
                ground = self.spectrum_service.density_vector(gm.states[0].coefficients, basis)
            return gm.energy - float(v @ vector), ground - vector

        v = np.zeros(basis.m)
        value, gradient = evaluate(v)
        step = LIEB_INITIAL_STEP
        iterations = 0
        converged = False
        while iterations < max_iterations:
            if np.max(np.abs(gradient)) <= LIEB_GRADIENT_TOL or step < LIEB_MIN_STEP:
                converged = True
                break
            iterations += 1
            trial = project_gauge_ball(v + step * gradient, radius)
            trial_value, trial_gradient = evaluate(trial)
            if trial_value > value:
                v, value, gradient = trial, trial_value, trial_gradient
                step *= 1.5
            else:
                step *= 0.5
            if iterations % 500 == 0:
                logger.debug("lieb_f it=%d G=%.12f passo=%.3e", iterations, value, step)

        if not converged:
            logger.warning("lieb_f estagnou após %d iterações; reportando melhor valor", iterations)

        residual = float(np.linalg.norm(gradient))
        gap = float(np.max(np.abs(gradient)) * (radius + np.abs(v).sum()))
        return LiebEvaluation(
            value=float(value),
            maximizer_v=Potential(v),
            iterations=iterations,
            certificate_gap=gap,
            radius=radius,
            residual=residual,
            converged=converged,
            finite=True
        )

    def closest_hull_density(
        self,
        gm: GroundManifold,
        rho: np.ndarray,
        rng: np.random.Generator,
        samples: int = HULL_SAMPLES
    ) -> np.ndarray:
        """
        Densidade de ensemble da variedade mais próxima de ρ.

        Mínimos quadrados não negativos sobre densidades amostradas, densidades
        da base e a mistura uniforme, com linha extra forçando Σλ = 1.
        """
        base = self.spectrum_service.manifold_basis_densities(gm)
        candidates = np.vstack([
            self.spectrum_service.sample_manifold_densities(gm, rng, samples),
            base,
            base.mean(axis=0, keepdims=True),
        ])
        a = np.vstack([candidates.T, _HULL_SUM_WEIGHT * np.ones(candidates.shape[0])])
        b = np.concatenate([rho, [_HULL_SUM_WEIGHT]])
        weights, _ = nnls(a, b)
        total = weights.sum()
        if total <= 0.0:
            return base.mean(axis=0)
        return (weights / total) @ candidates

    # Funcional de estados puros

    def pure_f(
        self,
        rho: Density | Sequence[float],
        reference: ReferenceHamiltonian,
        basis: FockBasis,
        restarts: int = PURE_RESTARTS,
        seed: int = 0,
        penalty_schedule: Sequence[float] = PURE_PENALTY_SCHEDULE,
        jobs: int = 1
    ) -> PureEvaluation:
        """
        F̃(ρ) = inf {⟨Ψ, H_0 Ψ⟩ | Ψ ↦ ρ} por busca multi-start.

        Cada reinício minimiza ⟨Ψ,H_0Ψ⟩ + λ·(ρ[Ψ] - ρ) + μ‖ρ[Ψ] - ρ‖² em Ψ
        (L-BFGS-B sobre partes real e imaginária), com μ crescente e
        atualização dos multiplicadores λ até o resíduo cair abaixo de 1e-7.

        Args:
            rho: Densidade no hipersimplexo
            reference: Parte interna H_0
            basis: Base de Fock
            restarts: Número de reinícios
            seed: Semente
            penalty_schedule: Valores crescentes de μ
            jobs: Workers

        Returns:
            PureEvaluation (converged = False se nenhum reinício atingiu o resíduo)

        Raises:
            InvalidInputError: ρ fora do hipersimplexo
        """
        vector = self._density_vector(rho, basis)
        ok, message = validate_density(vector, basis.n, DENSITY_TOL)
        if not ok:
            raise InvalidInputError(message)
        if restarts < 1:
            raise InvalidInputError("restarts deve ser >= 1")

        h0 = self.hamiltonian_service.assemble_reference(reference, basis)
        face = self.face_indices(vector, basis)
        hamiltonian = h0.matrix[np.ix_(face, face)]
        occ = basis.occupation_matrix[face]
        start = self.representability_service.state_from_density(vector).coefficients[face]
        start = start / np.linalg.norm(start)
        manifold = self._face_ground_states(hamiltonian)
        seeds = make_rng(seed).integers(0, 2 ** 32, size=restarts)
        logger.debug("pure_f: face com %d de %d estados da base", face.shape[0], basis.dim)

        def run(item: Tuple[int, int]) -> Tuple[float, float, np.ndarray]:
            k, restart_seed = item
            x0 = self._initial_state(k, start, manifold, make_rng(int(restart_seed)))
            return self._augmented_lagrangian(x0, hamiltonian, occ, vector, penalty_schedule)

        results = parallel_map(run, list(enumerate(seeds)), jobs)
        # O estado exato de ρ é sempre candidato
        start_energy = float(np.vdot(start, hamiltonian @ start).real)
        start_residual = float(np.max(np.abs(np.abs(start) ** 2 @ occ - vector)))
        results.append((start_energy, start_residual, start))

        values = [value for value, residual, _ in results if residual <= PURE_RESIDUAL_TOL]
        if values:
            best = min(
                (r for r in results if r[1] <= PURE_RESIDUAL_TOL),
                key=lambda r: r[0]
            )
            converged = True
        else:
            best = min(results, key=lambda r: r[1])
            converged = False
            logger.warning(
                "pure_f não convergiu: menor resíduo %.3e após %d reinícios", best[1], restarts
            )

        value, residual, face_coefficients = best
        coefficients = np.zeros(basis.dim, dtype=complex)
        coefficients[face] = face_coefficients
        logger.info("pure_f: %d/%d candidatos convergidos, melhor valor %.10f", len(values), len(results), value)
        return PureEvaluation(
            value=float(value),
            minimizer_psi=WaveFunction(basis, coefficients),
            constraint_residual=float(residual),
            restarts_used=restarts,
            converged=converged,
            restart_values=values
        )

    def face_indices(self, rho: np.ndarray, basis: FockBasis, tol: float = DENSITY_TOL) -> np.ndarray:
        """
        Estados da base compatíveis com a face de ρ no hipersimplexo.

        Um estado com ρ_i = 1 ocupa i em todo o suporte; com ρ_i = 0, nunca.

        Returns:
            Índices (ordem da base) dos multi-índices que contêm todo i com
            ρ_i = 1 e evitam todo i com ρ_i = 0
        """
        occ = basis.occupation_matrix
        full = rho >= 1.0 - tol
        empty = rho <= tol
        keep = np.all(occ[:, full] == 1.0, axis=1) & np.all(occ[:, empty] == 0.0, axis=1)
        return np.flatnonzero(keep)

    def _face_ground_states(self, hamiltonian: np.ndarray) -> np.ndarray:
        energies, vectors = eigh(hamiltonian)
        scale = max(1.0, float(np.max(np.abs(energies))))
        return vectors[:, energies - energies[0] <= DEGENERACY_TOL * scale]

    def _initial_state(
        self,
        k: int,
        start: np.ndarray,
        manifold: np.ndarray,
        rng: np.random.Generator
    ) -> np.ndarray:
        """Reinício 0 parte do estado exato de ρ; pares perturbam fases, ímpares partem do fundamental de H_0 restrito à face."""
        dim = start.shape[0]
        noise = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        if k == 0:
            c = start.astype(complex)
        elif k % 2 == 0:
            phases = np.exp(2j * np.pi * rng.random(dim))
            c = start * phases + PURE_PERTURBATION * noise / np.sqrt(dim)
        else:
            z = rng.standard_normal(manifold.shape[1]) + 1j * rng.standard_normal(manifold.shape[1])
            c = manifold @ z
            c = c / np.linalg.norm(c) + PURE_PERTURBATION * noise / np.sqrt(dim)
        c = c / np.linalg.norm(c)
        return np.concatenate([c.real, c.imag])

    def _augmented_lagrangian(
        self,
        x0: np.ndarray,
        hamiltonian: np.ndarray,
        occ: np.ndarray,
        target: np.ndarray,
        penalty_schedule: Sequence[float]
    ) -> Tuple[float, float, np.ndarray]:
        dim = hamiltonian.shape[0]

        def split(x: np.ndarray) -> np.ndarray:
            return x[:dim] + 1j * x[dim:]

        def measures(c: np.ndarray) -> Tuple[float, np.ndarray, np.ndarray, float]:
            norm2 = float(np.vdot(c, c).real)
            hc = hamiltonian @ c
            energy = float(np.vdot(c, hc).real) / norm2
            density = (np.abs(c) ** 2 @ occ) / norm2
            return energy, density, hc, norm2

        def objective(x: np.ndarray, multipliers: np.ndarray, mu: float) -> Tuple[float, np.ndarray]:
            c = split(x)
            energy, density, hc, norm2 = measures(c)
            r = density - target
            kappa = multipliers + 2.0 * mu * r
            w = (hc + (occ @ kappa) * c - (energy + float(kappa @ density)) * c) / norm2
            value = energy + float(multipliers @ r) + mu * float(r @ r)
            return value, 2.0 * np.concatenate([w.real, w.imag])

        def solve(x: np.ndarray, multipliers: np.ndarray, mu: float) -> Tuple[np.ndarray, np.ndarray]:
            result = minimize(
                objective,
                x,
                args=(multipliers, mu),
                jac=True,
                method="L-BFGS-B",
                options={"maxiter": 1000, "gtol": 1e-10, "ftol": 1e-14}
            )
            x = result.x / np.linalg.norm(result.x)
            _, density, _, _ = measures(split(x))
            return x, density - target

        x = x0
        multipliers = np.zeros(occ.shape[1])
        r = np.full(occ.shape[1], np.inf)
        for mu in penalty_schedule:
            x, r = solve(x, multipliers, mu)
            multipliers = multipliers + 2.0 * mu * r

        mu = penalty_schedule[-1]
        for _ in range(PURE_MULTIPLIER_ROUNDS):
            if np.max(np.abs(r)) <= PURE_RESIDUAL_TOL:
                break
            x, r = solve(x, multipliers, mu)
            multipliers = multipliers + 2.0 * mu * r

        c = split(x)
        energy, _, _, _ = measures(c)
        return energy, float(np.max(np.abs(r))), c / np.linalg.norm(c)

    # Minimização via funcional

    def minimize_energy_via_functional(
        self,
        v: Potential | Sequence[float],
        functional: FunctionalHandle,
        n: int,
        start: Optional[Sequence[float]] = None,
        reference: Optional[ReferenceHamiltonian] = None,
        basis: Optional[FockBasis] = None,
        max_iterations: int = DESCENT_MAX_ITERATIONS
    ) -> FunctionalMinimum:
        """
        min_ρ {F(ρ) + v·ρ} por descida projetada no hipersimplexo.

        O gradiente de F é estimado por diferenças finitas nas direções
        e_i - 1/M do plano Σρ = N (unilaterais junto às faces).

        Args:
            v: Potencial
            functional: ρ ↦ F(ρ) avaliável no hipersimplexo
            n: Número de partículas
            start: Densidade inicial (baricentro se None)
            reference: H_0 para conferir E(v) por diagonalização
            basis: Base de Fock (necessária com reference)
            max_iterations: Limite de iterações

        Returns:
            FunctionalMinimum
        """
        potential = v if isinstance(v, Potential) else Potential(np.asarray(v, dtype=float))
        values = potential.v
        m = values.shape[0]
        shift = values - values.mean()

        rho = np.full(m, n / m) if start is None else project_capped_simplex(np.asarray(start, dtype=float), n)

        def phi(x: np.ndarray) -> float:
            return float(functional(x)) + float(values @ x)

        current = phi(rho)
        step = 1.0
        converged = False
        iterations = 0
        for iterations in range(1, max_iterations + 1):
            gradient = self.plane_gradient(functional, rho) + shift
            mapping = rho - project_capped_simplex(rho - gradient, n)
            if np.linalg.norm(mapping) <= DESCENT_STEP_TOL:
                converged = True
                break

            accepted = False
            while step > 1e-16:
                candidate = project_capped_simplex(rho - step * gradient, n)
                value = phi(candidate)
                if value <= current - _ARMIJO * float(gradient @ (rho - candidate)):
                    accepted = True
                    break
                step *= 0.5

            if not accepted:
                # Ruído das diferenças finitas domina perto do mínimo
                converged = bool(np.linalg.norm(mapping) <= 1e-6)
                break

            moved = float(np.linalg.norm(candidate - rho))
            rho, current = candidate, value
            step = min(step * 2.0, 1e3)
            if moved < 1e-14:
                converged = True
                break

        if not converged:
            logger.warning("Descida projetada estagnou após %d iterações", iterations)

        reference_energy = None
        if reference is not None:
            if basis is None:
                basis = FockBasis.build(m, n)
            reference_energy = self.ground_energy(potential, reference, basis)

        return FunctionalMinimum(
            energy=current,
            rho=Density(rho),
            functional_value=float(functional(rho)),
            iterations=iterations,
            converged=converged,
            reference_energy=reference_energy
        )

    def plane_gradient(self, functional: FunctionalHandle, rho: np.ndarray) -> np.ndarray:
        """Derivadas direcionais de F ao longo de e_i - 1/M (gradiente projetado no plano)."""
        m = rho.shape[0]
        h = FINITE_DIFFERENCE_STEP
        f0 = None
        gradient = np.zeros(m)
        for i in range(m):
            d = np.full(m, -1.0 / m)
            d[i] += 1.0
            forward, backward = rho + h * d, rho - h * d
            forward_ok, backward_ok = _in_box(forward), _in_box(backward)
            if forward_ok and backward_ok:
                gradient[i] = (functional(forward) - functional(backward)) / (2.0 * h)
            elif forward_ok or backward_ok:
                if f0 is None:
                    f0 = functional(rho)
                gradient[i] = (functional(forward) - f0) / h if forward_ok else (f0 - functional(backward)) / h
        return gradient

    # Superfície do funcional

    def functional_surface(
        self,
        reference: ReferenceHamiltonian,
        basis: FockBasis,
        grid_steps: int = SURFACE_STEPS,
        pure_restarts: int = 8,
        seed: int = 0,
        jobs: int = 1,
        include_pure: bool = True
    ) -> List[Dict[str, float]]:
        """
        Tabela (ρ_1, ρ_2, ρ_3, F, F̃) sobre uma grade baricêntrica interior.

        Args:
            reference: H_0 com M = 3
            basis: Base (M = 3, N = 1 ou 2)
            grid_steps: Divisões por lado do triângulo
            pure_restarts: Reinícios de F̃ por ponto
            seed: Semente
            jobs: Workers (paraleliza pontos)
            include_pure: Se False, omite F̃

        Returns:
            Lista de linhas com chaves rho_1..rho_3, F, F_tilde

        Raises:
            InvalidInputError: M != 3
        """
        if basis.m != 3:
            raise InvalidInputError(f"Superfície baricêntrica requer M = 3, recebido {basis.m}")
        if grid_steps < 3:
            raise InvalidInputError("grid_steps deve ser >= 3")

        points = []
        for i in range(1, grid_steps - 1):
            for j in range(1, grid_steps - i):
                k = grid_steps - i - j
                weights = np.array([i, j, k], dtype=float) / grid_steps
                points.append(weights if basis.n == 1 else 1.0 - weights)

        def row(point: np.ndarray) -> Dict[str, float]:
            entry = {f"rho_{idx + 1}": float(x) for idx, x in enumerate(point)}
            entry["F"] = self.lieb_f(point, reference, basis, seed=seed).value
            if include_pure:
                entry["F_tilde"] = self.pure_f(point, reference, basis, restarts=pure_restarts, seed=seed).value
            return entry

        logger.info("Superfície do funcional: %d pontos", len(points))
        return parallel_map(row, points, jobs)

    def _density_vector(self, rho: Density | Sequence[float], basis: FockBasis) -> np.ndarray:
        vector = rho.rho if isinstance(rho, Density) else np.asarray(rho, dtype=float).reshape(-1)
        if vector.shape[0] != basis.m:
            raise InvalidInputError(f"Densidade com {vector.shape[0]} entradas, esperado M = {basis.m}")
        return vector

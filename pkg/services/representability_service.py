"""
Service de N-representabilidade e v-representabilidade única.

Inclui o número de Odlyzko, a matriz Υ[Ψ] e seu núcleo, a certificação
uv com busca de testemunhas, a construção de estados a partir de densidades
e a interseção de núcleos para variedades de estados.
Segue Single Responsibility Principle.
"""

import logging
from itertools import combinations, islice
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import nnls

from models.fock import FockBasis, MultiIndex, WaveFunction, mask_from_labels
from models.operators import ManyBodyOperator, Potential
from models.spectrum import Density
from models.validation import validate_density
from models.verdict import OdlyzkoCheck, UpsilonMatrix, UvStatus, UvVerdict, Witness
from services.hamiltonian_service import HamiltonianService
from services.spectrum_service import SpectrumService
from utils.constants import (
    DECOMPOSITION_TOL,
    DEGENERACY_TOL,
    DENSITY_TOL,
    GROUND_RESIDUAL_TOL,
    KERNEL_TOL,
    PIVOT_TOL,
    ROUND_TRIP_TOL,
    SUPPORT_TOL_FACTOR,
    T_REFINE_TOL,
    T_SCAN_MAX,
    T_SCAN_MIN,
    T_SCAN_POINTS,
)
from utils.exceptions import InvalidInputError, NonConvergenceError
from utils.helpers import parallel_map

logger = logging.getLogger(__name__)


def row_echelon(matrix: np.ndarray, pivot_tol: float = PIVOT_TOL) -> Tuple[np.ndarray, List[int]]:
    """
    Forma escalonada reduzida por linhas com pivoteamento parcial.

    Args:
        matrix: Matriz real (entradas 0/1 nos usos deste módulo)
        pivot_tol: Pivôs com módulo abaixo disto contam como zero

    Returns:
        Tupla (matriz reduzida, colunas pivô)
    """
    a = np.array(matrix, dtype=float)
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        p = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[p, c]) <= pivot_tol:
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] /= a[r, c]
        others = np.arange(n_rows) != r
        a[others] -= np.outer(a[others, c], a[r])
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_from_echelon(reduced: np.ndarray, pivots: List[int]) -> np.ndarray:
    """Base do núcleo (uma linha por coluna livre)."""
    n_cols = reduced.shape[1]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols))
    for k, f in enumerate(free):
        basis[k, f] = 1.0
        for row, pc in enumerate(pivots):
            basis[k, pc] = -reduced[row, f]
    return basis


def normalize_direction(u: np.ndarray) -> np.ndarray:
    """Norma do máximo 1, primeira entrada não nula positiva."""
    u = np.asarray(u, dtype=float)
    scale = float(np.max(np.abs(u)))
    if scale == 0.0:
        return u
    u = u / scale
    first = int(np.argmax(np.abs(u) > KERNEL_TOL))
    return -u if u[first] < 0 else u


class RepresentabilityService:
    """
    Service de representabilidade.
    Todas as operações são puras; a varredura em t usa pool de workers.
    """

    def __init__(
        self,
        spectrum_service: Optional[SpectrumService] = None,
        hamiltonian_service: Optional[HamiltonianService] = None
    ):
        self.spectrum_service = spectrum_service or SpectrumService()
        self.hamiltonian_service = hamiltonian_service or HamiltonianService()

    # Número de Odlyzko

    def odlyzko_number(self, m: int, n: int) -> int:
        """
        g(M, N): acima deste número de linhas distintas o posto é M.

        Raises:
            InvalidInputError: Fora de 1 <= n < m
        """
        if not 1 <= n < m:
            raise InvalidInputError(f"Requer 1 <= N < M, recebido M={m}, N={n}")
        if m > 2 * n:
            return comb(m - 1, n)
        if m == 2 * n:
            return 2 * comb(m - 2, n - 1)
        return comb(m - 1, n - 1)

    def occupancy_support_bounds(self, m: int, n: int) -> Tuple[int, int]:
        """
        Limites de suporte com um vértice vazio ou cheio.

        Returns:
            (C(M-1, N) para ρ_i = 0, C(M-1, N-1) para ρ_i = 1)
        """
        return comb(m - 1, n), comb(m - 1, n - 1)

    def odlyzko_brute_force(self, m: int, n: int, chunk: int = 20_000) -> OdlyzkoCheck:
        """
        Confere g(M, N) por enumeração de todas as matrizes de linhas distintas.

        Args:
            m: Colunas
            n: Soma das linhas
            chunk: Tamanho do lote para o cálculo de postos

        Returns:
            OdlyzkoCheck
        """
        rows = FockBasis.build(m, n).occupation_matrix
        total = rows.shape[0]
        g = self.odlyzko_number(m, n)

        def ranks(size: int):
            combos = combinations(range(total), size)
            while True:
                batch = list(islice(combos, chunk))
                if not batch:
                    return
                yield np.linalg.matrix_rank(rows[np.array(batch)])

        deficient = g <= total and any(np.any(r < m) for r in ranks(g))
        full_above = g + 1 > total or all(np.all(r == m) for r in ranks(g + 1))

        logger.debug("Odlyzko (%d,%d): g=%d, L=%d, deficiente=%s, cheio=%s", m, n, g, total, deficient, full_above)
        return OdlyzkoCheck(
            m=m, n=n, g=g, rows_available=total,
            deficient_at_g=bool(deficient), full_rank_above_g=bool(full_above)
        )

    # Suporte e Υ[Ψ]

    def default_zero_tol(self, basis: FockBasis) -> float:
        return SUPPORT_TOL_FACTOR * np.sqrt(basis.dim)

    def support(self, psi: WaveFunction, zero_tol: Optional[float] = None) -> List[MultiIndex]:
        """
        C[Ψ]: multi-índices com |Ψ_I| > zero_tol.

        Returns:
            Lista em ordem da base
        """
        tol = self.default_zero_tol(psi.basis) if zero_tol is None else zero_tol
        mask = np.abs(psi.coefficients) > tol
        return [idx for idx, keep in zip(psi.basis.index_list, mask) if keep]

    def upsilon(self, psi: WaveFunction, zero_tol: Optional[float] = None) -> UpsilonMatrix:
        """
        Υ[Ψ] com uma linha E_I por I em C[Ψ].

        Raises:
            InvalidInputError: Suporte vazio (estado nulo)
        """
        support = self.support(psi, zero_tol)
        if not support:
            raise InvalidInputError("Suporte vazio: estado nulo")
        occ = psi.basis.occupation_matrix
        rows = np.array([occ[psi.basis.rank[idx]] for idx in support]).astype(int)
        return UpsilonMatrix(rows=rows, support=support)

    def rank_and_kernel(self, rows: np.ndarray) -> Tuple[int, np.ndarray]:
        """Posto e base do núcleo por escalonamento."""
        reduced, pivots = row_echelon(rows)
        return len(pivots), kernel_from_echelon(reduced, pivots)

    # Certificação

    def default_t_scan(self) -> np.ndarray:
        """Magnitudes log-espaçadas em [1e-3, 1e3] (ambos os sinais são varridos)."""
        return np.logspace(np.log10(T_SCAN_MIN), np.log10(T_SCAN_MAX), T_SCAN_POINTS)

    def certify(
        self,
        psi: WaveFunction,
        op_without_potential: ManyBodyOperator,
        v: Potential,
        t_scan: Optional[Sequence[float]] = None,
        zero_tol: Optional[float] = None,
        degeneracy_tol: float = DEGENERACY_TOL,
        jobs: int = 1
    ) -> UvVerdict:
        """
        Certifica v-representabilidade única de ρ[Ψ] ou produz testemunha.

        Args:
            psi: Estado fundamental de H_0 + V
            op_without_potential: H_0
            v: Potencial
            t_scan: Magnitudes de t (padrão: 64 pontos log-espaçados)
            zero_tol: Tolerância de suporte
            degeneracy_tol: Tolerância relativa para status de estado fundamental
            jobs: Workers da varredura

        Returns:
            UvVerdict

        Raises:
            InvalidInputError: Ψ não é autoestado de H_0 + V
        """
        basis = psi.basis
        c = psi.normalized().coefficients
        op = op_without_potential.plus_diagonal(self.hamiltonian_service.potential_diagonal(v.v, basis))
        energy = op.expectation(c)
        residual = float(np.linalg.norm(op.matrix @ c - energy * c))
        if residual > GROUND_RESIDUAL_TOL * max(1.0, op.norm()):
            raise InvalidInputError(f"Ψ não é autoestado de H_0 + V (resíduo {residual:.3e})")

        g = self.odlyzko_number(basis.m, basis.n)
        ups = self.upsilon(psi, zero_tol)
        rank, kernel = self.rank_and_kernel(ups.rows)
        support_size = len(ups.support)
        base = dict(support_size=support_size, odlyzko_number=g, rank=rank)

        if support_size > g:
            logger.info("uv certificado por contagem: |C[Ψ]|=%d > g=%d", support_size, g)
            return UvVerdict(status=UvStatus.CERTIFIED_BY_COUNT, **base)
        if rank == basis.m:
            logger.info("uv certificado por posto: posto(Υ)=%d", rank)
            return UvVerdict(status=UvStatus.CERTIFIED_BY_RANK, **base)

        directions = [normalize_direction(u) for u in kernel]
        magnitudes = np.sort(np.asarray(t_scan if t_scan is not None else self.default_t_scan(), dtype=float))
        magnitudes = magnitudes[magnitudes > 0]

        witnesses: List[Witness] = []
        for u in directions:
            u_diag = self.hamiltonian_service.potential_diagonal(u, basis)
            if np.linalg.norm(u_diag * c) > KERNEL_TOL:
                logger.warning("Direção %s não anula Ψ; ignorada", np.round(u, 6).tolist())
                continue
            witness = self._scan_direction(op.matrix, u_diag, u, energy, magnitudes, degeneracy_tol, jobs)
            if witness is not None:
                witnesses.append(witness)

        status = UvStatus.NON_UV_WITH_WITNESS if witnesses else UvStatus.UNDETERMINED
        logger.info("Veredito %s: posto %d < M=%d, %d testemunha(s)", status.value, rank, basis.m, len(witnesses))
        return UvVerdict(
            status=status,
            kernel_basis=[u.tolist() for u in directions],
            witness=witnesses[0] if witnesses else None,
            witnesses=witnesses,
            **base
        )

    def _scan_direction(
        self,
        matrix: np.ndarray,
        u_diag: np.ndarray,
        u: np.ndarray,
        energy: float,
        magnitudes: np.ndarray,
        degeneracy_tol: float,
        jobs: int
    ) -> Optional[Witness]:
        def is_ground(t: float) -> bool:
            e0 = self.spectrum_service.lowest(matrix + np.diag(t * u_diag))
            return energy - e0 <= degeneracy_tol * max(1.0, abs(e0))

        upper = parallel_map(is_ground, list(magnitudes), jobs)
        lower = parallel_map(is_ground, list(-magnitudes), jobs)

        t_max, unbounded_above = self._persistence(is_ground, magnitudes, upper, 1.0)
        t_min, unbounded_below = self._persistence(is_ground, magnitudes, lower, -1.0)
        if t_max == 0.0 and t_min == 0.0:
            return None
        return Witness(
            direction=u.tolist(),
            t_min=t_min,
            t_max=t_max,
            unbounded_below=unbounded_below,
            unbounded_above=unbounded_above
        )

    def _persistence(
        self,
        is_ground: Callable[[float], bool],
        magnitudes: np.ndarray,
        statuses: List[bool],
        sign: float
    ) -> Tuple[float, bool]:
        """Último t contíguo a partir de 0 com status fundamental, refinado por bisseção."""
        last_ok = 0.0
        for t, ok in zip(magnitudes, statuses):
            if ok:
                last_ok = float(t)
                continue
            if last_ok == 0.0:
                return 0.0, False
            lo, hi = last_ok, float(t)
            while hi - lo > T_REFINE_TOL * max(1.0, lo):
                mid = 0.5 * (lo + hi)
                if is_ground(sign * mid):
                    lo = mid
                else:
                    hi = mid
            return sign * lo, False
        return sign * last_ok, bool(magnitudes.size)

    # Construção de estados

    def state_from_density(self, rho: Density | Sequence[float]) -> WaveFunction:
        """
        Ψ = Σ √λ_I e_I com ρ = Σ λ_I E_I.

        Args:
            rho: Densidade no hipersimplexo

        Returns:
            WaveFunction real não negativa com densidade ρ

        Raises:
            InvalidInputError: ρ fora do hipersimplexo (mensagem nomeia a restrição)
        """
        vector = rho.rho if isinstance(rho, Density) else np.asarray(rho, dtype=float).reshape(-1)
        n = int(round(float(vector.sum())))
        ok, message = validate_density(vector, n, DENSITY_TOL)
        if not ok:
            raise InvalidInputError(message)
        basis = FockBasis.build(vector.shape[0], n)
        vector = np.clip(vector, 0.0, 1.0)

        weights = self._greedy_decomposition(vector, n)
        if weights is not None:
            psi = self._state_from_weights(weights, basis)
            error = float(np.max(np.abs(self.spectrum_service.density_vector(psi.coefficients, basis) - vector)))
            if error <= ROUND_TRIP_TOL:
                return psi
            logger.warning("Decomposição gulosa imprecisa (erro %.3e); usando busca exaustiva", error)
        else:
            logger.warning("Decomposição gulosa estagnou; usando busca exaustiva")

        return self._exhaustive_decomposition(vector, basis)

    def _greedy_decomposition(self, rho: np.ndarray, n: int) -> Optional[Dict[MultiIndex, float]]:
        remainder = rho.copy()
        mass = 1.0
        weights: Dict[MultiIndex, float] = {}
        for _ in range(2 * rho.shape[0] + 2):
            if np.linalg.norm(remainder) < DECOMPOSITION_TOL:
                return weights
            order = np.argsort(-remainder, kind="stable")
            chosen, rest = order[:n], order[n:]
            cap = mass - (remainder[rest].max() if rest.size else 0.0)
            lam = min(float(remainder[chosen].min()), float(cap), mass)
            if lam <= DECOMPOSITION_TOL:
                return None
            idx = mask_from_labels(int(i) + 1 for i in chosen)
            weights[idx] = weights.get(idx, 0.0) + lam
            remainder[chosen] -= lam
            remainder = np.clip(remainder, 0.0, None)
            mass -= lam
        return weights if np.linalg.norm(remainder) < DECOMPOSITION_TOL else None

    def _exhaustive_decomposition(self, rho: np.ndarray, basis: FockBasis) -> WaveFunction:
        a = np.vstack([basis.occupation_matrix.T, np.ones(basis.dim)])
        b = np.concatenate([rho, [1.0]])
        lam, residual = nnls(a, b)
        if residual > ROUND_TRIP_TOL:
            raise NonConvergenceError(f"Decomposição convexa falhou (resíduo {residual:.3e})", residual=residual)
        weights = {idx: float(x) for idx, x in zip(basis.index_list, lam) if x > 0.0}
        return self._state_from_weights(weights, basis)

    def _state_from_weights(self, weights: Dict[MultiIndex, float], basis: FockBasis) -> WaveFunction:
        coefficients = np.zeros(basis.dim, dtype=complex)
        for idx, lam in weights.items():
            coefficients[basis.rank[idx]] = np.sqrt(lam)
        return WaveFunction(basis, coefficients).normalized()

    def nonuv_subspace(self, states: Sequence[WaveFunction], zero_tol: Optional[float] = None) -> np.ndarray:
        """
        Base ortonormal de W = ∩_n ker Υ[Ψ_n].

        Args:
            states: Estados (lista não vazia)

        Returns:
            Array k×M (k = 0 se a interseção é trivial)
        """
        if not states:
            raise InvalidInputError("Lista de estados vazia")
        stacked = np.unique(np.vstack([self.upsilon(s, zero_tol).rows for s in states]), axis=0)
        _, kernel = self.rank_and_kernel(stacked)
        if kernel.shape[0] == 0:
            return np.zeros((0, states[0].basis.m))
        q, _ = np.linalg.qr(kernel.T)
        directions = [normalize_direction(col) for col in q.T]
        return np.array([u / np.linalg.norm(u) for u in directions])

"""
Controller responsável por orquestrar os comandos da linha de comando.
Resolve a configuração em entradas dos services e devolve payloads serializáveis.
Segue padrão MVC e Single Responsibility Principle.
"""

import functools
import logging
import traceback
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from models.fock import FockBasis
from models.job_config import JobConfig
from models.operators import Potential, ReferenceHamiltonian, TwoBodyInteraction
from models.validation import validate_job
from models.verdict import UvStatus
from services.atlas_service import AtlasService
from services.functional_service import FunctionalService
from services.graph_service import GraphService
from services.hamiltonian_service import HamiltonianService
from services.representability_service import RepresentabilityService
from services.spectrum_service import SpectrumService
from services.triangle_service import TriangleService
from utils.exceptions import BoundaryDensityError, InvalidInputError, NonConvergenceError
from utils.helpers import load_matrix

logger = logging.getLogger(__name__)

Payload = Dict[str, Any]
Result = Tuple[Optional[Payload], Optional[str]]


def guarded(method: Callable[["JobController", JobConfig], Payload]) -> Callable[["JobController", JobConfig], Result]:
    """
    Converte exceções em (None, error_type).

    error_type segue o formato "<tipo>:<detalhes>" com tipo em
    invalid_input, boundary_density, non_convergence ou generic.
    """
    @functools.wraps(method)
    def wrapper(self: "JobController", config: JobConfig) -> Result:
        try:
            return method(self, config), None

        except BoundaryDensityError as e:
            return None, f"boundary_density:{e}"

        except (InvalidInputError, ValidationError) as e:
            return None, f"invalid_input:{e}"

        except NonConvergenceError as e:
            return None, f"non_convergence:{e}"

        except Exception as e:
            # Erro genérico - retorna detalhes completos para debug
            error_details = f"{type(e).__name__}: {str(e)}\n\nStack Trace:\n{traceback.format_exc()}"
            return None, f"generic:{error_details}"

    return wrapper


class JobController:
    """
    Controller que executa um comando por configuração.
    Cada cmd_* devolve (payload, error_type) e nunca propaga exceções.
    """

    def __init__(self):
        self.graph_service = GraphService()
        self.hamiltonian_service = HamiltonianService(self.graph_service)
        self.spectrum_service = SpectrumService()
        self.representability_service = RepresentabilityService(self.spectrum_service, self.hamiltonian_service)
        self.functional_service = FunctionalService(
            self.hamiltonian_service, self.spectrum_service, self.representability_service
        )
        self.triangle_service = TriangleService()
        self.atlas_service = AtlasService(
            self.spectrum_service, self.hamiltonian_service, self.representability_service
        )

    def run(self, config: JobConfig) -> Result:
        """
        Despacha para cmd_<comando>.

        Args:
            config: Configuração validada

        Returns:
            Tupla (payload, error_type)
        """
        handler = getattr(self, "cmd_" + config.command.replace("-", "_"))
        logger.info("Comando %s: grafo %s, N=%d", config.command, config.graph, config.n)
        return handler(config)

    # Resolução de entradas

    def _setup(self, config: JobConfig) -> Tuple[FockBasis, ReferenceHamiltonian, Potential]:
        graph = self.graph_service.load_graph(config.graph)
        m = graph.vertex_count

        is_valid, errors = validate_job(m, config.n, config.potential, config.rho)
        if not is_valid:
            raise InvalidInputError("; ".join(errors))
        if not self.graph_service.is_connected(graph):
            logger.warning("Grafo %s não é conexo", graph.name or config.graph)

        w = None
        if config.interaction:
            w = TwoBodyInteraction(load_matrix(config.interaction))
            if w.m != m:
                raise InvalidInputError(f"Interação é {w.m}×{w.m}, esperado {m}×{m}")

        reference = ReferenceHamiltonian(self.hamiltonian_service.laplacian_hamiltonian(graph), w)
        basis = FockBasis.build(m, config.n)
        logger.debug("Base de Fock: M=%d, N=%d, L=%d", m, config.n, basis.dim)
        potential = Potential(np.asarray(config.potential, dtype=float)) if config.potential else Potential.zero(m)
        return basis, reference, potential

    # Comandos

    @guarded
    def cmd_spectrum(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        op = self.hamiltonian_service.assemble_reference(reference, basis, potential)
        spectrum = self.spectrum_service.eigendecompose(op)
        gm = self.spectrum_service.ground_manifold_of(spectrum, config.degeneracy_tol)
        payload = spectrum.to_dict(config.degeneracy_tol)
        payload["ground"] = gm.to_dict()
        payload["rows"] = [{"k": k + 1, "eigenvalue": float(x)} for k, x in enumerate(spectrum.eigenvalues)]
        return payload

    @guarded
    def cmd_hamiltonian(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        op = self.hamiltonian_service.assemble_reference(reference, basis, potential)
        return {"m": basis.m, "n": basis.n, "dim": basis.dim, "rows": self.hamiltonian_service.matrix_rows(op)}

    @guarded
    def cmd_density(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        op = self.hamiltonian_service.assemble_reference(reference, basis, potential)
        gm = self.spectrum_service.ground_manifold(op, config.degeneracy_tol)
        density = self.spectrum_service.density_of(gm.states[0])
        return {
            "energy": gm.energy,
            "degeneracy": gm.degeneracy,
            "warnings": gm.warnings,
            "rho": density.rho.tolist(),
            "rows": density.to_rows()
        }

    @guarded
    def cmd_uvcheck(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        h0 = self.hamiltonian_service.assemble_reference(reference, basis)
        diagonal = self.hamiltonian_service.potential_diagonal(potential.v, basis)
        gm = self.spectrum_service.ground_manifold(h0.plus_diagonal(diagonal), config.degeneracy_tol)
        verdict = self.representability_service.certify(
            gm.states[0], h0, potential,
            zero_tol=config.zero_tol, degeneracy_tol=config.degeneracy_tol, jobs=config.jobs
        )
        payload = verdict.to_dict()
        payload["degeneracy"] = gm.degeneracy
        payload["rho"] = self.spectrum_service.density_of(gm.states[0]).rho.tolist()
        return payload

    @guarded
    def cmd_lieb(self, config: JobConfig) -> Payload:
        basis, reference, _ = self._setup(config)
        result = self.functional_service.lieb_f(
            config.rho, reference, basis, seed=config.seed,
            samples=config.samples, degeneracy_tol=config.degeneracy_tol
        )
        return result.to_dict()

    @guarded
    def cmd_pure(self, config: JobConfig) -> Payload:
        basis, reference, _ = self._setup(config)
        result = self.functional_service.pure_f(
            config.rho, reference, basis, restarts=config.restarts, seed=config.seed, jobs=config.jobs
        )
        return result.to_dict()

    @guarded
    def cmd_triangle_f(self, config: JobConfig) -> Payload:
        region = self.triangle_service.triangle_region(config.rho)
        return {
            "rho": list(config.rho),
            "region": region.value,
            "value": self.triangle_service.triangle_f_analytic(config.rho)
        }

    @guarded
    def cmd_invert(self, config: JobConfig) -> Payload:
        basis, reference, _ = self._setup(config)
        result = self.functional_service.lieb_f(
            config.rho, reference, basis, seed=config.seed,
            samples=config.samples, degeneracy_tol=config.degeneracy_tol
        )
        if not result.finite:
            raise InvalidInputError("Densidade fora do hipersimplexo: F = +inf, sem potencial")
        v = result.maximizer_v
        payload: Payload = {
            "v": v.v.tolist(),
            "residual": result.residual,
            "radius": result.radius,
            "value": result.value,
            "certificate_gap": result.certificate_gap,
            "converged": result.converged
        }

        # Não unicidade: núcleo de Υ do estado fundamental em v*
        h0 = self.hamiltonian_service.assemble_reference(reference, basis)
        diagonal = self.hamiltonian_service.potential_diagonal(v.v, basis)
        gm = self.spectrum_service.ground_manifold(h0.plus_diagonal(diagonal), config.degeneracy_tol)
        payload["degeneracy"] = gm.degeneracy
        if gm.is_degenerate:
            payload["uv_status"] = None
            payload["kernel_basis"] = self.representability_service.nonuv_subspace(gm.states, config.zero_tol).tolist()
        else:
            verdict = self.representability_service.certify(
                gm.states[0], h0, v,
                zero_tol=config.zero_tol, degeneracy_tol=config.degeneracy_tol, jobs=config.jobs
            )
            payload["uv_status"] = verdict.status.value
            payload["kernel_basis"] = verdict.kernel_basis
        payload["unique"] = payload["uv_status"] in (UvStatus.CERTIFIED_BY_COUNT.value, UvStatus.CERTIFIED_BY_RANK.value)
        return payload

    @guarded
    def cmd_minimize(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        if config.functional == "triangle":
            functional = self.triangle_service.triangle_f_analytic
        elif config.functional == "lieb":
            functional = lambda rho: self.functional_service.lieb_f(rho, reference, basis, seed=config.seed).value
        else:
            functional = lambda rho: self.functional_service.pure_f(
                rho, reference, basis, restarts=config.restarts, seed=config.seed
            ).value
        result = self.functional_service.minimize_energy_via_functional(
            potential, functional, basis.n, reference=reference, basis=basis
        )
        return result.to_dict()

    @guarded
    def cmd_atlas(self, config: JobConfig) -> Payload:
        basis, reference, potential = self._setup(config)
        if config.preset == "square":
            grid = self.atlas_service.square_grid(steps=config.steps)
        else:
            grid = self.atlas_service.triangle_ray(int(config.preset[-1]), steps=config.steps)
        if grid.m != basis.m:
            raise InvalidInputError(f"Grade {config.preset} requer M = {grid.m}, grafo tem M = {basis.m}")
        if config.potential:
            grid = grid.model_copy(update={"base": potential.v.tolist()})

        cells = self.atlas_service.sweep(
            grid, reference, basis,
            degeneracy_tol=config.degeneracy_tol, zero_tol=config.zero_tol, jobs=config.jobs
        )
        return {
            "manifest": self.atlas_service.manifest(grid, basis, config.degeneracy_tol, config.zero_tol),
            "rows": [cell.to_row(grid.labels) for cell in cells]
        }

    @guarded
    def cmd_surface(self, config: JobConfig) -> Payload:
        basis, reference, _ = self._setup(config)
        rows = self.functional_service.functional_surface(
            reference, basis, grid_steps=config.steps,
            pure_restarts=config.restarts, seed=config.seed, jobs=config.jobs
        )
        return {"rows": rows}

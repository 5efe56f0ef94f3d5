"""
Modelo de configuração de um job da linha de comando.
Utiliza Pydantic para validar a combinação de flags e variáveis de ambiente
antes de qualquer cálculo.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from utils.constants import ATLAS_STEPS, DEGENERACY_TOL, PURE_RESTARTS, SURFACE_STEPS

COMMANDS = (
    "spectrum",
    "density",
    "uvcheck",
    "lieb",
    "pure",
    "triangle-f",
    "atlas",
    "invert",
    "surface",
    "minimize",
    "hamiltonian",
)

ATLAS_PRESETS = ("square", "triangle-ray-1", "triangle-ray-2", "triangle-ray-3")

# Comandos que exigem cada entrada
NEEDS_RHO = ("lieb", "pure", "triangle-f", "invert")


class JobConfig(BaseModel):
    """
    Configuração validada de um comando.

    Attributes:
        command: Comando da CLI
        graph: Nome embutido ou caminho do grafo
        n: Número de partículas
        potential: Potencial (None = zero)
        interaction: Caminho da matriz W (None = sem interação)
        rho: Densidade alvo
        seed: Semente dos otimizadores
        jobs: Workers
        degeneracy_tol: Tolerância relativa de degenerescência
        zero_tol: Tolerância de suporte (None = 1e-10·√L)
        restarts: Reinícios de pure_f
        samples: Amostras por variedade degenerada
        steps: Pontos por eixo (atlas) ou divisões (surface); None = padrão do comando
        preset: Grade pronta do atlas
        functional: Funcional usado em minimize
        fmt: Formato de saída
        output: Arquivo de saída (None = stdout)
    """

    command: Literal[COMMANDS]
    graph: str = Field(default="triangle", min_length=1)
    n: int = Field(default=2, ge=1)
    potential: Optional[List[float]] = None
    interaction: Optional[str] = None
    rho: Optional[List[float]] = None
    seed: int = Field(default=0, ge=0)
    jobs: int = Field(default=1, ge=1)
    degeneracy_tol: float = Field(default=DEGENERACY_TOL, gt=0.0, lt=1.0)
    zero_tol: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    restarts: int = Field(default=PURE_RESTARTS, ge=1)
    samples: int = Field(default=128, ge=1)
    steps: Optional[int] = Field(default=None, ge=1)
    preset: Literal[ATLAS_PRESETS] = "square"
    functional: Literal["triangle", "lieb", "pure"] = "triangle"
    fmt: Literal["json", "csv", "xlsx"] = "json"
    output: Optional[str] = None

    @field_validator("graph")
    @classmethod
    def strip_graph(cls, v: str) -> str:
        return v.strip()

    @model_validator(mode="after")
    def check_command_inputs(self) -> "JobConfig":
        """Cada comando recebe as entradas de que precisa."""
        if self.command in NEEDS_RHO and self.rho is None:
            raise ValueError(f"O comando {self.command} requer --rho")
        if self.command == "minimize" and self.potential is None:
            raise ValueError("O comando minimize requer --potential")
        if self.fmt == "xlsx" and self.output is None:
            raise ValueError("Formato xlsx requer --output")
        return self

    @model_validator(mode="after")
    def default_steps(self) -> "JobConfig":
        """Sem --steps: 12 divisões para surface, 81 pontos por eixo para o atlas."""
        if self.steps is None:
            self.steps = SURFACE_STEPS if self.command == "surface" else ATLAS_STEPS
        return self

"""
Modelos de varreduras no espaço de potenciais.
Grades validadas com Pydantic; células como dataclasses.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from models.operators import Potential
from models.spectrum import Density
from models.verdict import UvStatus

GAUGE_TOL = 1e-12


class GridAxis(BaseModel):
    """
    Eixo da grade: v = base + Σ_k x_k · direction_k.

    Attributes:
        direction: Direção no plano Σv = 0
        start: Primeiro valor de x
        stop: Último valor de x (incluído)
        steps: Número de pontos
        label: Nome da coordenada na saída
    """

    direction: List[float] = Field(..., min_length=1)
    start: float
    stop: float
    steps: int = Field(..., ge=1)
    label: str = Field(default="x")

    @field_validator("direction")
    @classmethod
    def in_gauge_plane(cls, v: List[float]) -> List[float]:
        scale = max(1.0, float(np.max(np.abs(v))))
        if abs(sum(v)) > GAUGE_TOL * scale * len(v):
            raise ValueError(f"Direção {v} fora do plano Σv = 0 (soma {sum(v):.3e})")
        return v

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


class PotentialGridSpec(BaseModel):
    """
    Grade cartesiana de potenciais.

    Attributes:
        axes: Eixos (o primeiro varia mais devagar)
        base: Potencial base (zero se omitido)
    """

    axes: List[GridAxis] = Field(..., min_length=1)
    base: Optional[List[float]] = None

    @model_validator(mode="after")
    def check_dimensions(self) -> "PotentialGridSpec":
        m = len(self.axes[0].direction)
        for axis in self.axes:
            if len(axis.direction) != m:
                raise ValueError("Todas as direções devem ter o mesmo comprimento M")
        if self.base is not None and len(self.base) != m:
            raise ValueError(f"Potencial base tem {len(self.base)} entradas, esperado M = {m}")
        return self

    @property
    def m(self) -> int:
        return len(self.axes[0].direction)

    @property
    def labels(self) -> List[str]:
        return [axis.label for axis in self.axes]

    @property
    def size(self) -> int:
        return int(np.prod([axis.steps for axis in self.axes]))

    def points(self) -> Iterator[Tuple[Tuple[float, ...], np.ndarray]]:
        """Percorre a grade em ordem lexicográfica: (coordenadas, v)."""
        base = np.zeros(self.m) if self.base is None else np.asarray(self.base, dtype=float)
        directions = [np.asarray(axis.direction, dtype=float) for axis in self.axes]
        for coords in product(*(axis.values() for axis in self.axes)):
            v = base.copy()
            for x, d in zip(coords, directions):
                v = v + x * d
            yield tuple(float(x) for x in coords), v


@dataclass(eq=False)
class AtlasCell:
    """
    Resultado de uma célula da varredura.

    Attributes:
        index: Posição na ordem da grade
        coords: Coordenadas nos eixos
        v: Potencial
        ground_energy: E_0
        degeneracy: Dimensão do espaço fundamental
        gap: Distância ao primeiro nível excluído
        uv_status: Veredito da seleção canônica (None se não certificado)
        density: Densidade do primeiro autovetor com fase fixada
        warnings: Avisos do espectro
    """

    index: int
    coords: Tuple[float, ...]
    v: Potential
    ground_energy: float
    degeneracy: int
    gap: float
    uv_status: Optional[UvStatus]
    density: Density
    warnings: List[str] = field(default_factory=list)

    @property
    def degenerate(self) -> bool:
        return self.degeneracy > 1

    def to_row(self, labels: List[str]) -> Dict[str, Any]:
        row: Dict[str, Any] = {label: x for label, x in zip(labels, self.coords)}
        row.update({
            "E": self.ground_energy,
            "degeneracy": self.degeneracy,
            "gap": self.gap,
            "uv_status": self.uv_status.value if self.uv_status is not None else "",
        })
        row.update({f"rho_{i + 1}": float(x) for i, x in enumerate(self.density.rho)})
        return row

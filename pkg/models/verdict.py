"""
Modelos de certificação de v-representabilidade única (uv).
Segue Single Responsibility Principle.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from models.fock import MultiIndex, labels_of


class UvStatus(str, Enum):
    """Classes de veredito."""

    CERTIFIED_BY_COUNT = "certified_uv_by_count"
    CERTIFIED_BY_RANK = "certified_uv_by_rank"
    NON_UV_WITH_WITNESS = "non_uv_with_witness"
    UNDETERMINED = "undetermined"


@dataclass(eq=False)
class UpsilonMatrix:
    """
    Matriz (0,1) com uma linha E_I por multi-índice do suporte.

    Attributes:
        rows: Array inteiro |C[Ψ]|×M, soma de cada linha = N
        support: Multi-índices correspondentes às linhas
    """

    rows: np.ndarray
    support: List[MultiIndex]

    @property
    def m(self) -> int:
        return self.rows.shape[1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "support": [list(labels_of(idx)) for idx in self.support],
            "rows": self.rows.astype(int).tolist()
        }


@dataclass
class Witness:
    """
    Direção u em ker Υ[Ψ] e intervalo de t onde Ψ segue fundamental.

    Attributes:
        direction: Vetor u (norma do máximo 1)
        t_min: Extremo inferior (<= 0)
        t_max: Extremo superior (>= 0)
        unbounded_below: Persistiu no maior |t| negativo varrido
        unbounded_above: Persistiu no maior t positivo varrido
    """

    direction: List[float]
    t_min: float
    t_max: float
    unbounded_below: bool = False
    unbounded_above: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "direction": self.direction,
            "t_min": None if self.unbounded_below else self.t_min,
            "t_max": None if self.unbounded_above else self.t_max,
            "scanned_t_min": self.t_min,
            "scanned_t_max": self.t_max,
            "unbounded_below": self.unbounded_below,
            "unbounded_above": self.unbounded_above
        }


@dataclass
class UvVerdict:
    """
    Resultado de certify().

    Attributes:
        status: Classe do veredito
        support_size: |C[Ψ]|
        odlyzko_number: g(M, N)
        rank: Posto de Υ[Ψ]
        kernel_basis: Base de ker Υ[Ψ]
        witness: Primeira testemunha encontrada (se houver)
        witnesses: Todas as testemunhas
    """

    status: UvStatus
    support_size: int
    odlyzko_number: int
    rank: int
    kernel_basis: List[List[float]] = field(default_factory=list)
    witness: Optional[Witness] = None
    witnesses: List[Witness] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "support_size": self.support_size,
            "odlyzko_number": self.odlyzko_number,
            "rank": self.rank,
            "kernel_basis": self.kernel_basis,
            "witness": self.witness.to_dict() if self.witness else None,
            "witnesses": [w.to_dict() for w in self.witnesses]
        }

@dataclass
class OdlyzkoCheck:
    """
    Verificação por força bruta do número de Odlyzko.

    Attributes:
        m, n: Dimensões
        g: g(M, N)
        rows_available: L = C(M, N) linhas distintas possíveis
        deficient_at_g: Existe matriz com g linhas de posto < M
        full_rank_above_g: Toda matriz com g+1 linhas distintas tem posto M
    """

    m: int
    n: int
    g: int
    rows_available: int
    deficient_at_g: bool
    full_rank_above_g: bool

    @property
    def vacuous(self) -> bool:
        """g >= L: não há matrizes com mais de g linhas distintas."""
        return self.g >= self.rows_available

    @property
    def tight(self) -> bool:
        return self.full_rank_above_g and (self.deficient_at_g or self.vacuous)

"""
Exceções do domínio.
Os controllers convertem estas exceções em tipos de erro (invalid_input, non_convergence).
"""


class InvalidInputError(ValueError):
    """Entrada rejeitada antes ou durante o cálculo (pré-condição violada)."""


class BoundaryDensityError(InvalidInputError):
    """Densidade na fronteira do hipersimplex onde só o interior é garantido."""


class NonConvergenceError(RuntimeError):
    """
    Falha numérica de convergência.

    Attributes:
        residual: Maior resíduo observado, quando disponível
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual

"""
Constantes utilizadas em todo o sistema.
Centraliza tolerâncias numéricas e valores padrão para facilitar manutenção.
"""

# Limites de dimensão
MAX_VERTICES = 63

# Tolerâncias de grafos e operadores
GRAPH_ZERO_TOL = 1e-12
HERMITIAN_TOL = 1e-12

# Tolerâncias de estados e densidades
NORMALIZATION_TOL = 1e-10
DENSITY_TOL = 1e-10
ORTHONORMAL_TOL = 1e-8

# Autovalores
EIGEN_RESIDUAL_TOL = 1e-9
GROUND_RESIDUAL_TOL = 1e-8
DEGENERACY_TOL = 1e-8
AMBIGUITY_FACTOR = 10.0

# Representabilidade
SUPPORT_TOL_FACTOR = 1e-10
PIVOT_TOL = 1e-10
KERNEL_TOL = 1e-10
T_SCAN_POINTS = 64
T_SCAN_MIN = 1e-3
T_SCAN_MAX = 1e3
T_REFINE_TOL = 1e-4
DECOMPOSITION_TOL = 1e-12
ROUND_TRIP_TOL = 1e-9

# Funcional de Lieb
LIEB_MAX_ITERATIONS = 10_000
LIEB_MIN_STEP = 1e-9
LIEB_INITIAL_STEP = 1.0
LIEB_GRADIENT_TOL = 1e-12
HULL_SAMPLES = 128

# Funcional de estados puros
PURE_PENALTY_SCHEDULE = (10.0, 1e2, 1e3, 1e4)
PURE_RESTARTS = 32
PURE_RESIDUAL_TOL = 1e-7
PURE_MULTIPLIER_ROUNDS = 20
PURE_PERTURBATION = 0.3

# Minimização via funcional
DESCENT_MAX_ITERATIONS = 5_000
DESCENT_STEP_TOL = 1e-10
FINITE_DIFFERENCE_STEP = 1e-7

# Atlas
ATLAS_STEPS = 81
SURFACE_STEPS = 12
HULL_PAIR_GRID = 11

# Triângulo
INCIRCLE_RADIUS = 6 ** -0.5
REGION_TOL = 1e-12

# Códigos de saída da CLI
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INVALID_INPUT = 2
EXIT_NON_CONVERGENCE = 3


# Configurações de exportação
MAX_FILENAME_LENGTH = 50

"""
Entry point da linha de comando.
Responsável por parsing de argumentos, configuração, logging e emissão da saída.

Uso:
    python app.py spectrum --graph triangle --n 2
    python app.py density --graph square --n 2 --potential 1,-1,-1,1 --format csv
    python app.py atlas --graph square --n 2 --preset square --output atlas.csv
"""

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

import config
from controllers.job_controller import JobController
from exporters import get_exporter
from models.job_config import ATLAS_PRESETS, COMMANDS, JobConfig
from utils.constants import (
    EXIT_INVALID_INPUT,
    EXIT_NON_CONVERGENCE,
    EXIT_OK,
    EXIT_UNEXPECTED,
)
from utils.exceptions import InvalidInputError
from utils.formatters import format_error_message, format_to_json
from utils.helpers import load_vector, sanitize_filename, timestamp

logger = logging.getLogger(__name__)

EXIT_CODES = {
    "invalid_input": EXIT_INVALID_INPUT,
    "boundary_density": EXIT_INVALID_INPUT,
    "non_convergence": EXIT_NON_CONVERGENCE,
}

VECTOR_FLAGS = ("--potential", "--rho")
NEGATIVE_VECTOR = re.compile(r"^-\s*(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?([,\s;]+[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?)*$")


def join_vector_flags(argv: Sequence[str]) -> List[str]:
    """
    Junta "--potential -1,0,1" em "--potential=-1,0,1".

    O argparse lê valores que começam com "-" como opções; só vetores
    numéricos são unidos, o resto passa intacto.
    """
    joined: List[str] = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token in VECTOR_FLAGS and i + 1 < len(tokens) and NEGATIVE_VECTOR.match(tokens[i + 1]):
            joined.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def build_parser() -> argparse.ArgumentParser:
    """
    Monta o parser com um subcomando por operação.

    Returns:
        ArgumentParser configurado
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", default="triangle", help="Grafo embutido (triangle, square, chain-M, complete-M, cuboctahedron) ou arquivo")
    common.add_argument("--n", type=int, default=2, help="Número de partículas N")
    common.add_argument("--potential", help="Potencial inline (2,1,0 ou -1,0.5,0.5) ou arquivo")
    common.add_argument("--interaction", help="Arquivo da matriz de interação W")
    common.add_argument("--rho", help="Densidade alvo inline (0.9,0.7,0.4) ou arquivo")
    common.add_argument("--seed", type=int, default=None, help="Semente (padrão LATTICE_DFT_SEED)")
    common.add_argument("--jobs", type=int, default=None, help="Workers (padrão LATTICE_DFT_JOBS)")
    common.add_argument("--degeneracy-tol", type=float, default=None, help="Tolerância relativa de degenerescência")
    common.add_argument("--zero-tol", type=float, default=None, help="Tolerância de suporte")
    common.add_argument("--restarts", type=int, default=None, help="Reinícios de pure_f")
    common.add_argument("--samples", type=int, default=None, help="Amostras por variedade degenerada")
    common.add_argument("--steps", type=int, default=None, help="Pontos por eixo (atlas) ou divisões (surface)")
    common.add_argument("--preset", choices=ATLAS_PRESETS, default="square", help="Grade do atlas")
    common.add_argument("--functional", choices=("triangle", "lieb", "pure"), default="triangle", help="Funcional de minimize")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "xlsx"), default="json", help="Formato de saída")
    common.add_argument("--output", help="Arquivo de saída (padrão stdout)")
    common.add_argument("--log-level", default=None, help="Nível de log (padrão LATTICE_DFT_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog=config.APP_NAME, description=config.APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    """
    Funde flags e variáveis de ambiente em um JobConfig validado.

    Raises:
        ValidationError: Combinação inválida
        InvalidInputError: Vetor malformado
    """
    values: Dict[str, Any] = {
        "command": args.command,
        "graph": args.graph,
        "n": args.n,
        "interaction": args.interaction,
        "seed": args.seed if args.seed is not None else config.get_default_seed(),
        "jobs": args.jobs if args.jobs is not None else config.get_default_jobs(),
        "zero_tol": args.zero_tol,
        "preset": args.preset,
        "functional": args.functional,
        "fmt": args.fmt,
        "output": args.output,
    }
    if args.potential:
        values["potential"] = load_vector(args.potential)
    if args.rho:
        values["rho"] = load_vector(args.rho)
    for key in ("degeneracy_tol", "restarts", "samples", "steps"):
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    return JobConfig(**values)


def table_rows(payload: Dict[str, Any]) -> List[Dict[str, Any]]:
    """Linhas tabulares do payload (o próprio payload, sem listas, se não houver tabela)."""
    if "rows" in payload:
        return payload["rows"]
    return [{k: v for k, v in payload.items() if not isinstance(v, (list, dict))}]


def emit(payload: Dict[str, Any], job: JobConfig) -> None:
    """
    Escreve o resultado em stdout ou arquivo no formato pedido.

    Se --output for um diretório, o nome do arquivo é gerado a partir do comando.
    O atlas grava também um manifesto JSON ao lado do arquivo de saída.
    """
    rows = [payload] if job.fmt == "json" else table_rows(payload)
    exporter = get_exporter(job.fmt)
    data = exporter.export(rows)

    if job.output is None:
        sys.stdout.write(data.decode("utf-8"))
        return

    path = Path(job.output)
    if path.is_dir():
        path = path / exporter.get_filename(sanitize_filename(job.command), timestamp())
    path.write_bytes(data)
    logger.info("Saída gravada em %s (%s)", path, exporter.get_mime_type())
    if "manifest" in payload and job.fmt != "json":
        manifest = path.with_suffix(".manifest.json")
        manifest.write_text(format_to_json(payload["manifest"]), encoding="utf-8")
        logger.info("Manifesto gravado em %s", manifest)


def report_error(error_type: str) -> int:
    """Imprime a mensagem formatada em stderr e devolve o código de saída."""
    kind, _, details = error_type.partition(":")
    error = format_error_message(kind, details)
    print(f"{error['title']}: {error['message']}", file=sys.stderr)
    print(f"Sugestão: {error['suggestion']}", file=sys.stderr)
    return EXIT_CODES.get(kind, EXIT_UNEXPECTED)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa um comando.

    Returns:
        Código de saída (0 sucesso, 2 entrada inválida, 3 não convergência, 1 inesperado)
    """
    parser = build_parser()
    args = parser.parse_args(join_vector_flags(sys.argv[1:] if argv is None else argv))
    config.setup_logging(args.log_level)

    try:
        job = config_from_args(args)
    except (ValidationError, InvalidInputError) as e:
        return report_error(f"invalid_input:{e}")

    payload, error_type = JobController().run(job)
    if error_type:
        return report_error(error_type)

    emit(payload, job)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

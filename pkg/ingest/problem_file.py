"""Problem files on disk: format detection, loading and saving."""
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from errors import ParseError
from ingest.json_format import parse_json, serialize_json
from ingest.paper_text import parse_paper_text, serialize_paper_text
from model.problem import GeneralProblem

logger = logging.getLogger('cgjlp.ingest')


class ProblemFormat(str, Enum):
    JSON = "json"
    PAPER_TEXT = "paper-text"


@dataclass(frozen=True)
class ProblemFile:
    format: ProblemFormat
    problem: GeneralProblem
    path: Path | None = None


def detect_format(path: Path) -> ProblemFormat:
    """JSON for ``.json`` files, paper-text for everything else."""
    return ProblemFormat.JSON if Path(path).suffix.lower() == '.json' else ProblemFormat.PAPER_TEXT


def parse_problem(data: bytes | str, fmt: ProblemFormat) -> GeneralProblem:
    if ProblemFormat(fmt) is ProblemFormat.JSON:
        return parse_json(data)
    return parse_paper_text(data)


def serialize_problem(gp: GeneralProblem, fmt: ProblemFormat) -> str:
    if ProblemFormat(fmt) is ProblemFormat.JSON:
        return serialize_json(gp)
    return serialize_paper_text(gp)


def load_problem(path: Path | str, fmt: ProblemFormat | str | None = None) -> ProblemFile:
    path = Path(path)
    fmt = ProblemFormat(fmt) if fmt else detect_format(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e
    logger.info(f"Loading {fmt.value} problem from {path}")
    return ProblemFile(fmt, parse_problem(data, fmt), path)


def save_problem(gp: GeneralProblem, path: Path | str, fmt: ProblemFormat | str | None = None) -> ProblemFile:
    path = Path(path)
    fmt = ProblemFormat(fmt) if fmt else detect_format(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_problem(gp, fmt))
    return ProblemFile(fmt, gp, path)

"""Problem ingestion: paper-text and JSON formats."""
from .paper_text import parse_paper_text, serialize_paper_text
from .json_format import parse_json, serialize_json
from .problem_file import (
    ProblemFile, ProblemFormat, detect_format, load_problem, parse_problem,
    save_problem, serialize_problem,
)

__all__ = ['parse_paper_text', 'serialize_paper_text', 'parse_json', 'serialize_json',
           'ProblemFile', 'ProblemFormat', 'detect_format', 'load_problem', 'parse_problem',
           'save_problem', 'serialize_problem']

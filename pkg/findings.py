"""
Findings sink - collect discrepancies found while verifying solves.

Uses fingerprint-based deduplication so a repeated check of the same
instance never records the same finding twice. Safe for concurrent
appenders; records are written as one JSON object per line.
"""

import json
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from modes import FindingCategory

logger = logging.getLogger('cgjlp.findings')


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'item'):
        return value.item()
    if hasattr(value, 'value') and isinstance(getattr(value, 'value'), str):
        return value.value
    return value


@dataclass
class Finding:
    instance: str
    category: FindingCategory
    details: dict = field(default_factory=dict)
    seed: int | None = None

    def to_record(self) -> dict:
        return {
            'instance': self.instance,
            'seed': self.seed,
            'category': FindingCategory(self.category).value,
            'details': _jsonable(self.details),
        }


class FindingsCollector:
    """Append-only collection of findings."""

    def __init__(self):
        self._findings: list[Finding] = []
        self._seen: set[str] = set()
        self._lock = threading.Lock()

    def fingerprint(self, finding: Finding) -> str:
        """
        Generate a unique fingerprint for a finding.

        Format: {instance}:{category}:{check}
        Examples:
            - random-0007:oracle-disagreement:value
            - example05:iteration-bound-exceeded:bound
        """
        check = str(finding.details.get('check', 'default')).replace(':', '_')
        return f"{finding.instance}:{FindingCategory(finding.category).value}:{check}"

    def add(self, finding: Finding) -> bool:
        """Record a finding; False if an identical one is already present."""
        fp = self.fingerprint(finding)
        with self._lock:
            if fp in self._seen:
                logger.debug(f"Duplicate finding ignored: {fp}")
                return False
            self._seen.add(fp)
            self._findings.append(finding)
        logger.info(f"New finding: {fp}")
        return True

    def extend(self, findings) -> int:
        return sum(1 for f in findings if self.add(f))

    def __len__(self) -> int:
        return len(self._findings)

    @property
    def findings(self) -> list[Finding]:
        with self._lock:
            return list(self._findings)

    def write_jsonl(self, path: Path) -> bool:
        """Write every finding as one JSON object per line."""
        path = Path(path)
        lines = [json.dumps(f.to_record(), sort_keys=True) for f in self.findings]
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(''.join(line + '\n' for line in lines))
        except OSError as e:
            logger.error(f"Failed to write findings to {path}: {e}")
            return False
        logger.info(f"Wrote {len(lines)} findings to {path}")
        return True


def load_jsonl(path: Path) -> list[dict]:
    """Read a findings file back as plain records."""
    records = []
    for line in Path(path).read_text().splitlines():
        if line.strip():
            records.append(json.loads(line))
    return records

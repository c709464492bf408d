"""Summarize findings from a batch of verified solves."""
from collections import Counter

from findings import Finding
from modes import FindingCategory


class FindingsReport:
    """Per-category counts and rates over a batch of instances."""

    def __init__(self, findings: list[Finding], instances: int, outcomes: list[str] | None = None):
        self.findings = findings
        self.instances = instances
        self.outcomes = outcomes or []

    def analyze(self) -> dict:
        results = {
            'instances': self.instances,
            'findings': len(self.findings),
            'categories': {c.value: 0 for c in FindingCategory},
            'outcomes': dict(sorted(Counter(self.outcomes).items())),
        }
        flagged = set()
        for f in self.findings:
            results['categories'][FindingCategory(f.category).value] += 1
            flagged.add(f.instance)

        results['flagged_instances'] = len(flagged)
        if self.instances > 0:
            results['pass_rate'] = (self.instances - len(flagged)) / self.instances
        else:
            results['pass_rate'] = 0
        return results

    def format_table(self) -> str:
        results = self.analyze()
        lines = [
            f"{'category':<28}{'count':>7}",
            '-' * 35,
        ]
        for category, count in results['categories'].items():
            lines.append(f"{category:<28}{count:>7}")
        lines.append('-' * 35)
        lines.append(f"{'findings':<28}{results['findings']:>7}")
        lines.append(f"{'instances':<28}{results['instances']:>7}")
        lines.append(f"{'flagged instances':<28}{results['flagged_instances']:>7}")
        lines.append(f"{'pass rate':<28}{results['pass_rate']:>7.1%}")
        if results['outcomes']:
            lines.append('')
            for outcome, count in results['outcomes'].items():
                lines.append(f"{'outcome ' + outcome:<28}{count:>7}")
        return '\n'.join(lines) + '\n'

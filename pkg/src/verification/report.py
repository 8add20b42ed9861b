"""Structured pass/fail reports for identity checks."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..utils.constants import MAX_FAILURES_PER_IDENTITY


@dataclass
class Failure:
    """One counterexample, with both sides in canonical string form."""
    indices: Tuple
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {'indices': list(self.indices), 'expected': self.expected, 'actual': self.actual}

    @classmethod
    def from_dict(cls, data: dict) -> 'Failure':
        return cls(indices=tuple(data['indices']), expected=data['expected'], actual=data['actual'])


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a bound."""
    identity_id: str
    params: Dict[str, Any] = field(default_factory=dict)
    cases_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    max_failures: int = MAX_FAILURES_PER_IDENTITY

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def full(self) -> bool:
        return len(self.failures) >= self.max_failures

    def record(self, indices: Tuple, expected: Any, actual: Any) -> None:
        if not self.full:
            self.failures.append(Failure(tuple(indices), str(expected), str(actual)))

    def check(self, indices: Tuple, expected: Any, actual: Any) -> bool:
        """Count one case and record it when the sides differ; False once the failure cap is hit."""
        self.cases_checked += 1
        if expected != actual:
            self.record(indices, expected, actual)
        return not self.full

    def to_dict(self) -> dict:
        return {
            'identity': self.identity_id,
            'status': self.status,
            'params': self.params,
            'cases_checked': self.cases_checked,
            'failures': [f.to_dict() for f in self.failures],
            'elapsed': round(self.elapsed, 6),
            'max_failures': self.max_failures,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'IdentityReport':
        return cls(
            identity_id=data['identity'],
            params=data.get('params', {}),
            cases_checked=data.get('cases_checked', 0),
            failures=[Failure.from_dict(f) for f in data.get('failures', [])],
            elapsed=data.get('elapsed', 0.0),
            max_failures=data.get('max_failures', MAX_FAILURES_PER_IDENTITY),
        )

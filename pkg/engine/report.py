"""
Verification records and reports shared by every suite.
"""
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    DISCREPANCY = 'paper-discrepancy'


@dataclass
class CheckRecord:
    id: str
    reference: str
    status: CheckStatus
    witness: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {'id': self.id, 'paper_eq': self.reference, 'status': self.status.value}
        if self.witness is not None:
            data['witness'] = self.witness
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CheckRecord':
        return cls(data['id'], data['paper_eq'], CheckStatus(data['status']), data.get('witness'))


@dataclass
class VerificationReport:
    suite: str
    max_degree: int
    checks: List[CheckRecord] = field(default_factory=list)
    wall_ms: Optional[float] = None

    def record(self, check_id: str, reference: str, passed: bool, witness: Any = None,
               on_failure: CheckStatus = CheckStatus.FAIL) -> CheckRecord:
        """Append a check; `on_failure` is the status used when `passed` is false."""
        record = CheckRecord(check_id, reference, CheckStatus.PASS if passed else on_failure, witness)
        self.checks.append(record)
        return record

    def extend(self, other: 'VerificationReport', prefix: str = '') -> None:
        for record in other.checks:
            self.checks.append(CheckRecord(f"{prefix}{record.id}", record.reference, record.status, record.witness))

    def with_status(self, status: CheckStatus) -> List[CheckRecord]:
        return [record for record in self.checks if record.status == status]

    @property
    def failures(self) -> List[CheckRecord]:
        return self.with_status(CheckStatus.FAIL)

    @property
    def discrepancies(self) -> List[CheckRecord]:
        return self.with_status(CheckStatus.DISCREPANCY)

    @property
    def ok(self) -> bool:
        return not self.failures

    def get(self, check_id: str) -> Optional[CheckRecord]:
        for record in self.checks:
            if record.id == check_id:
                return record
        return None

    def counts(self) -> Dict[str, int]:
        return {status.value: len(self.with_status(status)) for status in CheckStatus}

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.wall_ms = round((time.perf_counter() - start) * 1000, 3)

    def to_dict(self, stable: bool = False) -> Dict[str, Any]:
        """JSON form; `stable` drops the wall time so reruns compare byte for byte."""
        data = {
            'suite': self.suite,
            'max_degree': self.max_degree,
            'checks': [record.to_dict() for record in self.checks],
        }
        if not stable:
            data['wall_ms'] = self.wall_ms
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        return cls(data['suite'], data['max_degree'],
                   [CheckRecord.from_dict(item) for item in data['checks']],
                   data.get('wall_ms'))

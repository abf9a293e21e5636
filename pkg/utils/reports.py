from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True, order=True)
class Violation:
    """
    One failed constraint of a verification.

    :param kind: constraint family, e.g. 'edge', 'unitary', 'consistency'
    :param where: the vertex or edge the constraint belongs to
    :param colours: the colour (pair) involved, empty if none
    :param residual: how far the constraint is from holding
    """
    kind: str
    where: Tuple[int, ...]
    colours: Tuple[int, ...] = ()
    residual: float = field(default=0.0, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'where': list(self.where),
                'colours': list(self.colours), 'residual': self.residual}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Violation:
        return cls(data['kind'], tuple(data['where']),
                   tuple(data.get('colours', ())), float(data['residual']))

    def __str__(self):
        where = '-'.join(str(v) for v in self.where)
        colours = f' colours {self.colours}' if self.colours else ''
        return f'{self.kind} {where}{colours}: residual {self.residual:.3g}'


@dataclass
class Report:
    passed: bool
    worst_residual: float = 0.0
    tolerance: float = 0.0
    violations: List[Violation] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    @classmethod
    def from_violations(cls, violations: Iterable[Violation],
                        tolerance: float = 0.0,
                        worst_residual: Optional[float] = None,
                        **details) -> Report:
        """
        Build a report from collected violations. The worst residual is the
        largest residual seen, which may come from constraints that held.
        """
        violations = sorted(violations)
        if worst_residual is None:
            worst_residual = max((v.residual for v in violations),
                                 default=0.0)
        worst_residual = float(worst_residual)
        passed = not violations and worst_residual <= tolerance
        return cls(passed, worst_residual, tolerance, violations, details)

    def to_dict(self) -> Dict[str, Any]:
        return {'pass': self.passed,
                'worst_residual': self.worst_residual,
                'tolerance': self.tolerance,
                'violations': [v.to_dict() for v in self.violations],
                'details': self.details}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Report:
        return cls(bool(data['pass']), float(data['worst_residual']),
                   float(data['tolerance']),
                   [Violation.from_dict(v) for v in data['violations']],
                   dict(data.get('details', {})))

    def summary(self, limit: int = 5) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        lines = [f'{status} (worst residual {self.worst_residual:.3g}, '
                 f'tolerance {self.tolerance:.3g})']
        for v in self.violations[:limit]:
            lines.append(f'  {v}')
        if len(self.violations) > limit:
            lines.append(f'  ... {len(self.violations) - limit} more')
        return '\n'.join(lines)


VerifyReport = Report

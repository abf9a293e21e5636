from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Union

from graphs.graph import ClassicalColouring, Graph
from utils.enums import Outcome
from vectors.representation import VectorRep

ClaimValue = Union[int, bool]


@dataclass
class GeneratedGraph:
    graph: Graph
    comment: str
    rep: Optional[VectorRep] = None
    colouring: Optional[ClassicalColouring] = None


@dataclass
class ReproOutcome:
    """One checked claim: exact equality of claimed and computed values"""
    item: str
    quantity: str
    claimed: ClaimValue
    citation: str
    computed: Optional[ClaimValue] = None
    outcome: Outcome = Outcome.INCONCLUSIVE
    ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {'item': self.item, 'quantity': self.quantity,
                'claimed': self.claimed, 'citation': self.citation,
                'computed': self.computed, 'pass': self.passed,
                'outcome': self.outcome.value, 'ms': round(self.ms, 3),
                'details': self.details}

    def __str__(self):
        computed = '?' if self.computed is None else self.computed
        return (f'[{self.outcome.value.upper():>12}] {self.item}.'
                f'{self.quantity}: claimed {self.claimed}, computed '
                f'{computed}  ({self.citation})')


@dataclass
class ExperimentRecord:
    trial: int
    seed: int
    n: int
    p: float
    omega: Optional[int]
    chi: Optional[int]
    bollobas_bound: float
    within_bound: Optional[bool]
    oracle_agrees: Optional[bool] = None
    elapsed_ms: Optional[float] = None

    def __post_init__(self):
        if self.omega is not None and self.chi is not None \
                and self.omega > self.chi:
            raise RuntimeError(f'trial {self.trial}: omega {self.omega} '
                               f'exceeds chi {self.chi}')

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if self.elapsed_ms is None:
            del data['elapsed_ms']
        return data

    def __str__(self):
        omega = '?' if self.omega is None else self.omega
        chi = '-' if self.chi is None else self.chi
        if self.within_bound is None:
            within = '?'
        else:
            within = 'yes' if self.within_bound else 'NO'
        return (f'{self.trial:>4} {self.n:>4} {omega:>6} {chi:>4} '
                f'{self.bollobas_bound:>8.3f} {within:>7}')


@dataclass
class ExperimentSummary:
    prng: str
    seed: int
    p: float
    epsilon: float
    trials: int
    n_values: List[int]
    chi_cap: int
    records: int = 0
    inconclusive: int = 0
    violations: int = 0
    violation_fraction: float = 0.0
    max_omega: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['max_omega'] = {str(k): v for k, v in self.max_omega.items()}
        return data

    def __str__(self):
        return (f'{self.records} trials ({self.prng}, seed {self.seed}, '
                f'p={self.p}, eps={self.epsilon}): '
                f'{self.violations} above (1 + eps) 2 ln n / ln(1/p), '
                f'violation fraction {self.violation_fraction:.3f}, '
                f'{self.inconclusive} inconclusive')

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from graphs.graph import ClassicalColouring
from utils.config import default_budget
from utils.errors import BudgetExceeded


class SearchBudget:
    """
    Node counter shared by every search of one solve. Exceeding the limit
    raises BudgetExceeded, which callers must treat as inconclusive.
    """

    __slots__ = ['limit', 'nodes', '_start']

    def __init__(self, limit: Optional[int] = None):
        self.limit = default_budget() if limit is None else int(limit)
        self.nodes = 0
        self._start = time.perf_counter()

    def __repr__(self):
        return f'<SearchBudget nodes={self.nodes} limit={self.limit}>'

    def tick(self, parameter: str):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(parameter, self.nodes, self.limit)

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self._start) * 1000


@dataclass
class SolveResult:
    parameter: str
    value: int
    witness: Union[List[int], ClassicalColouring, None]
    nodes: int = 0
    ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self, witness: bool = True) -> Dict[str, Any]:
        data = {'parameter': self.parameter, 'value': self.value,
                'nodes': self.nodes, 'ms': round(self.ms, 3)}
        if witness:
            if isinstance(self.witness, ClassicalColouring):
                data['witness'] = list(self.witness.colours)
            else:
                data['witness'] = self.witness
        data.update(self.details)
        return data

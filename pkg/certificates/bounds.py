import math

from utils.errors import BoundError

BOUND_BASE = (1 + 2 * math.sqrt(2)) ** 2
MAX_EXPONENT = 100


def upper_bound_report(k: int) -> float:
    """Classical colour count (1 + 2 sqrt 2)^(2k) implied by a
    k-dimensional orthogonal representation"""
    if k < 1:
        raise BoundError(f'k must be at least 1, got {k}')
    if k > MAX_EXPONENT:
        raise BoundError(f'Bound overflows for k={k} (limit {MAX_EXPONENT})')
    return BOUND_BASE ** k

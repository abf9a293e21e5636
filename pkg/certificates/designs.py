"""
Fourier matrices and the real orthogonal designs OD(4; 1,1,1,1) and
OD(8; 1,...,1). A design is a sign pattern: entry (row, col) of the matrix
for a vector x is sign * x[index].
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from utils.errors import CertificateError

logger = logging.getLogger(__name__)

SignPattern = Tuple[Tuple[Tuple[int, int], ...], ...]

# Quaternion left multiplication
OD4_ROWS = (
    '+0 +1 +2 +3',
    '-1 +0 -3 +2',
    '-2 +3 +0 -1',
    '-3 -2 +1 +0',
)

# Octonion left multiplication on the Fano triples (t, t+1, t+3 mod 7)
OD8_ROWS = (
    '+0 +1 +2 +3 +4 +5 +6 +7',
    '-1 +0 +4 +7 -2 +6 -5 -3',
    '-2 -4 +0 +5 +1 -3 +7 -6',
    '-3 -7 -5 +0 +6 +2 -4 +1',
    '-4 +2 -1 -6 +0 +7 +3 -5',
    '-5 -6 +3 -2 -7 +0 +1 +4',
    '-6 +5 -7 +4 -3 -1 +0 +2',
    '-7 +3 +6 -1 +5 -4 -2 +0',
)


def parse_pattern(rows: Sequence[str]) -> SignPattern:
    pattern = []
    for row in rows:
        entries = []
        for token in row.split():
            sign = -1 if token[0] == '-' else 1
            entries.append((int(token[1:]), sign))
        pattern.append(tuple(entries))
    return tuple(pattern)


def is_orthogonal_design(pattern: SignPattern) -> bool:
    """Symbolically check V V^T = (x_0^2 + ... + x_{n-1}^2) I"""
    n = len(pattern)
    x = sympy.symbols(f'x0:{n}')
    matrix = sympy.Matrix(n, n, lambda r, c: pattern[r][c][1]
                          * x[pattern[r][c][0]])
    target = sum(s ** 2 for s in x) * sympy.eye(n)
    return (matrix * matrix.T - target).expand() == sympy.zeros(n, n)


def columns_are_signed_permutations(pattern: SignPattern) -> bool:
    n = len(pattern)
    return all(sorted(pattern[r][c][0] for r in range(n)) == list(range(n))
               for c in range(n))


@lru_cache(maxsize=None)
def design(order: int) -> SignPattern:
    """The verified sign pattern for order 4 or 8"""
    if order == 4:
        pattern = parse_pattern(OD4_ROWS)
    elif order == 8:
        pattern = parse_pattern(OD8_ROWS)
    else:
        raise CertificateError(f'No real orthogonal design of order {order} '
                               f'with all weights 1 is provided')
    if not is_orthogonal_design(pattern) or \
            not columns_are_signed_permutations(pattern):
        raise CertificateError(f'OD({order}) table failed verification')
    logger.debug(f'OD({order}) sign pattern verified')
    return pattern


def od_matrix(vector: Sequence[float]) -> np.ndarray:
    vector = np.asarray(vector, dtype=float)
    pattern = design(vector.size)
    matrix = np.empty((vector.size, vector.size))
    for r, row in enumerate(pattern):
        for c, (index, sign) in enumerate(row):
            matrix[r, c] = sign * vector[index]
    return matrix


def fourier_matrix(c: int) -> np.ndarray:
    """[F_c]_{jk} = exp(2 pi i jk / c) / sqrt(c)"""
    j = np.arange(c)
    return np.exp(2j * np.pi * np.outer(j, j) / c) / np.sqrt(c)


def fourier_rows(c: int) -> List[np.ndarray]:
    """Rows of sqrt(c) F_c: unit-modulus and pairwise orthogonal"""
    return list(np.sqrt(c) * fourier_matrix(c))

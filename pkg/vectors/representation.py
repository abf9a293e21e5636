from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, ZZ_I, cyclotomic_poly, isprime, symbols

from graphs.graph import Graph
from utils.config import config
from utils.enums import Backend
from utils.errors import RepresentationError
from utils.reports import Report, Violation

logger = logging.getLogger(__name__)

_t = symbols('t')


@lru_cache(maxsize=None)
def _cyclotomic(order: int) -> Poly:
    return Poly(cyclotomic_poly(order, _t), _t)


def _integral(value) -> int:
    if isinstance(value, float) and not value.is_integer():
        raise RepresentationError(f'Non-integer entry {value}')
    return int(value)


def _coerce_entry(backend: Backend, entry, order: Optional[int]):
    if backend is Backend.INTEGER:
        return _integral(entry)
    if backend is Backend.GAUSSIAN:
        if isinstance(entry, (list, tuple)):
            return ZZ_I(_integral(entry[0]), _integral(entry[1]))
        if isinstance(entry, complex):
            return ZZ_I(_integral(entry.real), _integral(entry.imag))
        if hasattr(entry, 'x') and hasattr(entry, 'y'):
            return ZZ_I(int(entry.x), int(entry.y))
        return ZZ_I(_integral(entry))
    if backend is Backend.ROOT_EXPONENT:
        return _integral(entry) % order
    if isinstance(entry, (list, tuple)):
        value = complex(float(entry[0]), float(entry[1]))
    else:
        value = complex(entry)
    if cmath.isnan(value):
        raise RepresentationError('NaN entry in a float vector')
    return value


@dataclass(frozen=True)
class VectorRep:
    """
    A vertex-indexed family of nonzero vectors of one dimension, all over
    the same scalar backend. Root-of-unity entries are exponents k standing
    for exp(2 pi i k / order).
    """
    dim: int
    backend: Backend
    vectors: Tuple[Tuple[Any, ...], ...]
    order: Optional[int] = None

    def __post_init__(self):
        backend = Backend(self.backend)
        object.__setattr__(self, 'backend', backend)
        if backend is Backend.ROOT_EXPONENT:
            if not self.order or self.order < 1:
                raise RepresentationError('Root-of-unity vectors need a '
                                          'positive order')
        if not self.vectors:
            raise RepresentationError('A representation needs at least one '
                                      'vector')
        vectors = []
        for v, vector in enumerate(self.vectors):
            if len(vector) != self.dim:
                raise RepresentationError(f'Vector {v} has length '
                                          f'{len(vector)}, expected '
                                          f'{self.dim}')
            vector = tuple(_coerce_entry(backend, e, self.order)
                           for e in vector)
            if backend is not Backend.ROOT_EXPONENT and \
                    not any(bool(e) for e in vector):
                raise RepresentationError(f'Vector {v} is the zero vector')
            vectors.append(vector)
        object.__setattr__(self, 'vectors', tuple(vectors))

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, v: int) -> Tuple[Any, ...]:
        return self.vectors[v]

    @property
    def is_real(self) -> bool:
        if self.backend is Backend.INTEGER:
            return True
        if self.backend is Backend.COMPLEX_FLOAT:
            return all(e.imag == 0 for vector in self.vectors
                       for e in vector)
        if self.backend is Backend.GAUSSIAN:
            return all(e.y == 0 for vector in self.vectors for e in vector)
        return False

    def as_complex_array(self) -> np.ndarray:
        """The vectors as rows of a complex matrix"""
        if self.backend is Backend.ROOT_EXPONENT:
            exponents = np.array(self.vectors, dtype=float)
            return np.exp(2j * np.pi * exponents / self.order)
        if self.backend is Backend.GAUSSIAN:
            return np.array([[complex(int(e.x), int(e.y)) for e in vector]
                             for vector in self.vectors], dtype=complex)
        return np.array(self.vectors, dtype=complex)

    def has_unit_modulus(self, tol: float = 1e-12) -> bool:
        if self.backend is Backend.ROOT_EXPONENT:
            return True
        return bool(np.all(np.abs(np.abs(self.as_complex_array()) - 1)
                           <= tol))


@dataclass(frozen=True)
class InnerProductValue:
    """
    A backend-tagged inner product. Root-of-unity values are coefficient
    vectors: counts[k] copies of exp(2 pi i k / order).
    """
    backend: Backend
    value: Any
    order: Optional[int] = None
    dim: Optional[int] = None

    def is_zero(self, tol: Optional[float] = None) -> bool:
        if self.backend is Backend.INTEGER:
            return self.value == 0
        if self.backend is Backend.GAUSSIAN:
            return not self.value
        if self.backend is Backend.ROOT_EXPONENT:
            counts = self.value
            if isprime(self.order) and self.dim == self.order:
                # Exponent differences are all distinct
                return all(c == 1 for c in counts)
            remainder = Poly(list(reversed(counts)), _t).rem(
                _cyclotomic(self.order))
            return remainder.is_zero
        if tol is None:
            tol = config.tolerance('float_orthogonality')
        return abs(self.value) <= tol

    def to_complex(self) -> complex:
        if self.backend is Backend.GAUSSIAN:
            return complex(int(self.value.x), int(self.value.y))
        if self.backend is Backend.ROOT_EXPONENT:
            return sum(c * cmath.exp(2j * math.pi * k / self.order)
                       for k, c in enumerate(self.value))
        return complex(self.value)

    def modulus(self) -> float:
        if self.backend is Backend.ROOT_EXPONENT and self.is_zero():
            return 0.0
        return abs(self.to_complex())


def _conjugate(backend: Backend, entry):
    if backend is Backend.GAUSSIAN:
        return ZZ_I(entry.x, -entry.y)
    if backend is Backend.COMPLEX_FLOAT:
        return entry.conjugate()
    return entry


def inner_product(rep: VectorRep, x: int, y: int) -> InnerProductValue:
    """Conjugate-linear in the first argument"""
    u, w = rep[x], rep[y]
    backend = rep.backend
    if backend is Backend.ROOT_EXPONENT:
        counts = [0] * rep.order
        for a, b in zip(u, w):
            counts[(b - a) % rep.order] += 1
        return InnerProductValue(backend, tuple(counts), rep.order, rep.dim)
    if backend is Backend.GAUSSIAN:
        total = ZZ_I.zero
    elif backend is Backend.INTEGER:
        total = 0
    else:
        total = 0j
    for a, b in zip(u, w):
        total = total + _conjugate(backend, a) * b
    return InnerProductValue(backend, total, rep.order, rep.dim)


def _float_rows(rep: VectorRep, tol: float) -> List[int]:
    matrix = rep.as_complex_array()
    if np.isnan(matrix).any():
        raise RepresentationError('NaN entries in representation')
    gram = matrix.conj() @ matrix.T
    adjacent = np.abs(gram) <= tol
    np.fill_diagonal(adjacent, False)
    return [sum(1 << int(w) for w in np.flatnonzero(row)) for row in adjacent]


def _root_exponent_rows(rep: VectorRep) -> List[int]:
    exponents = np.array(rep.vectors, dtype=np.int64)
    target = np.arange(rep.order)
    rows = []
    for v in range(len(rep)):
        differences = np.sort((exponents - exponents[v]) % rep.order, axis=1)
        rows.append(sum(1 << int(w) for w in
                        np.flatnonzero((differences == target).all(axis=1))))
    return rows


def orthogonality_graph(rep: VectorRep, tol: Optional[float] = None) -> Graph:
    """
    One vertex per vector, adjacent iff orthogonal. Exact backends never
    touch floating point; the float backend compares moduli against tol.
    """
    if rep.backend is Backend.COMPLEX_FLOAT:
        if tol is None:
            tol = config.tolerance('float_orthogonality')
        rows = _float_rows(rep, tol)
    elif rep.backend is Backend.ROOT_EXPONENT and isprime(rep.order) \
            and rep.dim == rep.order:
        rows = _root_exponent_rows(rep)
    else:
        n = len(rep)
        rows = [0] * n
        for x in range(n):
            for y in range(x + 1, n):
                if inner_product(rep, x, y).is_zero():
                    rows[x] |= 1 << y
                    rows[y] |= 1 << x
    for v, row in enumerate(rows):
        if row >> v & 1:
            raise RepresentationError(f'Vector {v} is orthogonal to itself')
    return Graph.from_rows(rows)


def check_representation(graph: Graph, rep: VectorRep,
                         tol: Optional[float] = None) -> Report:
    """Whether every edge joins orthogonal vectors"""
    if len(rep) != graph.n:
        raise RepresentationError(f'Representation has {len(rep)} vectors '
                                  f'for {graph.n} vertices')
    exact = rep.backend.is_exact
    if tol is None:
        tol = 0.0 if exact else config.tolerance('float_orthogonality')
    violations = []
    worst = 0.0
    for u, v in graph.edges:
        product = inner_product(rep, u, v)
        residual = 0.0 if exact and product.is_zero() else product.modulus()
        worst = max(worst, residual)
        if not product.is_zero(tol):
            violations.append(Violation('edge', (u, v), (), residual))
    return Report.from_violations(violations, tol, worst,
                                  backend=rep.backend.value, dim=rep.dim)


def proportional(rep: VectorRep, x: int, y: int) -> bool:
    """Whether two vectors differ by a scalar multiple"""
    u = rep.as_complex_array()[[x, y]]
    return bool(np.linalg.matrix_rank(u, tol=1e-9) == 1)

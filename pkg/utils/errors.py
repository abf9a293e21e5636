import json
from typing import Union, Tuple, Type

import numpy as np


class UserFeedbackError(Exception):
    pass


class UsageError(UserFeedbackError):
    pass


class GraphError(UserFeedbackError):
    pass


class GraphFormatError(GraphError):
    pass


class ColouringError(GraphError):
    pass


class RepresentationError(UserFeedbackError):
    pass


class DatasetError(UserFeedbackError):
    pass


class CertificateError(UserFeedbackError):

    def __init__(self, message: str, report=None):
        super(CertificateError, self).__init__(message)
        self.report = report


class BoundError(UserFeedbackError):
    pass


class BudgetExceeded(Exception):
    """
    An exact search ran out of its node budget. This is an inconclusive
    outcome, never an answer.
    """

    __slots__ = ['parameter', 'nodes', 'budget']

    def __init__(self, parameter: str, nodes: int, budget: int):
        super(BudgetExceeded, self).__init__(parameter, nodes, budget)
        self.parameter = parameter
        self.nodes = nodes
        self.budget = budget

    def __str__(self):
        return (f'search for {self.parameter} exhausted its budget of '
                f'{self.budget} nodes (inconclusive)')


class ErrorStrings:
    default = 'An error has occurred.'
    inconclusive = 'Inconclusive: the search budget was exhausted.'

    _error_map = {
        json.JSONDecodeError: 'Input is not valid JSON.',
        FileNotFoundError: 'Input file could not be found.',
        IsADirectoryError: 'Expected a file but got a directory.',
        np.linalg.LinAlgError: 'A linear algebra routine did not converge.',
    }

    @classmethod
    def error_types(cls):
        return tuple(cls._error_map)

    @classmethod
    def translate(cls, exception: Exception):
        for exc_type, text in cls._error_map.items():
            if isinstance(exception, exc_type):
                return text
        return cls.default


def typecheck(value, types: Union[Type, Tuple[Type, ...]], value_name: str):
    if isinstance(value, types) and not isinstance(value, bool):
        return True
    raise TypeError(f'{value_name} should be of type {types}, '
                    f'not {type(value)}')

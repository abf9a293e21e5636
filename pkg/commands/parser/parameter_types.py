from __future__ import annotations
import abc
import re
from typing import List, Match, Optional, TypeVar, Union

from utils.errors import UsageError

__all__ = ['ParameterBase', 'StringParam', 'PathParam',
           'IntParam', 'FloatParam', 'FlagParam', 'JsonFlag', 'VerboseFlag',
           'WitnessFlag', 'TimingsFlag', 'StretchFlag', 'VectorsFlag',
           'ColouringFlag', 'SeedParam', 'BudgetParam', 'ToleranceParam',
           'ProbabilityParam', 'EpsilonParam', 'ChiCapParam', 'WorkersParam',
           'CountParam', 'LimitParam']

ParameterSubclassType = TypeVar('ParameterSubclassType', bound='ParameterBase')


class ParameterBase(abc.ABC):
    """
    One argument of a command. Options carry a `shorthand` (shown in help)
    and a `pattern` that recognises them anywhere on the line; positionals
    match anything.
    """

    shorthand: Optional[str] = None
    pattern = re.compile('')
    help = 'No description'

    # noinspection PyShadowingBuiltins
    def __init__(self, optional: bool = False, help: Optional[str] = None):
        self.optional = optional
        self.present = False
        if help is not None:
            self.help = help

    def __str__(self):
        attrs = ' '.join(f'{a}={getattr(self, a)!r}' for a in self.__slots__
                         if not a.startswith('_'))
        return f'<{type(self).__name__} {attrs}>'

    __repr__ = __str__

    def raise_parsing_error(self, arg: str):
        raise UsageError(f'argument could not be parsed '
                         f'by {type(self).__name__}: {arg}')

    def match(self, arg: str) -> Match:
        match = self.pattern.fullmatch(arg)
        if not match:
            self.raise_parsing_error(arg)
        return match

    @classmethod
    def test(cls, arg: str) -> bool:
        """Whether arg is written the way this option is"""
        return bool(cls.pattern.fullmatch(arg))

    @abc.abstractmethod
    def parse(self, arg: Union[str, List[str]]) -> ParameterSubclassType:
        """
        Read a token (or a bracketed list of them) into this parameter

        :param arg: the token
        :return: self, holding the parsed value
        """


class StringParam(ParameterBase):

    __slots__ = ['value']
    help = 'A text string'

    def __init__(self, default: Optional[str] = None, **kwargs):
        super(StringParam, self).__init__(**kwargs)
        self.value: Optional[str] = default

    @classmethod
    def test(cls, arg: str) -> bool:
        return True

    def parse(self, arg: Union[str, List[str]]) -> StringParam:
        if isinstance(arg, list):
            arg = ' '.join(arg)
        self.value = arg
        return self


class PathParam(StringParam):
    """A file path; `-` or an absent path means standard input"""

    help = 'A file path (standard input if omitted or `-`)'

    def parse(self, arg: Union[str, List[str]]) -> PathParam:
        super(PathParam, self).parse(arg)
        if len(self.value) >= 2 and self.value[0] == self.value[-1] \
                and self.value[0] in '\'"':
            self.value = self.value[1:-1]
        return self

    @property
    def is_stdin(self) -> bool:
        return self.value in {None, '-'}


class IntParam(ParameterBase):

    __slots__ = ['value', '_min', '_max']
    help = 'An integer'
    pattern = re.compile(r'-?\d+')

    # noinspection PyShadowingBuiltins
    def __init__(self, min: Optional[int] = None, max: Optional[int] = None,
                 default: Optional[int] = None, **kwargs):
        super(IntParam, self).__init__(**kwargs)
        self._min = min
        self._max = max
        self.value: Optional[int] = default

    def _check(self, value):
        if self._min is not None and value < self._min:
            raise UsageError(f'{value} is below the minimum {self._min}')
        if self._max is not None and value > self._max:
            raise UsageError(f'{value} is above the maximum {self._max}')
        return value

    def parse(self, arg: Union[str, List[str]]) -> IntParam:
        if isinstance(arg, list):
            arg = arg[0]
        self.value = self._check(int(self.match(arg).group(0)))
        return self


class FloatParam(IntParam):

    help = 'A decimal number'
    pattern = re.compile(r'[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?')

    def parse(self, arg: Union[str, List[str]]) -> FloatParam:
        if isinstance(arg, list):
            arg = arg[0]
        self.value = self._check(float(self.match(arg).group(0)))
        return self


class FlagParam(ParameterBase):
    """An option switched on by its shorthand; `--no-` forms switch off"""

    __slots__ = ['value']

    def __init__(self, default: bool = False, **kwargs):
        super(FlagParam, self).__init__(**kwargs)
        self.value = default

    def __bool__(self):
        return self.value

    def parse(self, arg: Union[str, List[str]]) -> FlagParam:
        if isinstance(arg, list):
            arg = arg[0]
        self.value = not self.match(arg).group(0).startswith('--no-')
        return self


class JsonFlag(FlagParam):
    help = 'Machine-readable JSON output'
    shorthand = '--json'
    pattern = re.compile(r'--json')


class VerboseFlag(FlagParam):
    help = 'Log debugging detail to standard error'
    shorthand = '-v'
    pattern = re.compile(r'-v|--verbose')


class WitnessFlag(FlagParam):
    help = 'Include (or omit) the witness in results'
    shorthand = '--witness/--no-witness'
    pattern = re.compile(r'--(no-)?witness')


class TimingsFlag(FlagParam):
    help = 'Record elapsed times in experiment records'
    shorthand = '--timings'
    pattern = re.compile(r'--timings')


class StretchFlag(FlagParam):
    help = 'Also run the Hadamard n=8 item'
    shorthand = '--stretch'
    pattern = re.compile(r'--stretch')


class VectorsFlag(FlagParam):
    help = 'Emit the vector representation instead of the graph'
    shorthand = '--vectors'
    pattern = re.compile(r'--vectors')


class ColouringFlag(FlagParam):
    help = 'Emit the colouring that comes with the graph'
    shorthand = '--colouring'
    pattern = re.compile(r'--colou?ring')


class _OptionValueParam(ParameterBase):
    """`--name=value` options; `cast` converts the captured value"""

    __slots__ = ['value', '_min', '_max']
    cast = int

    # noinspection PyShadowingBuiltins
    def __init__(self, default=None, min=None, max=None, **kwargs):
        super(_OptionValueParam, self).__init__(**kwargs)
        self.value = default
        self._min = min
        self._max = max

    def parse(self, arg: Union[str, List[str]]) -> _OptionValueParam:
        if isinstance(arg, list):
            arg = arg[0]
        raw = self.match(arg).group('value')
        try:
            value = self.cast(raw)
        except ValueError:
            self.raise_parsing_error(arg)
        if self._min is not None and value < self._min or \
                self._max is not None and value > self._max:
            raise UsageError(f'{arg}: value must lie in '
                             f'[{self._min}, {self._max}]')
        self.value = value
        return self


class SeedParam(_OptionValueParam):
    help = 'Seed for the PCG64 generator'
    shorthand = '--seed=N'
    pattern = re.compile(r'--seed=(?P<value>\d+)')


class BudgetParam(_OptionValueParam):
    help = 'Search node budget for exact solvers'
    shorthand = '--budget=N'
    pattern = re.compile(r'--budget=(?P<value>\d+)')


class WorkersParam(_OptionValueParam):
    help = 'Worker processes for independent trials'
    shorthand = '--workers=N'
    pattern = re.compile(r'--workers=(?P<value>\d+)')


class ChiCapParam(_OptionValueParam):
    help = 'Compute chi only up to this many vertices'
    shorthand = '--chi-cap=N'
    pattern = re.compile(r'--chi-cap=(?P<value>\d+)')


class ToleranceParam(_OptionValueParam):
    help = 'Absolute tolerance for verification residuals'
    shorthand = '--tol=X'
    pattern = re.compile(r'--tol=(?P<value>\S+)')
    cast = float


class ProbabilityParam(_OptionValueParam):
    help = 'Edge probability'
    shorthand = '--p=X'
    pattern = re.compile(r'--p=(?P<value>\S+)')
    cast = float


class EpsilonParam(_OptionValueParam):
    help = 'Slack in the clique bound (1 + eps) 2 ln n / ln(1/p)'
    shorthand = '--eps=X'
    pattern = re.compile(r'--eps=(?P<value>\S+)')
    cast = float


class LimitParam(ParameterBase):

    __slots__ = ['min', 'max', 'step']
    help = 'A vertex count or an inclusive range of them'
    shorthand = '--n=50 or --n=10->50 or --n=10->50:10'
    pattern = re.compile(r'--n=(?P<min>\d+)(?:->(?P<max>\d+)(?::(?P<step>\d+))?)?')

    def __init__(self, default: Optional[int] = None, **kwargs):
        super(LimitParam, self).__init__(**kwargs)
        self.min: Optional[int] = default
        self.max: Optional[int] = default
        self.step: int = 1

    # noinspection PyShadowingBuiltins
    def parse(self, arg: Union[str, List[str]]) -> LimitParam:
        if isinstance(arg, list):
            self.min = int(arg[0])
            self.max = int(arg[-1])
            return self
        match = self.match(arg)
        min = int(match.group('min'))
        max = match.group('max')
        step = match.group('step')
        self.min = min
        self.max = int(max) if max else min
        self.step = int(step) if step else 1
        if self.max < self.min or self.step < 1:
            raise UsageError(f'{arg} is not an increasing range')
        return self

    def values(self) -> List[int]:
        return list(range(self.min, self.max + 1, self.step))


class CountParam(ParameterBase):

    __slots__ = ['count', '_min', '_max', '_default']
    help = 'Repeat a specific number of times'
    shorthand = 'x20 or --trials=20'
    pattern = re.compile(r'(?:x|--trials=)(?P<count>\d+)')

    # noinspection PyShadowingBuiltins
    def __init__(self, min: Optional[int] = None, max: Optional[int] = None,
                 default: Optional[int] = None, **kwargs):
        super(CountParam, self).__init__(**kwargs)
        self._min = min
        self._max = max
        self._default = default
        self.count: Optional[int] = default if default else min if min else None

    def parse(self, arg: Union[str, List[str]]) -> CountParam:
        if isinstance(arg, list):
            self.count = int(arg[0])

        elif isinstance(arg, str):
            match = self.match(arg)
            count = match.group('count')
            self.count = int(count) if count else self.count

        if self.count and self._min:
            self.count = max(self.count, self._min)
        if self.count and self._max:
            self.count = min(self.count, self._max)

        return self

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Set, Type

from commands.parser.parameter_types import *
from utils.enums import ParsingMode


class ParamHelp(NamedTuple):
    name: str
    desc: str
    shorthand: Optional[str]
    optional: bool


@dataclass
class CommandHelp:
    description: str
    subcommands: List[str] = field(default_factory=list)
    params: List[ParamHelp] = field(default_factory=list)


@dataclass
class ParamSpec:
    """Recipe for a fresh parameter on every parse"""
    param_type: Type[ParameterBase]
    optional: bool
    help: Optional[str] = None
    kwargs: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_option(self) -> bool:
        return bool(self.param_type.shorthand)

    def build(self) -> ParameterBase:
        return self.param_type(optional=self.optional, help=self.help,
                               **self.kwargs)


class CommandGrammar:

    __slots__ = ['name', 'path', 'root', 'mode', 'description',
                 'subcommands', 'parameters', 'positional_order']

    def __init__(self, name: str, mode: str = 'lexical'):
        """
        A grammar entry for a command or subcommand

        :param name: full command name, words separated by spaces
        :param mode: how the arguments after the name are read
        """
        self.name = name
        self.path = name.split()
        self.root = self.path[0]
        self.mode = ParsingMode(mode)
        self.description = 'No description available'
        self.subcommands: Set[str] = set()
        self.parameters: Dict[str, ParamSpec] = {}
        self.positional_order: List[str] = []

    def __str__(self):
        return f'<CommandGrammar name={self.name}>'

    @property
    def takes_positionals(self) -> bool:
        return self.mode is not ParsingMode.LEXICAL

    def get_help(self) -> CommandHelp:
        order = {name: i for i, name in enumerate(self.positional_order)}
        params = [ParamHelp(name, spec.help or spec.param_type.help,
                            spec.param_type.shorthand, spec.optional)
                  for name, spec in self.parameters.items()]
        # Positionals first, in order, then options by name
        params.sort(key=lambda p: (p.name not in order, order.get(p.name, 0),
                                   p.name))
        return CommandHelp(self.description, sorted(self.subcommands), params)

    def usage(self) -> str:
        words = [self.name]
        if self.subcommands:
            words.append('{' + '|'.join(sorted(self.subcommands)) + '}')
        for name in self.positional_order:
            words.append(f'[<{name}>]' if self.parameters[name].optional
                         else f'<{name}>')
        if any(spec.is_option for spec in self.parameters.values()):
            words.append('[options]')
        return ' '.join(words)

    def add_desc(self, desc: str) -> CommandGrammar:
        self.description = desc
        return self

    def add_subcommands(self, *names: str) -> CommandGrammar:
        self.subcommands |= set(names)
        return self

    def get_subcommand(self, name: str) -> Optional[str]:
        return f'{self.name} {name}' if name in self.subcommands else None

    # noinspection PyShadowingBuiltins
    def add_param(self, name: str, param: Type[ParameterBase],
                  optional: Optional[bool] = None,
                  help: Optional[str] = None,
                  **kwargs_for_param) -> CommandGrammar:
        """
        Declare a parameter. Keyword arguments with a leading underscore go
        to the parameter's constructor without it (`_min=1` -> `min=1`).
        Options are matched by their shorthand in every mode; everything
        else is positional unless the command is lexical.
        """
        if optional is None:
            optional = not self.takes_positionals or bool(param.shorthand)
        kwargs = {key[1:]: val for key, val in kwargs_for_param.items()
                  if key.startswith('_')}
        self.parameters[name] = ParamSpec(param, optional, help, kwargs)
        if self.takes_positionals and not param.shorthand:
            self.positional_order.append(name)
        return self

    def add_common_params(self) -> CommandGrammar:
        """Options every runnable command accepts"""
        return (self
                .add_param('json', JsonFlag)
                .add_param('verbose', VerboseFlag)
                .add_param('seed', SeedParam)
                .add_param('budget', BudgetParam, _min=1)
                .add_param('tol', ToleranceParam, _min=0.0))

    def get_all_params(self) -> Dict[str, ParameterBase]:
        return {name: spec.build() for name, spec in self.parameters.items()}

    def get_param_name(self, name: Optional[str] = None,
                       arg: Optional[str] = None,
                       pos: Optional[int] = None) -> Optional[str]:
        """A parameter by its name, by an option matching arg, or by
        position"""
        if name:
            return name if name in self.parameters else None
        if arg:
            return next((n for n, spec in self.parameters.items()
                         if spec.is_option and spec.param_type.test(arg)),
                        None)
        if pos is not None and self.takes_positionals \
                and pos < len(self.positional_order):
            return self.positional_order[pos]
        return None




def _solve(name: str, desc: str) -> CommandGrammar:
    return (CommandGrammar(name, mode='positional')
            .add_desc(desc)
            .add_param('graph', PathParam, optional=True,
                       help='DIMACS or JSON graph file (standard input if '
                            'omitted)')
            .add_param('witness', WitnessFlag, _default=True)
            .add_common_params())


def _verify_cert(name: str, desc: str) -> CommandGrammar:
    return (CommandGrammar(name, mode='positional')
            .add_desc(desc)
            .add_param('cert', PathParam, help='Certificate JSON file')
            .add_param('graph', PathParam, optional=True,
                       help='Graph file (defaults to the graph stored in '
                            'the certificate)')
            .add_common_params())


class Grammar:
    grammar = {
        'help':
            CommandGrammar('help', mode='rest')
            .add_desc('List all commands, or see details about a specific '
                      'command')
            .add_param('command', StringParam, optional=True,
                       help='A command to get help for'),

        # Graph generation

        'gen': 'generate',
        'generate':
            CommandGrammar('generate')
            .add_desc('Write a graph (DIMACS, or JSON with --json) to '
                      'standard output')
            .add_subcommands('hadamard', 'roots', 'dim4', 'gnp', 'g18',
                             'complete', 'cycle'),

        'generate hadamard':
            CommandGrammar('generate hadamard', mode='positional')
            .add_desc('Hadamard graph: n-bit strings adjacent at Hamming '
                      'distance n/2')
            .add_param('n', IntParam, _min=1, help='String length')
            .add_param('vectors', VectorsFlag)
            .add_common_params(),

        'generate roots':
            CommandGrammar('generate roots', mode='positional')
            .add_desc('Orthogonality graph of all p^p vectors whose entries '
                      'are p-th roots of unity, p prime')
            .add_param('p', IntParam, _min=2, help='A prime')
            .add_param('vectors', VectorsFlag)
            .add_param('colouring', ColouringFlag)
            .add_common_params(),

        'generate dim4':
            CommandGrammar('generate dim4', mode='positional')
            .add_desc('64-vertex orthogonality graph of the vectors '
                      '(1, i^a, i^b, i^c)')
            .add_param('vectors', VectorsFlag)
            .add_param('colouring', ColouringFlag)
            .add_common_params(),

        'generate gnp':
            CommandGrammar('generate gnp', mode='positional')
            .add_desc('Random graph G(n, p) from the seeded PCG64 generator')
            .add_param('n', IntParam, _min=1, help='Vertex count')
            .add_param('p', FloatParam, _min=0.0, _max=1.0,
                       help='Edge probability')
            .add_common_params(),

        'generate g18':
            CommandGrammar('generate g18', mode='positional')
            .add_desc('The checked-in 18-vertex, 44-edge graph with chromatic '
                      'number 5 and a 4-dimensional real orthogonal '
                      'representation')
            .add_param('vectors', VectorsFlag)
            .add_common_params(),

        'generate complete':
            CommandGrammar('generate complete', mode='positional')
            .add_desc('Complete graph K_n')
            .add_param('n', IntParam, _min=1, help='Vertex count')
            .add_common_params(),

        'generate cycle':
            CommandGrammar('generate cycle', mode='positional')
            .add_desc('Cycle graph C_n')
            .add_param('n', IntParam, _min=3, help='Vertex count')
            .add_common_params(),

        # Exact solvers

        'solve':
            CommandGrammar('solve')
            .add_desc('Exact classical graph parameters')
            .add_subcommands('chi', 'omega', 'alpha', 'bipartite'),

        'solve chi': _solve(
            'solve chi',
            'Chromatic number, with an optimal colouring as witness'),
        'solve omega': _solve(
            'solve omega',
            'Clique number, with a maximum clique as witness'),
        'solve alpha': _solve(
            'solve alpha',
            'Independence number, with a maximum independent set as witness'),
        'solve bipartite': _solve(
            'solve bipartite',
            'Whether the graph is bipartite, with a 2-colouring as witness'),

        # Verification

        'verify':
            CommandGrammar('verify')
            .add_desc('Check a colouring or a quantum-colouring certificate; '
                      'exit 1 when it fails')
            .add_subcommands('colouring', 'rep', 'rank1', 'projector',
                             'general'),

        'verify colouring':
            CommandGrammar('verify colouring', mode='positional')
            .add_desc('Check that a classical colouring is proper')
            .add_param('graph', PathParam, help='Graph file')
            .add_param('colouring', PathParam,
                       help='Colouring file: JSON, or whitespace-separated '
                            'colours')
            .add_common_params(),

        'verify rep':
            CommandGrammar('verify rep', mode='positional')
            .add_desc('Check that adjacent vertices get orthogonal vectors')
            .add_param('graph', PathParam, help='Graph file')
            .add_param('vectors', PathParam, help='Vector JSON file')
            .add_common_params(),

        'verify rank1': _verify_cert(
            'verify rank1', 'Check a rank-1 (unitary family) certificate'),
        'verify projector': _verify_cert(
            'verify projector',
            'Check a rank-r projective measurement certificate'),
        'verify general': _verify_cert(
            'verify general', 'Check a general state and POVM certificate'),

        # Certificate constructions and transforms

        'construct':
            CommandGrammar('construct')
            .add_desc('Build or transform certificates; the result is '
                      'written as JSON to standard output')
            .add_subcommands('fourier-lift', 'od-lift', 'classical-lift',
                             'tensor-union', 'pullback', 'normal-form',
                             'equalize', 'extract3', 'to-projector',
                             'to-rep'),

        'construct fourier-lift':
            CommandGrammar('construct fourier-lift', mode='positional')
            .add_desc('Rank-1 certificate U_v = diag(x_v) F_c from a '
                      'unit-modulus orthogonal representation')
            .add_param('graph', PathParam, help='Graph file')
            .add_param('vectors', PathParam, help='Vector JSON file')
            .add_common_params(),

        'construct od-lift':
            CommandGrammar('construct od-lift', mode='positional')
            .add_desc('Rank-1 certificate from a real orthogonal '
                      'representation of dimension at most 8 through an '
                      'orthogonal design')
            .add_param('graph', PathParam, help='Graph file')
            .add_param('vectors', PathParam, help='Vector JSON file')
            .add_common_params(),

        'construct classical-lift':
            CommandGrammar('construct classical-lift', mode='positional')
            .add_desc('Rank-1 certificate from a proper classical colouring')
            .add_param('graph', PathParam, help='Graph file')
            .add_param('colouring', PathParam, help='Colouring file')
            .add_common_params(),

        'construct tensor-union':
            CommandGrammar('construct tensor-union', mode='positional')
            .add_desc('Certificate for the edge union of two graphs on the '
                      'same vertices, with c_G * c_H colours')
            .add_param('cert_g', PathParam, help='First certificate')
            .add_param('cert_h', PathParam, help='Second certificate')
            .add_common_params(),

        'construct pullback':
            CommandGrammar('construct pullback', mode='positional')
            .add_desc('Certificate for G from a homomorphism G -> H and a '
                      'certificate for H')
            .add_param('graph', PathParam, help='Source graph file')
            .add_param('map', PathParam,
                       help='Homomorphism map: JSON {"map": [...]} or a list')
            .add_param('cert', PathParam, help='Certificate for the target')
            .add_common_params(),

        'construct normal-form':
            CommandGrammar('construct normal-form', mode='positional')
            .add_desc('Reduce a general certificate to a projector '
                      'certificate on a maximally entangled state')
            .add_param('cert', PathParam, help='General certificate')
            .add_common_params(),

        'construct equalize':
            CommandGrammar('construct equalize', mode='positional')
            .add_desc('Give every projector of a complete projective '
                      'measurement the same rank')
            .add_param('cert', PathParam,
                       help='Projector certificate or raw measurements')
            .add_common_params(),

        'construct extract3':
            CommandGrammar('construct extract3', mode='positional')
            .add_desc('Classical 3-colouring from a passing 3-colour rank-1 '
                      'certificate of a connected graph')
            .add_param('cert', PathParam, help='Rank-1 certificate')
            .add_common_params(),

        'construct to-projector':
            CommandGrammar('construct to-projector', mode='positional')
            .add_desc('Projector certificate E_va = U_v e_a e_a* U_v*')
            .add_param('cert', PathParam, help='Rank-1 certificate')
            .add_common_params(),

        'construct to-rep':
            CommandGrammar('construct to-rep', mode='positional')
            .add_desc('Orthogonal representation from the first columns of '
                      'a rank-1 certificate')
            .add_param('cert', PathParam, help='Rank-1 certificate')
            .add_common_params(),

        # Reproduction suite and experiments

        'repro':
            CommandGrammar('repro')
            .add_desc('Re-derive every checked-in claim from the datasets')
            .add_param('stretch', StretchFlag)
            .add_common_params(),

        'experiment':
            CommandGrammar('experiment')
            .add_desc('Seeded random-graph experiments')
            .add_subcommands('gnp'),

        'experiment gnp':
            CommandGrammar('experiment gnp')
            .add_desc('Clique number of G(n, p) against the bound '
                      '(1 + eps) 2 ln n / ln(1/p)')
            .add_param('n', LimitParam, _default=50)
            .add_param('p', ProbabilityParam, _min=0.0, _max=1.0)
            .add_param('trials', CountParam, _min=1)
            .add_param('eps', EpsilonParam, _min=0.0)
            .add_param('chi_cap', ChiCapParam)
            .add_param('timings', TimingsFlag)
            .add_param('workers', WorkersParam, _min=1)
            .add_common_params(),

        'bound':
            CommandGrammar('bound', mode='positional')
            .add_desc('Upper bound (1 + 2 sqrt 2)^(2k) on the chromatic '
                      'number of a graph with an orthogonal representation '
                      'in dimension k, or a k-colour rank-1 quantum '
                      'colouring')
            .add_param('k', IntParam, help='Dimension or colour count')
            .add_common_params(),
    }

    @classmethod
    def resolve_alias(cls, name: str) -> Optional[str]:
        """Canonical command name, or None for an unknown one"""
        entry = cls.grammar.get(name)
        if entry is None:
            return None
        return entry if isinstance(entry, str) else name

    @classmethod
    def find_base(cls, base: str,
                  resolve_aliases: bool = False) -> Optional[CommandGrammar]:
        if not base:
            return None
        if resolve_aliases:
            # An alias may stand for the first word of a nested command
            words = base.split()
            base = cls.resolve_alias(words[0])
            for word in words[1:]:
                if base is None:
                    break
                base = cls.resolve_alias(f'{base} {word}')
        else:
            base = cls.resolve_alias(base)
        return cls.grammar[base] if base else None

    @classmethod
    def get_command_names(cls):
        return [k for k, v in cls.grammar.items()
                if not isinstance(v, str) and ' ' not in k]

    @classmethod
    def value_options(cls) -> List[str]:
        """Options written `--name=value`, which may also be given as two
        words"""
        names = set()
        for base in cls.grammar.values():
            if isinstance(base, str):
                continue
            for spec in base.parameters.values():
                if not spec.is_option:
                    continue
                for form in spec.param_type.shorthand.split(' or '):
                    if form.startswith('--') and '=' in form:
                        names.add(form.split('=')[0])
        return sorted(names)

from io import StringIO
import logging
import shlex
import string
from typing import List, Optional, Tuple, Union

from commands.parser.grammar import Grammar, CommandGrammar
from utils.enums import ParsingMode
from utils.errors import UsageError

logger = logging.getLogger(__name__)

Token = Union[str, List[str], None]


class ParseError(UsageError):
    """A command line that does not fit the grammar"""


class NoCommandFound(ParseError):

    def __init__(self, command: str):
        super(NoCommandFound, self).__init__(f'unknown command {command}')
        self.command = command


class UnknownArgument(ParseError):

    def __init__(self, base_name: str, arg):
        super(UnknownArgument, self).__init__(
            f'command {base_name} cannot parse argument {arg}')


class MissingArgument(ParseError):

    def __init__(self, base_name: str, names: List[str]):
        super(MissingArgument, self).__init__(
            f'command {base_name} is missing '
            f'{", ".join(f"<{n}>" for n in names)}')
        self.names = names


class ChangeParsingMode(Exception):
    """Raised when a command or subcommand is bound and lexing must change"""

    __slots__ = ['mode']

    def __init__(self, mode: ParsingMode):
        self.mode = mode


class ParsedCommand:
    """
    A command line bound to its grammar. Parameters are reachable as
    attributes (`cmd.graph.value`) or through `get`, which also tells an
    absent option from a given one.
    """

    __slots__ = ['base', '_args', '_args_encountered', '_mode',
                 '_current_pos']

    def __init__(self):
        self.base: Optional[CommandGrammar] = None
        self._args = {}
        self._args_encountered = False
        self._mode: Optional[ParsingMode] = None
        self._current_pos = 0

    def __str__(self):
        if self.base:
            return f'<ParsedCommand base={self.base.name!r} args={self._args}>'
        return '<ParsedCommand empty>'

    def __getattr__(self, arg):
        if arg in self._args:
            return self._args[arg]
        raise AttributeError(f'{arg} argument not found in command {self}')

    def __bool__(self):
        return self.base is not None

    def get(self, name: str, default=None):
        """Value of a parameter if it was given on the command line"""
        param = self._args.get(name)
        if param is None or not param.present:
            return default
        return getattr(param, 'value', param)

    def set_base(self, base: CommandGrammar):
        self.base = base
        self._args = base.get_all_params()
        if base.mode is not self._mode:
            self._mode = base.mode
            raise ChangeParsingMode(base.mode)

    def missing_params(self) -> List[str]:
        return [name for name, param in self._args.items()
                if not param.optional and not param.present]

    def _next_position(self) -> Optional[str]:
        name = self.base.get_param_name(pos=self._current_pos)
        self._current_pos += 1
        return name

    def _bind_lexical(self, item: str, data: Optional[List]) \
            -> Tuple[Optional[str], Union[str, List]]:
        if data:
            return self.base.get_param_name(name=item), data
        return self.base.get_param_name(arg=item), item

    def _bind_positional(self, item: str, data: Optional[List]) \
            -> Tuple[Optional[str], Union[str, List]]:
        # Options may sit anywhere between the positionals
        name = self.base.get_param_name(arg=item)
        return name or self._next_position(), item

    def _bind_rest(self, item: str, data: Optional[List]) \
            -> Tuple[Optional[str], Union[str, List]]:
        return self._next_position(), item

    _binders = {
        ParsingMode.LEXICAL: _bind_lexical,
        ParsingMode.POSITIONAL: _bind_positional,
        ParsingMode.REST: _bind_rest,
    }

    def add(self, item: str, data: Optional[List] = None):
        if not self.base:
            base = Grammar.find_base(item)
            if not base:
                raise NoCommandFound(item)
            self.set_base(base)
            return

        if not self._args_encountered and not data:
            subcommand = self.base.get_subcommand(item)
            if subcommand:
                self.set_base(Grammar.find_base(subcommand))
                return

        binder = self._binders.get(self._mode)
        if binder is None:
            raise ValueError(f'Parsing mode {self._mode} is not valid')
        name, arg = binder(self, item, data)
        if not name:
            raise UnknownArgument(self.base.name, arg)
        logger.debug(f'{self._mode.value} arg: name={name} arg={arg}')
        self._args_encountered = True
        self._args[name].parse(arg)
        self._args[name].present = True


class Parser:
    """
    Lexes a command line with shlex, switching word characters as the
    grammar of the bound command asks, and binds every token to a parameter.
    """

    __slots__ = ['lexer', 'error']
    lexical_parsing_wordchars = (
        string.ascii_letters + string.digits
        + ''.join(set(string.punctuation) - set('"\'(),;[]`{}')))
    positional_parsing_wordchars = (
        ''.join(set(string.printable) - set(string.whitespace) - set('"\'')))

    def __init__(self):
        self.lexer = shlex.shlex(StringIO())
        self.lexer.commenters = ''
        self.lexer.quotes = '\'"`'
        self.error: Optional[str] = None

    def __call__(self, command: str) -> Optional[ParsedCommand]:
        return self.parse_command(command)

    def set_parse_mode(self, mode: ParsingMode):
        if mode is ParsingMode.LEXICAL:
            self.lexer.wordchars = self.lexical_parsing_wordchars
        elif mode is ParsingMode.POSITIONAL:
            self.lexer.wordchars = self.positional_parsing_wordchars
        else:
            raise ValueError(f'Parsing mode {mode} is not valid')

    def parse_sequence(self) -> List[str]:
        items = []
        while True:
            item = self.parse_token()
            if item is None:
                raise UsageError('unterminated [ sequence')
            if item == ']':
                return items
            items.append(item)

    def parse_token(self) -> Token:
        token = self.lexer.get_token()
        if token == self.lexer.eof:
            return None
        if token == '[':
            return self.parse_sequence()
        return token

    def _reset(self, command: str):
        # shlex keeps its lexing state between streams
        self.lexer.state = ' '
        self.lexer.instream = StringIO(command)
        self.set_parse_mode(ParsingMode.LEXICAL)

    def _consume(self, parsed: ParsedCommand):
        current = self.parse_token()
        while current is not None:
            following = self.parse_token()
            if isinstance(following, list):
                # `name [a b c]`
                parsed.add(current, data=following)
                current = self.parse_token()
                continue
            try:
                parsed.add(current)
            except ChangeParsingMode as e:
                if e.mode is ParsingMode.REST:
                    rest = self.lexer.instream.read().strip()
                    if following is not None:
                        parsed.add(f'{following} {rest}'.strip())
                    return
                self.set_parse_mode(e.mode)
            current = following

    def parse_command(self, command: str) -> Optional[ParsedCommand]:
        """
        Parse a command line into a ParsedCommand. Returns None when the line
        does not parse; the reason is left in `self.error`.
        """
        self.error = None
        self._reset(command)
        parsed = ParsedCommand()
        try:
            self._consume(parsed)
            if parsed:
                missing = parsed.missing_params()
                if missing:
                    raise MissingArgument(parsed.base.name, missing)
        except UsageError as e:
            logger.debug(f'{type(e).__name__}: {e}')
            self.error = str(e)
            return None
        return parsed if parsed else None

from .command_parser import Parser, ParsedCommand
from .grammar import Grammar
from . import parameter_types

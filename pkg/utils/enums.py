from enum import Enum


class Backend(Enum):
    """
    Scalar arithmetic behind a vector family.

    INTEGER: exact real integers
    GAUSSIAN: exact Gaussian integers a + bi
    ROOT_EXPONENT: entries e^(2 pi i k / m) stored as exponents k mod m
    COMPLEX_FLOAT: double precision complex, compared with a tolerance
    """
    INTEGER = 'int'
    GAUSSIAN = 'gauss'
    ROOT_EXPONENT = 'rootexp'
    COMPLEX_FLOAT = 'float'

    @property
    def is_exact(self) -> bool:
        return self is not Backend.COMPLEX_FLOAT


class CertificateKind(Enum):
    RANK1 = 'rank1'
    PROJECTOR = 'projector'
    GENERAL = 'general'


class Outcome(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'


class ParsingMode(Enum):
    """
    How a command reads its arguments.

    LEXICAL: options and keywords in any order
    POSITIONAL: arguments bound in declaration order
    REST: everything after the command name as one string
    """
    LEXICAL = 'lexical'
    POSITIONAL = 'positional'
    REST = 'rest'

import json
import logging
import shlex
import sys
from typing import List, Optional, Sequence

from certificates.bounds import upper_bound_report
from certificates.verify import verify
import commands
from commands.parser import Parser, ParsedCommand, Grammar
from commands.utils.inputs import read_cert, read_colouring, read_graph, \
    read_rep
from graphs.io import graph_to_dict, write_dimacs
from graphs.operations import verify_proper_colouring
from utils.config import config
from utils.constants import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, \
    EXIT_USAGE
from utils.enums import Outcome
from utils.errors import BudgetExceeded, CertificateError, ErrorStrings, \
    UserFeedbackError
from utils.misc import dump_json
from utils.reports import Report
from vectors.io import rep_to_dict
from vectors.representation import check_representation

PROGRAM = 'qcolour'
logger = logging.getLogger(__name__)


def out(text: str):
    """Results, for pipes and files"""
    print(text, file=sys.stdout)


def err(text: str):
    """Human-readable text"""
    print(text, file=sys.stderr)


def prepare_argv(argv: Sequence[str]) -> List[str]:
    """
    Fuse `--option value` into `--option=value` and move options written
    before the command name to the end, where the grammar expects them.
    """
    value_options = set(Grammar.value_options())
    tokens = []
    argv = list(argv)
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in value_options and i + 1 < len(argv):
            token = f'{token}={argv[i + 1]}'
            i += 1
        tokens.append(token)
        i += 1
    leading = 0
    while leading < len(tokens) and tokens[leading].startswith('-') \
            and tokens[leading] != '-':
        leading += 1
    return tokens[leading:] + tokens[:leading]


def join_argv(tokens: Sequence[str]) -> str:
    """Quote only what the command lexer would split"""
    return ' '.join(shlex.quote(t) if any(c.isspace() or c in '\'"`'
                                          for c in t) or not t else t
                    for t in tokens)


def nearest_command(tokens: Sequence[str]):
    for k in range(min(len(tokens), 3), 0, -1):
        base = Grammar.find_base(' '.join(tokens[:k]), resolve_aliases=True)
        if base:
            return base
    return None


def configure_logging(verbose: bool = False):
    root = logging.getLogger()
    level = logging.DEBUG if verbose else config['logging']['level']
    root.setLevel(level)
    for handler in root.handlers:
        if getattr(handler, 'qcolour', False):
            handler.setStream(sys.stderr)
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(config['logging']['format']))
    handler.qcolour = True
    root.addHandler(handler)


class QColour:

    def __init__(self):
        self.parser = Parser()

    def usage(self, tokens: Sequence[str], error: Optional[str] = None):
        if error:
            err(f'{PROGRAM}: error: {error}')
        base = nearest_command(tokens)
        if base:
            err(f'usage: {PROGRAM} {base.usage()}')
            err(f'Type `{PROGRAM} help {base.name}` for details.')
        else:
            err(f'usage: {PROGRAM} <command> ...')
            err(f'commands: {", ".join(Grammar.get_command_names())}')

    def run(self, argv: Sequence[str]) -> int:
        tokens = prepare_argv(argv)
        if not tokens:
            self.usage(tokens, 'no command given')
            return EXIT_USAGE
        cmd = self.parser(join_argv(tokens))
        if not cmd:
            self.usage(tokens, self.parser.error or 'could not parse command')
            return EXIT_USAGE
        if 'verbose' in cmd.base.parameters:
            configure_logging(bool(cmd.verbose))
        return self.dispatch(cmd)

    def dispatch(self, cmd: ParsedCommand) -> int:
        root = cmd.base.root
        name = cmd.base.name

        if cmd.base.subcommands:
            # A group like `solve` with no subcommand chosen
            self.usage(cmd.base.path, f'{name} needs a subcommand')
            return EXIT_USAGE
        if root == 'help':
            return self.help(cmd)
        elif root == 'generate':
            return self.generate(cmd)
        elif root == 'solve':
            return self.solve(cmd)
        elif root == 'verify':
            return self.verify(cmd)
        elif root == 'construct':
            return self.construct(cmd)
        elif root == 'repro':
            return self.repro(cmd)
        elif name == 'experiment gnp':
            return self.experiment_gnp(cmd)
        elif root == 'bound':
            return self.bound(cmd)
        self.usage(cmd.base.path, f'{name} is not runnable')
        return EXIT_USAGE

    def help(self, cmd: ParsedCommand) -> int:
        specified_command = cmd.command.value
        if specified_command:
            base = Grammar.find_base(specified_command, resolve_aliases=True)
            if not base:
                err(f'{PROGRAM}: no command named {specified_command!r}')
                return EXIT_USAGE
            # noinspection PyShadowingBuiltins
            help = base.get_help()
            lines = [f'usage: {PROGRAM} {base.usage()}', '',
                     help.description]
            if help.subcommands:
                lines += ['', f'subcommands: {", ".join(help.subcommands)}']
            if help.params:
                lines += ['', 'parameters:']
            for name, desc, shorthand, optional in help.params:
                title = shorthand if shorthand else f'<{name}>'
                if optional and not shorthand:
                    title += ' (optional)'
                lines.append(f'  {title:<28} {desc}')
            out('\n'.join(lines))
        else:
            command_names = '\n  '.join(Grammar.get_command_names())
            out(f'{PROGRAM}: quantum colourings of graphs\n\n'
                f'commands:\n  {command_names}\n\n'
                f'Type `{PROGRAM} help <command>` to see help for that '
                f'command.')
        return EXIT_OK

    def generate(self, cmd: ParsedCommand) -> int:
        kind = cmd.base.path[1]
        if kind == 'roots':
            n, p = cmd.get('p'), None
        else:
            n, p = cmd.get('n'), cmd.get('p')
        generated = commands.generate_graph(kind, n=n, p=p,
                                            seed=cmd.get('seed'))
        if cmd.get('vectors'):
            out(json.dumps(rep_to_dict(generated.rep)))
        elif cmd.get('colouring'):
            colouring = generated.colouring
            if cmd.get('json'):
                out(json.dumps(colouring.to_dict()))
            else:
                out(' '.join(str(x) for x in colouring.colours))
        elif cmd.get('json'):
            out(json.dumps(graph_to_dict(generated.graph)))
        else:
            out(write_dimacs(generated.graph, generated.comment).rstrip('\n'))
        err(f'{generated.comment}: {generated.graph.n} vertices, '
            f'{generated.graph.edge_count} edges')
        return EXIT_OK

    def solve(self, cmd: ParsedCommand) -> int:
        parameter = cmd.base.path[1]
        graph = read_graph(cmd.graph.value)
        result = commands.solve(graph, parameter, cmd.get('budget'))
        witness = bool(cmd.witness)
        if cmd.get('json'):
            out(json.dumps(result.to_dict(witness=witness)))
        elif parameter == 'bipartite':
            out('true' if result.value else 'false')
        else:
            out(str(result.value))
        if witness and result.witness is not None:
            shown = result.to_dict()['witness']
            err(f'{parameter} = {result.value}, witness {shown}')
        return EXIT_OK

    def _report(self, cmd: ParsedCommand, report: Report) -> int:
        if cmd.get('json'):
            out(json.dumps(report.to_dict()))
        err(report.summary())
        return EXIT_OK if report.passed else EXIT_FAILED

    def verify(self, cmd: ParsedCommand) -> int:
        kind = cmd.base.path[1]
        tol = cmd.get('tol')
        if kind == 'colouring':
            graph = read_graph(cmd.graph.value)
            report = verify_proper_colouring(
                graph, read_colouring(cmd.colouring.value))
        elif kind == 'rep':
            graph = read_graph(cmd.graph.value)
            report = check_representation(graph, read_rep(cmd.vectors.value),
                                          tol)
        else:
            graph, cert = read_cert(cmd.cert.value, cmd.get('graph'))
            if cert.kind.value != kind:
                raise CertificateError(f'Expected a {kind} certificate, got '
                                       f'{cert.kind.value}')
            report = verify(graph, cert, tol)
        return self._report(cmd, report)

    def construct(self, cmd: ParsedCommand) -> int:
        name = cmd.base.path[1]
        paths = [getattr(cmd, name).value
                 for name in cmd.base.positional_order]
        construction = commands.construct(name, paths, cmd.get('tol'))
        out(json.dumps(construction.payload))
        if construction.details is not None:
            err(f'normal form: {construction.details.details}')
            err(construction.details.summary())
        err(construction.report.summary())
        return EXIT_OK if construction.report.passed else EXIT_FAILED

    def repro(self, cmd: ParsedCommand) -> int:
        outcomes = commands.repro_all(stretch=bool(cmd.stretch),
                                      budget=cmd.get('budget'),
                                      tol=cmd.get('tol'))
        if cmd.get('json'):
            out(json.dumps([o.to_dict() for o in outcomes]))
        for outcome in outcomes:
            err(str(outcome))
        failed = sum(o.outcome is Outcome.FAIL for o in outcomes)
        inconclusive = sum(o.outcome is Outcome.INCONCLUSIVE
                           for o in outcomes)
        err(f'{len(outcomes) - failed - inconclusive}/{len(outcomes)} claims '
            f'reproduced, {failed} failed, {inconclusive} inconclusive')
        if failed:
            return EXIT_FAILED
        return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK

    def experiment_gnp(self, cmd: ParsedCommand) -> int:
        trials = cmd.trials.count if cmd.trials.present else None
        records, summary = commands.run_gnp_experiment(
            cmd.n.values(), p=cmd.get('p'), trials=trials,
            seed=cmd.get('seed'), epsilon=cmd.get('eps'),
            chi_cap=cmd.get('chi_cap'), budget=cmd.get('budget'),
            workers=cmd.get('workers'), timings=bool(cmd.timings))
        if cmd.get('json'):
            out(dump_json({'summary': summary.to_dict(),
                           'records': [r.to_dict() for r in records]}))
        err(f'{"trial":>5} {"n":>4} {"omega":>6} {"chi":>4} '
            f'{"bound":>8} {"within":>7}')
        for record in records:
            err(str(record))
        err(str(summary))
        return EXIT_INCONCLUSIVE if summary.inconclusive else EXIT_OK

    def bound(self, cmd: ParsedCommand) -> int:
        k = cmd.k.value
        value = upper_bound_report(k)
        if cmd.get('json'):
            out(json.dumps({'k': k, 'bound': value}))
        else:
            out(repr(value))
        err(f'chromatic number <= (1 + 2 sqrt 2)^{2 * k} = {value:.6g}')
        return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command line and return its exit code"""
    configure_logging()
    argv = sys.argv[1:] if argv is None else argv
    try:
        return QColour().run(argv)
    except BudgetExceeded as e:
        err(f'{PROGRAM}: {ErrorStrings.inconclusive} {e}')
        return EXIT_INCONCLUSIVE
    except CertificateError as e:
        err(f'{PROGRAM}: error: {e}')
        if e.report is not None:
            err(e.report.summary())
            return EXIT_FAILED
        return EXIT_USAGE
    except UserFeedbackError as e:
        err(f'{PROGRAM}: error: {e}')
        return EXIT_USAGE
    except ErrorStrings.error_types() as e:
        logger.debug(f'{type(e).__name__}: {e}')
        err(f'{PROGRAM}: error: {ErrorStrings.translate(e)} {e}')
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(cli_main())

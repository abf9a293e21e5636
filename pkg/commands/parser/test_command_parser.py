import pytest

from commands.parser import Parser, Grammar


class TestParser:

    parser = Parser()

    def test_basic(self):
        parser = self.parser

        cmd = parser('')
        assert cmd is None

        cmd = parser('this isn\'t a command')
        assert cmd is None
        assert 'unknown command' in parser.error

    def test_gen(self):
        parser = self.parser

        cmd = parser('gen g18')
        assert cmd.base.name == 'generate g18'
        assert cmd.base.path == ['generate', 'g18']
        assert cmd.base.root == 'generate'
        assert not cmd.vectors
        assert cmd.get('seed') is None

        cmd = parser('generate hadamard 4 --vectors')
        assert cmd.base.name == 'generate hadamard'
        assert cmd.n.value == 4
        assert cmd.vectors

        cmd = parser('gen gnp 30 0.5 --seed=7')
        assert cmd.n.value == 30
        assert cmd.p.value == 0.5
        assert cmd.get('seed') == 7

        cmd = parser('gen roots 3 --colouring --json')
        assert cmd.p.value == 3
        assert cmd.colouring
        assert cmd.get('json') is True

        cmd = parser('gen cycle 2')
        assert cmd is None

    def test_group(self):
        cmd = self.parser('solve')
        assert cmd.base.name == 'solve'
        assert cmd.base.subcommands

    def test_positional(self):
        p = self.parser

        cmd = p('solve chi g.dimacs --no-witness')
        assert cmd.base.name == 'solve chi'
        assert cmd.graph.value == 'g.dimacs'
        assert not cmd.witness

        cmd = p('solve omega')
        assert cmd.graph.value is None
        assert cmd.graph.is_stdin
        assert cmd.witness

        cmd = p('verify colouring "my graph.dimacs" colours.txt --tol=1e-6')
        assert cmd.graph.value == 'my graph.dimacs'
        assert cmd.colouring.value == 'colours.txt'
        assert cmd.get('tol') == pytest.approx(1e-6)

        cmd = p('verify rank1 cert.json')
        assert cmd.cert.value == 'cert.json'
        assert cmd.get('graph') is None

        cmd = p('construct pullback g.json map.json cert.json')
        assert cmd.base.positional_order == ['graph', 'map', 'cert']
        assert [getattr(cmd, n).value for n in cmd.base.positional_order] \
            == ['g.json', 'map.json', 'cert.json']

        cmd = p('bound 3')
        assert cmd.k.value == 3

    def test_options_anywhere(self):
        cmd = self.parser('verify rep --json g.json --budget=100 v.json')
        assert cmd.graph.value == 'g.json'
        assert cmd.vectors.value == 'v.json'
        assert cmd.get('json') is True
        assert cmd.get('budget') == 100

    def test_errors(self):
        parser = self.parser

        cmd = parser('verify colouring g.dimacs')
        assert cmd is None
        assert '<colouring>' in parser.error

        cmd = parser('solve chi g.dimacs --bogus')
        assert cmd is None
        assert '--bogus' in parser.error

        cmd = parser('bound three')
        assert cmd is None

        cmd = parser('solve chi --budget=0')
        assert cmd is None

    def test_experiment(self):
        parser = self.parser

        cmd = parser('experiment gnp')
        assert cmd.base.name == 'experiment gnp'
        assert cmd.n.values() == [50]
        assert cmd.trials.count == 1
        assert not cmd.trials.present
        assert not cmd.timings

        cmd = parser('experiment gnp --n=10->50:10 --p=0.5 x20 --eps=0.1')
        assert cmd.n.values() == [10, 20, 30, 40, 50]
        assert cmd.get('p') == 0.5
        assert cmd.trials.count == 20
        assert cmd.trials.present
        assert cmd.get('eps') == pytest.approx(0.1)

        cmd = parser('experiment gnp --trials=5 --n=10->12 --workers=2 '
                     '--timings')
        assert cmd.trials.count == 5
        assert cmd.n.values() == [10, 11, 12]
        assert cmd.get('workers') == 2
        assert cmd.timings

        cmd = parser('experiment gnp --n=50->10')
        assert cmd is None

        cmd = parser('experiment gnp --p=1.5')
        assert cmd is None

    def test_rest(self):
        parser = self.parser

        cmd = parser('help')
        assert cmd.base.name == 'help'
        assert cmd.command.value is None

        cmd = parser('help solve')
        assert cmd.command.value == 'solve'

        cmd = parser('help solve chi')
        assert cmd.base.name == 'help'
        assert cmd.command.value == 'solve chi'


class TestGrammar:

    def test_find_base(self):
        assert Grammar.find_base('gen').name == 'generate'
        assert Grammar.find_base('gen g18', resolve_aliases=True).name \
            == 'generate g18'
        assert Grammar.find_base('nonsense') is None

    def test_command_names(self):
        names = Grammar.get_command_names()
        for name in ['help', 'generate', 'solve', 'verify', 'construct',
                     'repro', 'experiment', 'bound']:
            assert name in names
        assert 'gen' not in names

    def test_value_options(self):
        options = Grammar.value_options()
        assert options == ['--budget', '--chi-cap', '--eps', '--n', '--p',
                           '--seed', '--tol', '--trials', '--workers']

    def test_usage(self):
        assert Grammar.find_base('verify colouring').usage() == \
            'verify colouring <graph> <colouring> [options]'
        assert Grammar.find_base('solve chi').usage() == \
            'solve chi [<graph>] [options]'
        assert Grammar.find_base('solve').usage() == \
            'solve {alpha|bipartite|chi|omega}'

    def test_help_puts_positionals_first(self):
        params = Grammar.find_base('construct pullback').get_help().params
        assert [p.name for p in params[:3]] == ['graph', 'map', 'cert']


if __name__ == '__main__':
    pytest.main()

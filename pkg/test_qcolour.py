import io
import json

import pytest

from qcolour import cli_main, join_argv, prepare_argv
from utils.constants import DATASETS_FOLDER, EXIT_FAILED, \
    EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE

G18_PATH = str(DATASETS_FOLDER / 'g18.dimacs')
G18_VECTORS_PATH = str(DATASETS_FOLDER / 'g18_vectors.json')


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArgv:

    def test_fuse_value_options(self):
        assert prepare_argv(['experiment', 'gnp', '--n', '10->20', '--p',
                             '0.3', 'x5']) == \
            ['experiment', 'gnp', '--n=10->20', '--p=0.3', 'x5']

    def test_leading_options_move_to_the_end(self):
        assert prepare_argv(['--json', '-v', 'bound', '2']) == \
            ['bound', '2', '--json', '-v']
        assert prepare_argv(['-', 'x']) == ['-', 'x']

    def test_join(self):
        assert join_argv(['verify', 'rank1', 'my cert.json']) == \
            "verify rank1 'my cert.json'"
        assert join_argv(['solve', 'chi', 'g.dimacs']) == \
            'solve chi g.dimacs'


class TestPipeline:

    def test_generate_then_solve(self, capsys, monkeypatch):
        code, out, err = run(capsys, 'gen', 'g18')
        assert code == EXIT_OK
        assert out.startswith('c g18\np edge 18 44\n')
        assert '18 vertices, 44 edges' in err

        monkeypatch.setattr('sys.stdin', io.StringIO(out))
        code, out, err = run(capsys, 'solve', 'chi')
        assert code == EXIT_OK
        assert out == '5\n'
        assert 'witness' in err

    def test_solve_json(self, capsys):
        code, out, _ = run(capsys, 'solve', 'omega', G18_PATH, '--json',
                           '--no-witness')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['value'] == 4
        assert 'witness' not in data

    def test_bipartite(self, capsys):
        code, out, _ = run(capsys, 'solve', 'bipartite', G18_PATH)
        assert code == EXIT_OK
        assert out == 'false\n'

    def test_dim4_colouring(self, capsys, tmp_path):
        _, graph_text, _ = run(capsys, 'gen', 'dim4')
        _, colouring_text, _ = run(capsys, 'gen', 'dim4', '--colouring')
        graph_path = tmp_path / 'dim4.dimacs'
        graph_path.write_text(graph_text)
        colouring_path = tmp_path / 'dim4.txt'
        colouring_path.write_text(colouring_text)
        code, _, err = run(capsys, 'verify', 'colouring', str(graph_path),
                           str(colouring_path))
        assert code == EXIT_OK
        assert err.startswith('PASS')

    def test_vectors_verify(self, capsys):
        code, _, err = run(capsys, 'verify', 'rep', G18_PATH,
                           G18_VECTORS_PATH)
        assert code == EXIT_OK
        assert err.startswith('PASS')


class TestCertificates:

    def _lift(self, capsys, tmp_path):
        code, out, _ = run(capsys, 'construct', 'od-lift', G18_PATH,
                           G18_VECTORS_PATH)
        assert code == EXIT_OK
        path = tmp_path / 'g18_rank1.json'
        path.write_text(out)
        return path

    def test_lift_verifies(self, capsys, tmp_path):
        path = self._lift(capsys, tmp_path)
        code, out, err = run(capsys, 'verify', 'rank1', str(path), '--json')
        assert code == EXIT_OK
        assert json.loads(out)['pass'] is True
        assert 'PASS' in err

    def test_tampered_certificate_fails(self, capsys, tmp_path):
        path = self._lift(capsys, tmp_path)
        data = json.loads(path.read_text())
        for row in data['matrices'][14]:
            row[0], row[1] = row[1], row[0]
        path.write_text(json.dumps(data))
        code, out, err = run(capsys, 'verify', 'rank1', str(path), '--json')
        assert code == EXIT_FAILED
        report = json.loads(out)
        assert report['pass'] is False
        assert [14, 17] in [v['where'] for v in report['violations']
                            if v['kind'] == 'edge']
        assert err.startswith('FAIL')

    def test_wrong_kind(self, capsys, tmp_path):
        path = self._lift(capsys, tmp_path)
        code, _, err = run(capsys, 'verify', 'projector', str(path))
        assert code == EXIT_USAGE
        assert 'rank1' in err

    def test_to_projector(self, capsys, tmp_path):
        path = self._lift(capsys, tmp_path)
        code, out, _ = run(capsys, 'construct', 'to-projector', str(path))
        assert code == EXIT_OK
        assert json.loads(out)['kind'] == 'projector'


class TestExitCodes:

    def test_usage(self, capsys):
        assert run(capsys)[0] == EXIT_USAGE
        code, _, err = run(capsys, 'solve', 'chi', '--bogus')
        assert code == EXIT_USAGE
        assert 'usage: qcolour solve chi' in err
        assert run(capsys, 'solve')[0] == EXIT_USAGE
        assert run(capsys, 'frobnicate')[0] == EXIT_USAGE

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, 'solve', 'chi', '/no/such/graph.dimacs')
        assert code == EXIT_USAGE
        assert 'could not be found' in err

    def test_budget_is_inconclusive(self, capsys):
        code, out, err = run(capsys, 'solve', 'chi', G18_PATH, '--budget',
                             '1')
        assert code == EXIT_INCONCLUSIVE
        assert out == ''
        assert 'budget' in err

    def test_bound(self, capsys):
        code, out, _ = run(capsys, 'bound', '1')
        assert code == EXIT_OK
        assert float(out) == pytest.approx((1 + 2 * 2 ** 0.5) ** 2)
        code, out, _ = run(capsys, '--json', 'bound', '2')
        assert json.loads(out)['k'] == 2
        assert run(capsys, 'bound', '0')[0] == EXIT_USAGE

    def test_help(self, capsys):
        code, out, _ = run(capsys, 'help')
        assert code == EXIT_OK
        assert 'experiment' in out
        code, out, _ = run(capsys, 'help', 'solve', 'chi')
        assert code == EXIT_OK
        assert out.startswith('usage: qcolour solve chi [<graph>] [options]')
        assert run(capsys, 'help', 'nonsense')[0] == EXIT_USAGE

    def test_experiment(self, capsys):
        code, out, err = run(capsys, 'experiment', 'gnp', '--n', '10',
                             '--trials', '2', '--seed', '3', '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert len(data['records']) == 2
        assert data['summary']['seed'] == 3
        assert 'violation fraction' in err


if __name__ == '__main__':
    pytest.main()

import json
from pathlib import Path
from typing import List

import pytest
from click.testing import CliRunner

import asymlab
from asymlab.__main__ import cli, dispatch, load_config
from asymlab.asymmetry import bound_eval, crossover_order
from asymlab.report_writer import log_text
from asymlab.structures import Sts
from asymlab.structures.io import dumps_structure


def invoke(args: List[str]) -> str:
    result = CliRunner().invoke(cli, args, catch_exceptions=False)
    assert result.exit_code == 0, result.output
    return result.output


# region Commands
def test_enumerate_count_only() -> None:
    out = invoke([
        'enumerate', '--kind', 'sts', '--n', '7', '--count-only',
        '--no-cache',
    ])
    assert out == '{"kind":"sts","n":7,"count":"30"}\n'


def test_enumerate_streams_structures() -> None:
    lines = invoke(['enumerate', '--kind', 'latin', '--n', '2']).splitlines()
    assert lines == [
        '{"kind":"latin","n":2,"grid":[[0,1],[1,0]]}',
        '{"kind":"latin","n":2,"grid":[[1,0],[0,1]]}',
        '{"kind":"latin","n":2,"count":"2"}',
    ]


def test_enumerate_reduced() -> None:
    out = invoke([
        'enumerate', '--kind', 'latin', '--n', '5', '--count-only',
        '--reduced-only', '--cache-dir', 'unused', '--no-cache',
    ])
    assert json.loads(out) == {
        'kind': 'latin', 'n': 5, 'count': '56', 'reduced': True
    }


def test_enumerate_uses_cache_dir(tmp_path: Path) -> None:
    invoke([
        'enumerate', '--kind', 'of', '--n', '6', '--count-only',
        '--cache-dir', str(tmp_path),
    ])
    assert (tmp_path / 'of-6.json').exists()


def test_aut(tmp_path: Path) -> None:
    square = tmp_path / 'z3.txt'
    square.write_text('0 1 2\n1 2 0\n2 0 1\n')
    doc = json.loads(invoke(['aut', str(square)]))
    assert doc['kind'] == 'latin'
    assert doc['order'] == '108'
    assert all(set(g) == {'sigma', 'fr', 'fc', 'fe'}
               for g in doc['generators'])


def test_aut_of_fano(tmp_path: Path) -> None:
    path = tmp_path / 'fano.json'
    path.write_text(dumps_structure(Sts.fano()))
    doc = json.loads(invoke(['aut', str(path)]))
    assert doc == {**doc, 'kind': 'sts', 'n': 7, 'order': '168'}


def test_fixed(tmp_path: Path) -> None:
    structure = tmp_path / 'fano.json'
    structure.write_text(dumps_structure(Sts.fano()))
    perm = tmp_path / 'rotation.txt'
    perm.write_text('1 2 3 4 5 6 0\n')
    doc = json.loads(invoke(['fixed', str(structure), str(perm)]))
    assert doc['fixed_points'] == 0
    assert doc['fixed_objects'] == 0
    assert doc['orbit_count'] == 1
    out = invoke(['fixed', str(structure), str(perm), '--format', 'csv'])
    assert out.splitlines()[1] == 'sts,7,0,0,1,7'


def test_fixed_latin(tmp_path: Path) -> None:
    structure = tmp_path / 'z3.txt'
    structure.write_text('0 1 2\n1 2 0\n2 0 1\n')
    perm = tmp_path / 'transpose.json'
    perm.write_text(
        '{"sigma": "CRE", "fr": [0, 1, 2], "fc": [0, 1, 2], '
        '"fe": [0, 1, 2]}'
    )
    doc = json.loads(invoke(['fixed', str(structure), str(perm)]))
    assert doc['fixed_objects'] == 3


def test_permanent(tmp_path: Path) -> None:
    path = tmp_path / 'identity.txt'
    path.write_text('100\n010\n001\n')
    doc = json.loads(invoke(['permanent', str(path)]))
    assert doc['permanent'] == '1'
    assert doc['regular_sum'] == 1
    assert doc['log_lower_bound'] == '-3.0'


def test_permanent_from_stdin() -> None:
    result = CliRunner().invoke(cli, ['permanent', '-'], input='11\n11\n')
    assert result.exit_code == 0
    assert json.loads(result.output)['permanent'] == '2'


def test_bounds() -> None:
    doc = json.loads(invoke(['bounds', '--kind', 'latin', '--n', '4']))
    assert doc == {
        'kind': 'latin',
        'n': 4,
        'lower': log_text(bound_eval('latin_lower', 4)),
        'aut_upper': log_text(bound_eval('latin_aut_upper', 4)),
    }
    doc = json.loads(invoke([
        'bounds', '--kind', 'sts', '--n', '9', '--eps', '0.25'
    ]))
    assert doc['eps'] == 0.25
    assert float(doc['aut_upper']) == pytest.approx(43.76, abs=0.01)


def test_single_bound() -> None:
    doc = json.loads(invoke([
        'bounds', '--kind', 'one_factor_upper', '--n', '6', '--k', '5'
    ]))
    assert float(doc['value']) == pytest.approx(3 * 1.6094379124341003)


def test_crossover() -> None:
    doc = json.loads(invoke([
        'crossover', '--kind', 'latin_eps', '--eps', '0.5'
    ]))
    assert doc['n0'] == crossover_order('latin_eps', 0.5)
    assert float(doc['log_gap']) > 0
    assert doc['eps'] == 0.5


def test_report() -> None:
    out = invoke(['report', '--kind', 'sts', '--n', '7', '--format', 'csv'])
    assert out.splitlines()[1] == 'sts,7,30,30,1,1,168:30'
    doc = json.loads(invoke(['report', '--kind', 'of', '--n', '6']))
    assert doc['aut_order_histogram'] == {'120': '6'}


def test_srg_classical() -> None:
    doc = json.loads(invoke([
        'srg', '--classical', 'triangular', '--n', '5'
    ]))
    assert doc['params'] == {'v': 10, 'k': 6, 'lambda': 3, 'mu': 4}
    assert doc['least_eigenvalue'] == pytest.approx(-2)


def test_srg_multipartite_csv() -> None:
    out = invoke(['srg', '--multipartite', '3', '--format', 'csv'])
    assert out == 'v,k,lambda,mu\n9,6,3,6\n'


def test_srg_compare(tmp_path: Path) -> None:
    path = tmp_path / 'fano.json'
    path.write_text(dumps_structure(Sts.fano()))
    doc = json.loads(invoke(['srg', str(path), '--compare']))
    assert doc['params'] == {'v': 7, 'k': 6, 'lambda': 5, 'mu': 0}
    assert doc['comparison'] == {
        'graph_aut_order': '5040',
        'structure_aut_order': '168',
        'induced_equal': False,
    }


def test_srg_graph_document(tmp_path: Path) -> None:
    path = tmp_path / 'c5.json'
    path.write_text(json.dumps({
        'v': 5, 'edges': [[i, (i + 1) % 5] for i in range(5)]
    }))
    doc = json.loads(invoke(['srg', str(path)]))
    assert doc['params'] == {'v': 5, 'k': 2, 'lambda': 0, 'mu': 1}


def test_srg_family() -> None:
    lines = invoke(['srg', '--family', '--format', 'csv']).splitlines()
    assert lines[0] == 'family,parameter,v,k,lambda,mu,least,expected'
    assert len(lines) > 10


def test_configs() -> None:
    runner = CliRunner()
    with runner.isolated_filesystem():
        result = runner.invoke(cli, ['configs'])
        assert result.exit_code == 0
        assert 'sts_cap' in Path('config.yml').read_text('utf-8')
# endregion


# region Exit codes
def test_domain_error_exit_code(capsys: pytest.CaptureFixture) -> None:
    code = dispatch([
        'enumerate', '--kind', 'sts', '--n', '5', '--count-only',
        '--no-cache',
    ])
    assert code == 1
    err = capsys.readouterr().err
    assert err.splitlines()[-1] == \
        'error: InadmissibleOrder: 5 is not 1 or 3 (mod 6)'


def test_malformed_input_exit_code(
    tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    path = tmp_path / 'bad.txt'
    path.write_text('0 1\n0 1\n')
    assert dispatch(['aut', str(path)]) == 1
    err = capsys.readouterr().err
    assert err.startswith('error: RepeatInColumn: column 0')


@pytest.mark.parametrize('argv', [
    ['enumerate', '--kind', 'cube', '--n', '3'],
    ['enumerate', '--kind', 'sts'],
    ['enumerate', '--kind', 'sts', '--n', '7', '--reduced-only'],
    ['aut', 'no/such/file'],
    ['srg'],
    ['no-such-command'],
])
def test_usage_error_exit_code(
    argv: List[str], capsys: pytest.CaptureFixture
) -> None:
    assert dispatch(argv) == 2
    assert capsys.readouterr().err


def test_success_exit_code(capsys: pytest.CaptureFixture) -> None:
    assert dispatch(['bounds', '--kind', 'ep', '--n', '2']) == 0
    doc = json.loads(capsys.readouterr().out)
    assert float(doc['aut_upper']) == pytest.approx(1.7329, abs=1e-4)
# endregion


def test_load_config_merges_sections(tmp_path: Path) -> None:
    path = tmp_path / 'config.yml'
    path.write_text('enumeration:\n  sts_cap: 7\nlogging:\n  level: DEBUG\n')
    config = load_config(str(path))
    assert config['enumeration']['sts_cap'] == 7
    assert config['enumeration']['of_cap'] == 8
    assert config['logging']['level'] == 'DEBUG'
    assert load_config(None)['enumeration']['sts_cap'] == 9


def test_config_applies_to_later_commands(
    tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    path = tmp_path / 'config.yml'
    path.write_text('enumeration:\n  sts_cap: 7\n')
    argv = ['enumerate', '--kind', 'sts', '--n', '9', '--count-only',
            '--no-cache']
    try:
        assert dispatch(['--config', str(path), *argv]) == 1
        assert 'CapExceeded' in capsys.readouterr().err
    finally:
        assert dispatch(argv) == 0
    assert json.loads(capsys.readouterr().out)['count'] == '840'


def test_install_config_rebinds_constants() -> None:
    from asymlab.enumeration import sts
    from asymlab.permanent import log_scalar

    config = load_config(None)
    config['enumeration']['sts_cap'] = 7
    config['permanent']['precision_bits'] = 64
    try:
        asymlab.install_config(config)
        assert sts.STS_CAP == 7
        assert log_scalar.ctx.prec == 64
    finally:
        asymlab.install_config(load_config(None))
    assert sts.STS_CAP == 9
    assert log_scalar.ctx.prec == 128

import json

import pytest

from supercapelli.cli import main, SUITES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hooks_listing(capsys):
    code, out, _ = run(capsys, 'hooks', '--m', '1', '--n', '1', '--size', '3')
    assert code == 0
    assert out.splitlines() == ['3', '2,1', '1,1,1']


def test_hooks_json_deterministic(capsys):
    args = ['hooks', '--m', '2', '--n', '1', '--size', '2', '--upto',
            '--format', 'json']
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data['partitions'] == ['()', '1', '2', '1,1']


def test_sp_star_oracle(capsys):
    code, out, _ = run(capsys, 'sp-star', '--theta', '1/2', '--m', '1',
                       '--n', '1', '--partition', '1', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['vars'] == ['x1', 'y1']
    assert data['terms'] == [{'exp': [1, 0], 'coef': '1'},
                             {'exp': [0, 1], 'coef': '1'},
                             {'exp': [0, 0], 'coef': '-1/2'}]


def test_gamma_and_frobenius(capsys):
    code, out, _ = run(capsys, 'gamma', '--m', '2', '--n', '1',
                       '--partition', '2,1')
    assert code == 0 and out.strip() == '(4,2 ; 0)'
    code, out, _ = run(capsys, 'frobenius', '--m', '1', '--n', '1',
                       '--partition', '2')
    assert code == 0 and out.strip() == 'x = (1) ; y = (3/2)'


def test_invalid_partition_exits_2(capsys):
    code, _, err = run(capsys, 'gamma', '--m', '1', '--n', '1',
                       '--partition', '2,2')
    assert code == 2
    assert 'error:' in err


def test_invalid_sigma_exits_2(capsys):
    code, _, err = run(capsys, 't-sigma', '--m', '1', '--n', '1',
                       '--sigma', '1,3,2')
    assert code == 2
    assert 'error' in err


def test_hc_text(capsys):
    code, out, _ = run(capsys, 'hc', '--m', '1', '--n', '1', '--dmax', '2')
    assert code == 0
    assert out.strip() == \
        'E(1,1)^2 - E(1b,1b)^2 - E(1,1) - E(1b,1b)'


def test_c_poly_methods_agree(capsys):
    base = ['c-poly', '--m', '1', '--n', '1', '--partition', '2',
            '--format', 'json']
    _, hc_out, _ = run(capsys, *base, '--method', 'hc')
    _, in_out, _ = run(capsys, *base, '--method', 'interp')
    assert json.loads(hc_out)['terms'] == json.loads(in_out)['terms']


def test_capelli_op_cache_cold_warm(capsys, tmp_path):
    args = ['capelli-op', '--m', '1', '--n', '1', '--partition', '1,1',
            '--format', 'json', '--cache-dir', str(tmp_path)]
    code1, cold, _ = run(capsys, *args)
    assert code1 == 0
    assert list(tmp_path.iterdir())
    code2, warm, _ = run(capsys, *args)
    assert code2 == 0 and warm == cold
    code3, nocache, _ = run(capsys, *args, '--no-cache')
    assert code3 == 0 and nocache == cold


def test_capelli_op_corrupt_cache_recovers(capsys, tmp_path):
    args = ['capelli-op', '--m', '1', '--n', '1', '--partition', '2',
            '--format', 'json', '--cache-dir', str(tmp_path)]
    _, cold, _ = run(capsys, *args)
    entry = next(tmp_path.glob('*.json'))
    entry.write_text('garbage{')
    with pytest.warns(UserWarning):
        code, again, _ = run(capsys, *args)
    assert code == 0 and again == cold


def test_output_file(capsys, tmp_path):
    target = tmp_path / 'out.json'
    code, out, _ = run(capsys, 'gelfand', '--m', '1', '--n', '1',
                       '--dmax', '1', '--format', 'json',
                       '--output', str(target))
    assert code == 0 and out == ''
    data = json.loads(target.read_text())
    assert data['terms'] == [{'word': [['1', '1']], 'coef': '1'},
                             {'word': [['1b', '1b']], 'coef': '1'}]


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'symbol-identity',
                       '--m', '1', '--n', '1', '--dmax', '2')
    assert code == 0
    assert 'overall: pass' in out
    assert 'FAIL' not in out


def test_verify_json_payload(capsys):
    code, out, _ = run(capsys, 'verify', '--suite', 'centrality',
                       '--m', '1', '--n', '1', '--dmax', '2',
                       '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['passed'] is True
    assert all(rec['passed'] for rec in data['cases'])


def test_verify_unknown_suite_exits_2(capsys):
    code, _, err = run(capsys, 'verify', '--suite', 'nonsense')
    assert code == 2 and 'unknown suite' in err


def test_suite_registry_complete():
    assert len(SUITES) == 11

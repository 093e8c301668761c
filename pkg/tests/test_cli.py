import io
import json

import pytest

from mirtoolkit.cli import run, get_args, EXIT_OK, EXIT_FAIL, EXIT_USAGE


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_get_args():
    args = get_args(['verify', 'census', '--eigen', '0,1,2'])
    assert args.verb == 'verify'
    assert args.sub == 'census'
    assert args.eigen == '0,1,2'
    assert not args.verbose


@pytest.mark.parametrize('argv', [[], ['bogus'], ['verify', 'nothing'],
                                  ['verify', 'open'],
                                  ['oracle', 'compare', '--p', '3'],
                                  ['verify', 'census', '--eigen', '0,0'],
                                  ['oracle', 'torus', '--n', '2', '--p', '5',
                                   '--torus', 'pairs', '--k', '1'],
                                  ['verify', 'census', '--eigen', '0,1',
                                   '--n', '3']])
def test_usage_errors(argv):
    code, out, _ = call(*argv)
    assert code == EXIT_USAGE
    assert out == ''


def test_verify_open():
    code, out, _ = call('verify', 'open', '--n', '3')
    assert code == EXIT_OK
    lines = out.strip().split('\n')
    assert lines[0].startswith('claim: ')
    assert lines[1] == 'n=3 open orbit, trivial stabilizer: ok'


def test_verify_census():
    code, out, _ = call('verify', 'census', '--case', 'complex',
                        '--eigen', '0,1,2')
    assert code == EXIT_OK
    assert out.strip().split('\n')[-1] == \
        '7 orbits, 1 open, all semisimple: ok'
    code, out, _ = call('verify', 'census', '--pairs', '0:1', '--reals', '2')
    assert code == EXIT_OK
    assert out.strip().endswith('3 orbits, 1 open, all semisimple: ok')


def test_json_report():
    code, out, _ = call('verify', 'mackey', '--n', '4', '--json')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['status'] == 'ok'
    assert report['witnesses']


def test_report_is_deterministic():
    argv = ('verify', 'stabilizers', '--eigen', '0,1,2', '--json')
    assert call(*argv)[1] == call(*argv)[1]


def test_catalog():
    code, out, _ = call('catalog', 'open', '--n', '3')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['kind'] == 'pfun'
    assert data['matrix']['rows'][1] == ['1', '0', '0']
    code, out, _ = call('catalog', 'selector', '--eigen', '0,1,2',
                        '--selector', '1,3')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['invariant']['depth'] == 2
    assert data['invariant']['levi_char_poly'] == 'x-1'
    assert data['g']['rows'][2] == ['1', '0', '1']


def test_classify_file(tmp_path):
    path = str(tmp_path / 'shift.json')
    with open(path, 'w') as f:
        json.dump({'field': 'rat',
                   'rows': [['0', '0', '0'], ['1', '0', '0'],
                            ['0', '1', '0']]}, f)
    code, out, _ = call('classify', '--in', path)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['depth'] == 3
    assert data['invariant_factors'] == []


def test_classify_prime_field_file(tmp_path):
    path = str(tmp_path / 'nilpotent.json')
    with open(path, 'w') as f:
        json.dump({'field': 'fp:2',
                   'rows': [['0', '1', '0'], ['0', '0', '0'],
                            ['0', '0', '0']]}, f)
    code, out, _ = call('classify', '--in', path, '--field', 'fp:2')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['depth'] == 1
    assert data['invariant_factors'] == ['x^2']
    assert not data['semisimple']


def test_oracle(tmp_path):
    code, out, _ = call('oracle', 'compare', '--n', '2', '--p', '3')
    assert code == EXIT_OK
    assert out.strip().endswith('partition match: 4 classes: ok')
    dump = str(tmp_path / 'part.txt')
    code, _, _ = call('oracle', 'partition', '--n', '2', '--p', '3',
                      '--dump', dump)
    assert code == EXIT_OK
    code, _, _ = call('oracle', 'compare', '--n', '2', '--p', '3',
                      '--in', dump)
    assert code == EXIT_OK
    code, out, _ = call('oracle', 'torus', '--n', '3', '--p', '7')
    assert code == EXIT_OK
    assert out.strip().endswith('7 torus orbits: ok')
    code, out, _ = call('oracle', 'strata', '--n', '2', '--p', '3')
    assert code == EXIT_OK
    code, out, _ = call('oracle', 'cosets', '--eigen', '0,1', '--p', '3')
    assert code == EXIT_OK
    assert out.strip().endswith('3 double cosets: ok')


def test_fiber_and_lemmas():
    code, out, _ = call('verify', 'fiber', '--eigen', '0,1')
    assert code == EXIT_OK
    assert out.strip().endswith('fiber sizes 1,1: ok')
    code, _, _ = call('verify', 'lemmas', '--n', '3', '--samples', '5')
    assert code == EXIT_OK
    code, _, _ = call('verify', 'consistency', '--pairs', '0:1',
                      '--reals', '2')
    assert code == EXIT_OK


def test_verbose_goes_to_stderr():
    code, out, err = call('oracle', 'partition', '--n', '2', '--p', '3',
                          '--verbose')
    assert code == EXIT_OK
    assert 'Saturating' in err
    assert 'Saturating' not in out


def test_failed_claim_exit_code(tmp_path):
    # a partition file that puts everything in one class
    dump = str(tmp_path / 'bad.txt')
    with open(dump, 'w') as f:
        f.write(''.join('0 ' + str(i) + '\n' for i in range(9)))
    code, out, _ = call('oracle', 'compare', '--n', '2', '--p', '3',
                        '--in', dump)
    assert code == EXIT_FAIL
    assert out.strip().endswith(': fail')

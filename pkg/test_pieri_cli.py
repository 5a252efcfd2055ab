#!/usr/bin/env python3
"""
Test the command-line frontend end to end
"""
import io
import json
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from pieri_cli import main, parse_weyl_word


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue()


def test_expand_a2():
    status, text = run('expand', '--type', 'A2', '--lambda', '1,0', '--w', 's1s2')
    assert status == 0
    assert json.loads(text) == {
        'root_system': 'A2', 'lambda': [1, 0], 'w': [1, 2],
        'terms': [{'v': [2], 'coeff': [{'mu': [1, 0], 'c': 1}]},
                  {'v': [1, 2], 'coeff': [{'mu': [-1, 1], 'c': 1}]}],
    }


def test_expand_a1_and_zero_weight():
    status, text = run('expand', '--type', 'A1', '--lambda', '1', '--w', 's1')
    assert status == 0 and len(json.loads(text)['terms']) == 2

    status, text = run('expand', '--type', 'A2', '--lambda', '0,0', '--w', 's1')
    assert status == 0
    assert json.loads(text)['terms'] == [{'v': [1], 'coeff': [{'mu': [0, 0], 'c': 1}]}]


def test_words_are_canonicalized():
    first = run('expand', '--type', 'A2', '--lambda', '1,1', '--w', 's2s1s2')
    second = run('expand', '--type', 'A2', '--lambda', '1,1', '--w', '1,2,1')
    assert first == second
    assert json.loads(first[1])['w'] == [1, 2, 1]


def test_paths():
    for lam, count in (('1,0', 3), ('1,1', 8)):
        status, text = run('paths', '--type', 'A2', '--lambda', lam)
        assert status == 0 and json.loads(text)['count'] == count

    status, text = run('paths', '--type', 'A1', '--lambda', '1', '--le-w', '1')
    data = json.loads(text)
    assert status == 0 and data['count'] == 1
    assert data['paths'][0] == {'dirs': [[1]], 'breaks': ['0', '1'], 'endpoint': [1], 'iota': [], 'v': []}


def test_weyl():
    for name, rows, top in (('A1', 2, 1), ('A2', 6, 3), ('B2', 8, 4)):
        status, text = run('weyl', '--type', name)
        data = json.loads(text)
        assert status == 0
        assert len(data['elements']) == rows and data['longest_length'] == top
        assert len(data['bruhat']) == rows

    status, text = run('weyl', '--type', 'A1', '--format', 'tsv')
    assert text == 'index\tword\tlength\tbruhat_row\n0\t1\t0\t11\n1\ts1\t1\t01\n'


def test_verify():
    status, text = run('verify', 'theorem', '--type', 'A2', '--lambda-box', '1', '--mu-box', '1')
    assert status == 0 and json.loads(text)['passed'] is True
    status, text = run('verify', 'ops', '--type', 'B2')
    assert status == 0
    status, text = run('verify', 'dimensions', '--type', 'G2', '--lambda-box', '1', '--format', 'tsv')
    assert status == 0 and text.startswith('suite\troot_system\tresult')


def test_usage_errors():
    bad = (
        ('expand', '--type', 'Z2', '--lambda', '1,0', '--w', 's1'),
        ('expand', '--type', 'A2', '--lambda', '-1,0', '--w', 's1'),
        ('expand', '--type', 'A2', '--lambda', '1', '--w', 's1'),
        ('expand', '--type', 'A2', '--lambda', '1,0', '--w', '2'),
        ('expand', '--type', 'A2', '--lambda', '1,0', '--w', 's3'),
        ('expand', '--type', 'A2', '--lambda', '1,0'),
        ('verify', 'nonsense', '--type', 'A2'),
        ('verify', 'theorem', '--type', 'A2', '--jobs', '0'),
        (),
    )
    for argv in bad:
        status, _ = run(*argv)
        assert status == 2, argv


def test_parse_weyl_word():
    assert parse_weyl_word('s2s1s2', 2) == (2, 1, 2)
    assert parse_weyl_word('1,2', 2) == (1, 2)
    for identity in ('', '1', 'e', 'id'):
        assert parse_weyl_word(identity, 2) == ()
    for text in ('2', 's1x', 's0'):
        try:
            parse_weyl_word(text, 2)
            raise AssertionError(f"{text!r} should be rejected")
        except ValueError:
            pass


def test_deterministic_output():
    argv = ('paths', '--type', 'B2', '--lambda', '1,1', '--le-w', 's2s1')
    assert run(*argv) == run(*argv)


def test_output_file():
    with tempfile.TemporaryDirectory() as tmp:
        target = Path(tmp) / 'expansion.tsv'
        status, text = run('expand', '--type', 'A2', '--lambda', '1,0', '--w', 's1s2',
                           '--format', 'tsv', '--output', str(target))
        assert status == 0 and text == ''
        assert target.read_text() == 'v\tmu\tc\ns2\t1,0\t1\ns1s2\t-1,1\t1\n'

def test_unwritable_output_reports_error():
    with tempfile.TemporaryDirectory() as tmp:
        target = Path(tmp) / 'missing' / 'expansion.json'
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            status = main(['expand', '--type', 'A1', '--lambda', '1', '--w', 's1', '--output', str(target)])
        assert status == 1
        assert 'Error:' in err.getvalue()
        assert not target.exists()



if __name__ == "__main__":
    tests = [(name, fn) for name, fn in list(globals().items()) if name.startswith('test_') and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✓ {name}")
        except Exception as e:
            failed += 1
            print(f"✗ {name}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)

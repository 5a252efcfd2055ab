#!/usr/bin/env python3
"""
Test the verification suites on small grids
"""
import sys

from suites import (SUITE_NAMES, run_suite, verify_braid, verify_characters, verify_commutation,
                    verify_corollary, verify_crystal, verify_dimensions, verify_operator_algebra,
                    verify_string_partition, verify_strings)
from rootdata import parse_root_system, weyl_group


def group(name):
    return weyl_group(parse_root_system(name))


def test_commutation():
    for name in ('A1', 'A2', 'B2', 'G2'):
        report = verify_commutation(group(name), 1, 1)
        assert report.passed, report.counterexample
    assert verify_commutation(group('A1'), 2, 2).checked == 5 * 1 * 5


def test_braid_all_orders():
    for name in ('A2', 'B2', 'G2', 'A3'):
        report = verify_braid(group(name), 1)
        assert report.passed, (name, report.counterexample)


def test_operator_algebra():
    reports = verify_operator_algebra(group('B2'), 1, 1)
    names = [r.name for r in reports]
    assert names == ['idempotence', 'braid', 'defining_relation', 'invariant_linearity', 'commutation']
    assert all(r.passed for r in reports)


def test_dimensions_and_characters():
    for name, box in (('A2', 2), ('B2', 1), ('G2', 1)):
        weyl = group(name)
        assert all(r.passed for r in verify_dimensions(weyl, box)), name
        assert verify_characters(weyl, box).passed, name


def test_crystal():
    for name in ('A2', 'B2', 'G2'):
        assert verify_crystal(group(name), 1).passed, name


def test_strings():
    assert verify_string_partition(group('B2'), 1).passed
    reports = verify_strings(group('A2'), 1, 1)
    assert [r.name for r in reports] == ['string_partition', 'string_lemma']
    assert all(r.passed for r in reports)


def test_corollary():
    for name in ('A1', 'A2', 'B2'):
        report = verify_corollary(group(name), 1)
        assert report.passed, (name, report.counterexample)


def test_run_suite():
    weyl = group('A1')
    assert [r.name for r in run_suite('braid', weyl, 1, 1)] == ['braid']
    everything = run_suite('all', weyl, 1, 1)
    assert all(r.passed for r in everything)
    assert {r.name for r in everything} >= {'theorem', 'commutation', 'string_lemma', 'corollary', 'crystal'}
    assert 'all' in SUITE_NAMES
    try:
        run_suite('nonsense', weyl, 1, 1)
        raise AssertionError("unknown suite")
    except ValueError:
        pass


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

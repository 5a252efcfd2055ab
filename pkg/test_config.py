#!/usr/bin/env python3
"""
Test configuration defaults and validation
"""
import os
import sys

from config import OUTPUT_FORMATS, Config, _env_int


def test_defaults_are_valid():
    valid, errors = Config.validate_config()
    assert valid, errors
    assert Config.MAX_RANK <= 4
    assert Config.OUTPUT_FORMAT in OUTPUT_FORMATS


def test_env_int_fallback():
    os.environ['KPIERI_TEST_VALUE'] = 'seven'
    try:
        assert _env_int('KPIERI_TEST_VALUE', 3) == 3
        os.environ['KPIERI_TEST_VALUE'] = '7'
        assert _env_int('KPIERI_TEST_VALUE', 3) == 7
    finally:
        del os.environ['KPIERI_TEST_VALUE']
    assert _env_int('KPIERI_TEST_VALUE', 3) == 3


def test_invalid_values_reported():
    saved = Config.JOBS, Config.OUTPUT_FORMAT
    try:
        Config.JOBS, Config.OUTPUT_FORMAT = 0, 'xml'
        valid, errors = Config.validate_config()
        assert not valid
        assert len(errors) == 2
    finally:
        Config.JOBS, Config.OUTPUT_FORMAT = saved


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

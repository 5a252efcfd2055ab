#!/usr/bin/env python3
"""
Test the acceptance runner on a reduced grid
"""
import json
import sys
import tempfile
from pathlib import Path

from acceptance_runner import ACCEPTANCE_GRID, AcceptanceRunner, GridCell, capture_cli


def test_capture_cli():
    status, text = capture_cli(['weyl', '--type', 'A1'])
    assert status == 0
    assert json.loads(text)['order'] == 2


def test_grid_covers_acceptance_systems():
    assert [c.root_system for c in ACCEPTANCE_GRID] == ['A1', 'A2', 'B2', 'G2', 'A3']
    assert [c.root_system for c in ACCEPTANCE_GRID if c.strings] == ['A1', 'A2', 'B2']


def test_reduced_sweep_passes():
    with tempfile.TemporaryDirectory() as tmp:
        runner = AcceptanceRunner(
            cells=[GridCell('A1', 1, 1, strings=True)],
            commands=[['weyl', '--type', 'A1'], ['expand', '--type', 'A1', '--lambda', '1', '--w', 's1']],
            report_dir=Path(tmp),
        )
        assert runner.run() == 0
        reports = list(Path(tmp).glob('acceptance_*.json'))
        assert len(reports) == 1
        data = json.loads(reports[0].read_text())
        assert data['passed'] is True
        assert {r['suite'] for r in data['results']} == {
            'theorem', 'commutation', 'ops', 'dimensions', 'crystal', 'corollary', 'strings'}
        assert all(d['identical'] for d in data['determinism'])


def test_failing_command_fails_sweep():
    with tempfile.TemporaryDirectory() as tmp:
        runner = AcceptanceRunner(cells=[], commands=[['weyl', '--type', 'Z9']], report_dir=Path(tmp))
        assert runner.run() == 1


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

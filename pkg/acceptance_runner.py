#!/usr/bin/env python3
"""
KPIERI Acceptance Runner - full verification sweep
Runs every identity suite over the acceptance grids, checks that the CLI is
deterministic, and writes a dated JSON report
"""

import io
import json
import sys
import time
import logging
import argparse
from contextlib import redirect_stdout
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from config import Config
from pieri_cli import main as cli_main
from rootdata import parse_root_system, weyl_group
from suites import run_suite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridCell:
    """One root system with its coordinate boxes"""
    root_system: str
    lambda_box: int
    mu_box: int
    strings: bool = False


ACCEPTANCE_GRID = (
    GridCell('A1', 2, 2, strings=True),
    GridCell('A2', 2, 2, strings=True),
    GridCell('B2', 2, 2, strings=True),
    GridCell('G2', 1, 2),
    GridCell('A3', 1, 1),
)

CELL_SUITES = ('theorem', 'commutation', 'ops', 'dimensions', 'crystal', 'corollary')

DETERMINISM_COMMANDS = (
    ['expand', '--type', 'A2', '--lambda', '1,0', '--w', 's1s2'],
    ['expand', '--type', 'A1', '--lambda', '1', '--w', 's1'],
    ['expand', '--type', 'A2', '--lambda', '0,0', '--w', 's1'],
    ['expand', '--type', 'B2', '--lambda', '1,1', '--w', 's1s2s1', '--format', 'tsv'],
    ['paths', '--type', 'A2', '--lambda', '1,0'],
    ['paths', '--type', 'A2', '--lambda', '1,1'],
    ['paths', '--type', 'A1', '--lambda', '1', '--le-w', '1'],
    ['paths', '--type', 'G2', '--lambda', '1,0', '--le-w', 's2s1', '--format', 'tsv'],
    ['verify', 'theorem', '--type', 'A2', '--lambda-box', '1', '--mu-box', '1'],
    ['verify', 'ops', '--type', 'B2'],
    ['verify', 'dimensions', '--type', 'G2', '--lambda-box', '1'],
    ['weyl', '--type', 'A1'],
    ['weyl', '--type', 'A2'],
    ['weyl', '--type', 'B2', '--format', 'tsv'],
)


def setup_logging(log_dir: Path):
    log_dir.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_dir / f'acceptance_{datetime.now().strftime("%Y%m%d")}.log'),
            logging.StreamHandler(sys.stdout)
        ]
    )


def capture_cli(argv: Sequence[str]):
    """Run the CLI in-process, returning (exit status, stdout text)"""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        status = cli_main(list(argv))
    return status, buffer.getvalue()


class AcceptanceRunner:
    """
    Drives the acceptance sweep
    """

    def __init__(self, cells: Sequence[GridCell] = ACCEPTANCE_GRID,
                 commands: Sequence[Sequence[str]] = DETERMINISM_COMMANDS,
                 report_dir: Optional[Path] = None, jobs: Optional[int] = None):
        self.cells = list(cells)
        self.commands = [list(c) for c in commands]
        self.report_dir = Path(report_dir or Config.REPORT_DIR)
        self.jobs = jobs or Config.JOBS
        self.results: List[Dict] = []
        self.determinism: List[Dict] = []

    def run_cell(self, cell: GridCell) -> bool:
        """All suites for one root system"""
        logger.info("=" * 50)
        logger.info(f"{cell.root_system}: lambda_box={cell.lambda_box}, mu_box={cell.mu_box}")

        weyl = weyl_group(parse_root_system(cell.root_system))
        suites = CELL_SUITES + (('strings',) if cell.strings else ())
        passed = True

        for suite in suites:
            started = time.monotonic()
            try:
                reports = run_suite(suite, weyl, cell.lambda_box, cell.mu_box, self.jobs)
            except Exception as e:
                logger.error(f"{suite} on {cell.root_system} raised: {e}")
                self.results.append({'root_system': cell.root_system, 'suite': suite,
                                     'passed': False, 'error': str(e)})
                passed = False
                continue

            elapsed = time.monotonic() - started
            for report in reports:
                status = 'pass' if report.passed else 'FAIL'
                logger.info(f"  {report.name:<20} {status}  ({report.checked} checks)")
                entry = report.to_dict()
                entry['suite'] = suite
                self.results.append(entry)
                passed = passed and report.passed
            logger.info(f"  {suite} finished in {elapsed:.1f}s")

        return passed

    def check_determinism(self) -> bool:
        """Every command twice; outputs must match byte for byte"""
        logger.info("=" * 50)
        logger.info(f"Determinism check over {len(self.commands)} commands")
        passed = True

        for argv in self.commands:
            first_status, first = capture_cli(argv)
            second_status, second = capture_cli(argv)
            same = first == second and first_status == second_status
            ok = same and first_status == 0
            self.determinism.append({'argv': argv, 'status': first_status, 'identical': same})
            if not ok:
                logger.error(f"  {' '.join(argv)}: status={first_status}, identical={same}")
                passed = False
            else:
                logger.info(f"  {' '.join(argv)}: ok")

        return passed

    def write_report(self, passed: bool) -> Path:
        self.report_dir.mkdir(parents=True, exist_ok=True)
        report_file = self.report_dir / f"acceptance_{datetime.now().strftime('%Y%m%d')}.json"
        with open(report_file, 'w') as f:
            json.dump({
                'generated': datetime.now().isoformat(timespec='seconds'),
                'passed': passed,
                'cells': [vars(c) for c in self.cells],
                'results': self.results,
                'determinism': self.determinism,
            }, f, indent=2)
        logger.info(f"Report saved to {report_file}")
        return report_file

    def run(self) -> int:
        """
        Main sweep; returns 0 iff everything passed
        """
        logger.info("=" * 70)
        logger.info("KPIERI ACCEPTANCE STARTING")
        logger.info(f"Start time: {datetime.now()}")
        logger.info("=" * 70)

        passed = True
        for cell in self.cells:
            passed = self.run_cell(cell) and passed
        passed = self.check_determinism() and passed

        self.write_report(passed)
        logger.info(f"ACCEPTANCE {'PASSED' if passed else 'FAILED'}")
        return 0 if passed else 1


def main():
    """
    Entry point for the acceptance sweep
    """
    parser = argparse.ArgumentParser(description='Run the KPIERI acceptance sweep')
    parser.add_argument('--only', help='Restrict to one root system, e.g. A2')
    parser.add_argument('--jobs', type=int, default=Config.JOBS)
    args = parser.parse_args()

    setup_logging(Path(Config.LOG_DIR))

    valid, errors = Config.validate_config()
    if not valid:
        for error in errors:
            logger.error(f"Configuration error: {error}")
        sys.exit(2)

    cells = [c for c in ACCEPTANCE_GRID if args.only is None or c.root_system == args.only.upper()]
    if not cells:
        logger.error(f"No acceptance cell for {args.only}")
        sys.exit(2)

    runner = AcceptanceRunner(cells=cells, jobs=args.jobs)
    try:
        sys.exit(runner.run())
    except KeyboardInterrupt:
        logger.info("Received keyboard interrupt")
        sys.exit(1)
    except Exception as e:
        logger.error(f"Fatal error: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()

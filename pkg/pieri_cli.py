#!/usr/bin/env python3
"""
Command-line frontend for KPIERI

    python pieri_cli.py expand --type A2 --lambda 1,0 --w s1s2
    python pieri_cli.py paths --type A2 --lambda 1,1 [--le-w s1]
    python pieri_cli.py verify theorem --type A2 --lambda-box 1 --mu-box 1
    python pieri_cli.py weyl --type B2

Exit codes: 0 success, 1 failed identity or computation error, 2 usage error.
Output is deterministic; logging goes to stderr only.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import argparse
import json
import logging
import re
import sys

from config import OUTPUT_FORMATS, Config
from paths import final_direction, generate_paths, initial_direction, path_to_json, restrict_le
from pieri import expand, expansion_to_json, expansion_to_tsv
from rootdata import RootSystemSpec, Weight, WeylGroup, parse_root_system, weyl_group
from suites import SUITE_NAMES, run_suite

logger = logging.getLogger(__name__)

IDENTITY_TOKENS = ('', '1', 'e', 'id')


class UsageError(ValueError):
    """Malformed command-line value"""


@dataclass
class CliConfig:
    """Parsed and validated command-line request"""
    command: str
    rs: RootSystemSpec
    lam: Optional[Weight] = None
    w: Optional[Tuple[int, ...]] = None
    le_w: Optional[Tuple[int, ...]] = None
    suite: Optional[str] = None
    lambda_box: int = Config.LAMBDA_BOX
    mu_box: int = Config.MU_BOX
    jobs: int = Config.JOBS
    output_format: str = Config.OUTPUT_FORMAT
    output: Optional[str] = None


def parse_weight(text: str, rank: int) -> Weight:
    """'1,0' -> (1, 0)"""
    try:
        coords = tuple(int(x) for x in text.split(','))
    except ValueError:
        raise UsageError(f"Weight must be comma-separated integers, got {text!r}")
    if len(coords) != rank:
        raise UsageError(f"Weight {text!r} has {len(coords)} coordinates, expected {rank}")
    return coords


def parse_weyl_word(text: str, rank: int) -> Tuple[int, ...]:
    """
    Generator word: 's1s2' or '1,2'.

    '', '1', 'e' and 'id' are the identity; any other lone integer is
    ambiguous and rejected.
    """
    text = (text or '').strip().lower()
    if text in IDENTITY_TOKENS:
        return ()
    if ',' in text:
        try:
            word = tuple(int(x) for x in text.split(','))
        except ValueError:
            raise UsageError(f"Word {text!r} must be comma-separated simple indices")
    elif re.fullmatch(r'(?:s[1-9])+', text):
        word = tuple(int(x) for x in re.findall(r's([1-9])', text))
    elif text.isdigit():
        raise UsageError(f"Word {text!r} is ambiguous; write s{text}")
    else:
        raise UsageError(f"Cannot parse Weyl word {text!r}; use s1s2 or 1,2")
    for i in word:
        if not 1 <= i <= rank:
            raise UsageError(f"Simple index {i} out of range 1..{rank}")
    return word


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Pieri-Chevalley expansions and identity checks')
    commands = parser.add_subparsers(dest='command', required=True)

    def common(sub):
        sub.add_argument('--type', required=True, help='Root system, e.g. A2, B2, G2')
        sub.add_argument('--format', choices=OUTPUT_FORMATS, default=Config.OUTPUT_FORMAT)
        sub.add_argument('--output', help='Write to this file instead of stdout')

    expand_cmd = commands.add_parser('expand', help='Expand y^lambda [O_w] into Schubert classes')
    common(expand_cmd)
    expand_cmd.add_argument('--lambda', dest='lam', required=True, help='Dominant weight, e.g. 1,0')
    expand_cmd.add_argument('--w', required=True, help='Weyl element as s1s2 or 1,2')

    paths_cmd = commands.add_parser('paths', help='List the LS paths of shape lambda')
    common(paths_cmd)
    paths_cmd.add_argument('--lambda', dest='lam', required=True)
    paths_cmd.add_argument('--le-w', help='Keep paths with initial direction below w and show v(pi, w)')

    verify_cmd = commands.add_parser('verify', help='Run a verification suite')
    verify_cmd.add_argument('suite', choices=SUITE_NAMES)
    common(verify_cmd)
    verify_cmd.add_argument('--lambda-box', type=int, default=Config.LAMBDA_BOX)
    verify_cmd.add_argument('--mu-box', type=int, default=Config.MU_BOX)
    verify_cmd.add_argument('--jobs', type=int, default=Config.JOBS)

    weyl_cmd = commands.add_parser('weyl', help='List W with lengths, words and the Bruhat matrix')
    common(weyl_cmd)

    return parser


def build_config(args: argparse.Namespace) -> CliConfig:
    """Check every value against module preconditions before computing"""
    rs = parse_root_system(args.type)
    config = CliConfig(command=args.command, rs=rs, output_format=args.format, output=args.output)

    if args.command in ('expand', 'paths'):
        config.lam = parse_weight(args.lam, rs.rank)
        rs.require_dominant(config.lam)
    if args.command == 'expand':
        config.w = parse_weyl_word(args.w, rs.rank)
    if args.command == 'paths' and args.le_w is not None:
        config.le_w = parse_weyl_word(args.le_w, rs.rank)
    if args.command == 'verify':
        if args.lambda_box < 0 or args.mu_box < 0:
            raise UsageError("Boxes must be nonnegative")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        config.suite = args.suite
        config.lambda_box, config.mu_box, config.jobs = args.lambda_box, args.mu_box, args.jobs
    return config


def _tsv(header: Sequence[str], rows: List[Sequence]) -> str:
    lines = ['\t'.join(header)]
    lines.extend('\t'.join(str(x) for x in row) for row in rows)
    return '\n'.join(lines) + '\n'


def _json(data) -> str:
    return json.dumps(data, indent=2) + '\n'


def _word_label(word) -> str:
    return ''.join(f"s{i}" for i in word) or '1'


def cmd_expand(config: CliConfig, weyl: WeylGroup) -> Tuple[int, str]:
    result = expand(weyl, config.lam, weyl.element(config.w))
    if config.output_format == 'tsv':
        return 0, expansion_to_tsv(result)
    return 0, _json(expansion_to_json(result))


def cmd_paths(config: CliConfig, weyl: WeylGroup) -> Tuple[int, str]:
    paths = generate_paths(weyl, config.lam)
    bound = None
    if config.le_w is not None:
        bound = weyl.element(config.le_w)
        paths = restrict_le(weyl, paths, bound)

    records = []
    for path in paths:
        record = path_to_json(path)
        record['iota'] = list(initial_direction(weyl, path).min_rep.word)
        if bound is not None:
            record['v'] = list(final_direction(weyl, path, bound).word)
        records.append(record)

    if config.output_format == 'tsv':
        header = ['dirs', 'breaks', 'endpoint', 'iota'] + (['v'] if bound is not None else [])
        rows = []
        for r in records:
            row = [
                ';'.join(','.join(map(str, d)) for d in r['dirs']),
                ','.join(r['breaks']),
                ','.join(map(str, r['endpoint'])),
                _word_label(r['iota']),
            ]
            if bound is not None:
                row.append(_word_label(r['v']))
            rows.append(row)
        return 0, _tsv(header, rows)

    data = {'root_system': weyl.rs.name, 'lambda': list(config.lam), 'count': len(records)}
    if bound is not None:
        data['le_w'] = list(bound.word)
    data['paths'] = records
    return 0, _json(data)


def cmd_verify(config: CliConfig, weyl: WeylGroup) -> Tuple[int, str]:
    reports = run_suite(config.suite, weyl, config.lambda_box, config.mu_box, config.jobs)
    passed = all(r.passed for r in reports)
    status = 0 if passed else 1

    if config.output_format == 'tsv':
        rows = [
            [r.name, r.root_system, 'pass' if r.passed else 'FAIL', r.checked,
             json.dumps(r.counterexample, sort_keys=True) if r.counterexample else '']
            for r in reports
        ]
        return status, _tsv(['suite', 'root_system', 'result', 'checked', 'counterexample'], rows)

    return status, _json({
        'root_system': weyl.rs.name,
        'suite': config.suite,
        'passed': passed,
        'reports': [r.to_dict() for r in reports],
    })


def cmd_weyl(config: CliConfig, weyl: WeylGroup) -> Tuple[int, str]:
    matrix = weyl.bruhat_matrix()
    if config.output_format == 'tsv':
        rows = [[k, e.label, e.length, ''.join(map(str, matrix[k]))] for k, e in enumerate(weyl.elements)]
        return 0, _tsv(['index', 'word', 'length', 'bruhat_row'], rows)
    return 0, _json({
        'root_system': weyl.rs.name,
        'order': len(weyl),
        'longest_length': weyl.longest().length,
        'elements': [{'index': k, 'word': list(e.word), 'length': e.length}
                     for k, e in enumerate(weyl.elements)],
        'bruhat': matrix,
    })


HANDLERS = {
    'expand': cmd_expand,
    'paths': cmd_paths,
    'verify': cmd_verify,
    'weyl': cmd_weyl,
}


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    valid, errors = Config.validate_config()
    if not valid:
        for error in errors:
            print(f"Configuration error: {error}", file=sys.stderr)
        return 2

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        config = build_config(args)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2

    try:
        weyl = weyl_group(config.rs)
        status, text = HANDLERS[config.command](config, weyl)
        _emit(text, config.output)
    except Exception as e:
        logger.exception(f"{config.command} failed on {config.rs.name}")
        print(f"Error: {e}", file=sys.stderr)
        return 1

    return status


if __name__ == "__main__":
    sys.exit(main())

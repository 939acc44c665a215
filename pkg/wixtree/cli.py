#!/usr/bin/python
"""
Command-line interface: build the extremal trees of a degree sequence,
compute Wiener indices, enumerate trees, verify the extremal constructions
exhaustively and run local searches.

Payloads go to stdout (JSON by default), diagnostics to stderr. Exit codes
are 0 on success, 1 for invalid input, 2 when a construction is beaten or
an internal check fails (such as two Wiener computations disagreeing) and 3
when an enumeration exceeds the cap.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional
import numpy as np
from .errors import DualWienerMismatch, TooLarge
from .moves import LocalSearch
from .oracle import (Data, count_labeled, enumerate_labeled, extremal_scan,
                     get_default_cap, random_tree, save_json, verify_theorems)
from .trees import (DegreeSequence, build_greedy_caterpillar,
                    build_greedy_tree, canonical_code, degree_sequence_of,
                    read_tree, to_dot, wiener_edges, wiener_pairwise)

COMMANDS = ['min', 'max', 'wiener', 'verify', 'enumerate', 'search']


@dataclass
class CliConfig:
    command: str
    degrees: Optional[List[int]] = None
    input_path: Optional[str] = None
    output_format: str = 'json'
    output_path: Optional[str] = None
    direction: str = 'min'
    seed: int = 0
    cap: Optional[int] = None
    max_n: Optional[int] = None
    max_moves: Optional[int] = None
    count_only: bool = False
    distinct: bool = False
    jobs: int = 1
    verbose: bool = False

    def check(self):
        """
        Raises
        ------
        ValueError
            If the command is unknown or does not get the inputs it needs.
        """
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command}. Use one of "
                             f"{', '.join(COMMANDS)}")
        has_deg = self.degrees is not None
        has_input = self.input_path is not None
        if self.command in ['min', 'max', 'enumerate'] and not has_deg:
            raise ValueError(f"'{self.command}' needs --degrees")
        if (self.command == 'wiener') and not has_input:
            raise ValueError("'wiener' needs --input")
        if self.command == 'verify':
            if has_deg == (self.max_n is not None):
                raise ValueError("'verify' needs exactly one of --degrees or "
                                 "--max-n")
        if (self.command == 'search') and (has_deg == has_input):
            raise ValueError("'search' needs exactly one of --degrees or "
                             "--input")
        if has_deg and has_input:
            raise ValueError("Only one of --degrees or --input can be given")
        if self.output_format not in ['json', 'dot']:
            raise ValueError(f"Unknown format {self.output_format}")
        if self.direction not in ['min', 'max']:
            raise ValueError(f"Unknown direction {self.direction}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be >= 1, got {self.jobs}")

    def get_degree_sequence(self):
        return DegreeSequence.from_list(self.degrees)


def parse_degrees(values):
    """Degrees given as '4,3,3', '4 3 3' or several arguments."""
    out = []
    for v in values:
        for tok in v.replace(',', ' ').split():
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError(f"Degree '{tok}' is not an integer")
    if not out:
        raise ValueError("No degrees given")
    return out


def _dump(payload):
    return json.dumps(payload, default=int)


def _format_tree(config, t, sigma):
    if config.output_format == 'dot':
        return to_dot(t, wiener=sigma)
    payload = t.to_dict()
    payload['wiener'] = sigma
    return _dump(payload)


def launch_min(config):
    ds = config.get_degree_sequence()
    t = build_greedy_tree(ds).tree
    return _format_tree(config, t, wiener_edges(t)), t.to_dict()


def launch_max(config):
    ds = config.get_degree_sequence()
    t = build_greedy_caterpillar(ds)
    return _format_tree(config, t, wiener_edges(t)), t.to_dict()


def launch_wiener(config):
    t = read_tree(config.input_path)
    by_edges = wiener_edges(t)
    pairwise = wiener_pairwise(t)
    if by_edges != pairwise:
        raise DualWienerMismatch(f"Wiener index {by_edges} from the edge "
                                 f"cuts but {pairwise} from pairwise "
                                 "distances")
    payload = {'n': t.n, 'wiener_edges': by_edges,
               'wiener_pairwise': pairwise}
    return _dump(payload), payload


def launch_verify(config):
    if config.degrees is not None:
        reports = [extremal_scan(config.get_degree_sequence(),
                                 cap=config.cap, jobs=config.jobs,
                                 verbose=config.verbose)]
    else:
        reports = verify_theorems(config.max_n, strict=False,
                                  cap=config.cap, jobs=config.jobs,
                                  verbose=config.verbose)
    payload = {'holds': all(r.holds for r in reports),
               'reports': [r.to_dict() for r in reports]}
    return _dump(payload), payload


def launch_enumerate(config):
    ds = config.get_degree_sequence()
    cap = get_default_cap() if config.cap is None else config.cap
    if config.count_only and not config.distinct:
        payload = {'labeled_count': count_labeled(ds)}
        return _dump(payload), payload

    trees = []
    codes = set()
    labeled = 0
    for t in enumerate_labeled(ds, cap=cap):
        labeled += 1
        if config.distinct:
            code = canonical_code(t)
            if code in codes:
                continue
            codes.add(code)
        if not config.count_only:
            trees.append(t)

    payload = {'labeled_count': labeled}
    if config.distinct:
        payload['distinct_count'] = len(codes)
    if config.count_only:
        return _dump(payload), payload
    if config.output_format == 'dot':
        text = '\n'.join(to_dot(t, wiener=wiener_edges(t)) for t in trees)
    else:
        payload['trees'] = [dict(t.to_dict(), wiener=wiener_edges(t))
                            for t in trees]
        text = _dump(payload)
    return text, payload


def launch_search(config):
    if config.input_path is not None:
        start = read_tree(config.input_path)
    else:
        ds = config.get_degree_sequence()
        start = random_tree(ds, np.random.default_rng(config.seed))
    search = LocalSearch(start, direction=config.direction,
                         seed=config.seed, max_moves=config.max_moves,
                         verbose=config.verbose)
    final = search.run()
    if degree_sequence_of(final) != degree_sequence_of(start):
        raise RuntimeError("The local search changed the degree sequence")
    payload = search.get_summary()
    payload['start_tree'] = start.to_dict()
    payload['tree'] = final.to_dict()
    if config.output_format == 'dot':
        return to_dot(final, wiener=payload['end']), payload
    return _dump(payload), payload


LAUNCHERS = {'min': launch_min, 'max': launch_max, 'wiener': launch_wiener,
             'verify': launch_verify, 'enumerate': launch_enumerate,
             'search': launch_search}


def run(config):
    """
    Execute a command.

    Returns
    -------
    code: int
        Exit code.
    text: str
        What the command prints on stdout.
    """
    config.check()
    text, payload = LAUNCHERS[config.command](config)
    if config.output_path:
        save_json(config.output_path, **{config.command: payload})
    if (config.command == 'verify') and not payload['holds']:
        failed = [r['degree_sequence'] for r in payload['reports']
                  if not (r['greedy_matches_min'] and
                          r['caterpillar_matches_max'])]
        print(f"Extremal trees differ from the constructors for {failed}",
              file=sys.stderr)
        return 2, text
    return 0, text


class _ArgumentParser(argparse.ArgumentParser):
    # Usage errors are invalid input (exit 1), not argparse's exit 2
    def error(self, message):
        raise ValueError(message)


def get_parser():
    parser = _ArgumentParser(
        prog='wix',
        description="Extremal trees for the Wiener index with a given "
                    "degree sequence",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument('command', type=str, choices=COMMANDS,
                        help='What to do')
    parser.add_argument('--degrees', type=str, nargs='+', default=None,
                        help='Non-leaf degrees, comma or space separated, '
                        'any order')
    parser.add_argument('--input', type=str, default=None,
                        help='Tree JSON file ({"n": .., "edges": [..]})')
    parser.add_argument('--format', type=str, default=None,
                        choices=['json', 'dot'], help='Output format')
    parser.add_argument('--output', type=str, default=None,
                        help='Also save the result to this JSON file')
    parser.add_argument('--direction', type=str, default=None,
                        choices=['min', 'max'], help='Search direction')
    parser.add_argument('--seed', type=int, default=None,
                        help='Random seed for the search')
    parser.add_argument('--max-moves', type=int, default=None,
                        help='Stop the search after this many moves')
    parser.add_argument('--cap', type=int, default=None,
                        help='Maximum number of labeled trees to enumerate '
                        '(WIX_CAP or 10^7 if not given)')
    parser.add_argument('--max-n', type=int, default=None,
                        help='Verify every degree sequence up to this n')
    parser.add_argument('--count-only', default=False, action='store_true',
                        help='Only print the number of trees')
    parser.add_argument('--distinct', default=False, action='store_true',
                        help='Keep one tree per isomorphism class')
    parser.add_argument('--jobs', type=int, default=None,
                        help='Worker processes for the exhaustive scans')
    parser.add_argument('--config', type=str, default=None,
                        help='YAML configuration file')
    parser.add_argument('-v', '--verbose', default=False,
                        action='store_true', help='Print progress on stderr')
    return parser


def get_config(args):
    """
    Build the CliConfig from parsed arguments. Explicit flags override the
    YAML configuration, which overrides the defaults.
    """
    data = Data(data_path=args.config) if args.config else None

    def pick(flag, getter, default):
        if flag is not None:
            return flag
        if data is not None:
            return getter()
        return default

    cap = args.cap
    if (cap is None) and (data is not None):
        cap = data.get_cap()
    max_n = args.max_n
    if (max_n is None) and (args.degrees is None) and (data is not None):
        max_n = data.get_max_n()
    return CliConfig(
        command=args.command,
        degrees=None if args.degrees is None else parse_degrees(args.degrees),
        input_path=args.input,
        output_format=pick(args.format, lambda: data.get_output_format(),
                           'json'),
        output_path=pick(args.output, lambda: data.get_output_path(), None),
        direction=pick(args.direction, lambda: data.get_direction(), 'min'),
        seed=pick(args.seed, lambda: data.get_seed(), 0),
        cap=cap,
        max_n=max_n if args.command == 'verify' else None,
        max_moves=pick(args.max_moves, lambda: data.get_max_moves(), None),
        count_only=args.count_only,
        distinct=args.distinct,
        jobs=pick(args.jobs, lambda: data.get_jobs(), 1),
        verbose=args.verbose)


def main(argv=None):
    """Entry point of the `wix` command. Returns the exit code."""
    try:
        args = get_parser().parse_args(argv)
        code, text = run(get_config(args))
    except TooLarge as e:
        print(f"Error: {e}", file=sys.stderr)
        return 3
    except RuntimeError as e:
        # Includes TheoremViolation and DualWienerMismatch
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

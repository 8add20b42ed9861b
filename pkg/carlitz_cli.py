#!/usr/bin/env python3
"""
Command-line front end for the Carlitz number library.

    carlitz_cli.py compute --kind CC --p 3 --max-n 8
    carlitz_cli.py series --name logC --p 3 --prec 4
    carlitz_cli.py verify --p 3 --max-n 12

Exit codes: 0 success, 1 identity failure, 2 usage or configuration error.
"""
import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.cli.commands import cmd_compute, cmd_series, cmd_verify
from src.config.models import COMPUTE_KINDS, CliConfig
from src.utils.constants import (
    DEFAULT_E,
    DEFAULT_MAX_N,
    DEFAULT_P,
    DEFAULT_SEED,
    EXIT_OK,
    EXIT_USAGE,
    OUTPUT_FORMATS,
    SERIES_NAMES,
)
from src.utils.logging_config import setup_logging

load_dotenv()

logger = setup_logging("carlitz_cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Carlitz-module special numbers over F_r(T).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, default_fmt: str = "text", field_default=DEFAULT_P):
        p.add_argument("--p", type=int, default=field_default, help="Characteristic (prime)")
        p.add_argument("--e", type=int, default=DEFAULT_E, help="Extension degree, r = p^e")
        p.add_argument("--modulus", help="Irreducible modulus for F_r, e.g. 'x^2+x+1'")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="Largest index n")
        p.add_argument("--order", type=int, default=1, help="Order m (CCm, cauchy_m), k (poly_cauchy, logCPow)")
        p.add_argument("--format", dest="fmt", choices=OUTPUT_FORMATS, default=default_fmt)
        p.add_argument("--prec", type=int, help="Series precision (number of coefficients)")
        p.add_argument("--output", help="Write to this file instead of stdout")
        p.add_argument("--unsafe-large", action="store_true", help="Lift the max-n and precision caps")

    compute = sub.add_parser("compute", help="Tabulate a family of numbers")
    add_common(compute)
    compute.add_argument("--kind", choices=COMPUTE_KINDS, default="CC")

    series = sub.add_parser("series", help="Dump a truncated generating series")
    add_common(series)
    series.add_argument("--name", choices=SERIES_NAMES, default="logC")

    verify = sub.add_parser("verify", help="Run the identity suite")
    add_common(verify, default_fmt="json", field_default=None)
    verify.add_argument("--identity", help="Run only this identity id")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    all_fields = args.command == "verify" and args.p is None
    return CliConfig(
        command=args.command,
        p=DEFAULT_P if args.p is None else args.p,
        e=args.e,
        modulus=args.modulus,
        max_n=args.max_n,
        order=args.order,
        kind=getattr(args, "kind", "CC"),
        fmt=args.fmt,
        prec=args.prec,
        name=getattr(args, "name", "logC"),
        identity=getattr(args, "identity", None),
        output=args.output,
        unsafe_large=args.unsafe_large,
        seed=getattr(args, "seed", DEFAULT_SEED),
        all_fields=all_fields,
    )


def write_output(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote output to {path}")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main execution function"""
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)

    try:
        if config.command == "compute":
            exit_code, text = EXIT_OK, cmd_compute(config)
        elif config.command == "series":
            exit_code, text = EXIT_OK, cmd_series(config)
        else:
            exit_code, text = cmd_verify(config)
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    write_output(text, config.output)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())

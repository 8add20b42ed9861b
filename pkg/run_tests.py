#!/usr/bin/env python3
"""
Test runner script for the Carlitz number library.
Provides easy commands for running different groups of tests.
"""

import os
import subprocess
import sys
from pathlib import Path

GROUPS = {
    "arith": "tests/test_finite_field.py tests/test_polynomial.py tests/test_lucas_compositions.py",
    "carlitz": "tests/test_towers.py tests/test_carlitz_numbers.py tests/test_linear_series.py",
    "series": "tests/test_power_series.py tests/test_linear_series.py",
    "classical": "tests/test_classical_numbers.py",
    "verify": "tests/test_identities.py",
    "cli": "tests/test_cli.py tests/test_config_models.py tests/test_config_loader.py",
}


def run_command(cmd, description):
    """Run a command and handle output."""
    print(f"\n{'='*60}")
    print(f"🧪 {description}")
    print(f"{'='*60}")

    try:
        result = subprocess.run(cmd, shell=True, check=True, capture_output=True, text=True)
        print(result.stdout)
        if result.stderr:
            print("STDERR:", result.stderr)
        return True
    except subprocess.CalledProcessError as e:
        print(f"❌ Command failed with exit code {e.returncode}")
        print("STDOUT:", e.stdout)
        print("STDERR:", e.stderr)
        return False


def main():
    """Main test runner."""
    if len(sys.argv) < 2:
        print(f"""
Carlitz Numbers Test Runner

Usage: python run_tests.py <command>

Commands:
    all         - Run all tests with coverage
    fast        - Run tests without coverage, skipping slow ones
    slow        - Run only the slow tests (full identity suite)
    coverage    - Generate coverage report
    identities  - Run the identity suite through the CLI
    {', '.join(GROUPS)}
                - Run one group of test modules

Examples:
    python run_tests.py all
    python run_tests.py carlitz
    python run_tests.py identities
        """)
        return 1

    command = sys.argv[1].lower()
    os.chdir(Path(__file__).parent)

    success = True

    if command == "all":
        success &= run_command(
            "python -m pytest tests/ -v --cov=src --cov-report=term-missing --cov-report=html",
            "Running all tests with coverage"
        )

    elif command == "fast":
        success &= run_command(
            "python -m pytest tests/ -v --tb=short --no-cov -m 'not slow'",
            "Running tests (fast mode)"
        )

    elif command == "slow":
        success &= run_command(
            "python -m pytest tests/ -v --no-cov -m slow",
            "Running slow tests"
        )

    elif command == "coverage":
        success &= run_command(
            "python -m pytest tests/ --cov=src --cov-report=html --cov-report=term",
            "Generating coverage report"
        )
        if success:
            print("\n📊 Coverage report generated in htmlcov/index.html")

    elif command == "identities":
        success &= run_command(
            "python carlitz_cli.py verify --format text",
            "Running the identity suite"
        )

    elif command in GROUPS:
        success &= run_command(
            f"python -m pytest {GROUPS[command]} -v --no-cov",
            f"Running {command} tests"
        )

    else:
        print(f"❌ Unknown command: {command}")
        return 1

    if success:
        print(f"\n✅ {command.capitalize()} completed successfully!")
        return 0
    else:
        print(f"\n❌ {command.capitalize()} failed!")
        return 1


if __name__ == "__main__":
    sys.exit(main())

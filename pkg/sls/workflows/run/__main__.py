# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from sls import __version__
from sls.common.config_utils import load_config_file
from sls.constants import CodeFamily, Command, ExitCode, LogicalBasis, OutputFormat, PauliType
from sls.exception import SLSException, VerificationError
from sls.workflows.run.config import ExperimentConfig
from sls.workflows.run.run import format_report, run

logger = logging.getLogger("sls")


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser("sls", description="Subsystem lattice surgery experiments")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("command", type=str, choices=[c.value for c in Command], help="Experiment to run")
    # every option defaults to SUPPRESS so that only explicit flags override a --config file
    options = {"default": argparse.SUPPRESS}
    parser.add_argument("--config", type=str, help="Path to a json or yaml experiment config", **options)
    parser.add_argument("--family", type=str, choices=[f.value for f in CodeFamily], help="Code family", **options)
    parser.add_argument("--size", type=int, help="Code size (distance or width)", **options)
    parser.add_argument("--height", type=int, help="Lattice height for rectangular families", **options)
    parser.add_argument("--code", type=str, help="Code file or family:size reference", **options)
    parser.add_argument("--code-a", dest="code_a", type=str, help="Left code (teleport: input code)", **options)
    parser.add_argument("--code-b", dest="code_b", type=str, help="Right code (teleport: memory code)", **options)
    parser.add_argument(
        "--ancillas", dest="with_ancillas", action="store_true", help="Merge through ancillas", **options
    )
    parser.add_argument(
        "--no-ancillas", dest="with_ancillas", action="store_false", help="Merge without ancillas", **options
    )
    parser.add_argument("--pauli-type", dest="pauli_type", choices=[p.value for p in PauliType], **options)
    parser.add_argument("--max-weight", dest="max_weight", type=int, help="Distance search cap", **options)
    parser.add_argument("--distance-algorithm", dest="distance_algorithm", type=str, **options)
    parser.add_argument("--seed", type=int, help="First simulator seed", **options)
    parser.add_argument("--shots", type=int, help="Number of consecutive seeds per teleported state", **options)
    parser.add_argument("--label", choices=[b.value for b in LogicalBasis], help="Teleport a single state", **options)
    parser.add_argument("--output", type=str, help="Artifact path (code file or svg)", **options)
    parser.add_argument("--report", type=str, help="Report path; the report is always printed", **options)
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], **options)
    parser.add_argument("--log-level", dest="log_severity_level", type=int, choices=range(5), **options)
    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    values = vars(args).copy()
    config_path = values.pop("config", None)
    resolved = load_config_file(config_path) if config_path else {}
    resolved.update(values)
    return ExperimentConfig.parse_obj(resolved)


def main(argv: Optional[List[str]] = None) -> int:
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.USAGE_ERROR if e.code else ExitCode.SUCCESS

    try:
        config = resolve_config(args)
        report = run(config)
    except VerificationError as e:
        logger.error(str(e))
        return ExitCode.VERIFICATION_FAILURE
    except (SLSException, ValidationError, OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return ExitCode.USAGE_ERROR

    sys.stdout.write(format_report(report, config.format))
    if report.get("passed") is False:
        return ExitCode.VERIFICATION_FAILURE
    return ExitCode.SUCCESS


if __name__ == "__main__":
    sys.exit(main())

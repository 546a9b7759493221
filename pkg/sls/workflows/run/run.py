# -------------------------------------------------------------------------
# Copyright (c) Microsoft Corporation. All rights reserved.
# Licensed under the MIT License.
# --------------------------------------------------------------------------
import logging
import re
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from sls import __version__
from sls.code.analysis import analyze
from sls.code.distance import minimum_weight_logical
from sls.code.subsystem_code import SubsystemCode
from sls.common.config_utils import config_json_dumps, load_config_file, serialize_to_json
from sls.constants import Command, OutputFormat
from sls.exception import GroupMismatchError, InvalidCodeError, Lemma2ViolationError
from sls.lattice.builders import build_bacon_shor, build_code
from sls.lattice.lattice import interaction_range
from sls.logging import set_default_logger_severity
from sls.pauli.group import groups_equal
from sls.render.svg import render_code, save_svg
from sls.simulator.teleport import Teleporter
from sls.surgery.gauge import split
from sls.surgery.merge import MergeResult, merge_codes
from sls.surgery.verification import Violation, matches_reference_code, verify_lemma2, verify_merged_parameters
from sls.workflows.run.config import ExperimentConfig, resolve_code

logger = logging.getLogger(__name__)

_BACON_SHOR_NAME = re.compile(r"^bacon_shor-(\d+)x(\d+)$")


def _code_summary(code: SubsystemCode) -> Dict[str, Any]:
    analysis = analyze(code)
    summary = {"name": code.name, "parameters": analysis.parameters().to_json()}
    if code.geometry is not None:
        summary["interaction_range"] = interaction_range(code)
    return summary


def _analysis_json(code: SubsystemCode) -> Dict[str, Any]:
    analysis = analyze(code)
    return {
        **_code_summary(code),
        "stabilizer": [str(s) for s in analysis.stabilizer_generators],
        "logical_pairs": [[str(x), str(z)] for x, z in analysis.logical_pairs],
        "gauge_pairs": [[str(x), str(z)] for x, z in analysis.gauge_pairs],
    }


def _merge_json(result: MergeResult) -> Dict[str, Any]:
    return {
        "merged": _code_summary(result.merged),
        "delta_g": result.delta_g,
        "merging_operators": [str(op) for op in result.merging_operators],
        "merging_generators": list(result.merging_generators),
        "joint_logical": str(result.joint_logical),
        "ancilla_ids": list(result.ancilla_ids),
        "lemma2": [{"generator": str(g), "stabilizer": str(s)} for g, s in result.lemma2_witnesses],
    }


def _merge(config: ExperimentConfig) -> MergeResult:
    config.require("code_a", "code_b")
    return merge_codes(
        resolve_code(config.code_a),
        resolve_code(config.code_b),
        with_ancillas=config.with_ancillas,
        pauli_type=config.pauli_type,
    )


def cmd_build(config: ExperimentConfig) -> Dict[str, Any]:
    config.require("family", "size")
    code = build_code(config.family, config.size, config.height)
    if config.output:
        code.to_file(config.output)
    return {"code": code.to_config().to_json(), **_code_summary(code)}


def cmd_analyze(config: ExperimentConfig) -> Dict[str, Any]:
    config.require("code")
    code = resolve_code(config.code)
    analyze(code).check()
    return _analysis_json(code)


def cmd_distance(config: ExperimentConfig) -> Dict[str, Any]:
    config.require("code")
    code = resolve_code(config.code)
    result = minimum_weight_logical(code, config.max_weight, config.distance_algorithm)
    return {
        "name": code.name,
        "distance": result.distance,
        "max_weight": result.max_weight,
        "witness": str(result.witness) if result.witness is not None else None,
    }


def cmd_merge(config: ExperimentConfig) -> Dict[str, Any]:
    result = _merge(config)
    if config.output:
        result.merged.to_file(config.output)
    return _merge_json(result)


def cmd_split(config: ExperimentConfig) -> Dict[str, Any]:
    result = _merge(config)
    split_result = split(result)
    if config.output:
        split_result.fixed.to_file(config.output)
    return {
        "code_a": _code_summary(split_result.code_a),
        "code_b": _code_summary(split_result.code_b),
        "joint_record": split_result.record.to_json(),
        "fixed": _code_summary(split_result.fixed),
    }


def _check_merged_file(candidate: SubsystemCode, result: MergeResult) -> List[Violation]:
    """Compare a merged code read from a file with the merge recomputed from its inputs."""
    expected = analyze(result.merged)
    if candidate.n != expected.n:
        return [Violation(quantity="n", expected=str(expected.n), actual=str(candidate.n))]
    try:
        actual = analyze(candidate)
        actual.check()
    except InvalidCodeError as e:
        return [Violation(quantity="center", expected="center without -I", actual=str(e))]
    violations = [
        Violation(quantity=quantity, expected=str(getattr(expected, quantity)), actual=str(getattr(actual, quantity)))
        for quantity in ("k", "g", "s")
        if getattr(actual, quantity) != getattr(expected, quantity)
    ]
    if not groups_equal(candidate.gauge_generators, result.merged.gauge_generators):
        violations.append(
            Violation(quantity="gauge_group", expected=result.merged.name, actual=f"{candidate.name} differs")
        )
    return violations


def _bacon_shor_reference(config: ExperimentConfig, result: MergeResult) -> Optional[Tuple[str, bool]]:
    """Label and outcome of the comparison with the wider Bacon-Shor code, None unless both inputs are Bacon-Shor."""
    spec = result.spec
    match_a = _BACON_SHOR_NAME.match(spec.code_a.name)
    match_b = _BACON_SHOR_NAME.match(spec.code_b.name)
    if not (match_a and match_b) or match_a.group(2) != match_b.group(2):
        return None
    plain = result
    if result.ancilla_ids:
        plain = merge_codes(spec.code_a, spec.code_b, with_ancillas=False, pauli_type=config.pauli_type)
    width, height = int(match_a.group(1)) + int(match_b.group(1)), int(match_a.group(2))
    label = f"equals {width}x{height} Bacon-Shor"
    return label, matches_reference_code(plain.merged, build_bacon_shor(width, height))


def _verify_code_file(config: ExperimentConfig) -> Dict[str, Any]:
    """Standalone check of a code file: a center free of -I and its parameters, with no inputs to re-merge."""
    code = resolve_code(config.code)
    violations = []
    try:
        analysis = analyze(code)
        analysis.check()
    except InvalidCodeError as e:
        violations.append(Violation(quantity="center", expected="center without -I", actual=str(e)))
        ledger = None
    else:
        d = minimum_weight_logical(code, config.max_weight, config.distance_algorithm).distance
        ledger = {"n": analysis.n, "k": analysis.k, "g": analysis.g, "s": analysis.s, "d": d}
    for violation in violations:
        logger.error(f"Verification of {code.name} failed on {violation.quantity}: {violation.actual}")
    return {
        "name": code.name,
        "ledger": ledger,
        "violations": [v.to_json() for v in violations],
        "passed": not violations,
    }


def cmd_verify(config: ExperimentConfig) -> Dict[str, Any]:
    if config.code and config.code_a is None and config.code_b is None:
        return _verify_code_file(config)
    result = _merge(config)
    report = verify_merged_parameters(result, config.max_weight)
    violations = list(report.violations)
    try:
        verify_lemma2(result)
    except Lemma2ViolationError as e:
        violations.append(Violation(quantity="lemma2", expected="one witness per merging generator", actual=str(e)))
    try:
        split(result)
    except GroupMismatchError as e:
        violations.append(Violation(quantity="split", expected="input gauge groups restored", actual=str(e)))
    if config.code:
        violations.extend(_check_merged_file(resolve_code(config.code), result))

    reference = _bacon_shor_reference(config, result)
    if reference is not None:
        label, matched = reference
        if matched:
            report.reference_match = label
            logger.info(f"Merged code {label}")
        else:
            violations.append(Violation(quantity="reference", expected=label, actual="differs"))

    for violation in violations:
        logger.error(
            f"Verification failed on {violation.quantity}: expected {violation.expected}, got {violation.actual}"
        )
    report.violations = violations
    return {**report.to_json(), "passed": not violations}


def cmd_teleport(config: ExperimentConfig) -> Dict[str, Any]:
    config.require("code_a", "code_b")
    # code_a is the input, code_b the memory that receives the state
    teleporter = Teleporter(
        resolve_code(config.code_a),
        resolve_code(config.code_b),
        with_ancillas=config.with_ancillas,
        pauli_type=config.pauli_type,
    )
    runs = [teleporter.run(label, seed).to_json() for label in config.labels() for seed in config.seeds()]
    passed = sum(run["pass"] for run in runs)
    logger.info(f"Teleportation preserved {passed}/{len(runs)} logical states")
    return {"passed": passed == len(runs), "summary": {"passed": passed, "total": len(runs)}, "runs": runs}


def cmd_render(config: ExperimentConfig) -> Dict[str, Any]:
    if config.code:
        code = resolve_code(config.code)
        logicals = list(analyze(code).bare_logicals())
    else:
        result = _merge(config)
        code, logicals = result.merged, [result.joint_logical]
    svg = render_code(code, logicals)
    if config.output:
        save_svg(svg, config.output)
        return {"name": code.name, "output": str(config.output)}
    return {"name": code.name, "svg": svg}


COMMANDS: Dict[Command, Callable[[ExperimentConfig], Dict[str, Any]]] = {
    Command.BUILD: cmd_build,
    Command.ANALYZE: cmd_analyze,
    Command.DISTANCE: cmd_distance,
    Command.MERGE: cmd_merge,
    Command.SPLIT: cmd_split,
    Command.TELEPORT: cmd_teleport,
    Command.VERIFY: cmd_verify,
    Command.RENDER: cmd_render,
}


def _format_text(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_format_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_format_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
        return lines
    return [f"{pad}{value}"]


def format_report(report: Dict[str, Any], output_format: OutputFormat = OutputFormat.JSON) -> str:
    if OutputFormat(output_format) == OutputFormat.TEXT:
        return "\n".join(_format_text(report)) + "\n"
    return config_json_dumps(report, indent=2) + "\n"


def run(config: Union[str, Path, dict, ExperimentConfig]) -> Dict[str, Any]:
    """
    Execute one experiment and return its report. The report echoes the resolved config and the tool version; when
    `config.report` is set it is also written there in the configured format.
    """
    if isinstance(config, (str, Path)):
        config = ExperimentConfig.parse_obj(load_config_file(config))
    elif isinstance(config, dict):
        config = ExperimentConfig.parse_obj(config)

    set_default_logger_severity(config.log_severity_level)
    logger.info(f"Running {config.command.value}")
    body = COMMANDS[config.command](config)
    report = {"version": __version__, "config": serialize_to_json(config), **body}
    if config.report:
        config.report.parent.mkdir(parents=True, exist_ok=True)
        config.report.write_text(format_report(report, config.format))
    return report

"""Command-line front end.

    algcut <command> [scenario.json] [--order N] [--dmax D] [--format text|json]

Exit codes: 0 success, 2 invalid scenario or arguments, 3 a checked
property failed, 4 series precision could not be reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Optional

from .arith import PrecisionError, format_rational
from .charnum import PrecisionExhausted, euler_characteristic, todd_closed_form_comparator
from .cut import cut_fixed_inventory
from .localization import DegreeError, EMPTY_QUOTIENT, ORBIFOLD, kalkman_integral, kalkman_report, local_term
from .oracle import a_invariant_sections_vanish, exact_degree_bound, invariant_monomial_exists
from .scenario import FIXED_POINT_DATA, PROJECTIVE_SPACE, Scenario, ScenarioError, load_scenario
from .verify import run_all
from .weights import (
    INFINITE,
    NonRegularLevelError,
    RepeatedWeightError,
    all_patterns,
    classify,
    is_free_on_stable,
    is_regular_level,
    reweight,
    stabilizer_order,
    support_weights,
)

EXIT_OK, EXIT_INVALID, EXIT_PROPERTY, EXIT_PRECISION = 0, 2, 3, 4

COMMANDS = ("stability", "inventory", "kalkman", "euler", "todd", "oracle", "verify")


class PropertyFailure(Exception):
    """Raised after a report has been built when a checked property failed."""

    def __init__(self, lines):
        super().__init__("property check failed")
        self.lines = lines


def _b(x: bool) -> str:
    return "true" if x else "false"


def _set(xs) -> str:
    return "{" + ",".join(str(a) for a in sorted(xs)) + "}"


def _ints(xs) -> str:
    return ",".join(str(a) for a in xs)


def _need_mode(sc: Scenario, mode: str, command: str) -> None:
    if sc.mode != mode:
        raise ScenarioError(f"command {command!r} requires a {mode} scenario")


def _header(sc: Scenario) -> list:
    lines = [("scenario", sc.name), ("mode", sc.mode), ("level", format_rational(sc.level_q))]
    if sc.mode == PROJECTIVE_SPACE:
        lines.append(("weights", _ints(sc.weights)))
    return lines


def _orbifold_lines(sc: Scenario) -> list:
    if sc.mode == PROJECTIVE_SPACE and not is_free_on_stable(sc.weights, sc.level_q):
        return [("label", ORBIFOLD)]
    return []


def _upper(sc: Scenario):
    if sc.mode == FIXED_POINT_DATA:
        return list(sc.fixed_points)
    return list(cut_fixed_inventory(sc.weights, sc.level_q).upper_fixed)


def cmd_stability(sc: Scenario, args) -> list:
    _need_mode(sc, PROJECTIVE_SPACE, "stability")
    w, q = sc.weights, sc.level_q
    if not is_regular_level(w, q):
        raise ScenarioError(f"level {format_rational(q)} is an ambient weight (not a regular level)")
    lines = _header(sc)
    stable = 0
    for p in all_patterns(len(w)):
        kind = classify(p, w, q)
        stable += kind == "stable"
        st = stabilizer_order(p, w)
        st = "inf" if st == INFINITE else str(st)
        lines.append((f"pattern {p}", f"{kind} weights={_set(support_weights(p, w))} stabilizer={st}"))
    lines.append(("stable_patterns", str(stable)))
    lines.append(("free_on_stable", _b(is_free_on_stable(w, q))))
    return lines


def cmd_inventory(sc: Scenario, args) -> list:
    _need_mode(sc, PROJECTIVE_SPACE, "inventory")
    inv = cut_fixed_inventory(sc.weights, sc.level_q)
    lines = _header(sc)
    for d in inv.upper_fixed:
        lines.append((f"upper {d.label}", _ints(d.tangent_weights)))
    for d in inv.lower_fixed:
        lines.append((f"lower {d.label}", _ints(d.tangent_weights)))
    lines.append(("upper_count", str(len(inv.upper_fixed))))
    lines.append(("reduced_present", _b(inv.reduced_present)))
    lines.append(("reduced_normal_weight", str(inv.reduced_normal_weight)))
    return lines


def cmd_kalkman(sc: Scenario, args) -> list:
    lines = _header(sc)
    if sc.mode == FIXED_POINT_DATA:
        for d in sc.fixed_points:
            lines.append((f"term {d.label}", format_rational(local_term(d))))
        lines.append(("kalkman", format_rational(kalkman_integral(sc.fixed_points))))
        return lines
    c = sc.equivariant_class()
    rep = kalkman_report(sc.weights, sc.level_q, c)
    lines.append(("class", sc.class_spec))
    if ORBIFOLD in rep.warnings:
        lines.append(("label", ORBIFOLD))
    if EMPTY_QUOTIENT in rep.warnings:
        lines.append(("warning", EMPTY_QUOTIENT))
    for label, v in rep.terms:
        lines.append((f"term {label}", format_rational(v)))
    lines.append(("kalkman", format_rational(rep.value)))
    return lines


def cmd_euler(sc: Scenario, args) -> list:
    lines = _header(sc) + _orbifold_lines(sc)
    lines.append(("chi", format_rational(euler_characteristic(_upper(sc)))))
    return lines


def cmd_todd(sc: Scenario, args) -> list:
    order = args.order if args.order is not None else sc.options.get("order")
    lines = _header(sc) + _orbifold_lines(sc)
    cmp = todd_closed_form_comparator(_upper(sc), order)
    lines.append(("todd", format_rational(cmp.series_value)))
    lines.append(("todd_closed_form", format_rational(cmp.closed_form_value)))
    lines.append(("todd_agree", _b(cmp.agree)))
    return lines


def cmd_oracle(sc: Scenario, args) -> list:
    _need_mode(sc, PROJECTIVE_SPACE, "oracle")
    w, q = sc.weights, sc.level_q
    if not is_regular_level(w, q):
        raise ScenarioError(f"level {format_rational(q)} is an ambient weight (not a regular level)")
    w0 = reweight(w, q)
    d_exact = exact_degree_bound(w0)
    d_max = args.dmax if args.dmax is not None else sc.options.get("dmax", d_exact)
    lines = _header(sc)
    lines.append(("reweighted", _ints(w0)))
    lines.append(("d_exact", str(d_exact)))
    lines.append(("d_max", str(d_max)))
    agree = total = 0
    vanish_ok = vanish_total = 0
    for p in all_patterns(len(w)):
        kind = classify(p, w0, 0)
        semistable = invariant_monomial_exists(p, w0, d_max)
        ok = semistable == (kind == "stable")
        agree += ok
        total += 1
        lines.append((f"pattern {p}", f"{kind} invariant_monomial={_b(semistable)} {'agree' if ok else 'DISAGREE'}"))
        if kind == "stable":
            continue
        checks = [("ii'", True)] + ([("iii'", False)] if kind == "lower" else [])
        for tag, z0 in checks:
            good = all(a_invariant_sections_vanish(p, w0, z0, d) for d in range(1, min(d_max, 4) + 1))
            vanish_ok += good
            vanish_total += 1
            lines.append((f"vanishing {tag} {p}", "ok" if good else "FAIL"))
    lines.append(("equivalence", f"{agree}/{total}"))
    lines.append(("vanishing", f"{vanish_ok}/{vanish_total}"))
    if agree != total or vanish_ok != vanish_total:
        raise PropertyFailure(lines)
    return lines


def cmd_verify(path: Optional[str], args) -> list:
    lines = []
    failed = False
    for r in run_all(seed=args.seed):
        lines.append((f"suite {r.name}", f"{'pass' if r.ok else 'FAIL'} {r.passed}/{r.passed + r.failed}"))
        failed |= not r.ok
    if path is not None:
        for name, ok in check_golden(Path(path), args):
            lines.append((f"golden {name}", "pass" if ok else "FAIL"))
            failed |= not ok
    lines.append(("result", "FAIL" if failed else "pass"))
    if failed:
        raise PropertyFailure(lines)
    return lines


HANDLERS: dict[str, Callable] = {
    "stability": cmd_stability,
    "inventory": cmd_inventory,
    "kalkman": cmd_kalkman,
    "euler": cmd_euler,
    "todd": cmd_todd,
    "oracle": cmd_oracle,
}


def render(command: str, lines: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"command": command, "results": dict(lines)}, indent=2) + "\n"
    return "".join(f"{k} = {v}\n" for k, v in lines)


def run(command: str, scenario_path: Optional[str], args) -> tuple[str, int]:
    """Run one command and return (report, exit code)."""
    try:
        if command == "verify":
            lines = cmd_verify(scenario_path, args)
        else:
            if scenario_path is None:
                raise ScenarioError(f"command {command!r} needs a scenario file")
            sc = load_scenario(scenario_path)
            lines = HANDLERS[command](sc, args)
    except PropertyFailure as exc:
        return render(command, exc.lines, args.format), EXIT_PROPERTY
    except PrecisionExhausted as exc:
        return f"error = {exc}\n", EXIT_PRECISION
    except PrecisionError as exc:
        return f"error = {exc}\n", EXIT_PRECISION
    except (ScenarioError, NonRegularLevelError, RepeatedWeightError, DegreeError, ValueError, TypeError) as exc:
        return f"error = {exc}\n", EXIT_INVALID
    return render(command, lines, args.format), EXIT_OK


def check_golden(corpus: Path, args) -> list[tuple[str, bool]]:
    """Compare every ``golden/<stem>.<command>.txt`` against a fresh run."""
    out = []
    for g in sorted((corpus / "golden").glob("*.txt")):
        stem, command = g.stem.rsplit(".", 1)
        opts = argparse.Namespace(order=None, dmax=None, format="text", seed=args.seed)
        report, _ = run(command, str(corpus / f"{stem}.json"), opts)
        out.append((g.stem, report == g.read_text(encoding="utf-8")))
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algcut", description="Algebraic cuts of torus actions on P(V), exactly.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("scenario", nargs="?", help="scenario JSON file (for verify: optional corpus directory)")
    p.add_argument("--order", type=int, help="series working order for the Todd residue")
    p.add_argument("--dmax", type=int, help="degree cap for the invariant-monomial oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for verify's randomized suites")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    report, code = run(args.command, args.scenario, args)
    stream = sys.stdout if code in (EXIT_OK, EXIT_PROPERTY) else sys.stderr
    stream.write(report)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Regenerate scenarios/golden/<stem>.<command>.txt from the current code.

Run after an intentional output change, then review the diff.
"""

import argparse
from pathlib import Path

from algcut.cli import run
from algcut.scenario import PROJECTIVE_SPACE, load_scenario

ROOT = Path(__file__).resolve().parents[1] / "scenarios"
PS_COMMANDS = ("stability", "inventory", "kalkman", "euler", "todd", "oracle")
FPD_COMMANDS = ("kalkman", "euler", "todd")


def main():
    out = ROOT / "golden"
    out.mkdir(exist_ok=True)
    opts = argparse.Namespace(order=None, dmax=None, format="text", seed=0)
    for path in sorted(ROOT.glob("*.json")):
        sc = load_scenario(path)
        commands = PS_COMMANDS if sc.mode == PROJECTIVE_SPACE else FPD_COMMANDS
        for cmd in commands:
            report, code = run(cmd, str(path), opts)
            if code != 0:
                raise SystemExit(f"{path.name} {cmd}: exit {code}\n{report}")
            (out / f"{path.stem}.{cmd}.txt").write_text(report, encoding="utf-8")
            print(f"wrote {path.stem}.{cmd}.txt")


if __name__ == "__main__":
    main()

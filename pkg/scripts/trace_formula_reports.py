#!/usr/bin/env python3
"""Archive the closed-form trace-solution check reports for several moduli.

For each modulus the eight printed closed-form solutions of
t^2 = t + 2d (mod n) are evaluated for every nontrivial idempotent d and
compared against the scan-backed solver; the per-expression verdicts land
in reports/trace-formulas-<n>.{txt,json}.
"""

import argparse
import json
from pathlib import Path

from idemring.modarith import factor_squarefree
from idemring.quadcong import formula_discrepancy_survey


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--moduli", type=int, nargs="+", default=[105, 385, 455])
    ap.add_argument("--out-dir", type=Path, default=Path(__file__).resolve().parents[1] / "reports")
    args = ap.parse_args()
    args.out_dir.mkdir(exist_ok=True)
    for n in args.moduli:
        mod = factor_squarefree(n)
        reports = formula_discrepancy_survey(mod)
        txt = args.out_dir / f"trace-formulas-{n}.txt"
        txt.write_text("\n\n".join(r.to_text() for r in reports) + "\n")
        js = args.out_dir / f"trace-formulas-{n}.json"
        js.write_text(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n")
        bad = sum(len(r.discrepancies) for r in reports)
        print(f"n = {mod}: {len(reports) * 8} expressions, {bad} discrepancies -> {txt}")


if __name__ == "__main__":
    main()

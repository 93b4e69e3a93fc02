#!/usr/bin/env python3
"""Archive the matrix-classification completeness reports.

Enumerates every constant idempotent matrix of M2(Z_n), classifies each
one and writes the tally to reports/completeness-<n>.{txt,json}.  The
moduli must have three distinct prime factors, all greater than 3.
"""

import argparse
import json
from pathlib import Path

from idemring.classify import DEFAULT_MATRIX_BUDGET, completeness_check
from idemring.modarith import factor_squarefree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--moduli", type=int, nargs="+", default=[385, 455])
    ap.add_argument("--budget", type=int, default=DEFAULT_MATRIX_BUDGET)
    ap.add_argument("--out-dir", type=Path, default=Path(__file__).resolve().parents[1] / "reports")
    args = ap.parse_args()
    args.out_dir.mkdir(exist_ok=True)
    for n in args.moduli:
        mod = factor_squarefree(n)
        rep = completeness_check(mod, budget=args.budget)
        txt = args.out_dir / f"completeness-{n}.txt"
        txt.write_text(rep.to_text() + "\n")
        js = args.out_dir / f"completeness-{n}.json"
        js.write_text(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n")
        print(
            f"n = {mod}: {rep.total} idempotents, {len(rep.unmatched)} unmatched "
            f"({rep.elapsed_seconds:.1f} s) -> {txt}"
        )


if __name__ == "__main__":
    main()

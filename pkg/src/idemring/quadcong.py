"""Trace congruences t^2 = t + 2d (mod n) and their closed-form solution lists."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InternalTheoremViolation, NotIdempotentDet, WrongPrimeCount
from .modarith import Modulus, crt_combine, mod_pow
from .znring import pattern_of


def prime_quadratic_roots(p: int, c: int) -> tuple[int, ...]:
    """All x in [0, p) with x^2 = x + c (mod p), by exhaustive scan.

    The scan doubles as its own oracle; primes here are desk scale.
    """
    c %= p
    return tuple(x for x in range(p) if (x * x - x - c) % p == 0)


@dataclass(frozen=True)
class TraceCandidateSet:
    modulus: int
    det: int
    solutions: tuple[int, ...]


@lru_cache(maxsize=None)
def trace_candidates(mod: Modulus, d: int) -> TraceCandidateSet:
    """All t in [0, n) with t^2 = t + 2d (mod n) for an idempotent d.

    Solved per prime by scan and recombined through the CRT over every
    choice of per-prime root.
    """
    n = mod.n
    d %= n
    if (d * d - d) % n:
        raise NotIdempotentDet(f"{d} is not idempotent mod {n}")
    per_prime = [prime_quadratic_roots(p, 2 * d) for p in mod.primes]
    sols = set()
    for combo in product(*per_prime):
        sols.add(crt_combine(list(zip(combo, mod.primes))))
    out = TraceCandidateSet(n, d, tuple(sorted(sols)))
    for t in out.solutions:
        if (t * t - t - 2 * d) % n:
            raise InternalTheoremViolation(f"{t} fails t^2 = t + 2*{d} (mod {n})")
    return out


@dataclass(frozen=True)
class FormulaEntry:
    formula: str
    value: int
    residues: tuple[int, ...]
    residue_is_root: tuple[bool, ...]
    in_solution_set: bool


@dataclass
class FormulaReport:
    """Cross-check of a printed closed-form solution list against the solver."""

    modulus: int
    primes: tuple[int, ...]
    det: int
    pivot: str
    congruence: str
    solver_solutions: tuple[int, ...]
    entries: list[FormulaEntry]

    @property
    def discrepancies(self) -> list[FormulaEntry]:
        return [e for e in self.entries if not e.in_solution_set]

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "primes": list(self.primes),
            "det": self.det,
            "pivot": self.pivot,
            "congruence": self.congruence,
            "solver_solutions": list(self.solver_solutions),
            "entries": [
                {
                    "formula": e.formula,
                    "value": e.value,
                    "residues": list(e.residues),
                    "residue_is_root": list(e.residue_is_root),
                    "in_solution_set": e.in_solution_set,
                }
                for e in self.entries
            ],
            "discrepancy_count": len(self.discrepancies),
        }

    def to_text(self) -> str:
        lines = [
            f"congruence: {self.congruence}   [det {self.det}, pivot {self.pivot}]",
            "solver solutions ({}): {}".format(
                len(self.solver_solutions), " ".join(str(t) for t in self.solver_solutions)
            ),
        ]
        for e in self.entries:
            mark = "ok " if e.in_solution_set else "BAD"
            res = ", ".join(
                f"{v} mod {p}" + ("" if r else " (not a root)")
                for v, p, r in zip(e.residues, self.primes, e.residue_is_root)
            )
            lines.append(f"  {mark} {e.formula} = {e.value}   [{res}]")
        lines.append(f"discrepancies: {len(self.discrepancies)}")
        return "\n".join(lines)


def closed_form_trace_solutions(mod: Modulus, d: int) -> FormulaReport:
    """Evaluate the catalogue of eight closed-form solutions of t^2 = t + 2d.

    d must be one of the six nontrivial idempotents.  When d is a single
    prime power z^((a-1)(b-1)) the "prime"-pivot catalogue applies; when d
    is a pair power (a*b)^(c-1) the "pair"-pivot catalogue applies.  Every
    expression is evaluated exactly and compared with the scan-backed
    solver; mismatches are reported entry by entry, never repaired.
    """
    if mod.m != 3:
        raise WrongPrimeCount(f"need exactly 3 prime factors, got {mod.m}")
    n = mod.n
    d %= n
    pat = pattern_of(mod, d)
    weight = sum(pat)
    if weight not in (1, 2):
        raise ValueError("no closed-form catalogue for the trivial idempotents 0 and 1")
    ones = [p for p, b in zip(mod.primes, pat) if b]
    zeros = [p for p, b in zip(mod.primes, pat) if not b]
    if weight == 2:
        z = zeros[0]
        a, b = ones
        exp = (a - 1) * (b - 1)
        if mod_pow(z, exp, n) != d:
            raise InternalTheoremViolation(f"{z}^{exp} != {d} (mod {n})")
        za = mod_pow(z, a - 1, n)
        zb = mod_pow(z, b - 1, n)
        pab = mod_pow(z * a, b - 1, n)
        pba = mod_pow(z * b, a - 1, n)
        exprs = [
            (f"2*{z}^{exp}", 2 * d),
            (f"{z}^{exp} + 1", d + 1),
            (f"-{z}^{exp}", -d),
            (f"1 - 2*{z}^{exp}", 1 - 2 * d),
            (f"(-1 - 2*{z}^{a - 1})*({z}*{a})^{b - 1} + 2*{z}^{a - 1}", (-1 - 2 * za) * pab + 2 * za),
            (f"(-2 - {z}^{a - 1})*({z}*{a})^{b - 1} + {z}^{a - 1} + 1", (-2 - za) * pab + za + 1),
            (f"(-1 - 2*{z}^{b - 1})*({z}*{b})^{a - 1} + 2*{z}^{b - 1}", (-1 - 2 * zb) * pba + 2 * zb),
            (f"(-2 - {z}^{b - 1})*({z}*{b})^{a - 1} + {z}^{b - 1} + 1", (-2 - zb) * pba + zb + 1),
        ]
        congruence = f"t^2 = t + 2*{z}^{exp} (mod {n})"
        pivot = "prime"
    else:
        a, b = zeros
        c = ones[0]
        if mod_pow(a * b, c - 1, n) != d:
            raise InternalTheoremViolation(f"({a}*{b})^{c - 1} != {d} (mod {n})")
        wa = mod_pow(a, b - 1, n)
        wb = mod_pow(b, a - 1, n)
        exprs = [
            (f"2*({a}*{b})^{c - 1}", 2 * d),
            (f"-({a}*{b})^{c - 1}", -d),
            (f"({a}*{b})^{c - 1} + 1", d + 1),
            (f"1 - 2*({a}*{b})^{c - 1}", 1 - 2 * d),
            (f"(2 - {a}^{b - 1})*({a}*{b})^{c - 1} + {a}^{b - 1}", (2 - wa) * d + wa),
            (f"(-1 - {a}^{b - 1})*({a}*{b})^{c - 1} + {a}^{b - 1}", (-1 - wa) * d + wa),
            (f"(2 - {b}^{a - 1})*({a}*{b})^{c - 1} + {b}^{a - 1}", (2 - wb) * d + wb),
            (f"(-1 - {b}^{a - 1})*({a}*{b})^{c - 1} + {b}^{a - 1}", (-1 - wb) * d + wb),
        ]
        congruence = f"t^2 = t + 2*({a}*{b})^{c - 1} (mod {n})"
        pivot = "pair"
    cands = trace_candidates(mod, d)
    sol_set = set(cands.solutions)
    roots = {p: set(prime_quadratic_roots(p, 2 * d)) for p in mod.primes}
    entries = []
    for text, raw in exprs:
        v = raw % n
        residues = tuple(v % p for p in mod.primes)
        flags = tuple(res in roots[p] for res, p in zip(residues, mod.primes))
        entries.append(FormulaEntry(text, v, residues, flags, v in sol_set))
    return FormulaReport(n, mod.primes, d, pivot, congruence, cands.solutions, entries)


def formula_discrepancy_survey(mod: Modulus) -> list[FormulaReport]:
    """Closed-form check reports for all six nontrivial idempotent determinants."""
    from .znring import enumerate_idempotents

    return [
        closed_form_trace_solutions(mod, d)
        for d in enumerate_idempotents(mod)
        if d not in (0, 1)
    ]

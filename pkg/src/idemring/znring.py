"""Idempotent structure of Z_n and the polynomial-ring scan oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    BudgetExceeded,
    InternalTheoremViolation,
    NotIdempotentDet,
    NotSquarefree,
    WrongPrimeCount,
)
from .modarith import DEFAULT_TRIAL_BOUND, Modulus, crt_combine, factor_squarefree, mod_pow
from .polyring import Poly

DEFAULT_POLY_BUDGET = 2_000_000


def is_reduced(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> bool:
    """True when Z_n has no nonzero nilpotents, i.e. n is squarefree."""
    try:
        factor_squarefree(n, bound)
    except NotSquarefree:
        return False
    return True


@lru_cache(maxsize=None)
def enumerate_idempotents(mod: Modulus) -> tuple[int, ...]:
    """All 2**m solutions of y*y = y (mod n), ascending.

    Each solution is the CRT combination of a choice of 0 or 1 at every
    prime factor, so the count is exactly 2**m.
    """
    sols = []
    for bits in product((0, 1), repeat=mod.m):
        sols.append(crt_combine(list(zip(bits, mod.primes))))
    return tuple(sorted(sols))


def pattern_of(mod: Modulus, y: int) -> tuple[int, ...]:
    """Per-prime residue pattern of an idempotent y, one bit per prime."""
    y %= mod.n
    bits = []
    for p in mod.primes:
        rp = y % p
        if rp not in (0, 1):
            raise NotIdempotentDet(f"{y} is not idempotent mod {mod.n}")
        bits.append(rp)
    return tuple(bits)


def _check_pattern(mod: Modulus, pattern) -> tuple[int, int, int]:
    if mod.m != 3:
        raise WrongPrimeCount(f"need exactly 3 prime factors, got {mod.m}")
    pat = tuple(pattern)
    if len(pat) != 3 or any(b not in (0, 1) for b in pat):
        raise ValueError(f"pattern must be three bits, got {pattern!r}")
    return pat


def euler_closed_form(mod: Modulus, pattern) -> tuple[int, str]:
    """Value and rendered text of the power formula for one residue pattern.

    Patterns with a single 1-bit at prime s evaluate (product of the other
    two primes)**(s-1); patterns with a single 0-bit at prime z evaluate
    z**((a-1)*(b-1)) for the two 1-bit primes a, b.  Fermat's little theorem
    makes each expression congruent to 1 at its 1-bit primes, and the result
    is checked against the CRT combination before being returned.
    """
    pat = _check_pattern(mod, pattern)
    ones = [p for p, b in zip(mod.primes, pat) if b]
    zeros = [p for p, b in zip(mod.primes, pat) if not b]
    if not ones:
        value, text = 0, "0"
    elif len(ones) == 3:
        value, text = 1, "1"
    elif len(ones) == 1:
        s = ones[0]
        value = mod_pow(zeros[0] * zeros[1], s - 1, mod.n)
        text = f"({zeros[0]}*{zeros[1]})^{s - 1}"
    else:
        z = zeros[0]
        exp = (ones[0] - 1) * (ones[1] - 1)
        value = mod_pow(z, exp, mod.n)
        text = f"{z}^{exp}"
    expected = crt_combine(list(zip(pat, mod.primes)))
    if value != expected:
        raise InternalTheoremViolation(
            f"closed form {text} = {value} but CRT gives {expected} (mod {mod.n})"
        )
    return value, text


def euler_idempotent(mod: Modulus, pattern) -> int:
    """Idempotent with the given pattern via its closed-form power expression."""
    return euler_closed_form(mod, pattern)[0]


@dataclass(frozen=True)
class ExponentVariantRow:
    pattern: tuple[int, int, int]
    formula: str
    value: int
    variant_formula: str
    variant_value: int
    agrees: bool


def exponent_variant_check(mod: Modulus) -> list[ExponentVariantRow]:
    """Sensitivity of the pair-power closed forms to the exponent choice.

    For the two patterns whose formula is (a*b)**(s-1) with s not the
    largest prime, also evaluate the same base raised to (largest prime - 1).
    The variant agrees exactly when the multiplicative order of a*b modulo s
    divides it, which fails for some moduli, so both values are reported
    side by side instead of being assumed equal.
    """
    if mod.m != 3:
        raise WrongPrimeCount(f"need exactly 3 prime factors, got {mod.m}")
    rows = []
    r_max = mod.primes[-1]
    for pat in ((0, 1, 0), (1, 0, 0)):
        value, text = euler_closed_form(mod, pat)
        zeros = [p for p, b in zip(mod.primes, pat) if not b]
        base = zeros[0] * zeros[1]
        variant_value = mod_pow(base, r_max - 1, mod.n)
        variant_text = f"({zeros[0]}*{zeros[1]})^{r_max - 1}"
        rows.append(
            ExponentVariantRow(pat, text, value, variant_text, variant_value, variant_value == value)
        )
    return rows


def poly_idempotents_bruteforce(
    mod: Modulus, max_degree: int, budget: int = DEFAULT_POLY_BUDGET
) -> list[Poly]:
    """Every u in Z_n[x] of degree <= max_degree with u*u = u, by full scan.

    The search covers all n**(max_degree+1) coefficient vectors as a DFS
    over prefixes: coefficient k of u*u depends only on c_0..c_k, so a
    prefix violating the k-th coefficient equation rules out its whole
    subtree.  Survivors get a final exact u*u == u verification.  Reports
    whatever it finds; it never assumes the results are constant.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    n = mod.n
    states = n ** (max_degree + 1)
    if states > budget:
        raise BudgetExceeded(f"{states} candidate vectors exceed budget {budget}")
    width = max_degree + 1
    cs = [0] * width
    found: list[Poly] = []

    def square_coeff(k: int) -> int:
        lo = max(0, k - width + 1)
        hi = min(k, width - 1)
        return sum(cs[i] * cs[k - i] for i in range(lo, hi + 1))

    def walk(k: int) -> None:
        if k == width:
            if any(square_coeff(j) % n for j in range(width, 2 * width - 1)):
                return
            cand = Poly(n, cs)
            if cand * cand == cand:
                found.append(cand)
            return
        for c in range(n):
            cs[k] = c
            if (square_coeff(k) - c) % n == 0:
                walk(k + 1)
        cs[k] = 0

    walk(0)
    return sorted(found, key=lambda u: (len(u.coeffs), u.coeffs))

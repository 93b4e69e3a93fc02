"""Classification of idempotent matrices in M2(Z_n[x]) for n = p*q*r, primes > 3.

Every idempotent determinant forces the trace into a small solved set, and
each viable (det, trace) pair carries a parameterized matrix template with a
divisibility side condition.  ``classify`` matches a verified idempotent
against every template consistent with its det and trace, recovering the
template parameters as explicit witnesses; ``generate`` inverts a template;
``bruteforce_constant_idempotents`` enumerates all constant idempotents; and
``completeness_check`` replays the classifier over that enumeration.

Template families, keyed by the determinant's per-prime pattern:

  det 0, trace 1        det0-general    [[e, f], [g, 1-e]] with e(1-e) = g*f
  det 0, trace I        det0-scaled     I * [[e, f], [g, 1-e]], e(1-e) - g*f
                                        divisible by J = n / gcd(I, n)
  det d = (a*b)^(s-1):
    trace 2d            detpair-scalar  diag(d, d)
    trace d+1           detpair-shift   [[1+s*e, s*f], [s*g, d-s*e]],
                                        e(1+s*e) + s*g*f divisible by a*b
    trace = 2 at s,     detpair-mixed   [[u+a*s*e, a*s*f], [a*s*g, t-(u+a*s*e)]],
    0 at a, 1 at b                      u = 0 mod a, 1 mod s; det condition pins f
  det d = z^((a-1)(b-1)):
    trace 2d            detsingle-scalar  diag(d, d)
    trace d+1           detsingle-shift   stride a*b, side divisor z
"""

from __future__ import annotations

import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import gcd

from .errors import (
    BudgetExceeded,
    InternalTheoremViolation,
    ModulusMismatch,
    NotConstant,
    NotIdempotentDet,
    PrimesOutOfScope,
    UnsatisfiableParams,
)
from .mat2 import Mat2Poly
from .modarith import Modulus, crt_combine, mod_inverse
from .polyring import Poly, coeffs_divisible, divide_coeffs
from .quadcong import trace_candidates
from .znring import enumerate_idempotents, pattern_of

DET0_GENERAL = "det0-general"
DET0_SCALED = "det0-scaled"
DETPAIR_SCALAR = "detpair-scalar"
DETPAIR_SHIFT = "detpair-shift"
DETPAIR_MIXED = "detpair-mixed"
DETSINGLE_SCALAR = "detsingle-scalar"
DETSINGLE_SHIFT = "detsingle-shift"

FAMILIES = (
    DET0_GENERAL,
    DET0_SCALED,
    DETPAIR_SCALAR,
    DETPAIR_SHIFT,
    DETPAIR_MIXED,
    DETSINGLE_SCALAR,
    DETSINGLE_SHIFT,
)

_PAIR_FAMILIES = (DETPAIR_SCALAR, DETPAIR_SHIFT, DETPAIR_MIXED)
_SINGLE_FAMILIES = (DETSINGLE_SCALAR, DETSINGLE_SHIFT)

DEFAULT_MATRIX_BUDGET = 125_000_000  # n**3 states, i.e. n <= 500


@dataclass(frozen=True)
class ClassLabel:
    """One matched template: family, prime roles and pinned parameters.

    prime_roles lists the primes in the order the template formulas use
    them; scale/annihilator are the (I, J) pair of the scaled det-0 family
    and mixed_offset is the diagonal offset u of the mixed family.
    """

    modulus: int
    family: str
    prime_roles: tuple[int, int, int]
    det: int
    trace: int
    scale: int | None = None
    annihilator: int | None = None
    mixed_offset: int | None = None

    def __str__(self) -> str:
        bits = [f"{self.family} roles {self.prime_roles} det {self.det} trace {self.trace}"]
        if self.scale is not None:
            bits.append(f"scale {self.scale} annihilator {self.annihilator}")
        if self.mixed_offset is not None:
            bits.append(f"offset {self.mixed_offset}")
        return " ".join(bits)


@dataclass
class ClassificationReport:
    idempotent: bool
    trivial: bool
    det: int | None
    trace: int | None
    matches: list[ClassLabel]
    witnesses: list[dict]
    notes: list[str] = field(default_factory=list)


def require_classification_scope(mod: Modulus) -> None:
    if mod.m != 3 or mod.primes[0] <= 3:
        raise PrimesOutOfScope(f"need three distinct primes, all > 3; got {mod}")


def _det_roles(mod: Modulus, d: int) -> tuple[tuple[int, int, int], int]:
    """Role order and pattern weight for a nontrivial idempotent d.

    Weight 1 (d = (a*b)^(s-1)) yields (a, b, s); weight 2
    (d = z^((a-1)(b-1))) yields (z, a, b).
    """
    pat = pattern_of(mod, d)
    ones = [p for p, b in zip(mod.primes, pat) if b]
    zeros = [p for p, b in zip(mod.primes, pat) if not b]
    if len(ones) == 1:
        return (zeros[0], zeros[1], ones[0]), 1
    if len(ones) == 2:
        return (zeros[0], ones[0], ones[1]), 2
    raise UnsatisfiableParams(f"det {d} is a trivial idempotent")


def _mixed_trace(a: int, b: int, s: int) -> int:
    return crt_combine([(0, a), (1, b), (2, s)])


def _mixed_offset(a: int, s: int) -> int:
    return crt_combine([(0, a), (1, s)])


def nontrivial_idempotents(mod: Modulus) -> tuple[int, ...]:
    return tuple(y for y in enumerate_idempotents(mod) if y not in (0, 1))


def expected_trace_values(mod: Modulus, d: int) -> set[int]:
    """Traces the templates can produce for a given nontrivial determinant."""
    n = mod.n
    roles, weight = _det_roles(mod, d)
    traces = {2 * d % n, (d + 1) % n}
    if weight == 1:
        a, b, s = roles
        traces.add(_mixed_trace(a, b, s))
        traces.add(_mixed_trace(b, a, s))
    return traces


def make_label(
    mod: Modulus,
    family: str,
    *,
    det: int | None = None,
    scale: int | None = None,
    swap_mixed_roles: bool = False,
) -> ClassLabel:
    """Build a consistent ClassLabel for a family over mod.

    det defaults to the pair power with pattern (0,0,1) for the det-pair
    families and to the prime power with pattern (0,1,1) for the det-single
    families; scale defaults to the (0,0,1) idempotent for det0-scaled.
    """
    require_classification_scope(mod)
    n = mod.n
    p1, p2, p3 = mod.primes
    if family == DET0_GENERAL:
        return ClassLabel(n, family, mod.primes, det=0, trace=1)
    if family == DET0_SCALED:
        if scale is None:
            scale = crt_combine([(0, p1), (0, p2), (1, p3)])
        scale %= n
        if (scale * scale - scale) % n or scale in (0, 1):
            raise UnsatisfiableParams(f"scale {scale} is not a nontrivial idempotent mod {n}")
        roles, _ = _det_roles(mod, scale)
        annihilator = n // gcd(scale, n)
        return ClassLabel(n, family, roles, det=0, trace=scale, scale=scale, annihilator=annihilator)
    if family not in _PAIR_FAMILIES and family not in _SINGLE_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if det is None:
        if family in _PAIR_FAMILIES:
            det = crt_combine([(0, p1), (0, p2), (1, p3)])
        else:
            det = crt_combine([(0, p1), (1, p2), (1, p3)])
    d = det % n
    roles, weight = _det_roles(mod, d)
    if family in _PAIR_FAMILIES and weight != 1:
        raise UnsatisfiableParams(f"det {d} does not have a pair-power pattern")
    if family in _SINGLE_FAMILIES and weight != 2:
        raise UnsatisfiableParams(f"det {d} does not have a prime-power pattern")
    if family in (DETPAIR_SCALAR, DETSINGLE_SCALAR):
        return ClassLabel(n, family, roles, det=d, trace=2 * d % n)
    if family in (DETPAIR_SHIFT, DETSINGLE_SHIFT):
        return ClassLabel(n, family, roles, det=d, trace=(d + 1) % n)
    a, b, s = roles
    if swap_mixed_roles:
        a, b = b, a
    return ClassLabel(
        n,
        DETPAIR_MIXED,
        (a, b, s),
        det=d,
        trace=_mixed_trace(a, b, s),
        mixed_offset=_mixed_offset(a, s),
    )


def validate_label(mod: Modulus, label: ClassLabel) -> None:
    """Check every label invariant; raises UnsatisfiableParams on violation."""
    require_classification_scope(mod)
    n = mod.n
    if label.modulus != n:
        raise UnsatisfiableParams(f"label modulus {label.modulus} != {n}")
    if label.family not in FAMILIES:
        raise UnsatisfiableParams(f"unknown family {label.family!r}")
    if sorted(label.prime_roles) != list(mod.primes):
        raise UnsatisfiableParams(f"roles {label.prime_roles} must permute {mod.primes}")
    d, t = label.det % n, label.trace % n
    if (d * d - d) % n:
        raise UnsatisfiableParams(f"det {d} is not idempotent mod {n}")
    if t not in trace_candidates(mod, d).solutions:
        raise UnsatisfiableParams(f"trace {t} does not solve t^2 = t + 2*{d} (mod {n})")
    fam = label.family
    if fam == DET0_GENERAL:
        ok = d == 0 and t == 1 and label.scale is None and label.mixed_offset is None
        if not ok:
            raise UnsatisfiableParams("det0-general requires det 0, trace 1, no extras")
        return
    if fam == DET0_SCALED:
        if d != 0 or label.scale is None or t != label.scale % n:
            raise UnsatisfiableParams("det0-scaled requires det 0 and trace equal to the scale")
        scale = label.scale % n
        if (scale * scale - scale) % n or scale in (0, 1):
            raise UnsatisfiableParams(f"scale {scale} is not a nontrivial idempotent")
        if label.annihilator != n // gcd(scale, n):
            raise UnsatisfiableParams(
                f"annihilator must be {n // gcd(scale, n)} for scale {scale}, got {label.annihilator}"
            )
        if label.prime_roles != _det_roles(mod, scale)[0]:
            raise UnsatisfiableParams("roles inconsistent with the scale's pattern")
        return
    roles, weight = _det_roles(mod, d)
    if fam in _PAIR_FAMILIES and weight != 1:
        raise UnsatisfiableParams(f"det {d} does not have a pair-power pattern")
    if fam in _SINGLE_FAMILIES and weight != 2:
        raise UnsatisfiableParams(f"det {d} does not have a prime-power pattern")
    if fam in (DETPAIR_SCALAR, DETSINGLE_SCALAR, DETPAIR_SHIFT, DETSINGLE_SHIFT):
        if label.prime_roles != roles:
            raise UnsatisfiableParams(f"roles must be {roles} for det {d}")
        want = 2 * d % n if fam in (DETPAIR_SCALAR, DETSINGLE_SCALAR) else (d + 1) % n
        if t != want:
            raise UnsatisfiableParams(f"trace must be {want} for {fam} with det {d}")
        return
    # detpair-mixed
    a, b, s = label.prime_roles
    if s != roles[2] or {a, b} != {roles[0], roles[1]}:
        raise UnsatisfiableParams(f"mixed roles must place the det-1 prime last, zeros first")
    if t != _mixed_trace(a, b, s):
        raise UnsatisfiableParams(f"trace {t} inconsistent with mixed roles {(a, b, s)}")
    if label.mixed_offset != _mixed_offset(a, s):
        raise UnsatisfiableParams(
            f"mixed offset must be {_mixed_offset(a, s)}, got {label.mixed_offset}"
        )


# --- template matchers -------------------------------------------------

def _match_det0_general(G, mod, d, t):
    if d != 0 or t != 1:
        return None
    n = mod.n
    e, f, g = G.e, G.f, G.g
    if G.h != 1 - e:
        return None
    if not (e * (1 - e) - g * f).is_zero():
        return None
    label = ClassLabel(n, DET0_GENERAL, mod.primes, det=0, trace=1)
    return label, {"e": e, "f": f, "g": g}


def _match_det0_scaled(G, mod, d, t):
    if d != 0 or t in (0, 1):
        return None
    n = mod.n
    if (t * t - t) % n:
        return None
    scale = t
    c = gcd(scale, n)
    annihilator = n // c
    if any(not coeffs_divisible(entry, c) for entry in G.entries()):
        return None
    # entries are multiples of c, so scale * entry == entry and the entries
    # themselves serve as the template parameters
    e, f, g = G.e, G.f, G.g
    if scale * e != G.e or scale * f != G.f or scale * g != G.g or scale * (1 - e) != G.h:
        return None
    side = e * (1 - e) - g * f
    if not coeffs_divisible(side, annihilator):
        return None
    k = divide_coeffs(side, annihilator)
    roles, _ = _det_roles(mod, scale)
    label = ClassLabel(n, DET0_SCALED, roles, det=0, trace=scale, scale=scale, annihilator=annihilator)
    return label, {"e": e, "f": f, "g": g, "k": k}


def _match_scalar(G, mod, d, t):
    n = mod.n
    if t != 2 * d % n:
        return None
    if G != Mat2Poly.from_ints(n, d, 0, 0, d):
        return None
    roles, weight = _det_roles(mod, d)
    family = DETPAIR_SCALAR if weight == 1 else DETSINGLE_SCALAR
    return ClassLabel(n, family, roles, det=d, trace=t), {}


def _match_shift(G, mod, d, t):
    n = mod.n
    if t != (d + 1) % n:
        return None
    roles, weight = _det_roles(mod, d)
    if weight == 1:
        stride, side_div, family = roles[2], roles[0] * roles[1], DETPAIR_SHIFT
    else:
        stride, side_div, family = roles[1] * roles[2], roles[0], DETSINGLE_SHIFT
    e_off = G.e - 1
    if not (
        coeffs_divisible(e_off, stride)
        and coeffs_divisible(G.f, stride)
        and coeffs_divisible(G.g, stride)
    ):
        return None
    e = divide_coeffs(e_off, stride)
    f = divide_coeffs(G.f, stride)
    g = divide_coeffs(G.g, stride)
    if G.h != d - stride * e:
        return None
    side = e * (1 + stride * e) + stride * (g * f)
    if not coeffs_divisible(side, side_div):
        return None
    k = divide_coeffs(side, side_div)
    label = ClassLabel(n, family, roles, det=d, trace=t)
    return label, {"e": e, "f": f, "g": g, "k": k}


def _match_mixed(G, mod, d, t):
    n = mod.n
    roles, weight = _det_roles(mod, d)
    if weight != 1:
        return None
    z0, z1, s = roles
    if t % s != 2 % s:
        return None
    r0, r1 = t % z0, t % z1
    if sorted((r0, r1)) != [0, 1]:
        return None
    a, b = (z0, z1) if r0 == 0 else (z1, z0)
    sigma = a * s
    u = _mixed_offset(a, s)
    if not (coeffs_divisible(G.f, sigma) and coeffs_divisible(G.g, sigma)):
        return None
    e_off = G.e - u
    if not coeffs_divisible(e_off, sigma):
        return None
    e = divide_coeffs(e_off, sigma)
    f = divide_coeffs(G.f, sigma)
    g = divide_coeffs(G.g, sigma)
    if G.h != t - G.e:
        return None
    diag = u + sigma * e
    if diag * (t - diag) - sigma * sigma * (f * g) != Poly.constant(n, d):
        return None
    label = ClassLabel(n, DETPAIR_MIXED, (a, b, s), det=d, trace=t, mixed_offset=u)
    return label, {"e": e, "f": f, "g": g, "u": u, "diag_constant": G.e.coeff(0)}


def classify(G: Mat2Poly, mod: Modulus) -> ClassificationReport:
    """Match an idempotent matrix against all templates fitting its det/trace.

    Non-idempotent input yields a report with idempotent=False; the zero
    and identity matrices (and any det-1 case, which forces the identity)
    are flagged trivial.  All matching templates are collected, each with
    its recovered witness parameters; an empty match list on a non-trivial
    idempotent is reported via notes rather than raised.
    """
    require_classification_scope(mod)
    if G.n != mod.n:
        raise ModulusMismatch(f"matrix over {G.n}, modulus {mod.n}")
    if not G.is_idempotent():
        return ClassificationReport(False, False, None, None, [], [])
    n = mod.n
    try:
        d = G.det().const_value()
        t = G.trace().const_value()
    except NotConstant as exc:
        raise InternalTheoremViolation(
            f"verified idempotent has non-constant det or trace: {exc}"
        ) from exc
    notes: list[str] = []
    trivial = G == Mat2Poly.zero(n) or G == Mat2Poly.identity(n)
    if d == 1 and not trivial:
        notes.append("det 1 forces the identity; flagging this anomaly as trivial")
        trivial = True
    if trivial:
        return ClassificationReport(True, True, d, t, [], [], notes)
    try:
        weight = sum(pattern_of(mod, d))
    except NotIdempotentDet as exc:
        raise InternalTheoremViolation(
            f"idempotent matrix has non-idempotent det {d} (mod {n})"
        ) from exc
    if weight == 0:
        matchers = (_match_det0_general, _match_det0_scaled)
    elif weight == 1:
        matchers = (_match_scalar, _match_shift, _match_mixed)
    else:
        matchers = (_match_scalar, _match_shift)
    matches: list[ClassLabel] = []
    witnesses: list[dict] = []
    for matcher in matchers:
        hit = matcher(G, mod, d, t)
        if hit is not None:
            matches.append(hit[0])
            witnesses.append(hit[1])
    if not matches:
        notes.append("no template matched a non-trivial idempotent (unexpected)")
    return ClassificationReport(True, False, d, t, matches, witnesses, notes)


# --- generation --------------------------------------------------------

def _random_poly(rng: random.Random, n: int, max_degree: int) -> Poly:
    deg = rng.randint(-1, max_degree)
    if deg < 0:
        return Poly(n, ())
    coeffs = [rng.randrange(n) for _ in range(deg)] + [rng.randrange(1, n)]
    return Poly(n, coeffs)


def _unit_constant_mod(gpoly: Poly, w: int):
    """Value of gpoly mod w when it reduces to a unit constant, else None."""
    reduced = [c % w for c in gpoly.coeffs]
    if any(reduced[1:]):
        return None
    g0 = reduced[0] if reduced else 0
    if gcd(g0, w) != 1:
        return None
    return g0


def _solved_f(target: Poly, gpoly: Poly, factor: int, w: int, n: int) -> Poly:
    """f with factor * gpoly * f = target (mod w), solved per coefficient."""
    g0 = _unit_constant_mod(gpoly, w)
    if g0 is None:
        raise UnsatisfiableParams(f"g must reduce to a unit constant mod {w} to solve for f")
    inv = mod_inverse(factor * g0, w)
    return Poly(n, ((inv * c) % w for c in target.coeffs))


def generate(
    mod: Modulus,
    label: ClassLabel,
    *,
    e: Poly | None = None,
    f: Poly | None = None,
    g: Poly | None = None,
    m: Poly | None = None,
    rng: random.Random | None = None,
    seed: int | None = None,
    max_degree: int = 2,
) -> Mat2Poly:
    """Produce an idempotent matrix that classify() matches to label.

    Free template parameters left as None are drawn from rng (or a fresh
    Random(seed)); the parameter bound by the side condition is solved per
    coefficient.  Explicit parameters that violate the side condition and
    cannot be repaired raise UnsatisfiableParams.  The result is verified
    idempotent before being returned.
    """
    validate_label(mod, label)
    n = mod.n
    if rng is None:
        rng = random.Random(seed)
    fam = label.family
    if fam == DET0_GENERAL:
        if e is None:
            e = _random_poly(rng, n, max_degree)
        if g is None:
            g = Poly.constant(n, 1)
        if f is None:
            f = _solved_f(e * (1 - e), g, 1, n, n)
        elif not (e * (1 - e) - g * f).is_zero():
            raise UnsatisfiableParams("parameters violate e(1-e) = g*f")
        G = Mat2Poly(e, f, g, 1 - e)
    elif fam == DET0_SCALED:
        scale, annihilator = label.scale, label.annihilator
        if e is None:
            e = _random_poly(rng, n, max_degree)
        if g is None:
            g = Poly.constant(n, 1)
        if f is None:
            if m is None:
                m = _random_poly(rng, n, max_degree)
            f = _solved_f(e * (1 - e) - annihilator * m, g, 1, n, n)
        elif not coeffs_divisible(e * (1 - e) - g * f, annihilator):
            raise UnsatisfiableParams(
                f"e(1-e) - g*f must be divisible by the annihilator {annihilator}"
            )
        G = Mat2Poly(scale * e, scale * f, scale * g, scale * (1 - e))
    elif fam in (DETPAIR_SCALAR, DETSINGLE_SCALAR):
        d = label.det
        G = Mat2Poly.from_ints(n, d, 0, 0, d)
    elif fam in (DETPAIR_SHIFT, DETSINGLE_SHIFT):
        roles = label.prime_roles
        if fam == DETPAIR_SHIFT:
            stride, side_div = roles[2], roles[0] * roles[1]
        else:
            stride, side_div = roles[1] * roles[2], roles[0]
        if e is None:
            e = _random_poly(rng, n, max_degree)
        if g is None:
            g = Poly.constant(n, 1)
        if f is None:
            f = _solved_f(-(e * (1 + stride * e)), g, stride, side_div, n)
        elif not coeffs_divisible(e * (1 + stride * e) + stride * (g * f), side_div):
            raise UnsatisfiableParams(
                f"e(1+{stride}e) + {stride}*g*f must be divisible by {side_div}"
            )
        G = Mat2Poly(1 + stride * e, stride * f, stride * g, label.det - stride * e)
    else:  # detpair-mixed
        a, b, s = label.prime_roles
        sigma = a * s
        u, t, d = label.mixed_offset, label.trace, label.det
        if e is None:
            e = _random_poly(rng, n, max_degree)
        if g is None:
            g = Poly.constant(n, 1)
        diag = u + sigma * e
        residual = diag * (t - diag) - d
        if not coeffs_divisible(residual, sigma):
            raise InternalTheoremViolation("mixed-template residual not divisible by the stride")
        reduced = divide_coeffs(residual, sigma)
        if f is None:
            f = _solved_f(reduced, g, sigma, b, n)
        elif sigma * sigma * (f * g) != residual:
            raise UnsatisfiableParams("parameters violate the determinant side condition")
        G = Mat2Poly(diag, sigma * f, sigma * g, t - diag)
    if not G.is_idempotent():
        raise InternalTheoremViolation(f"generated matrix is not idempotent for {label}")
    return G


# --- brute-force oracle and completeness ---------------------------------

def iter_constant_idempotent_entries(mod: Modulus):
    """Yield (e, f, g, h) for every constant idempotent matrix, deterministically.

    Pairs (e, h) must satisfy e - e^2 = h - h^2; given such a pair, f and g
    obey f*g = e - e^2 together with f*(e+h-1) = g*(e+h-1) = 0, so f runs
    over multiples of n/gcd(e+h-1, n) and g comes from gcd solvability of
    the product congruence.  Cost is O(n^3) in the worst case but output
    sensitive in practice.
    """
    n = mod.n
    cvals = [(x - x * x) % n for x in range(n)]
    buckets: dict[int, list[int]] = {}
    for h, c in enumerate(cvals):
        buckets.setdefault(c, []).append(h)
    for e in range(n):
        c = cvals[e]
        for h in buckets[c]:
            t1 = (e + h - 1) % n
            beta = gcd(t1, n)
            step = n // beta
            for f in range(0, n, step):
                if f == 0:
                    if c == 0:
                        for g in range(0, n, step):
                            yield (e, 0, g, h)
                    continue
                gamma = gcd(f, n)
                if c % gamma:
                    continue
                cof = n // gamma
                g0 = ((c // gamma) * mod_inverse(f // gamma, cof)) % cof
                for g in range(g0, n, cof):
                    if g % step == 0:
                        yield (e, f, g, h)


def bruteforce_constant_idempotents(
    mod: Modulus, budget: int = DEFAULT_MATRIX_BUDGET
) -> list[Mat2Poly]:
    """All constant matrices G with G @ G == G, sorted by entry tuple."""
    n = mod.n
    if n**3 > budget:
        raise BudgetExceeded(f"{n}^3 states exceed budget {budget}")
    tuples = sorted(iter_constant_idempotent_entries(mod))
    return [Mat2Poly.from_ints(n, *t) for t in tuples]


@dataclass
class CompletenessReport:
    """Tally of classify() over every constant idempotent matrix."""

    modulus: int
    primes: tuple[int, ...]
    total: int
    trivial: int
    family_counts: dict[str, int]
    det_histogram: dict[int, int]
    det_trace_histogram: dict[tuple[int, int], int]
    unmatched: list[tuple[int, int, int, int]]
    match_multiplicity: dict[int, int]
    mixed_offsets: dict[tuple[int, int], dict]
    elapsed_seconds: float

    def det_support_ok(self, idempotents) -> bool:
        return set(self.det_histogram) <= set(idempotents)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "primes": list(self.primes),
            "total": self.total,
            "trivial": self.trivial,
            "family_counts": dict(sorted(self.family_counts.items())),
            "det_histogram": [
                {"det": d, "count": c} for d, c in sorted(self.det_histogram.items())
            ],
            "det_trace_histogram": [
                {"det": d, "trace": t, "count": c}
                for (d, t), c in sorted(self.det_trace_histogram.items())
            ],
            "unmatched": [list(t) for t in self.unmatched],
            "match_multiplicity": {str(k): v for k, v in sorted(self.match_multiplicity.items())},
            "mixed_offsets": [
                {"det": d, "trace": t, **info}
                for (d, t), info in sorted(self.mixed_offsets.items())
            ],
            "elapsed_seconds": self.elapsed_seconds,
        }

    def to_text(self) -> str:
        lines = [
            f"completeness check for n = {self.modulus}",
            f"constant idempotent matrices: {self.total} ({self.trivial} trivial)",
            "family counts:",
        ]
        for fam in FAMILIES:
            if fam in self.family_counts:
                lines.append(f"  {fam:<18} {self.family_counts[fam]}")
        lines.append(f"unmatched non-trivial idempotents: {len(self.unmatched)}")
        mult = ", ".join(f"{k} match(es): {v}" for k, v in sorted(self.match_multiplicity.items()))
        lines.append(f"match multiplicity: {mult or 'n/a'}")
        lines.append("det histogram: " + " ".join(f"{d}:{c}" for d, c in sorted(self.det_histogram.items())))
        for (d, t), info in sorted(self.mixed_offsets.items()):
            lines.append(
                f"mixed det {d} trace {t}: offset(s) {info['offsets']} mod {info['offset_modulus']}, "
                f"{info['distinct_diagonals']} distinct diagonal constants mod {self.modulus}"
            )
        lines.append(f"elapsed: {self.elapsed_seconds:.1f} s")
        return "\n".join(lines)


def completeness_check(mod: Modulus, budget: int = DEFAULT_MATRIX_BUDGET) -> CompletenessReport:
    """Classify every constant idempotent matrix and tally the outcome.

    The expectation, checked by the acceptance suite, is that every
    non-trivial constant idempotent matches at least one template and the
    det histogram is supported on the 2^3 idempotents of Z_n.
    """
    require_classification_scope(mod)
    n = mod.n
    if n**3 > budget:
        raise BudgetExceeded(f"{n}^3 states exceed budget {budget}")
    start = time.perf_counter()
    family_counts: Counter = Counter()
    det_hist: Counter = Counter()
    dt_hist: Counter = Counter()
    multiplicity: Counter = Counter()
    unmatched: list[tuple[int, int, int, int]] = []
    mixed_u: dict[tuple[int, int], list[set]] = defaultdict(lambda: [set(), set()])
    total = 0
    trivial = 0
    for entry in iter_constant_idempotent_entries(mod):
        total += 1
        G = Mat2Poly.from_ints(n, *entry)
        rep = classify(G, mod)
        if not rep.idempotent:
            raise InternalTheoremViolation(f"enumerated non-idempotent {entry}")
        det_hist[rep.det] += 1
        dt_hist[(rep.det, rep.trace)] += 1
        if rep.trivial:
            trivial += 1
            continue
        multiplicity[len(rep.matches)] += 1
        if not rep.matches:
            unmatched.append(entry)
        for label, wit in zip(rep.matches, rep.witnesses):
            family_counts[label.family] += 1
            if label.family == DETPAIR_MIXED:
                rec = mixed_u[(rep.det, rep.trace)]
                rec[0].add((wit["u"], label.prime_roles[0] * label.prime_roles[2]))
                rec[1].add(wit["diag_constant"])
    mixed_offsets = {}
    for key, (offsets, diags) in mixed_u.items():
        moduli = {sig for _, sig in offsets}
        mixed_offsets[key] = {
            "offsets": sorted(u for u, _ in offsets),
            "offset_modulus": moduli.pop() if len(moduli) == 1 else sorted(moduli),
            "distinct_diagonals": len(diags),
        }
    return CompletenessReport(
        modulus=n,
        primes=mod.primes,
        total=total,
        trivial=trivial,
        family_counts=dict(family_counts),
        det_histogram=dict(det_hist),
        det_trace_histogram=dict(dt_hist),
        unmatched=unmatched,
        match_multiplicity=dict(multiplicity),
        mixed_offsets=mixed_offsets,
        elapsed_seconds=time.perf_counter() - start,
    )

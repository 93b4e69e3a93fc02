"""Polynomials over Z_n as normalized little-endian coefficient tuples."""

from __future__ import annotations

import re

from .errors import ModulusMismatch, NotConstant, PolyParseError


class Poly:
    """Element of Z_n[x].

    Coefficients are canonical residues in [0, n), index i holding the
    coefficient of x**i; the highest stored coefficient is nonzero and the
    zero polynomial is the empty tuple.  Instances are immutable by
    convention and hashable.  Ints mix freely with Poly in arithmetic.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=()):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        cs = [int(c) % n for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.n = n
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, n: int, c: int) -> "Poly":
        return cls(n, (c,))

    @classmethod
    def variable(cls, n: int) -> "Poly":
        return cls(n, (0, 1))

    @property
    def degree(self):
        """Degree as an int; the zero polynomial gets float('-inf')."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> int:
        if len(self.coeffs) > 1:
            raise NotConstant(f"degree-{self.degree} polynomial has no constant value")
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly(self.n, (other,))
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ModulusMismatch(f"moduli differ: {self.n} vs {other.n}")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, (-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly(self.n, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.const_value() == other % self.n
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"Poly({self.render()!r}, mod={self.n})"

    def render(self) -> str:
        """Text form 'c0 + c1*x + c2*x^2 + ...' with zero terms dropped."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


_TERM = re.compile(r"(?:(\d+)(?:\*?x(?:\^(\d+))?)?|x(?:\^(\d+))?)\Z")


def parse_poly(n: int, text: str) -> Poly:
    """Parse 'c0 + c1*x + c2*x^2' style text; whitespace is ignored.

    Bare 'x' and 'x^k' terms (implied coefficient 1), missing terms,
    repeated powers and leading minus signs are all accepted.
    """
    s = "".join(text.split())
    if not s:
        raise PolyParseError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"[+-][^+-]+", s)
    if "".join(tokens) != s:
        raise PolyParseError(f"cannot parse {text!r}")
    acc: dict[int, int] = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok[1:]
        m = _TERM.match(body)
        if m is None:
            raise PolyParseError(f"bad term {body!r} in {text!r}")
        coeff_txt, exp_txt, bare_exp = m.groups()
        if coeff_txt is None:
            c = 1
            k = int(bare_exp) if bare_exp else 1
        else:
            c = int(coeff_txt)
            if "x" in body:
                k = int(exp_txt) if exp_txt else 1
            else:
                k = 0
        acc[k] = acc.get(k, 0) + sign * c
    vec = [0] * (max(acc) + 1)
    for k, c in acc.items():
        vec[k] = c
    return Poly(n, vec)


def coeffs_divisible(p: Poly, d: int) -> bool:
    """True when every canonical coefficient of p is divisible by d."""
    return all(c % d == 0 for c in p.coeffs)


def divide_coeffs(p: Poly, d: int) -> Poly:
    """Exact coefficientwise division of the canonical coefficients by d."""
    if any(c % d for c in p.coeffs):
        raise ValueError(f"coefficients of {p!r} not all divisible by {d}")
    return Poly(p.n, (c // d for c in p.coeffs))

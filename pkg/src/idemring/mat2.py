"""2x2 matrices over Z_n[x]: arithmetic, idempotency, canonical wire format."""

from __future__ import annotations

import json
from functools import lru_cache

from .errors import MatrixFormatError, ModulusMismatch
from .polyring import Poly


class Mat2Poly:
    """Matrix [[e, f], [g, h]] with entries in Z_n[x], reading order.

    Constant matrices are just the degree-0 case; there is no separate
    type, so one equality notion covers everything.
    """

    __slots__ = ("n", "e", "f", "g", "h")

    def __init__(self, e: Poly, f: Poly, g: Poly, h: Poly):
        for entry in (f, g, h):
            if entry.n != e.n:
                raise ModulusMismatch("matrix entries over different moduli")
        self.n = e.n
        self.e, self.f, self.g, self.h = e, f, g, h

    @classmethod
    def from_ints(cls, n: int, e: int, f: int, g: int, h: int) -> "Mat2Poly":
        return cls(Poly(n, (e,)), Poly(n, (f,)), Poly(n, (g,)), Poly(n, (h,)))

    @classmethod
    def zero(cls, n: int) -> "Mat2Poly":
        return _zero(n)

    @classmethod
    def identity(cls, n: int) -> "Mat2Poly":
        return _identity(n)

    def entries(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.e, self.f, self.g, self.h)

    def __matmul__(self, other):
        if not isinstance(other, Mat2Poly):
            return NotImplemented
        if other.n != self.n:
            raise ModulusMismatch(f"moduli differ: {self.n} vs {other.n}")
        return Mat2Poly(
            self.e * other.e + self.f * other.g,
            self.e * other.f + self.f * other.h,
            self.g * other.e + self.h * other.g,
            self.g * other.f + self.h * other.h,
        )

    def __add__(self, other):
        if not isinstance(other, Mat2Poly):
            return NotImplemented
        return Mat2Poly(self.e + other.e, self.f + other.f, self.g + other.g, self.h + other.h)

    def __sub__(self, other):
        if not isinstance(other, Mat2Poly):
            return NotImplemented
        return Mat2Poly(self.e - other.e, self.f - other.f, self.g - other.g, self.h - other.h)

    def det(self) -> Poly:
        return self.e * self.h - self.f * self.g

    def trace(self) -> Poly:
        return self.e + self.h

    def is_idempotent(self) -> bool:
        return (self @ self) == self

    def complement(self) -> "Mat2Poly":
        return Mat2Poly.identity(self.n) - self

    def __eq__(self, other):
        return (
            isinstance(other, Mat2Poly)
            and self.n == other.n
            and self.entries() == other.entries()
        )

    def __hash__(self):
        return hash((self.n, self.entries()))

    def __repr__(self):
        return f"Mat2Poly({self.render()}, mod={self.n})"

    def render(self) -> str:
        return "[{}, {}; {}, {}]".format(*(p.render() for p in self.entries()))


@lru_cache(maxsize=None)
def _zero(n: int) -> Mat2Poly:
    return Mat2Poly.from_ints(n, 0, 0, 0, 0)


@lru_cache(maxsize=None)
def _identity(n: int) -> Mat2Poly:
    return Mat2Poly.from_ints(n, 1, 0, 0, 1)


def idempotency_equations_hold(G: Mat2Poly) -> bool:
    """Entry equations e^2+fg=e, f(e+h)=f, g(e+h)=g, fg+h^2=h, checked directly.

    Equivalent to G @ G == G; both routes exist so they can be played
    against each other in tests.
    """
    t = G.e + G.h
    fg = G.f * G.g
    return (
        G.e * G.e + fg == G.e
        and G.f * t == G.f
        and G.g * t == G.g
        and fg + G.h * G.h == G.h
    )


def matrix_to_document(G: Mat2Poly) -> dict:
    """Canonical wire document: little-endian coefficient arrays, no trailing zeros."""
    return {
        "n": G.n,
        "entries": [
            [list(G.e.coeffs), list(G.f.coeffs)],
            [list(G.g.coeffs), list(G.h.coeffs)],
        ],
    }


def _entry_from_coeffs(n: int, coeffs) -> Poly:
    if not isinstance(coeffs, list):
        raise MatrixFormatError("each entry must be an array of coefficients")
    for c in coeffs:
        if not isinstance(c, int) or isinstance(c, bool):
            raise MatrixFormatError("coefficients must be integers")
        if c < 0 or c >= n:
            raise MatrixFormatError(f"coefficient {c} is not canonical in [0, {n})")
    if coeffs and coeffs[-1] == 0:
        raise MatrixFormatError("trailing zero coefficients are forbidden")
    return Poly(n, coeffs)


def matrix_from_document(doc) -> Mat2Poly:
    """Parse and validate the canonical matrix document."""
    if not isinstance(doc, dict):
        raise MatrixFormatError("matrix document must be a JSON object")
    if "n" not in doc or "entries" not in doc:
        raise MatrixFormatError("matrix document needs fields 'n' and 'entries'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise MatrixFormatError("'n' must be an integer >= 2")
    entries = doc["entries"]
    if (
        not isinstance(entries, list)
        or len(entries) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in entries)
    ):
        raise MatrixFormatError("'entries' must be a 2x2 array")
    e, f = (_entry_from_coeffs(n, cs) for cs in entries[0])
    g, h = (_entry_from_coeffs(n, cs) for cs in entries[1])
    return Mat2Poly(e, f, g, h)


def save_matrix(G: Mat2Poly, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(matrix_to_document(G), fp)
        fp.write("\n")


def load_matrix(path) -> Mat2Poly:
    with open(path, "r", encoding="utf-8") as fp:
        try:
            doc = json.load(fp)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"not valid JSON: {exc}") from exc
    return matrix_from_document(doc)

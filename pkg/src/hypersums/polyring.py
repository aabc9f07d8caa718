"""Dense univariate polynomials over exact rationals.

Coefficients are stored in ascending degree with trailing zeros trimmed, so
the zero polynomial is the empty tuple and ``degree`` of zero is None.  Each
polynomial carries a variable tag:

* ``"n"`` -- the summation variable (r context always 0),
* ``"N"`` -- the centered variable N = n + r/2,
* ``"u"`` -- the product variable u = n(n+r) = N^2 - r^2/4.

The tag and its r context are advisory metadata enforced at operation
boundaries: mixing frames is almost always a bug, because the same formula
looks completely different in n, N and u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactnum import Rational, rational_from_json, rational_to_json

_VARS = ("n", "N", "u")


@dataclass(frozen=True)
class RatPoly:
    """Immutable dense polynomial over Rational."""

    coeffs: tuple[Rational, ...]
    var: str = "n"
    r: int = 0

    def __post_init__(self) -> None:
        if self.var not in _VARS:
            raise ValueError(f"unknown variable tag {self.var!r}")
        if self.var == "n" and self.r != 0:
            raise ValueError("n-frame polynomials carry no r context")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def leading_coefficient(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _require_same_frame(self, other: RatPoly) -> None:
        if (self.var, self.r) != (other.var, other.r):
            raise ValueError(
                f"frame mismatch: {self.var}[r={self.r}] vs {other.var}[r={other.r}]"
            )

    # -- ring operations -------------------------------------------------

    def __add__(self, other: RatPoly) -> RatPoly:
        self._require_same_frame(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(tuple(out), self.var, self.r)

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __neg__(self) -> RatPoly:
        return RatPoly(tuple(-c for c in self.coeffs), self.var, self.r)

    def __mul__(self, other: RatPoly) -> RatPoly:
        self._require_same_frame(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly((), self.var, self.r)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(tuple(out), self.var, self.r)

    def scale(self, c: Rational | int) -> RatPoly:
        c = Fraction(c)
        return RatPoly(tuple(c * a for a in self.coeffs), self.var, self.r)

    def __pow__(self, k: int) -> RatPoly:
        if k < 0:
            raise ValueError("negative polynomial power")
        out = constant(1, self.var, self.r)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval(self, x: Rational | int) -> Rational:
        """Horner evaluation at x, exact."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c: Rational | int) -> RatPoly:
        """The composed polynomial p(x + c), expanded; same frame."""
        c = Fraction(c)
        if c == 0 or not self.coeffs:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for k, coef in enumerate(self.coeffs):
            if coef == 0:
                continue
            pw = Fraction(1)
            for j in range(k, -1, -1):  # coef * C(k,j) c^(k-j) x^j
                out[j] += coef * comb(k, j) * pw
                pw *= c
        return RatPoly(tuple(out), self.var, self.r)

    def parity(self) -> str:
        """"even" | "odd" | "neither"; the zero polynomial counts as even."""
        even = all(c == 0 for c in self.coeffs[1::2])
        odd = all(c == 0 for c in self.coeffs[0::2])
        if even:
            return "even"
        if odd:
            return "odd"
        return "neither"

    def __str__(self) -> str:
        return to_text(self)


# -- constructors ---------------------------------------------------------


def poly(coeffs, var: str = "n", r: int = 0) -> RatPoly:
    """Polynomial from an ascending coefficient sequence."""
    return RatPoly(tuple(Fraction(c) for c in coeffs), var, r)


def constant(c: Rational | int, var: str = "n", r: int = 0) -> RatPoly:
    return RatPoly((Fraction(c),), var, r)


def monomial(k: int, c: Rational | int = 1, var: str = "n", r: int = 0) -> RatPoly:
    return RatPoly((Fraction(0),) * k + (Fraction(c),), var, r)


def zero(var: str = "n", r: int = 0) -> RatPoly:
    return RatPoly((), var, r)


# -- frame conversions ------------------------------------------------------


def to_N_frame(p: RatPoly, r: int) -> RatPoly:
    """Rewrite an n-frame polynomial in N = n + r/2 (substitute n = N - r/2)."""
    if p.var != "n":
        raise ValueError(f"to_N_frame expects an n-frame polynomial, got {p.var!r}")
    shifted = p.shift(Fraction(-r, 2))
    return RatPoly(shifted.coeffs, "N", r)


def to_n_frame(p: RatPoly) -> RatPoly:
    """Rewrite an N-frame polynomial back in n (substitute N = n + r/2)."""
    if p.var != "N":
        raise ValueError(f"to_n_frame expects an N-frame polynomial, got {p.var!r}")
    shifted = p.shift(Fraction(p.r, 2))
    return RatPoly(shifted.coeffs, "n", 0)


def to_u_form(p: RatPoly) -> RatPoly:
    """Rewrite an even N-frame polynomial in u = n(n+r), using N^2 = u + r^2/4.

    The degree halves.  Rejects polynomials that are not even in N.
    """
    if p.var != "N":
        raise ValueError(f"to_u_form expects an N-frame polynomial, got {p.var!r}")
    if p.parity() != "even":
        raise ValueError("to_u_form requires an even polynomial")
    quarter = Fraction(p.r * p.r, 4)
    out = zero("u", p.r)
    for t in range((len(p.coeffs) + 1) // 2):
        a = p.coefficient(2 * t)
        if a == 0:
            continue
        term = [a * comb(t, j) * quarter ** (t - j) for j in range(t + 1)]
        out = out + poly(term, "u", p.r)
    return out


def from_u_form(p: RatPoly) -> RatPoly:
    """Inverse of :func:`to_u_form`: substitute u = N^2 - r^2/4."""
    if p.var != "u":
        raise ValueError(f"from_u_form expects a u-frame polynomial, got {p.var!r}")
    base = poly([Fraction(-p.r * p.r, 4), 0, 1], "N", p.r)
    out = zero("N", p.r)
    for t, a in enumerate(p.coeffs):
        if a == 0:
            continue
        out = out + (base**t).scale(a)
    return out


def divide_exact(p: RatPoly, q: RatPoly) -> RatPoly:
    """Exact polynomial division; raises if the remainder is nonzero."""
    p._require_same_frame(q)
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    quot = [Fraction(0)] * max(1, len(rem) - len(q.coeffs) + 1)
    while len(rem) >= len(q.coeffs) and rem:
        c = rem[-1] / q.coeffs[-1]
        d = len(rem) - len(q.coeffs)
        quot[d] = c
        for i, b in enumerate(q.coeffs):
            rem[i + d] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        raise ValueError("division is not exact (nonzero remainder)")
    return RatPoly(tuple(quot), p.var, p.r)


# -- rendering ---------------------------------------------------------------


def _var_text(p: RatPoly) -> str:
    return p.var


def _term_text(c: Fraction, k: int, var: str) -> str:
    if k == 0:
        return str(c)
    if c == 1:
        head = var
    elif c == -1:
        head = f"-{var}"
    else:
        head = f"{c}*{var}"
    return head if k == 1 else f"{head}^{k}"


def to_text(p: RatPoly) -> str:
    """Plain-text form, descending degree, exact fractions (never decimals)."""
    if p.is_zero():
        return "0"
    var = _var_text(p)
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        term = _term_text(abs(c) if parts else c, k, var)
        if parts:
            parts.append("- " if c < 0 else "+ ")
        parts.append(term + " " if k else term)
    return "".join(parts).strip()


def _latex_var(p: RatPoly) -> str:
    if p.var == "N":
        return f"N_{{{p.r}}}"
    return p.var


def _latex_frac(num: str, den: int) -> str:
    return num if den == 1 else f"\\frac{{{num}}}{{{den}}}"


def to_latex(p: RatPoly) -> str:
    """LaTeX form, descending degree, explicit \\frac for every fraction."""
    if p.is_zero():
        return "0"
    var = _latex_var(p)
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _latex_frac(str(mag.numerator), mag.denominator)
        else:
            pw = var if k == 1 else f"{var}^{{{k}}}"
            num = pw if mag.numerator == 1 else f"{mag.numerator} {pw}"
            body = _latex_frac(num, mag.denominator)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def poly_to_json(p: RatPoly) -> dict:
    """JSON form: {"var": .., "r": .., "coeffs": [["num","den"], ...]} ascending."""
    return {
        "var": p.var,
        "r": p.r,
        "coeffs": [rational_to_json(c) for c in p.coeffs],
    }


def poly_from_json(obj: dict) -> RatPoly:
    if not isinstance(obj, dict) or not {"var", "r", "coeffs"} <= set(obj):
        raise ValueError(f"not a serialized polynomial: {obj!r}")
    return RatPoly(
        tuple(rational_from_json(c) for c in obj["coeffs"]),
        str(obj["var"]),
        int(obj["r"]),
    )

"""Integer polynomials, rational series over (1-x)^k and TC-generating functions.

The TC-generating function of a space or group X is
``F_X(x) = sum_{r>=1} TC_{r+1}(X) x^r``.  For a right-angled Artin group it is
``P(x) / (1-x)^2`` with ``P`` an integer polynomial and ``P(1) = c(G)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable

from .cliques import max_clique_size
from .graph import Graph
from .solver import anchor, z_sequence


class CatalogError(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of x^i, trailing zeros trimmed."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def divmod_one_minus_x(self) -> tuple[IntPolynomial, int]:
        """Quotient and remainder of division by (1 - x); the remainder is P(1)."""
        if self.is_zero():
            return IntPolynomial(), 0
        # P(x) = (1-x) Q(x) + P(1): q_i = -(sum of coeffs above degree i)
        d = self.degree
        q = [0] * d
        acc = 0
        for i in range(d, 0, -1):
            acc += self.coeffs[i]
            q[i - 1] = -acc
        return IntPolynomial(tuple(q)), self(1)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def to_latex(self) -> str:
        return _latex_factored(self)


def poly_arith(a: IntPolynomial, b: IntPolynomial, op: str) -> IntPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


ONE_MINUS_X = IntPolynomial.of(1, -1)


def format_poly(coeffs: Iterable[int], var: str = "x", latex: bool = False) -> str:
    """Ascending-degree text such as ``2x - x^2`` (or ``2x-x^{2}`` for LaTeX)."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else (f"{var}^{{{i}}}" if latex else f"{var}^{i}")
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    plus, minus = ("+", "-") if latex else (" + ", " - ")
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (minus if neg else plus) + body
    return out


def _latex_factored(p: IntPolynomial) -> str:
    # content * x^s * (rest), e.g. 4x - 2x^2 -> 2x(2-x)
    if p.is_zero():
        return "0"
    shift = next(i for i, c in enumerate(p.coeffs) if c)
    content = math.gcd(*p.coeffs)
    if p.coeffs[shift] < 0:
        content = -content
    rest = [c // content for c in p.coeffs[shift:]]
    xpart = "" if shift == 0 else ("x" if shift == 1 else f"x^{{{shift}}}")
    if len(rest) == 1:
        return format_poly(p.coeffs, latex=True)
    prefix = {1: "", -1: "-"}.get(content, str(content))
    inner = format_poly(rest, latex=True)
    if not prefix and not xpart:
        return inner
    return f"{prefix}{xpart}({inner})"


@dataclass(frozen=True)
class RationalGF:
    """``numerator / (1-x)^denom_exponent``, kept with no spare factor of (1-x)."""

    numerator: IntPolynomial
    denom_exponent: int = 2

    def __post_init__(self):
        if self.denom_exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        num, k = self.numerator, self.denom_exponent
        while k > 0 and not num.is_zero():
            q, rem = num.divmod_one_minus_x()
            if rem:
                break
            num, k = q, k - 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_exponent", k)

    def series(self, k: int) -> list[int]:
        return expand_series(self, k)

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator.coeffs), "denom_exponent": self.denom_exponent}

    def __str__(self) -> str:
        num = str(self.numerator)
        k = self.denom_exponent
        if k == 0:
            return num
        den = "(1 - x)" if k == 1 else f"(1 - x)^{k}"
        return f"({num})/{den}"

    def to_latex(self) -> str:
        num = self.numerator.to_latex()
        k = self.denom_exponent
        if k == 0:
            return num
        den = "1-x" if k == 1 else f"(1-x)^{k}"
        return f"\\frac{{{num}}}{{{den}}}"


def expand_series(f: RationalGF, k: int) -> list[int]:
    """Coefficients of x^0..x^k of ``f``, exactly."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = [f.numerator[i] for i in range(k + 1)]
    # dividing by (1-x) is a prefix sum
    for _ in range(f.denom_exponent):
        acc = 0
        for i in range(k + 1):
            acc += coeffs[i]
            coeffs[i] = acc
    return coeffs


def generating_polynomial(g: Graph) -> IntPolynomial:
    """P(x) with ``sum_{r>=1} z_{r+1}(G) x^r = P(x) / (1-x)^2``.

    Assembled from four pieces, with m = max(n, 2) the first r at which
    z_{r+1} = z_r + c holds for all later r:

        (1-x)^2 [sum_{r=1}^{m-1} z_{r+1} x^r - c sum_{r=0}^{m-1} (r+1) x^r]
        + (1-x)(z_m - m c) x^m + c
    """
    if g.n == 0:
        warnings.warn("graph has no vertices: the trivial group has the zero generating function", stacklevel=2)
        return IntPolynomial()
    m = anchor(g)
    c = max_clique_size(g)
    z = {res.r: res.value for res in z_sequence(g, m)}
    head = IntPolynomial(tuple([0] + [z[r + 1] for r in range(1, m)]))
    ramp = IntPolynomial(tuple(c * (r + 1) for r in range(m)))
    square = ONE_MINUS_X * ONE_MINUS_X
    tail = ONE_MINUS_X * IntPolynomial.monomial(z[m] - m * c, m)
    return square * (head - ramp) + tail + IntPolynomial.of(c)


def raag_genfunc(g: Graph) -> RationalGF:
    return RationalGF(generating_polynomial(g), 2)


CATALOG_KEYS = (
    "higman",
    "sphere-odd",
    "sphere-even",
    "free",
    "torus",
    "unitary",
    "surface",
    "symplectic",
    "raag",
)

# keys that need an integer parameter, with its name and minimum
_PARAMS = {
    "free": ("rank", 2),
    "torus": ("n", 1),
    "unitary": ("n", 1),
    "surface": ("genus", 2),
    "symplectic": ("half_dim", 1),
}


def catalog_genfunc(space: str, param: int | None = None, *, graph: Graph | None = None) -> RationalGF:
    """Closed-form TC-generating function of a known space or group.

    ``param`` is the rank/dimension/genus where the key needs one; ``raag``
    takes a defining ``graph`` instead.
    """
    if space not in CATALOG_KEYS:
        raise CatalogError(f"unknown catalog entry {space!r}; known: {', '.join(CATALOG_KEYS)}")
    if space in _PARAMS:
        name, low = _PARAMS[space]
        if param is None or isinstance(param, bool) or not isinstance(param, int) or param < low:
            raise CatalogError(f"{space} requires an integer {name} >= {low}, got {param!r}")
    x_two_minus_x = IntPolynomial.of(0, 2, -1)
    if space == "higman":
        # TC_r = 2r
        return RationalGF(2 * x_two_minus_x)
    if space == "sphere-odd":
        # TC_r = r - 1
        return RationalGF(IntPolynomial.of(0, 1))
    if space == "sphere-even":
        # TC_r = r
        return RationalGF(x_two_minus_x)
    if space == "free":
        return RationalGF(x_two_minus_x)
    if space in ("torus", "unitary"):
        # TC_r = (r - 1) n
        return RationalGF(IntPolynomial.of(0, param))
    if space == "surface":
        return RationalGF(2 * x_two_minus_x)
    if space == "symplectic":
        # TC_r = r n
        return RationalGF(param * x_two_minus_x)
    if graph is None:
        raise CatalogError("raag requires a defining graph")
    return raag_genfunc(graph)

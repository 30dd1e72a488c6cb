"""Exact integer polynomials and the symmetry / gamma-vector predicates."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class DegreeUndefinedError(ValueError):
    """Raised when an operation needs the degree of the zero polynomial."""


class NotSymmetricError(ValueError):
    """Raised when a symmetric polynomial is required but not supplied."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped,
    so the zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def one_plus_x_pow(cls, k: int) -> IntPolynomial:
        return cls(comb(k, i) for i in range(k + 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise DegreeUndefinedError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_arith(self, other, "add")

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_arith(self, other, "sub")

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return poly_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_arith(p: IntPolynomial, q: IntPolynomial, op: str) -> IntPolynomial:
    """Exact ``p + q``, ``p - q`` or ``p * q`` selected by ``op``."""
    a, b = p.coeffs, q.coeffs
    if op == "mul":
        return IntPolynomial(_mul(a, b))
    if op not in ("add", "sub"):
        raise ValueError(f"unknown operation {op!r}")
    sign = 1 if op == "add" else -1
    m = max(len(a), len(b))
    return IntPolynomial(
        (a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(m)
    )


def is_symmetric(p: IntPolynomial) -> bool:
    """True iff ``p[i] == p[d - i]`` for all ``i``, with ``d = deg p``."""
    d = p.degree
    c = p.coeffs
    return all(c[i] == c[d - i] for i in range(d // 2 + 1))


def is_unimodal_symmetric(p: IntPolynomial) -> bool:
    """Unimodality of a symmetric coefficient sequence.

    Only defined for symmetric input: the first half must be nondecreasing.
    """
    if not is_symmetric(p):
        raise NotSymmetricError("unimodality is only defined here for symmetric polynomials")
    c = p.coeffs
    return all(c[i] <= c[i + 1] for i in range(p.degree // 2))


@dataclass(frozen=True)
class GammaDecomposition:
    """``h(x) = sum_i gammas[i] * x**i * (1 + x)**(d - 2i)``."""

    d: int
    gammas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(int(g) for g in self.gammas))
        if self.d < 0 or len(self.gammas) != self.d // 2 + 1:
            raise ValueError(f"need {self.d // 2 + 1} gammas for d={self.d}, got {len(self.gammas)}")

    @property
    def is_gamma_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def as_polynomial(self) -> IntPolynomial:
        """The gamma vector as a polynomial in ``y = x / (1 + x)**2``."""
        return IntPolynomial(self.gammas)


def gamma_expand(p: IntPolynomial) -> GammaDecomposition:
    """Unique gamma vector of a nonzero symmetric polynomial, centred at ``deg p / 2``."""
    if not is_symmetric(p):
        raise NotSymmetricError(f"{p!r} is not symmetric; no gamma decomposition")
    d = p.degree
    rem = list(p.coeffs)
    gammas = []
    for i in range(d // 2 + 1):
        g = rem[i]
        gammas.append(g)
        if g:
            k = d - 2 * i
            for j in range(k + 1):
                rem[i + j] -= g * comb(k, j)
    assert not any(rem), "nonzero remainder after peeling a symmetric polynomial"
    return GammaDecomposition(d, tuple(gammas))


def gamma_compose(g: GammaDecomposition) -> IntPolynomial:
    out = [0] * (g.d + 1)
    for i, gi in enumerate(g.gammas):
        if gi:
            k = g.d - 2 * i
            for j in range(k + 1):
                out[i + j] += gi * comb(k, j)
    return IntPolynomial(out)


def render(p: IntPolynomial, var: str = "x") -> str:
    """Ascending-power text form, e.g. ``1 + 3x + x^2``."""
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms)

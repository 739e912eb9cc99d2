"""Zhegalkin polynomials (algebraic normal form) of Boolean value tables.

A polynomial is a set of monomials, each monomial the set of 1-based
variable indices it multiplies; the empty monomial is the constant 1.
Conversion both ways uses the in-place butterfly Moebius transform over
GF(2), which is its own inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteFunction
from .errors import IndexOutOfRange, NotBoolean, SameIndex, ValueOutOfRange

Monomial = frozenset[int]


@dataclass(frozen=True)
class ZhegalkinPolynomial:
    """Multilinear polynomial over the two-element field.

    monomials holds the subsets of {1..arity} with coefficient 1; absent
    subsets have coefficient 0, so the representation is unique.
    """

    arity: int
    monomials: frozenset[Monomial]


def make_polynomial(arity: int, monomials) -> ZhegalkinPolynomial:
    """Validate and build a polynomial from any iterable of index iterables."""
    if arity < 1:
        raise ValueOutOfRange(f"arity must be >= 1, got {arity}")
    normalized = frozenset(frozenset(m) for m in monomials)
    for mono in normalized:
        for v in mono:
            if not 1 <= v <= arity:
                raise IndexOutOfRange(f"variable index {v} not in 1..{arity}")
    return ZhegalkinPolynomial(arity, normalized)


def _butterfly(values: list[int]) -> list[int]:
    """In-place subset XOR transform, O(n * 2**n); self-inverse over GF(2)."""
    size = len(values)
    half = 1
    while half < size:
        step = half * 2
        for block in range(0, size, step):
            for p in range(block, block + half):
                values[p + half] ^= values[p]
        half = step
    return values


def _index_to_monomial(idx: int, n: int) -> Monomial:
    # Bit (n - t) of a table index carries variable t.
    return frozenset(t for t in range(1, n + 1) if (idx >> (n - t)) & 1)


def _monomial_to_index(mono: Monomial, n: int) -> int:
    idx = 0
    for t in mono:
        idx |= 1 << (n - t)
    return idx


def to_anf(f: FiniteFunction) -> ZhegalkinPolynomial:
    """The unique polynomial over GF(2) whose evaluation matches f."""
    if f.k != 2 or f.b != 2:
        raise NotBoolean(f"ANF needs k = b = 2, got k={f.k} b={f.b}")
    coef = _butterfly(list(f.table))
    n = f.n
    return ZhegalkinPolynomial(
        n, frozenset(_index_to_monomial(idx, n) for idx, c in enumerate(coef) if c)
    )


def from_anf(p: ZhegalkinPolynomial) -> FiniteFunction:
    """Value table of a polynomial; inverse of to_anf."""
    n = p.arity
    coef = [0] * (1 << n)
    for mono in p.monomials:
        coef[_monomial_to_index(mono, n)] = 1
    return FiniteFunction(2, 2, n, tuple(_butterfly(coef)))


def degree(p: ZhegalkinPolynomial) -> int:
    """Largest monomial size; 0 for the constants, including the zero polynomial."""
    return max((len(m) for m in p.monomials), default=0)


def occurs(p: ZhegalkinPolynomial, i: int) -> bool:
    """Whether variable i appears in some monomial (iff it is essential)."""
    if not 1 <= i <= p.arity:
        raise IndexOutOfRange(f"variable index {i} not in 1..{p.arity}")
    return any(i in m for m in p.monomials)


def anf_identify(p: ZhegalkinPolynomial, i: int, j: int) -> ZhegalkinPolynomial:
    """Substitute x_j for x_i in every monomial, cancelling pairs over GF(2).

    Equals to_anf(identify(from_anf(p), i, j)).
    """
    for v in (i, j):
        if not 1 <= v <= p.arity:
            raise IndexOutOfRange(f"variable index {v} not in 1..{p.arity}")
    if i == j:
        raise SameIndex(f"identification needs two distinct indices, got i = j = {i}")
    result: set[Monomial] = set()
    for mono in p.monomials:
        if i in mono:
            mono = (mono - {i}) | {j}
        result.symmetric_difference_update((mono,))
    return ZhegalkinPolynomial(p.arity, frozenset(result))


def polynomial_str(p: ZhegalkinPolynomial) -> str:
    """Canonical rendering: monomials by descending size then ascending
    variable indices, variables printed as x1, x2, ...; "0" and "1" for
    the constants."""
    if not p.monomials:
        return "0"
    ordered = sorted(p.monomials, key=lambda m: (-len(m), sorted(m)))
    parts = ["*".join(f"x{v}" for v in sorted(m)) if m else "1" for m in ordered]
    return " + ".join(parts)

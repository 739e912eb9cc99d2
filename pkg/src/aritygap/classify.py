"""Closed-form arity gap for Boolean functions with ess >= 2.

A Boolean function has gap 2 exactly when its polynomial, restricted to
the variables that occur in it, is a parity x_i1 + ... + x_im + c, the
form x_i*x_j + x_i + c, the majority triangle x_i*x_j + x_i*x_k + x_j*x_k + c,
or the triangle plus two linear terms x_i + x_j; every other function has
gap 1.  No brute force involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .anf import ZhegalkinPolynomial, to_anf
from .core import FiniteFunction
from .errors import EssentialArityTooSmall, NotBoolean


class FormTag(Enum):
    LINEAR_PARITY = "LinearParity"
    AND_PLUS_VAR = "AndPlusVar"
    TRIANGLE_MAJ = "TriangleMaj"
    TRIANGLE_MAJ_PLUS_TWO = "TriangleMajPlusTwo"
    NOT_SPECIAL = "NotSpecial"


@dataclass(frozen=True)
class SpecialForm:
    """Matched gap-2 shape.

    participants are the variable indices bound by the shape: all occurring
    variables for LinearParity; (i, j) with i carrying the linear term for
    AndPlusVar; the triangle (i, j, k) for TriangleMaj; and (i, j, k) with
    i, j carrying the linear terms for TriangleMajPlusTwo.  c is the
    constant term, None for NotSpecial.
    """

    tag: FormTag
    participants: tuple[int, ...]
    c: int | None


NOT_SPECIAL = SpecialForm(FormTag.NOT_SPECIAL, (), None)


def classify(p: ZhegalkinPolynomial) -> SpecialForm:
    """Match p, restricted to its occurring variables, against the four
    gap-2 shapes; inessential variables of the ambient arity are ignored."""
    occ = sorted({v for mono in p.monomials for v in mono})
    if len(occ) < 2:
        raise EssentialArityTooSmall(
            f"classification needs at least 2 occurring variables, got {len(occ)}"
        )
    c = 1 if frozenset() in p.monomials else 0
    body = {m for m in p.monomials if m}

    if body == {frozenset((v,)) for v in occ}:
        return SpecialForm(FormTag.LINEAR_PARITY, tuple(occ), c)

    if len(occ) == 2:
        i, j = occ
        pair = frozenset((i, j))
        if body == {pair, frozenset((i,))}:
            return SpecialForm(FormTag.AND_PLUS_VAR, (i, j), c)
        if body == {pair, frozenset((j,))}:
            return SpecialForm(FormTag.AND_PLUS_VAR, (j, i), c)

    if len(occ) == 3:
        i, j, k = occ
        triangle = {frozenset((i, j)), frozenset((i, k)), frozenset((j, k))}
        if body == triangle:
            return SpecialForm(FormTag.TRIANGLE_MAJ, (i, j, k), c)
        if len(body) == 5 and triangle <= body:
            linear = body - triangle
            if all(len(m) == 1 for m in linear):
                a, b = sorted(v for m in linear for v in m)
                (rest,) = set(occ) - {a, b}
                return SpecialForm(FormTag.TRIANGLE_MAJ_PLUS_TWO, (a, b, rest), c)

    return NOT_SPECIAL


def gap_via_classifier(f: FiniteFunction) -> int:
    """Arity gap of a Boolean f with ess >= 2, decided in closed form."""
    if f.k != 2 or f.b != 2:
        raise NotBoolean(f"classifier needs k = b = 2, got k={f.k} b={f.b}")
    return 1 if classify(to_anf(f)).tag is FormTag.NOT_SPECIAL else 2

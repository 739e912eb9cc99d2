"""Functions on finite sets as explicit value tables.

Provides the minor machinery: essential variables, simple variable
substitution, variable identification, the quasi-order induced by
substitution, and the arity gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    ArityMismatch,
    DomainMismatch,
    EssentialArityTooSmall,
    IndexOutOfRange,
    LengthMismatch,
    SameIndex,
    ValueOutOfRange,
)


@dataclass(frozen=True)
class FiniteFunction:
    """f: {0..k-1}^n -> {0..b-1} stored as a flat value table.

    Row order: x1 is the most significant mixed-radix digit, so the tuple
    (x1, ..., xn) sits at index sum(x_t * k**(n - t)).  Instances are
    immutable and safe to share between threads.
    """

    k: int
    b: int
    n: int
    table: tuple[int, ...]


@dataclass(frozen=True)
class Substitution:
    """A total map sigma: {1..source_arity} -> {1..target_arity}, 1-based.

    mapping[t - 1] is the image of variable t.
    """

    source_arity: int
    target_arity: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source_arity:
            raise ArityMismatch(
                f"mapping has {len(self.mapping)} entries, source arity is {self.source_arity}"
            )
        for v in self.mapping:
            if not 1 <= v <= self.target_arity:
                raise IndexOutOfRange(f"sigma value {v} not in 1..{self.target_arity}")


@dataclass(frozen=True)
class GapReport:
    """Essential arity data of a function.

    witness is the lexicographically least pair (i, j), i < j, whose
    identification minor attains essl.
    """

    ess: int
    essl: int
    gap: int
    witness: tuple[int, int]


def make_function(k: int, b: int, n: int, table) -> FiniteFunction:
    """Validate a value sequence and build a FiniteFunction."""
    if k < 1 or b < 1 or n < 1:
        raise ValueOutOfRange(f"k, b and n must be >= 1, got k={k} b={b} n={n}")
    entries = tuple(table)
    if len(entries) != k**n:
        raise LengthMismatch(f"table has {len(entries)} entries, expected k**n = {k**n}")
    for v in entries:
        if not 0 <= v < b:
            raise ValueOutOfRange(f"table entry {v} not in range(0, {b})")
    return FiniteFunction(k, b, n, entries)


def encode_point(point, k: int) -> int:
    """Mixed-radix index of an argument tuple, x1 most significant."""
    idx = 0
    for x in point:
        idx = idx * k + x
    return idx


def decode_index(idx: int, k: int, n: int) -> tuple[int, ...]:
    """Inverse of encode_point."""
    digits = [0] * n
    for t in range(n - 1, -1, -1):
        idx, digits[t] = divmod(idx, k)
    return tuple(digits)


def evaluate(f: FiniteFunction, point) -> int:
    """Value of f at an argument tuple."""
    pt = tuple(point)
    if len(pt) != f.n:
        raise ArityMismatch(f"point has {len(pt)} coordinates, arity is {f.n}")
    for x in pt:
        if not 0 <= x < f.k:
            raise ValueOutOfRange(f"coordinate {x} not in range(0, {f.k})")
    return f.table[encode_point(pt, f.k)]


@lru_cache(maxsize=None)
def _base_offsets(k: int, n: int, i: int):
    """Column bases along coordinate i plus the in-column offsets.

    A column is the set of k points that agree everywhere except in
    coordinate i; its base is the point with coordinate i equal to 0.
    """
    stride = k ** (n - i)
    block = stride * k
    bases = tuple(hi * block + lo for hi in range(k ** (i - 1)) for lo in range(stride))
    offsets = tuple(range(stride, block, stride))
    return bases, offsets


def _table_depends_on(table, k: int, n: int, i: int) -> bool:
    bases, offsets = _base_offsets(k, n, i)
    for base in bases:
        v = table[base]
        for off in offsets:
            if table[base + off] != v:
                return True
    return False


def is_essential(f: FiniteFunction, i: int) -> bool:
    """Whether changing only the i-th argument can change the value of f."""
    if not 1 <= i <= f.n:
        raise IndexOutOfRange(f"variable index {i} not in 1..{f.n}")
    return _table_depends_on(f.table, f.k, f.n, i)


def essential_vars(f: FiniteFunction) -> tuple[int, ...]:
    """Indices of the essential variables of f, ascending."""
    return tuple(i for i in range(1, f.n + 1) if _table_depends_on(f.table, f.k, f.n, i))


def ess(f: FiniteFunction) -> int:
    """Essential arity: the number of essential variables (0 iff constant)."""
    return len(essential_vars(f))


@lru_cache(maxsize=65536)
def _substitution_remap(k: int, m: int, mapping: tuple[int, ...]) -> tuple[int, ...]:
    """For each target index, the source index it reads from."""
    remap = []
    for idx in range(k**m):
        y = decode_index(idx, k, m)
        remap.append(encode_point(tuple(y[v - 1] for v in mapping), k))
    return tuple(remap)


def substitute(f: FiniteFunction, s: Substitution) -> FiniteFunction:
    """g(x1..xm) = f(x_sigma(1), ..., x_sigma(n)) for sigma = s.mapping."""
    if s.source_arity != f.n:
        raise ArityMismatch(f"substitution source arity {s.source_arity} != function arity {f.n}")
    remap = _substitution_remap(f.k, s.target_arity, s.mapping)
    return FiniteFunction(f.k, f.b, s.target_arity, tuple(map(f.table.__getitem__, remap)))


@lru_cache(maxsize=None)
def _identify_remap(k: int, n: int, i: int, j: int) -> tuple[int, ...]:
    si = k ** (n - i)
    sj = k ** (n - j)
    remap = []
    for idx in range(k**n):
        xi = (idx // si) % k
        xj = (idx // sj) % k
        remap.append(idx + (xj - xi) * si)
    return tuple(remap)


def identify(f: FiniteFunction, i: int, j: int) -> FiniteFunction:
    """The variable identification minor obtained by substituting x_j for x_i.

    Arity stays n; variable i is inessential in the result.  Neither index
    is required to be essential here; gap_report restricts to essential
    pairs itself.
    """
    for v in (i, j):
        if not 1 <= v <= f.n:
            raise IndexOutOfRange(f"variable index {v} not in 1..{f.n}")
    if i == j:
        raise SameIndex(f"identification needs two distinct indices, got i = j = {i}")
    remap = _identify_remap(f.k, f.n, i, j)
    return FiniteFunction(f.k, f.b, f.n, tuple(map(f.table.__getitem__, remap)))


def gap_report(f: FiniteFunction) -> GapReport:
    """Brute-force essl and arity gap over all identification minors.

    essl is the maximum essential arity over minors f with x_j substituted
    for x_i, taken over pairs of essential variables.  Swapping the roles
    of i and j permutes the minor's variables, so only i < j pairs are
    scanned; essl can never exceed ess - 1, so the scan stops early once a
    minor attains that.
    """
    ev = essential_vars(f)
    e = len(ev)
    if e < 2:
        raise EssentialArityTooSmall(f"arity gap needs ess >= 2, got ess = {e}")
    table, k, n = f.table, f.k, f.n
    best = -1
    witness = (0, 0)
    for a, i in enumerate(ev):
        for j in ev[a + 1 :]:
            minor = tuple(map(table.__getitem__, _identify_remap(k, n, i, j)))
            # Variables inessential in f stay inessential in any minor, and
            # x_i is inessential by construction: only the rest can count.
            count = 0
            for t in ev:
                if t != i and _table_depends_on(minor, k, n, t):
                    count += 1
            if count > best:
                best = count
                witness = (i, j)
            if best == e - 1:
                return GapReport(ess=e, essl=best, gap=1, witness=witness)
    return GapReport(ess=e, essl=best, gap=e - best, witness=witness)


def essl(f: FiniteFunction) -> int:
    """Maximum essential arity of a variable identification minor of f."""
    return gap_report(f).essl


def leq(f: FiniteFunction, g: FiniteFunction) -> bool:
    """Whether f is obtained from g by simple variable substitution.

    Tries every sigma: {1..arity g} -> {1..arity f}, so the cost is
    arity_f ** arity_g substitutions; meant for small arities.
    """
    if f.k != g.k or f.b != g.b:
        raise DomainMismatch(
            f"domain/codomain mismatch: ({f.k},{f.b}) vs ({g.k},{g.b})"
        )
    for mapping in product(range(1, f.n + 1), repeat=g.n):
        if substitute(g, Substitution(g.n, f.n, mapping)) == f:
            return True
    return False

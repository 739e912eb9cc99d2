"""Independent brute-force oracles the library is checked against.

Everything here recomputes results from the definitions, deliberately
avoiding the code paths under test: essential variables by scanning
point pairs, ANF coefficients by subset sums, essl by enumerating every
simple variable substitution.
"""

from itertools import product

from aritygap import Substitution, ess, evaluate, leq, substitute


def naive_essential(f, i):
    """Definition-level scan: two points differing only in coordinate i."""
    for point in product(range(f.k), repeat=f.n):
        for other in range(f.k):
            changed = point[: i - 1] + (other,) + point[i:]
            if evaluate(f, point) != evaluate(f, changed):
                return True
    return False


def naive_ess(f):
    return sum(1 for i in range(1, f.n + 1) if naive_essential(f, i))


def naive_anf_monomials(f):
    """Subset-sum Moebius oracle: the coefficient of a variable subset S is
    the XOR of f over all points whose support lies inside S."""
    n = f.n
    monomials = set()
    for mask in range(1 << n):
        positions = [t for t in range(n) if (mask >> t) & 1]
        acc = 0
        for bits in product((0, 1), repeat=len(positions)):
            point = [0] * n
            for pos, bit in zip(positions, bits):
                point[pos] = bit
            acc ^= evaluate(f, point)
        if acc:
            monomials.add(frozenset(pos + 1 for pos in positions))
    return frozenset(monomials)


def naive_anf_monomials_packed(f):
    """Same subset-sum definition, folded over table indices: a point's
    support is contained in S exactly when its index is a submask of the
    index of S.  Fast enough for exhaustive arity-4 sweeps, and checked
    against the explicit-point oracle above."""
    n = f.n
    monomials = set()
    for smask in range(1 << n):
        acc = 0
        sub = smask
        while True:
            acc ^= f.table[sub]
            if sub == 0:
                break
            sub = (sub - 1) & smask
        if acc:
            monomials.add(frozenset(t for t in range(1, n + 1) if (smask >> (n - t)) & 1))
    return frozenset(monomials)


def max_ess_over_strict_minors(f):
    """essl by the original definition: enumerate every sigma with target
    arity n, keep the strict minors (g <= f but not f <= g) and maximize
    their essential arity."""
    best = 0
    for mapping in product(range(1, f.n + 1), repeat=f.n):
        g = substitute(f, Substitution(f.n, f.n, mapping))
        if not leq(f, g):
            best = max(best, ess(g))
    return best

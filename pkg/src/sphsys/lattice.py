"""Exact integer linear algebra: kernels, Hermite forms, Hilbert bases,
and rational feasibility by Fourier-Motzkin elimination.

Everything works on plain tuples of Python ints (or Fractions for the
feasibility solver); nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]


def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def rank(rows: list[Vec]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def is_independent(rows: list[Vec]) -> bool:
    return rank(rows) == len(rows)


def kernel_basis(rows: list[Vec], n: int) -> list[Vec]:
    """Lattice basis of {x in Z^n : r . x = 0 for every row r}.

    Unimodular column operations on an identity block; after processing a
    row, the surviving columns still generate the exact integer kernel.
    """
    cols = [list(unit) for unit in _identity(n)]
    for row in rows:
        vals = [dot(row, c) for c in cols]
        while True:
            nz = [i for i, v in enumerate(vals) if v != 0]
            if len(nz) <= 1:
                break
            i, j = sorted(nz[:2], key=lambda k: abs(vals[k]), reverse=True)
            q = vals[i] // vals[j]
            vals[i] -= q * vals[j]
            cols[i] = [a - q * b for a, b in zip(cols[i], cols[j])]
        nz = [i for i, v in enumerate(vals) if v != 0]
        if nz:
            del cols[nz[0]]
    return [tuple(c) for c in cols]


def _identity(n: int) -> list[Vec]:
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def hermite_rows(rows: list[Vec]) -> list[Vec]:
    """Row-style Hermite form: pivots strictly to the right, positive."""
    work = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        live = [r for r in work if r[c] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            a, b = live[0], live[1]
            q = b[c] // a[c]
            for k in range(cols):
                b[k] -= q * a[k]
            live = [r for r in work if r[c] != 0]
        piv = live[0]
        work.remove(piv)
        if piv[c] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        work = [r for r in work if any(r)]
    return [tuple(r) for r in out]


def lattice_contains(basis: list[Vec], v: Vec) -> bool:
    """Whether v lies in the lattice generated by the basis rows."""
    if not any(v):
        return True
    h = hermite_rows(basis) if basis else []
    vv = list(v)
    for row in h:
        c = next(k for k, x in enumerate(row) if x != 0)
        if vv[c] % row[c] != 0:
            return False
        q = vv[c] // row[c]
        for k in range(len(vv)):
            vv[k] -= q * row[k]
    return not any(vv)


def lattices_equal(a: list[Vec], b: list[Vec]) -> bool:
    return all(lattice_contains(b, v) for v in a) and all(lattice_contains(a, v) for v in b)


# -- Hilbert bases -----------------------------------------------------------

def hilbert_kernel(rows: list[Vec], n: int) -> list[Vec]:
    """Minimal generators of {x in N^n : r . x = 0 for all rows r}.

    Contejean-Devie completion: grow from the unit vectors, extending x by
    e_i only while <Mx, Me_i> < 0, pruning anything dominated by a known
    solution.  Complete and terminating for homogeneous systems.
    """
    if n == 0:
        return []
    cols = [tuple(row[i] for row in rows) for i in range(n)]
    zero = tuple([0] * len(rows))

    basis: list[Vec] = []
    frontier: list[tuple[Vec, Vec]] = []
    for i in range(n):
        t = tuple(1 if j == i else 0 for j in range(n))
        frontier.append((t, cols[i]))

    def dominated(t: Vec) -> bool:
        return any(all(x >= y for x, y in zip(t, b)) for b in basis)

    while frontier:
        nxt: dict[Vec, Vec] = {}
        for t, val in frontier:
            if dominated(t):
                continue
            if val == zero:
                basis.append(t)
                continue
            for i in range(n):
                if dot(val, cols[i]) < 0:
                    u = tuple(x + (1 if j == i else 0) for j, x in enumerate(t))
                    if u not in nxt and not dominated(u):
                        nxt[u] = tuple(a + b for a, b in zip(val, cols[i]))
        frontier = sorted(nxt.items())
    return sorted(basis, key=lambda v: (sum(v), v))


def hilbert_halfspace(rows: list[Vec], n: int) -> list[Vec]:
    """Minimal generators of {x in N^n : r . x >= 0 for all rows r}.

    Slack variables turn the halfspaces into a kernel problem; the slack of
    a point is determined by the point, so projection is a monoid
    isomorphism and generators map to generators.
    """
    d = len(rows)
    ext = [tuple(row) + tuple(-1 if k == i else 0 for k in range(d)) for i, row in enumerate(rows)]
    gens = hilbert_kernel(ext, n + d)
    return sorted({g[:n] for g in gens if any(g[:n])}, key=lambda v: (sum(v), v))


def minimal_monoid_points(points: list[Vec]) -> list[Vec]:
    """Indecomposable elements of a finite monoid fragment, by subtraction."""
    pts = sorted(set(p for p in points if any(p)), key=lambda v: (sum(v), v))
    ptset = set(pts)
    out = []
    for p in pts:
        decomposable = False
        for q in pts:
            if sum(q) >= sum(p):
                break
            if q != p and all(a >= b for a, b in zip(p, q)) and tuple(a - b for a, b in zip(p, q)) in ptset:
                decomposable = True
                break
        if not decomposable:
            out.append(p)
    return out


# -- rational feasibility ----------------------------------------------------

def _norm_constraint(a: tuple[Fraction, ...], b: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    den = 1
    for x in (*a, b):
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in (*a, b)]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(Fraction(x) for x in ints[:-1]), Fraction(ints[-1])


def solve_inequalities(cons: list[tuple[tuple, ...]], n: int) -> list[Fraction] | None:
    """Solve {a . x >= b} exactly; returns a witness or None.

    `cons` is a list of (coeff tuple, bound).  Fourier-Motzkin elimination
    with gcd-normalized deduplication, then back-substitution choosing the
    tightest finite bound at each level.
    """
    levels = []
    cur = {
        _norm_constraint(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in cons
    }
    for var in range(n - 1, -1, -1):
        pos = [(a, b) for a, b in cur if a[var] > 0]
        neg = [(a, b) for a, b in cur if a[var] < 0]
        zero = {(a, b) for a, b in cur if a[var] == 0}
        levels.append((var, pos, neg))
        for ap, bp in pos:
            for an, bn in neg:
                # eliminate x_var: ap[var] * an - an[var] * ap has zero coeff
                f_p, f_n = -an[var], ap[var]
                a = tuple(f_p * x + f_n * y for x, y in zip(ap, an))
                b = f_p * bp + f_n * bn
                zero.add(_norm_constraint(a, b))
        cur = zero
    if any(b > 0 for _, b in cur):
        return None
    x: list[Fraction] = [Fraction(0)] * n
    for var, pos, neg in reversed(levels):
        lo, hi = None, None
        for a, b in pos:
            rest = sum(a[k] * x[k] for k in range(n) if k != var)
            bound = (b - rest) / a[var]
            lo = bound if lo is None or bound > lo else lo
        for a, b in neg:
            rest = sum(a[k] * x[k] for k in range(n) if k != var)
            bound = (b - rest) / a[var]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None:
            x[var] = lo
        elif hi is not None:
            x[var] = min(hi, Fraction(0))
    return x


def clear_denominators(xs: list[Fraction]) -> list[int]:
    den = 1
    for x in xs:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in xs]

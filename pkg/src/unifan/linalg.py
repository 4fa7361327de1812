"""Exact integer and rational linear algebra kernel.

Everything in this module is computed with Python's arbitrary-precision
integers and `fractions.Fraction`; no floating point is used anywhere.
The kernel provides Smith normal forms, unimodular inversion, rational
rank, nonnegative integer feasibility, and bounded lattice-point
enumeration backed by exact Fourier-Motzkin elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

IntVec = tuple[int, ...]


class NotUnimodular(Exception):
    """A square integer matrix has |det| != 1 where a lattice basis was required."""


class DegenerateGenerator(Exception):
    """A zero vector was offered as a monoid generator."""


class Unbounded(Exception):
    """The solution set of a linear system is unbounded in some coordinate."""


def _gcd_many(values) -> int:
    g = 0
    for x in values:
        g = math.gcd(g, abs(x))
    return g


class IntMat:
    """Dense integer matrix, row-major, exact arbitrary-precision entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries) -> None:
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match matrix shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_data) -> "IntMat":
        rows_data = [tuple(int(x) for x in row) for row in rows_data]
        if not rows_data:
            return cls(0, 0, ())
        cols = len(rows_data[0])
        if any(len(row) != cols for row in rows_data):
            raise ValueError("ragged rows")
        return cls(len(rows_data), cols, [x for row in rows_data for x in row])

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVec:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMat":
        return IntMat(
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[t] * other.entry(t, j) for t in range(self.cols)))
        return IntMat(self.rows, other.cols, out)

    def mul_vec(self, v) -> IntVec:
        if len(v) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(sum(self.entry(i, j) * v[j] for j in range(self.cols)) for i in range(self.rows))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMat({self.to_rows()!r})"


def smith_normal_form(a: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Return (U, S, V) with U*a*V = S in Smith normal form.

    U and V are unimodular; S is diagonal with nonnegative invariant
    factors satisfying d1 | d2 | ... .
    """
    m, n = a.rows, a.cols
    s = a.to_rows()
    u = IntMat.identity(m).to_rows()
    v = IntMat.identity(n).to_rows()

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def add_row(dst, src, c):
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, c):
        for row in s:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        # Pick the smallest-magnitude nonzero entry of the trailing block
        # as pivot; the magnitude strictly decreases on every restart.
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot != (t, t):
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
        if s[t][t] < 0:
            negate_row(t)

        restart = False
        for i in range(t + 1, m):
            if s[i][t] != 0:
                add_row(i, t, -(s[i][t] // s[t][t]))
                if s[i][t] != 0:
                    restart = True
        if restart:
            continue
        for j in range(t + 1, n):
            if s[t][j] != 0:
                add_col(j, t, -(s[t][j] // s[t][t]))
                if s[t][j] != 0:
                    restart = True
        if restart:
            continue

        # Enforce the divisibility chain: drag any non-multiple into row t
        # and restart the reduction with a smaller pivot.
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % s[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1

    for i in range(min(m, n)):
        if s[i][i] < 0:
            negate_row(i)

    return IntMat.from_rows(u), IntMat.from_rows(s), IntMat.from_rows(v)


def invert_unimodular(b: IntMat) -> IntMat:
    """Exact integer inverse of a matrix with |det| = 1.

    Raises NotUnimodular when the determinant is not a unit; the rows of
    the inverse's transpose are the dual basis of b's rows.
    """
    if b.rows != b.cols:
        raise ValueError("matrix is not square")
    u, s, v = smith_normal_form(b)
    if s != IntMat.identity(b.rows):
        raise NotUnimodular(f"matrix has invariant factors {[s.entry(i, i) for i in range(b.rows)]}")
    # u*b*v = 1  =>  b^{-1} = v*u
    return v @ u


def rational_rank(vectors) -> int:
    """Rank over the rationals of a list of integer vectors."""
    rows = [[Fraction(x) for x in vec] for vec in vectors]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for j in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][j] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][j] != 0:
                c = rows[i][j] / pr[j]
                rows[i] = [x - c * y for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def q_independent(vectors) -> bool:
    """True iff the integer vectors are linearly independent over Q."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ValueError("vectors of mixed dimension")
    return rational_rank(vectors) == len(vectors)


def solve_nonneg(target, gens) -> IntVec | None:
    """Nonnegative integer coefficients a with sum(a_i * gens_i) = target.

    Searches depth-first over generators in input order, bounding each
    coefficient by min over coordinates j with g_j > 0 of target_j // g_j,
    and returns the lexicographically first solution, or None.
    """
    target = tuple(int(x) for x in target)
    gens = [tuple(int(x) for x in g) for g in gens]
    if any(x < 0 for x in target) or any(x < 0 for g in gens for x in g):
        raise ValueError("solve_nonneg expects nonnegative data")
    for g in gens:
        if all(x == 0 for x in g):
            raise DegenerateGenerator("zero vector among generators")

    def bound(g, residual):
        return min(residual[j] // g[j] for j in range(len(g)) if g[j] > 0)

    def descend(idx, residual, prefix):
        if all(x == 0 for x in residual):
            return prefix + (0,) * (len(gens) - idx)
        if idx == len(gens):
            return None
        g = gens[idx]
        for a in range(bound(g, residual) + 1):
            rem = tuple(r - a * x for r, x in zip(residual, g))
            if any(x < 0 for x in rem):
                break
            found = descend(idx + 1, rem, prefix + (a,))
            if found is not None:
                return found
        return None

    return descend(0, target, ())


@dataclass(frozen=True)
class LinearSystem:
    """Integer linear constraints: v.x == b equalities and v.x >= b inequalities."""

    dim: int
    equalities: tuple[tuple[IntVec, int], ...] = ()
    inequalities: tuple[tuple[IntVec, int], ...] = ()

    def __post_init__(self):
        for vec, _ in list(self.equalities) + list(self.inequalities):
            if len(vec) != self.dim:
                raise ValueError("constraint dimension mismatch")

    @classmethod
    def make(cls, dim, equalities=(), inequalities=()):
        return cls(
            dim,
            tuple((tuple(int(x) for x in v), int(b)) for v, b in equalities),
            tuple((tuple(int(x) for x in v), int(b)) for v, b in inequalities),
        )


def _normalize_ineq(coeffs, rhs):
    g = _gcd_many(coeffs)
    if g > 1 and rhs % g == 0:
        return tuple(c // g for c in coeffs), rhs // g
    return tuple(coeffs), rhs


def _fm_eliminate(ineqs, num_vars, keep=None):
    """Fourier-Motzkin projection of integer inequalities c.x >= b.

    Eliminates every variable except `keep` (all of them when None) and
    returns the surviving constraints, deduplicated.
    """
    current = {_normalize_ineq(c, b) for c, b in ineqs}
    for j in range(num_vars):
        if j == keep:
            continue
        pos, neg, rest = [], [], []
        for c, b in current:
            if c[j] > 0:
                pos.append((c, b))
            elif c[j] < 0:
                neg.append((c, b))
            else:
                rest.append((c, b))
        new = set(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                mp, mn = -cn[j], cp[j]
                combined = tuple(mp * a + mn * b_ for a, b_ in zip(cp, cn))
                new.add(_normalize_ineq(combined, mp * bp + mn * bn))
        current = new
    return current


def _reduce_equalities(system: LinearSystem):
    """Gaussian elimination of the equalities over Q.

    Returns (offset, basis, ineqs) describing x = offset + basis @ t with the
    inequalities rewritten over the free parameters t (integer coefficients),
    or None when the equalities alone are inconsistent.
    """
    dim = system.dim
    rows = [[Fraction(x) for x in vec] + [Fraction(b)] for vec, b in system.equalities]
    pivots = []
    r = 0
    for j in range(dim):
        pivot = next((i for i in range(r, len(rows)) if rows[i][j] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        rows[r] = [x / pr[j] for x in pr]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][j] != 0:
                c = rows[i][j]
                rows[i] = [x - c * y for x, y in zip(rows[i], pr)]
        pivots.append(j)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][dim] != 0:
            return None
    free = [j for j in range(dim) if j not in pivots]

    # x_j for pivot columns in terms of the free parameters.
    offset = [Fraction(0)] * dim
    basis = [[Fraction(0)] * len(free) for _ in range(dim)]
    for idx, j in enumerate(free):
        basis[j][idx] = Fraction(1)
    for i, pj in enumerate(pivots):
        offset[pj] = rows[i][dim]
        for idx, fj in enumerate(free):
            basis[pj][idx] = -rows[i][fj]

    ineqs = []
    for vec, b in system.inequalities:
        const = sum(Fraction(vec[j]) * offset[j] for j in range(dim))
        coeffs = [
            sum(Fraction(vec[j]) * basis[j][idx] for j in range(dim))
            for idx in range(len(free))
        ]
        scale = math.lcm(*(f.denominator for f in coeffs + [const])) if coeffs or const else 1
        ineqs.append(
            (
                tuple(int(f * scale) for f in coeffs),
                int((Fraction(b) - const) * scale),
            )
        )
    return offset, basis, ineqs


def _constants_consistent(constraints):
    for c, b in constraints:
        if all(x == 0 for x in c) and b > 0:
            return False
    return True


def feasible(system: LinearSystem) -> bool:
    """Exact rational feasibility of the system."""
    reduced = _reduce_equalities(system)
    if reduced is None:
        return False
    _, basis, ineqs = reduced
    num_free = len(basis[0]) if basis else 0
    if num_free == 0:
        return all(b <= 0 for c, b in ineqs)
    return _constants_consistent(_fm_eliminate(ineqs, num_free))


def _functional_range(ineqs, num_free, coeffs, const):
    """Exact (min, max) of coeffs.t + const over the t-polyhedron.

    Either bound may be None (unbounded). Assumes the polyhedron is
    nonempty. Implemented by adjoining w = coeffs.t + const and projecting
    onto w.
    """
    scale = math.lcm(*(f.denominator for f in list(coeffs) + [const])) if coeffs or const else 1
    icoeffs = [int(f * scale) for f in coeffs]
    iconst = int(const * scale)
    extended = [(tuple(c) + (0,), b) for c, b in ineqs]
    # scale*w - coeffs.t >= const and the reverse
    extended.append((tuple(-c for c in icoeffs) + (scale,), iconst))
    extended.append((tuple(icoeffs) + (-scale,), -iconst))
    projected = _fm_eliminate(extended, num_free + 1, keep=num_free)
    lo = hi = None
    for c, b in projected:
        a = c[num_free]
        if a > 0:
            val = Fraction(b, a)
            lo = val if lo is None else max(lo, val)
        elif a < 0:
            val = Fraction(b, a)
            hi = val if hi is None else min(hi, val)
        elif b > 0:
            raise AssertionError("projection of a nonempty polyhedron is inconsistent")
    return lo, hi


def lattice_points(system: LinearSystem) -> list[IntVec]:
    """All integer solutions of the system, sorted lexicographically.

    Exact rational bounds for every coordinate are established first via
    Fourier-Motzkin; a box scan filtered by the original constraints then
    yields the points. Raises Unbounded when a coordinate has no finite
    bound.
    """
    reduced = _reduce_equalities(system)
    if reduced is None:
        return []
    offset, basis, ineqs = reduced
    num_free = len(basis[0]) if basis else 0

    if num_free == 0:
        if any(b > 0 for _, b in ineqs):
            return []
        candidate = tuple(offset)
        if all(f.denominator == 1 for f in candidate):
            return [tuple(int(f) for f in candidate)]
        return []

    if not _constants_consistent(_fm_eliminate(ineqs, num_free)):
        return []

    ranges = []
    for j in range(system.dim):
        lo, hi = _functional_range(ineqs, num_free, basis[j], offset[j])
        if lo is None or hi is None:
            raise Unbounded(f"coordinate {j} is unbounded")
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))

    def satisfies(point):
        for vec, b in system.equalities:
            if sum(v * x for v, x in zip(vec, point)) != b:
                return False
        for vec, b in system.inequalities:
            if sum(v * x for v, x in zip(vec, point)) < b:
                return False
        return True

    return [pt for pt in product(*ranges) if satisfies(pt)]

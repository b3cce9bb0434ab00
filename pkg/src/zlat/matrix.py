"""Dense exact linear algebra over the integers and rationals.

Entries are Python ints or ``fractions.Fraction`` objects, never floats, so
arbitrary-precision results are exact by construction.  Everything here is a
pure function on immutable matrices; no operation mutates its input.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ParameterError, SingularMatrixError


def _norm(x):
    """Collapse integer-valued Fractions to plain ints."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, bool):
        return int(x)
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class ExactMatrix:
    """Immutable dense matrix of exact rationals.

    Integer-valued matrices are the common case; entries stay Python ints
    until an operation genuinely produces a fraction.
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        rows = tuple(tuple(_norm(x) for x in row) for row in entries)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ParameterError("ragged rows in matrix input")
        else:
            w = 0
        self.rows = len(rows)
        self.cols = w
        self._e = rows

    # -- construction helpers -------------------------------------------

    @staticmethod
    def identity(n):
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(m, n):
        return ExactMatrix([[0] * n for _ in range(m)])

    @staticmethod
    def from_rows(rows):
        return ExactMatrix(rows)

    @staticmethod
    def diagonal(diag):
        n = len(diag)
        return ExactMatrix(
            [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def block_diagonal(blocks):
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[i0 + i][j0 + j] = b._e[i][j]
            i0 += b.rows
            j0 += b.cols
        return ExactMatrix(out)

    # -- basic accessors --------------------------------------------------

    def entry(self, i, j):
        return self._e[i][j]

    def row(self, i):
        return self._e[i]

    def tolists(self):
        return [list(r) for r in self._e]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_integer(self):
        return all(isinstance(x, int) for r in self._e for x in r)

    def is_symmetric(self):
        if not self.is_square():
            return False
        e = self._e
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def denominator_lcm(self):
        d = 1
        for r in self._e:
            for x in r:
                if isinstance(x, Fraction):
                    d = d * x.denominator // gcd(d, x.denominator)
        return d

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.shape == other.shape
            and self._e == other._e
        )

    def __hash__(self):
        return hash(self._e)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self._e]})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if self.shape != other.shape:
            raise ParameterError("shape mismatch in addition")
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ParameterError("shape mismatch in subtraction")
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self._e])

    def scale(self, c):
        return ExactMatrix([[a * c for a in r] for r in self._e])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ParameterError("shape mismatch in multiplication")
        bt = list(zip(*other._e))
        return ExactMatrix(
            [[_dot(ra, cb) for cb in bt] for ra in self._e]
        )

    def transpose(self):
        return ExactMatrix(list(zip(*self._e))) if self._e else ExactMatrix([])

    def mul_vector(self, v):
        """self @ column vector v, returned as a tuple."""
        if len(v) != self.cols:
            raise ParameterError("vector length mismatch")
        return tuple(_dot(r, v) for r in self._e)

    def vector_mul(self, v):
        """Row vector v @ self, returned as a tuple."""
        if len(v) != self.rows:
            raise ParameterError("vector length mismatch")
        cols = list(zip(*self._e))
        return tuple(_dot(v, c) for c in cols)


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def _to_integer_rows(m: ExactMatrix):
    """Scale a rational matrix to integer row lists, returning (rows, scale)."""
    d = m.denominator_lcm()
    if d == 1:
        return [list(r) for r in m._e], 1
    return [[int(x * d) for x in r] for r in m._e], d


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms
# ---------------------------------------------------------------------------


def hnf(m: ExactMatrix):
    """Row Hermite normal form of an integer matrix.

    Returns (H, U) with H = U @ m, det(U) = +-1, pivots positive and entries
    above each pivot reduced into [0, pivot).  Zero rows sink to the bottom.
    """
    if not m.is_integer():
        raise ParameterError("hnf requires integer entries")
    a = [list(r) for r in m._e]
    n, w = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pr = 0
    for pc in range(w):
        if pr >= n:
            break
        # gcd-eliminate column pc below row pr
        piv = None
        for i in range(pr, n):
            if a[i][pc] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != pr:
            a[pr], a[piv] = a[piv], a[pr]
            u[pr], u[piv] = u[piv], u[pr]
        for i in range(pr + 1, n):
            while a[i][pc] != 0:
                q = a[pr][pc] // a[i][pc]
                if q:
                    _row_sub(a, u, pr, i, q)
                a[pr], a[i] = a[i], a[pr]
                u[pr], u[i] = u[i], u[pr]
            # pivot is back in row pr once a[i][pc] hits zero
        if a[pr][pc] < 0:
            a[pr] = [-x for x in a[pr]]
            u[pr] = [-x for x in u[pr]]
        for i in range(pr):
            q = a[i][pc] // a[pr][pc]
            if q:
                _row_sub(a, u, i, pr, q)
        pr += 1
    return ExactMatrix(a), ExactMatrix(u)


def _row_sub(a, u, i, j, q):
    """a[i] -= q*a[j] and the same on the transform."""
    ai, aj = a[i], a[j]
    for k in range(len(ai)):
        ai[k] -= q * aj[k]
    ui, uj = u[i], u[j]
    for k in range(len(ui)):
        ui[k] -= q * uj[k]


def snf(m: ExactMatrix) -> ExactMatrix:
    """Smith normal form with divisibility chain d1 | d2 | ... on the diagonal."""
    d, _, _ = snf_with_transforms(m)
    return d


def snf_with_transforms(m: ExactMatrix):
    """Smith normal form D with unimodular U, V such that D = U @ m @ V."""
    if not m.is_integer():
        raise ParameterError("snf requires integer entries")
    a = [list(r) for r in m._e]
    n, w = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(w)] for i in range(w)]

    def col_sub(j, k, q):
        # column j -= q * column k, tracked on v's columns
        for r in a:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    t = 0
    while t < min(n, w):
        # find a nonzero pivot in the trailing block
        piv = None
        for i in range(t, n):
            for j in range(t, w):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        if i != t:
            a[t], a[i] = a[i], a[t]
            u[t], u[i] = u[i], u[t]
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, n):
                while a[i][t] != 0:
                    q = a[t][t] // a[i][t]
                    if q:
                        _row_sub(a, u, t, i, q)
                    a[t], a[i] = a[i], a[t]
                    u[t], u[i] = u[i], u[t]
                    dirty = True
            # clear row t right of the pivot
            for j in range(t + 1, w):
                while a[t][j] != 0:
                    q = a[t][t] // a[t][j]
                    if q:
                        col_sub(t, j, q)
                    col_swap(t, j)
                    dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        # enforce divisibility: a[t][t] must divide the trailing block
        fix = None
        for i in range(t + 1, n):
            for j in range(t + 1, w):
                if a[i][j] % a[t][t] != 0:
                    fix = i
                    break
            if fix:
                break
        if fix is not None:
            _row_sub(a, u, t, fix, -1)  # row t += row fix
            continue
        t += 1
    return ExactMatrix(a), ExactMatrix(u), ExactMatrix(v)


# ---------------------------------------------------------------------------
# Determinant, inverse, kernels
# ---------------------------------------------------------------------------


def det(m: ExactMatrix):
    """Exact determinant of a square matrix (Bareiss on the integer scaling)."""
    if not m.is_square():
        raise ParameterError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a, scale = _to_integer_rows(m)
    d = _bareiss_det(a)
    if scale == 1:
        return d
    return _norm(Fraction(d, scale**n))


def _bareiss_det(a):
    """Fraction-free determinant; mutates the row-list argument."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri = a[i]
            rk = a[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: ExactMatrix):
    """The n leading principal minors of a square matrix, exactly."""
    return [det(ExactMatrix([r[:k] for r in m._e[:k]])) for k in range(1, m.rows + 1)]


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises SingularMatrixError on singular input."""
    if not m.is_square():
        raise ParameterError("inverse of a non-square matrix")
    n = m.rows
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m._e)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv_p = 1 / a[c][c]
        a[c] = [x * inv_p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return ExactMatrix([r[n:] for r in a])


def kernel_mod_p(m: ExactMatrix, p: int):
    """Basis of the left null space of m over F_p (row vectors v with v m = 0 mod p).

    Returns a list of tuples with entries in 0..p-1.
    """
    if p < 2:
        raise ParameterError("p must be a prime >= 2")
    n, w = m.rows, m.cols
    a = [[x % p for x in r] for r in m._e]
    if not m.is_integer():
        raise ParameterError("kernel_mod_p requires integer entries")
    # reduce the transposed system: solve v @ m = 0  <=>  m^T v^T = 0
    at = [[a[i][j] for i in range(n)] for j in range(w)]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, w) if at[i][c] % p != 0), None)
        if piv is None:
            continue
        at[r], at[piv] = at[piv], at[r]
        inv_p = pow(at[r][c], -1, p)
        at[r] = [(x * inv_p) % p for x in at[r]]
        for i in range(w):
            if i != r and at[i][c] % p:
                f = at[i][c] % p
                at[i] = [(x - f * y) % p for x, y in zip(at[i], at[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, rr in pivots.items():
            v[c] = (-at[rr][fc]) % p
        basis.append(tuple(v))
    return basis


def rational_kernel(m: ExactMatrix):
    """Basis of the left rational null space {v : v @ m = 0}, as integer rows.

    Each basis row is primitive (content 1).
    """
    n, w = m.rows, m.cols
    a, _ = _to_integer_rows(m)
    at = [[Fraction(a[i][j]) for i in range(n)] for j in range(w)]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, w) if at[i][c] != 0), None)
        if piv is None:
            continue
        at[r], at[piv] = at[piv], at[r]
        inv_p = 1 / at[r][c]
        at[r] = [x * inv_p for x in at[r]]
        for i in range(w):
            if i != r and at[i][c]:
                f = at[i][c]
                at[i] = [x - f * y for x, y in zip(at[i], at[r])]
        pivots[c] = r
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for c, rr in pivots.items():
            v[c] = -at[rr][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        iv = [int(x * den) for x in v]
        g = 0
        for x in iv:
            g = gcd(g, x)
        if g > 1:
            iv = [x // g for x in iv]
        basis.append(tuple(iv))
    return basis


def saturation(rows: ExactMatrix) -> ExactMatrix:
    """Saturation of the row span: (rowspace tensor Q) intersected with Z^n.

    Input rows may be rational; the result is a full set of integer basis rows
    for the primitive sublattice containing them.
    """
    a, _ = _to_integer_rows(rows)
    m = ExactMatrix(a)
    d, _, v = snf_with_transforms(m)
    r = sum(1 for i in range(min(d.rows, d.cols)) if d.entry(i, i) != 0)
    # D = U m V, so m = U^{-1} D V^{-1} and rowspace_Q(m) is spanned by the
    # first r rows of V^{-1}; those rows are primitive since V is unimodular.
    vinv = inverse(v)
    return ExactMatrix([vinv.row(i) for i in range(r)])


def preimage_lattice(a: ExactMatrix, modulus: int) -> ExactMatrix:
    """Basis of {y in Z^m : y @ a = 0 mod modulus} for integer a.

    Returned as a full-rank m x m integer matrix whose rows generate the
    preimage lattice.
    """
    if not a.is_integer():
        raise ParameterError("preimage_lattice requires integer entries")
    d, u, _ = snf_with_transforms(a)
    m = a.rows
    rows = []
    for i in range(m):
        di = d.entry(i, i) if i < min(d.rows, d.cols) else 0
        g = gcd(di, modulus)
        c = modulus // g if g else 1
        rows.append([c * x for x in u.row(i)])
    h, _ = hnf(ExactMatrix(rows))
    return h

"""Exact arithmetic over small finite fields GF(p^e) and matrices over them.

Scalars are integer indices.  The base-p digits of the index are the
coefficients of the element over GF(p), constant term first
(index = c_0 + c_1*p + ... + c_{e-1}*p^(e-1)), so index 0 is zero and
index 1 is one.  For prime fields the index is just the residue.

Field arithmetic is table driven: tables are built once per order and
cached, every op after that is a tuple lookup.  The same tables feed the
enumeration kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

MAX_TABLE_ORDER = 1 << 10      # largest q with a table-backed context
MAX_EXTENSION_ORDER = 1 << 20  # largest q**n for enumerable extensions


def gauss_number(q: int, v: int) -> int:
    """Number of points (1-dim subspaces) of GF(q)^v, i.e. (q^v - 1)/(q - 1)."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    if v < 0:
        raise ValueError(f"dimension must be >= 0, got {v}")
    return (q**v - 1) // (q - 1)


def prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime and q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = q
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            p = d
            break
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"not a prime power: {q}")
    return p, e


@dataclass(frozen=True)
class FieldContext:
    """Table-backed GF(q).  Tables are flat tuples, indexed a*q + b."""

    q: int
    p: int
    e: int
    modulus: tuple[int, ...] | None  # GF(p) coeffs, constant first; None for prime q
    add_table: tuple[int, ...] = field(repr=False, compare=False)
    mul_table: tuple[int, ...] = field(repr=False, compare=False)
    neg_table: tuple[int, ...] = field(repr=False, compare=False)
    inv_table: tuple[int, ...] = field(repr=False, compare=False)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a * self.q + b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self.inv_table[a]

    def check_scalar(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise ValueError(f"not a GF({self.q}) scalar index: {a!r}")
        return a


def scalar_digits(ctx: FieldContext, a: int) -> tuple[int, ...]:
    """Base-p digit vector of a scalar index, constant term first, length e."""
    ctx.check_scalar(a)
    out = []
    for _ in range(ctx.e):
        out.append(a % ctx.p)
        a //= ctx.p
    return tuple(out)


def scalar_from_digits(ctx: FieldContext, digits) -> int:
    """Inverse of scalar_digits."""
    if len(digits) != ctx.e:
        raise ValueError(f"expected {ctx.e} digits, got {len(digits)}")
    a = 0
    for d in reversed(digits):
        if not 0 <= d < ctx.p:
            raise ValueError(f"digit out of range for GF({ctx.p}): {d!r}")
        a = a * ctx.p + d
    return a


# ---------------------------------------------------------------------------
# polynomial helpers over a table-backed field (coefficient lists, constant
# term first, normalized to no trailing zeros)

def _poly_trim(cs):
    n = len(cs)
    while n > 0 and cs[n - 1] == 0:
        n -= 1
    return cs[:n]


def _poly_mul(ctx, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return tuple(_poly_trim(out))


def _poly_mod(ctx, a, m):
    """Remainder of a modulo monic m."""
    r = list(a)
    dm = len(m) - 1
    while len(_poly_trim(r)) - 1 >= dm:
        r = list(_poly_trim(r))
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            if mi:
                r[shift + i] = ctx.sub(r[shift + i], ctx.mul(lead, mi))
    return tuple(_poly_trim(r))


def _poly_mulmod(ctx, a, b, m):
    return _poly_mod(ctx, _poly_mul(ctx, a, b), m)


def is_irreducible(ctx: FieldContext, poly: tuple[int, ...]) -> bool:
    """Trial-division irreducibility test for a monic poly over ctx."""
    poly = tuple(_poly_trim(list(poly)))
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if deg == 1:
        return True
    q = ctx.q
    for d in range(1, deg // 2 + 1):
        for idx in range(q**d):
            div = _digits_base(idx, q, d) + (1,)
            if not _poly_mod(ctx, poly, div):
                return False
    return True


def min_irreducible(ctx: FieldContext, degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree, in integer-counter order.

    Candidates x^degree + sum c_i x^i are ordered by the integer whose
    base-q digits are (c_0, ..., c_{degree-1}).  For GF(2), degree 2 this
    yields x^2 + x + 1, i.e. (1, 1, 1).
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    q = ctx.q
    for idx in range(q**degree):
        cand = _digits_base(idx, q, degree) + (1,)
        if is_irreducible(ctx, cand):
            return cand
    raise ArithmeticError("no irreducible found (impossible)")  # pragma: no cover


def _digits_base(idx, base, length):
    out = []
    for _ in range(length):
        out.append(idx % base)
        idx //= base
    return tuple(out)


# ---------------------------------------------------------------------------
# field construction

@lru_cache(maxsize=None)
def field_context(q: int) -> FieldContext:
    """Build (and cache) the table-backed context for GF(q)."""
    p, e = prime_power(q)
    if q > MAX_TABLE_ORDER:
        raise ValueError(f"field order {q} above table cap {MAX_TABLE_ORDER}")
    if e == 1:
        add = tuple((a + b) % p for a in range(p) for b in range(p))
        mul = tuple((a * b) % p for a in range(p) for b in range(p))
        neg = tuple((-a) % p for a in range(p))
        inv = (0,) + tuple(pow(a, p - 2, p) for a in range(1, p))
        return FieldContext(q, p, 1, None, add, mul, neg, inv)

    ctxp = field_context(p)
    modulus = min_irreducible(ctxp, e)
    vec = [_digits_base(a, p, e) for a in range(q)]
    idx_of = {v: a for a, v in enumerate(vec)}

    def as_idx(poly):
        return idx_of[tuple(poly) + (0,) * (e - len(poly))]

    add = tuple(
        idx_of[tuple((x + y) % p for x, y in zip(vec[a], vec[b]))]
        for a in range(q)
        for b in range(q)
    )
    neg = tuple(idx_of[tuple((-x) % p for x in vec[a])] for a in range(q))

    # multiplicative tables via a generator of the cyclic group
    exp = None
    for g in range(2, q):
        seen = [_poly_trim(list(vec[g]))]
        while True:
            nxt = _poly_mulmod(ctxp, seen[-1], seen[0], modulus)
            if nxt == (1,):
                break
            seen.append(nxt)
        if len(seen) == q - 2:
            # seen = [g^1, ..., g^(q-2)]; prepend g^0
            exp = [(1,)] + seen
            break
    if exp is None:  # pragma: no cover
        raise ArithmeticError("no generator found (impossible for a field)")
    log = {as_idx(v): j for j, v in enumerate(exp[: q - 1])}

    mul = [0] * (q * q)
    for a in range(1, q):
        la = log[a]
        row = a * q
        for b in range(1, q):
            mul[row + b] = as_idx(exp[(la + log[b]) % (q - 1)])
    inv = [0] * q
    for a in range(1, q):
        inv[a] = as_idx(exp[(q - 1 - log[a]) % (q - 1)])
    return FieldContext(q, p, e, modulus, add, tuple(mul), neg, tuple(inv))


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class GFMatrix:
    """Immutable matrix of scalar indices over a fixed field."""

    ctx: FieldContext
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must have at least one row and column")
        nc = len(self.rows[0])
        for r in self.rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            for x in r:
                self.ctx.check_scalar(x)

    @classmethod
    def from_rows(cls, ctx, rows) -> "GFMatrix":
        return cls(ctx, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, ctx, n: int) -> "GFMatrix":
        return cls(ctx, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def add(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other, same_shape=True)
        f = self.ctx
        return GFMatrix(
            f,
            tuple(
                tuple(f.add(x, y) for x, y in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            ),
        )

    def sub(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other, same_shape=True)
        f = self.ctx
        return GFMatrix(
            f,
            tuple(
                tuple(f.sub(x, y) for x, y in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            ),
        )

    def mul(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other)
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions do not match")
        f = self.ctx
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            orow = []
            for c in cols:
                acc = 0
                for x, y in zip(r, c):
                    if x and y:
                        acc = f.add(acc, f.mul(x, y))
                orow.append(acc)
            out.append(tuple(orow))
        return GFMatrix(f, tuple(out))

    def stack(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other)
        if self.ncols != other.ncols:
            raise ValueError("column counts do not match")
        return GFMatrix(self.ctx, self.rows + other.rows)

    def hstack(self, other: "GFMatrix") -> "GFMatrix":
        self._compat(other)
        if self.nrows != other.nrows:
            raise ValueError("row counts do not match")
        return GFMatrix(self.ctx, tuple(r + s for r, s in zip(self.rows, other.rows)))

    def rank(self) -> int:
        return self.rref()[1]

    def rref(self) -> tuple["GFMatrix", int]:
        """Reduced row echelon form and rank.

        Pivots are normalized to 1 and cleared above and below; zero rows
        sink to the bottom so the first `rank` rows are the canonical
        generating set of the row space.
        """
        f = self.ctx
        m = [list(r) for r in self.rows]
        nr, nc = len(m), len(m[0])
        piv = 0
        for col in range(nc):
            sel = None
            for r in range(piv, nr):
                if m[r][col]:
                    sel = r
                    break
            if sel is None:
                continue
            m[piv], m[sel] = m[sel], m[piv]
            lead = m[piv][col]
            if lead != 1:
                li = f.inv(lead)
                m[piv] = [f.mul(li, x) for x in m[piv]]
            for r in range(nr):
                if r != piv and m[r][col]:
                    c = m[r][col]
                    prow = m[piv]
                    m[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r], prow)]
            piv += 1
            if piv == nr:
                break
        return GFMatrix(f, tuple(tuple(r) for r in m)), piv

    def _compat(self, other, same_shape=False):
        if self.ctx.q != other.ctx.q:
            raise ValueError("mixed fields")
        if same_shape and (self.nrows != other.nrows or self.ncols != other.ncols):
            raise ValueError("shapes do not match")


def rref(m: GFMatrix) -> tuple[GFMatrix, int]:
    return m.rref()


# ---------------------------------------------------------------------------
# extensions GF(q^n) as vector spaces over GF(q)

@dataclass(frozen=True)
class ExtensionRep:
    """GF(q^n) modeled as GF(q)[x] mod the minimal irreducible of degree n.

    Elements are coefficient tuples over the base field, constant term
    first, length n.  element index = sum c_i * q^i.
    """

    base: FieldContext
    degree: int
    modulus: tuple[int, ...]  # length degree+1, monic, constant first

    @property
    def order(self) -> int:
        return self.base.q**self.degree

    def element(self, idx: int) -> tuple[int, ...]:
        if not 0 <= idx < self.order:
            raise ValueError(f"element index out of range: {idx}")
        return _digits_base(idx, self.base.q, self.degree)

    def index(self, vec) -> int:
        if len(vec) != self.degree:
            raise ValueError("wrong coefficient count")
        a = 0
        for c in reversed(tuple(vec)):
            self.base.check_scalar(c)
            a = a * self.base.q + c
        return a

    def elements(self):
        for idx in range(self.order):
            yield self.element(idx)

    def mul(self, a, b) -> tuple[int, ...]:
        r = _poly_mulmod(self.base, _poly_trim(list(a)), _poly_trim(list(b)), self.modulus)
        return tuple(r) + (0,) * (self.degree - len(r))

    def add(self, a, b) -> tuple[int, ...]:
        f = self.base
        return tuple(f.add(x, y) for x, y in zip(a, b))


@lru_cache(maxsize=None)
def extension_rep(q: int, n: int) -> ExtensionRep:
    """Build (and cache) the degree-n extension of GF(q)."""
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    ctx = field_context(q)
    if q**n > MAX_EXTENSION_ORDER:
        raise ValueError(f"extension order {q}^{n} above cap {MAX_EXTENSION_ORDER}")
    return ExtensionRep(ctx, n, min_irreducible(ctx, n))


def mult_matrix(ext: ExtensionRep, alpha) -> GFMatrix:
    """Matrix of y -> alpha*y on GF(q^n) as GF(q)^n, row-vector convention.

    Row i holds the coordinates of x^i * alpha, so for a row vector y the
    product y @ M is the coordinate vector of y*alpha.  The map
    alpha -> M(alpha) is a ring embedding: M(a*b) = M(a) @ M(b).
    """
    if isinstance(alpha, int):
        alpha = ext.element(alpha)
    n = ext.degree
    cur = _poly_trim(list(alpha))
    rows = []
    for _ in range(n):
        rows.append(tuple(cur) + (0,) * (n - len(cur)))
        # multiply by x and reduce
        cur = _poly_mod(ext.base, (0,) + tuple(cur), ext.modulus)
        cur = list(cur)
    return GFMatrix(ext.base, tuple(rows))

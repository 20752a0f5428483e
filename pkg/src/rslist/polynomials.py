"""Univariate and bivariate polynomial arithmetic over GF(2^m).

Polynomials are immutable after construction. UniPoly stores a dense,
canonical (no trailing zero) coefficient array; the zero polynomial is the
empty array with degree -inf. BiPoly is Y-major: a tuple of UniPoly, entry j
being the coefficient of Y^j, with a nonzero top coefficient.

All coefficient arithmetic routes through the owning Field's counted kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .galois import Field

NEG_INF = float("-inf")


class ZeroPolynomial(ValueError):
    """Operation undefined for the zero polynomial."""


class InexactDivision(ValueError):
    """Division expected to be exact left a nonzero remainder."""


class DuplicateAbscissa(ValueError):
    """Interpolation points share an X-coordinate."""


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted-degree order on monomials X^a Y^b; ties go to the lower Y-degree.

    weight_y may be negative, in which case this is a total order but not a
    well-order; Koetter's update only ever compares existing leading terms,
    so the missing least element is harmless.
    """

    weight_x: int
    weight_y: int

    def key(self, a: int, b: int) -> tuple[int, int]:
        return (a * self.weight_x + b * self.weight_y, b)

    def less(self, mono1: tuple[int, int], mono2: tuple[int, int]) -> bool:
        return self.key(*mono1) < self.key(*mono2)

    @classmethod
    def weighted(cls, k: int) -> "MonomialOrder":
        return cls(1, k - 1)


ORDER_REDUCED = MonomialOrder(1, -1)


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs) -> None:
        arr = np.asarray(coeffs, dtype=np.int32)
        n = arr.size
        while n > 0 and arr[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = np.ascontiguousarray(arr[:n])
        self.coeffs.setflags(write=False)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "UniPoly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "UniPoly":
        return cls(field, [1])

    @classmethod
    def constant(cls, field: Field, c: int) -> "UniPoly":
        return cls(field, [c])

    @classmethod
    def x_plus(cls, field: Field, c: int) -> "UniPoly":
        """X + c (equal to X - c in characteristic 2)."""
        return cls(field, [c, 1])

    @classmethod
    def monomial(cls, field: Field, deg: int, coef: int = 1) -> "UniPoly":
        arr = np.zeros(deg + 1, dtype=np.int32)
        arr[deg] = coef
        return cls(field, arr)

    # -- basics ----------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def degree(self):
        return self.coeffs.size - 1 if self.coeffs.size else NEG_INF

    def coef(self, i: int) -> int:
        return int(self.coeffs[i]) if 0 <= i < self.coeffs.size else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.field == other.field
            and self.coeffs.size == other.coeffs.size
            and bool(np.all(self.coeffs == other.coeffs))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs.tobytes()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if a.size < b.size:
            a, b = b, a
        out = a.copy()
        out[: b.size] ^= b
        self.field.counter.additions += b.size
        return UniPoly(self.field, out)

    __sub__ = __add__  # characteristic 2

    def scale(self, s: int) -> "UniPoly":
        return UniPoly(self.field, self.field.vscale(self.coeffs, s))

    def mul(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.field)
        a, b = self.coeffs, other.coeffs
        if a.size < b.size:
            a, b = b, a
        out = np.zeros(a.size + b.size - 1, dtype=np.int32)
        f = self.field
        for i in range(b.size):
            out[i : i + a.size] ^= f.vscale(a, int(b[i]))
        return UniPoly(f, out)

    __mul__ = mul

    def mul_linear(self, c: int) -> "UniPoly":
        """Multiply by (X + c)."""
        if self.is_zero:
            return self
        out = np.zeros(self.coeffs.size + 1, dtype=np.int32)
        out[1:] = self.coeffs
        out[:-1] ^= self.field.vscale(self.coeffs, c)
        return UniPoly(self.field, out)

    def shift_up(self, s: int) -> "UniPoly":
        """Multiply by X^s."""
        if self.is_zero or s == 0:
            return self
        out = np.zeros(self.coeffs.size + s, dtype=np.int32)
        out[s:] = self.coeffs
        return UniPoly(self.field, out)

    def pow_int(self, e: int) -> "UniPoly":
        out = UniPoly.one(self.field)
        for _ in range(e):
            out = out.mul(self)
        return out

    def eval_at(self, x: int) -> int:
        if self.is_zero:
            return 0
        f = self.field
        acc = int(self.coeffs[-1])
        for i in range(self.coeffs.size - 2, -1, -1):
            acc = f.mul(acc, x) ^ int(self.coeffs[i])
        return acc

    def eval_many(self, xs: np.ndarray) -> np.ndarray:
        """Horner evaluation at a vector of points."""
        xs = np.asarray(xs, dtype=np.int32)
        if self.is_zero:
            return np.zeros_like(xs)
        f = self.field
        acc = np.full_like(xs, int(self.coeffs[-1]))
        for i in range(self.coeffs.size - 2, -1, -1):
            acc = f.vmul(acc, xs) ^ int(self.coeffs[i])
        return acc

    def hasse_eval(self, a: int, x: int, xpowers: np.ndarray | None = None) -> int:
        """Evaluate the a-th Hasse derivative at x.

        Equals sum over i >= a with odd C(i, a) of c_i x^(i-a); the parity is
        Lucas' theorem, so a term exists exactly when a's bits are a subset
        of i's bits.
        """
        deg = self.coeffs.size - 1
        if deg < a:
            return 0
        idx = np.arange(a, deg + 1, dtype=np.int64)
        sel = idx[(idx & a) == a]
        if xpowers is None:
            xpowers = self.field.vpowers(x, deg - a)
        prod = self.field.vmul(self.coeffs[sel], xpowers[sel - a])
        self.field.counter.additions += max(prod.size - 1, 0)
        return int(np.bitwise_xor.reduce(prod)) if prod.size else 0

    def formal_derivative(self) -> "UniPoly":
        """First-order Hasse derivative; in characteristic 2 this keeps c_{i+1} for even i."""
        if self.coeffs.size <= 1:
            return UniPoly.zero(self.field)
        out = self.coeffs[1:].copy()
        out[1::2] = 0
        return UniPoly(self.field, out)

    def taylor_shift(self, x: int) -> "UniPoly":
        """p(X + x), computed by Horner accumulation in (X + x)."""
        if self.is_zero or x == 0:
            return self
        acc = UniPoly.zero(self.field)
        for i in range(self.coeffs.size - 1, -1, -1):
            acc = acc.mul_linear(x) + UniPoly.constant(self.field, int(self.coeffs[i]))
        return acc

    def divmod(self, d: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        if self.coeffs.size < d.coeffs.size:
            return UniPoly.zero(f), self
        rem = self.coeffs.copy()
        dlead_inv = f.inv(int(d.coeffs[-1]))
        dn = d.coeffs.size
        quo = np.zeros(rem.size - dn + 1, dtype=np.int32)
        for i in range(rem.size - dn, -1, -1):
            c = f.mul(int(rem[i + dn - 1]), dlead_inv)
            quo[i] = c
            if c:
                rem[i : i + dn] ^= f.vscale(d.coeffs, c)
            else:
                f.counter.multiplications += dn
        return UniPoly(f, quo), UniPoly(f, rem)

    def exact_div(self, d: "UniPoly") -> "UniPoly":
        quo, rem = self.divmod(d)
        if not rem.is_zero:
            raise InexactDivision(f"remainder {rem.to_text()} dividing by {d.to_text()}")
        return quo

    # -- display / serialization ---------------------------------------------

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.coeffs.size):
            v = int(self.coeffs[i])
            if v == 0:
                continue
            ve = self.field.format_element(v)
            if i == 0:
                parts.append(ve)
            else:
                xs = "X" if i == 1 else f"X^{i}"
                parts.append(xs if v == 1 else f"{ve}*{xs}")
        return " + ".join(parts)

    def to_json(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field: Field, obj) -> "UniPoly":
        return cls(field, [field.parse_element(c) for c in obj])

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()})"


class BiPoly:
    __slots__ = ("field", "ycoeffs")

    def __init__(self, field: Field, ycoeffs) -> None:
        cs = list(ycoeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.field = field
        self.ycoeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "BiPoly":
        return cls(field, [])

    @classmethod
    def from_arrays(cls, field: Field, rows) -> "BiPoly":
        return cls(field, [UniPoly(field, r) for r in rows])

    @classmethod
    def y_power(cls, field: Field, j: int) -> "BiPoly":
        rows = [UniPoly.zero(field)] * j + [UniPoly.one(field)]
        return cls(field, rows)

    # -- basics --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.ycoeffs

    @property
    def y_degree(self):
        return len(self.ycoeffs) - 1 if self.ycoeffs else NEG_INF

    def ycoef(self, j: int) -> UniPoly:
        return self.ycoeffs[j] if 0 <= j < len(self.ycoeffs) else UniPoly.zero(self.field)

    def coef(self, i: int, j: int) -> int:
        return self.ycoef(j).coef(i)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiPoly)
            and self.field == other.field
            and self.ycoeffs == other.ycoeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ycoeffs))

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.ycoeffs), len(other.ycoeffs))
        return BiPoly(self.field, [self.ycoef(j) + other.ycoef(j) for j in range(n)])

    __sub__ = __add__

    def scale(self, s: int) -> "BiPoly":
        return BiPoly(self.field, [c.scale(s) for c in self.ycoeffs])

    def scale_poly(self, p: UniPoly) -> "BiPoly":
        return BiPoly(self.field, [c.mul(p) for c in self.ycoeffs])

    def mul_linear_x(self, c: int) -> "BiPoly":
        """Multiply by (X + c)."""
        return BiPoly(self.field, [u.mul_linear(c) for u in self.ycoeffs])

    def shift_y(self) -> "BiPoly":
        """Multiply by Y."""
        if self.is_zero:
            return self
        return BiPoly(self.field, (UniPoly.zero(self.field),) + self.ycoeffs)

    # -- degrees and orders -------------------------------------------------

    def wdeg(self, wx: int, wy: int):
        """(wx, wy)-weighted degree; -inf for the zero polynomial."""
        best = NEG_INF
        for j, c in enumerate(self.ycoeffs):
            if c.is_zero:
                continue
            nz = np.nonzero(c.coeffs)[0]
            w = int((nz * wx + j * wy).max())
            if best == NEG_INF or w > best:
                best = w
        return best

    def leading_monomial(self, order: MonomialOrder) -> tuple[int, int, int]:
        """The order-greatest monomial (a, b, coefficient); raises on zero."""
        if self.is_zero:
            raise ZeroPolynomial("leading monomial of 0")
        best = None
        for j, c in enumerate(self.ycoeffs):
            if c.is_zero:
                continue
            nz = np.nonzero(c.coeffs)[0]
            keys = nz * order.weight_x + j * order.weight_y
            i = int(nz[int(np.argmax(keys))])
            cand = (int(keys.max()), j, i)
            if best is None or cand[:2] > best[:2]:
                best = cand
        w, j, i = best
        return (i, j, int(self.ycoeffs[j].coeffs[i]))

    # -- shifts, substitutions, multiplicities --------------------------------

    def taylor_shift(self, x: int, y: int) -> "BiPoly":
        """p(X + x, Y + y); entry (i, j) is the mixed Hasse-derivative value."""
        shifted = [c.taylor_shift(x) for c in self.ycoeffs]
        if y == 0:
            return BiPoly(self.field, shifted)
        acc = BiPoly.zero(self.field)
        for j in range(len(shifted) - 1, -1, -1):
            # acc*(Y + y) + c_j
            acc = acc.shift_y() + acc.scale(y) + BiPoly(self.field, [shifted[j]])
        return acc

    def multiplicity_at(self, x: int, y: int) -> int:
        """Largest m with all shifted coefficients of total degree < m zero."""
        if self.is_zero:
            raise ZeroPolynomial("multiplicity of 0 is undefined")
        t = self.taylor_shift(x, y)
        max_i = max((c.coeffs.size for c in t.ycoeffs), default=0)
        for m in range(0, max_i + len(t.ycoeffs) + 1):
            for j in range(min(m, len(t.ycoeffs) - 1), -1, -1):
                if t.ycoef(j).coef(m - j):
                    return m
        return max_i + len(t.ycoeffs) + 1  # unreachable for nonzero p

    def shifted_coef(
        self,
        x: int,
        y: int,
        a: int,
        b: int,
        xpowers: np.ndarray | None = None,
        ypowers: np.ndarray | None = None,
    ) -> int:
        """coef(p(X+x, Y+y); X^a Y^b) without materializing the full shift.

        Term-by-term accumulation of c_{i,j} x^(i-a) y^(j-b) over the slots
        whose binomial coefficients are odd; two multiplications per term.
        """
        f = self.field
        ydeg = len(self.ycoeffs) - 1
        if ydeg < b:
            return 0
        if ypowers is None:
            ypowers = f.vpowers(y, ydeg - b)
        if xpowers is None:
            maxdeg = max((c.coeffs.size - 1 for c in self.ycoeffs if not c.is_zero), default=0)
            xpowers = f.vpowers(x, max(maxdeg - a, 0))
        total = 0
        for j in range(b, ydeg + 1):
            if (j & b) != b:
                continue
            c = self.ycoeffs[j]
            deg = c.coeffs.size - 1
            if c.is_zero or deg < a:
                continue
            idx = np.arange(a, deg + 1, dtype=np.int64)
            sel = idx[(idx & a) == a]
            prod = f.vmul(c.coeffs[sel], xpowers[sel - a])
            terms = f.vscale(prod, int(ypowers[j - b]))
            f.counter.additions += max(terms.size - 1, 0)
            total ^= int(np.bitwise_xor.reduce(terms)) if terms.size else 0
        return total

    def sub_y_shift(self, e: UniPoly) -> "BiPoly":
        """p(X, Y + e(X)); self-inverse in characteristic 2."""
        if self.is_zero or e.is_zero:
            return self
        acc = BiPoly.zero(self.field)
        for j in range(len(self.ycoeffs) - 1, -1, -1):
            acc = acc.shift_y() + acc.scale_poly(e) + BiPoly(self.field, [self.ycoeffs[j]])
        return acc

    def sub_y_scale(self, g: UniPoly) -> "BiPoly":
        """p(X, Y*g(X)), the polynomial half of the birational coordinate map."""
        gj = UniPoly.one(self.field)
        rows = []
        for j, c in enumerate(self.ycoeffs):
            if j > 0:
                gj = gj.mul(g)
            rows.append(c.mul(gj))
        return BiPoly(self.field, rows)

    def y_eval(self, fpoly: UniPoly) -> UniPoly:
        """p(X, f(X)) by Horner in Y."""
        acc = UniPoly.zero(self.field)
        for j in range(len(self.ycoeffs) - 1, -1, -1):
            acc = acc.mul(fpoly) + self.ycoeffs[j]
        return acc

    # -- display / serialization -----------------------------------------------

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for j in range(len(self.ycoeffs) - 1, -1, -1):
            c = self.ycoeffs[j]
            if c.is_zero:
                continue
            ct = c.to_text()
            multi = np.count_nonzero(c.coeffs) > 1
            if j == 0:
                parts.append(f"({ct})" if multi else ct)
                continue
            ys = "Y" if j == 1 else f"Y^{j}"
            if multi:
                parts.append(f"({ct})*{ys}")
            elif ct == "1":
                parts.append(ys)
            else:
                parts.append(f"{ct}*{ys}")
        return " + ".join(parts)

    def to_json(self) -> list[list[int]]:
        return [c.to_json() for c in self.ycoeffs]

    @classmethod
    def from_json(cls, field: Field, obj) -> "BiPoly":
        return cls(field, [UniPoly.from_json(field, row) for row in obj])

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()})"


def lagrange_interpolate(field: Field, points) -> UniPoly:
    """The unique polynomial of degree < len(points) through the given points."""
    pts = list(points)
    if not pts:
        raise ValueError("need at least one point")
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("x-coordinates must be distinct")
    master = UniPoly.one(field)
    for x in xs:
        master = master.mul_linear(x)
    acc = UniPoly.zero(field)
    for x, y in pts:
        if y == 0:
            continue
        num = master.exact_div(UniPoly.x_plus(field, x))
        denom = num.eval_at(x)
        acc = acc + num.scale(field.div(y, denom))
    return acc


def reconstruct(h: BiPoly, psi: UniPoly, g: UniPoly, e: UniPoly) -> BiPoly:
    """psi(X) * h(X, (Y - e(X)) / g(X)) as a polynomial.

    Each Y^j coefficient of psi*h_j/g^j must divide exactly; InexactDivision
    signals that h violates the required tail-divisibility structure.
    """
    if h.is_zero:
        return h
    field = h.field
    rows = []
    gj = UniPoly.one(field)
    for j, c in enumerate(h.ycoeffs):
        if j > 0:
            gj = gj.mul(g)
        rows.append(psi.mul(c).exact_div(gj) if not c.is_zero else UniPoly.zero(field))
    qprime = BiPoly(field, rows)
    return qprime.sub_y_shift(e)

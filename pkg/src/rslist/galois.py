"""Arithmetic in GF(2^m) with log/antilog tables and per-context operation counters."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

MIN_EXTENSION = 2
MAX_EXTENSION = 16


class NonPrimitivePolynomial(ValueError):
    """The defining polynomial does not generate the full multiplicative group."""


class DegreeMismatch(ValueError):
    """The defining polynomial has the wrong degree or a zero constant term."""


class DivisionByZero(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


@dataclass
class OpCounter:
    """Running totals of field operations; monotone between explicit resets."""

    multiplications: int = 0
    additions: int = 0

    def reset(self) -> None:
        self.multiplications = 0
        self.additions = 0

    def snapshot(self) -> dict[str, int]:
        return {"multiplications": self.multiplications, "additions": self.additions}


class Field:
    """GF(2^m) for 2 <= m <= 16, defined by a primitive polynomial.

    Elements are ints in [0, 2^m); bit i of the value is the coefficient of
    alpha^i in the polynomial basis. Multiplication goes through log/antilog
    tables. Counting convention: every scalar product counts one
    multiplication (including products by 0 or 1), and vector kernels count
    one multiplication per slot, as a dense software loop would. Inverse
    lookups are free; div and pow count one multiplication each.

    The tables are immutable after construction. `counter` is the mutable
    per-context tally; independent decoding contexts should either construct
    their own Field or scope a counter with `count_into`.
    """

    def __init__(self, m: int, prim_poly: int) -> None:
        if not MIN_EXTENSION <= m <= MAX_EXTENSION:
            raise DegreeMismatch(f"extension degree m={m} outside [{MIN_EXTENSION}, {MAX_EXTENSION}]")
        if prim_poly.bit_length() != m + 1:
            raise DegreeMismatch(f"defining polynomial must have degree exactly {m}")
        if not prim_poly & 1:
            raise DegreeMismatch("defining polynomial must have a nonzero constant term")
        self.m = m
        self.prim_poly = prim_poly
        self.q = 1 << m
        self.counter = OpCounter()

        q = self.q
        exp = np.zeros(2 * (q - 1), dtype=np.int32)
        log = np.zeros(q, dtype=np.int32)
        v = 1
        for i in range(q - 1):
            if v == 1 and i > 0:
                raise NonPrimitivePolynomial(f"alpha has order {i}, expected {q - 1}")
            exp[i] = v
            log[v] = i
            v <<= 1
            if v & q:
                v ^= prim_poly
        if v != 1:
            raise NonPrimitivePolynomial("alpha does not have order q-1")
        exp[q - 1 :] = exp[: q - 1]
        self.exp = exp
        self.log = log
        self.exp.setflags(write=False)
        self.log.setflags(write=False)

    # -- scalar arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        self.counter.multiplications += 1
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def add(self, a: int, b: int) -> int:
        self.counter.additions += 1
        return a ^ b

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return int(self.exp[self.q - 1 - self.log[a]])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self.counter.multiplications += 1
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def from_exponent(self, i: int) -> int:
        return int(self.exp[i % (self.q - 1)])

    def all_elements(self) -> list[int]:
        """0, 1, alpha, alpha^2, ..., alpha^(q-2)."""
        return [0] + [int(self.exp[i]) for i in range(self.q - 1)]

    # -- vector kernels (dense counting) -----------------------------------

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.counter.multiplications += a.size
        out = np.zeros_like(a)
        nz = (a != 0) & (b != 0)
        if nz.any():
            out[nz] = self.exp[self.log[a[nz]] + self.log[b[nz]]]
        return out

    def vscale(self, arr: np.ndarray, s: int) -> np.ndarray:
        self.counter.multiplications += arr.size
        if s == 0 or arr.size == 0:
            return np.zeros_like(arr)
        out = np.zeros_like(arr)
        nz = arr != 0
        if nz.any():
            out[nz] = self.exp[self.log[arr[nz]] + self.log[s]]
        return out

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.counter.additions += min(a.size, b.size)
        return a ^ b

    def vpowers(self, x: int, n: int) -> np.ndarray:
        """x^0 .. x^n as an array; counts n multiplications."""
        self.counter.multiplications += n
        out = np.zeros(n + 1, dtype=np.int32)
        out[0] = 1
        if x != 0 and n > 0:
            lx = int(self.log[x])
            out[1:] = self.exp[(lx * np.arange(1, n + 1, dtype=np.int64)) % (self.q - 1)]
        return out

    # -- display and serialization ------------------------------------------

    def format_element(self, v: int, exp_form: bool = True) -> str:
        if not exp_form:
            return str(v)
        if v == 0:
            return "0"
        e = int(self.log[v])
        if e == 0:
            return "1"
        if e == 1:
            return "a"
        return f"a^{e}"

    def parse_element(self, s) -> int:
        if isinstance(s, int):
            v = s
        else:
            s = s.strip()
            if s == "0":
                return 0
            if s in ("1", "a^0"):
                return 1
            if s == "a":
                return self.from_exponent(1)
            if s.startswith("a^"):
                return self.from_exponent(int(s[2:]))
            v = int(s)
        if not 0 <= v < self.q:
            raise ValueError(f"element {v} outside GF(2^{self.m})")
        return v

    def to_json(self) -> dict:
        return {"m": self.m, "prim_poly": self.prim_poly}

    @classmethod
    def from_json(cls, obj: dict) -> "Field":
        return cls(int(obj["m"]), int(obj["prim_poly"]))

    @contextmanager
    def count_into(self, counter: OpCounter):
        """Route this field's operation counts into `counter` for the block."""
        prev = self.counter
        self.counter = counter
        try:
            yield counter
        finally:
            self.counter = prev

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.m == other.m and self.prim_poly == other.prim_poly

    def __hash__(self) -> int:
        return hash((self.m, self.prim_poly))

    def __repr__(self) -> str:
        return f"Field(m={self.m}, prim_poly=0x{self.prim_poly:x})"


def field_new(m: int, prim_poly: int) -> Field:
    """Construct GF(2^m); rejects non-primitive or wrong-degree polynomials."""
    return Field(m, prim_poly)


# Handy defining polynomials for the fields used throughout the tests.
GF8_POLY = 0b1011          # X^3 + X + 1
GF16_POLY = 0b10011        # X^4 + X + 1
GF256_POLY = 0b100011101   # X^8 + X^4 + X^3 + X^2 + 1

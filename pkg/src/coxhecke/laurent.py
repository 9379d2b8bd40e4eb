"""Sparse integer Laurent polynomials in the variable v.

A polynomial is stored as a dict mapping exponent -> nonzero coefficient.
This is the scalar ring of the Hecke algebra; it also serves the quantum
binomial computations, where coefficients are allowed to be arbitrarily
large Python ints.  The 64-bit overflow guard demanded by the Hecke layer
lives in the kernel backends (see _purekernel / _speedups), not here.

>>> p = LaurentPoly.parse("v^2+1")
>>> print(p * p)
v^4+2*v^2+1
>>> print(p.bar())
v^-2+1
"""

from __future__ import annotations

import re


class LaurentPoly:
    """An element of Z[v, v^-1]."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, k in coeffs.items():
                if k:
                    c[e] = k
        self.c = c

    # -- constructors ------------------------------------------------

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        """Wrap a dict that is already free of zero coefficients."""
        p = cls.__new__(cls)
        p.c = c
        return p

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls.term(n, 0)

    @classmethod
    def v_power(cls, exp: int) -> "LaurentPoly":
        return cls._raw({exp: 1})

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self.c)
        for e, k in other.c.items():
            s = c.get(e, 0) + k
            if s:
                c[e] = s
            elif e in c:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -k for e, k in self.c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, k1 in self.c.items():
            for e2, k2 in other.c.items():
                e = e1 + e2
                s = c.get(e, 0) + k1 * k2
                if s:
                    c[e] = s
                elif e in c:
                    del c[e]
        return LaurentPoly._raw(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._raw({e + k: c for e, c in self.c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly._raw({-e: c for e, c in self.c.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when the remainder is nonzero."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("laurent division by zero")
        rem = dict(self.c)
        lead_e = max(other.c)
        lead_c = other.c[lead_e]
        out = {}
        while rem:
            e = max(rem)
            q, r = divmod(rem[e], lead_c)
            if r:
                raise ValueError("inexact laurent division")
            shift = e - lead_e
            out[shift] = q
            for oe, oc in other.c.items():
                t = oe + shift
                s = rem.get(t, 0) - oc * q
                if s:
                    rem[t] = s
                elif t in rem:
                    del rem[t]
        return LaurentPoly._raw(out)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def degree(self):
        return max(self.c) if self.c else None

    def valuation(self):
        return min(self.c) if self.c else None

    def eval_at_one(self) -> int:
        return sum(self.c.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.c.values())

    def min_coeff(self) -> int:
        return min(self.c.values()) if self.c else 0

    def is_bar_symmetric(self) -> bool:
        return all(self.c.get(-e, 0) == c for e, c in self.c.items())

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    # -- text form (the grammar shared with the p-canonical files) ----

    def __str__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            k = self.c[e]
            if e == 0:
                mono = str(abs(k))
            else:
                ve = "v" if e == 1 else f"v^{e}"
                mono = ve if abs(k) == 1 else f"{abs(k)}*{ve}"
            sign = "-" if k < 0 else ("+" if parts else "")
            parts.append(sign + mono)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    _TERM_RE = re.compile(
        r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(?:v(?:\^(-?\d+))?)?"
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the textual grammar: sums of `c*v^k`, e.g. `v^3+v`, `-2`."""
        s = text.replace(" ", "").replace("\t", "")
        if not s:
            raise ValueError("empty polynomial")
        c: dict = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"bad polynomial {text!r} at {s[pos:]!r}")
            sign, num, exp = m.groups()
            has_v = "v" in s[pos : m.end()]
            if num is None and not has_v:
                raise ValueError(f"bad polynomial {text!r} at {s[pos:]!r}")
            k = int(num) if num is not None else 1
            if sign == "-":
                k = -k
            e = 0
            if has_v:
                e = int(exp) if exp is not None else 1
            c[e] = c.get(e, 0) + k
            pos = m.end()
        return cls({e: k for e, k in c.items() if k})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})
VINV = LaurentPoly._raw({-1: 1})


def quantum_int(n: int) -> LaurentPoly:
    """[n]_v = v^{n-1} + v^{n-3} + ... + v^{1-n} (so [0]=0, [1]=1, [2]=v+v^-1)."""
    if n < 0:
        return -quantum_int(-n)
    return LaurentPoly._raw({n - 1 - 2 * i: 1 for i in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    p = ONE
    for k in range(2, n + 1):
        p = p * quantum_int(k)
    return p

"""Exact univariate arithmetic in q.

An IntPoly is a Laurent polynomial in q with arbitrary-precision integer
coefficients, stored sparsely as {exponent: coefficient}.  No zero
coefficient is ever stored and the zero polynomial is the empty map, so
equality is plain structural comparison.

QRat is the fraction field.  Every QRat is kept in a canonical form:

  * the denominator is nonzero, has lowest exponent 0 (any q-power shift
    lives in the numerator, which may be Laurent) and positive leading
    coefficient;
  * numerator and denominator share no polynomial factor over the
    rationals and no integer content.

With that convention equality of fractions is again structural.
"""

from __future__ import annotations

from fractions import Fraction


class NonExactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class IntPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs:
            self._c = {e: c for e, c in coeffs.items() if c}
        else:
            self._c = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> "IntPoly":
        return cls({e: c})

    # -- inspection --------------------------------------------------------

    def items(self):
        """Term list as (exponent, coefficient) pairs, ascending exponent."""
        return sorted(self._c.items())

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        return max(self._c)

    def valuation(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        return min(self._c)

    def leading(self) -> int:
        return self._c[max(self._c)]

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._c.values():
            g = _gcd_int(g, c)
        return g

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"IntPoly({self})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = IntPoly.__new__(IntPoly)
        r._c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = IntPoly.__new__(IntPoly)
        r._c = {e: -c for e, c in self._c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            r = IntPoly.__new__(IntPoly)
            r._c = {e: c * other for e, c in self._c.items()}
            return r
        out: dict[int, int] = {}
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        r = IntPoly.__new__(IntPoly)
        r._c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of an IntPoly")
        result = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by q**k."""
        r = IntPoly.__new__(IntPoly)
        r._c = {e + k: c for e, c in self._c.items()}
        return r

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact division; raises NonExactDivision on any remainder."""
        if other.is_zero:
            raise ZeroDivisionError("IntPoly division by zero")
        if self.is_zero:
            return IntPoly()
        # Shift both to ordinary polynomials; the quotient keeps the offset.
        sv, ov = self.valuation(), other.valuation()
        num = _to_dense(self.shifted(-sv))
        den = _to_dense(other.shifted(-ov))
        quo, rem = _dense_divmod(num, den)
        if any(rem):
            raise NonExactDivision(f"({self}) / ({other}) leaves a remainder")
        out = {}
        for e, c in enumerate(quo):
            if c:
                if c.denominator != 1:
                    raise NonExactDivision(
                        f"({self}) / ({other}) has non-integer coefficients")
                out[e + sv - ov] = c.numerator
        r = IntPoly.__new__(IntPoly)
        r._c = out
        return r

    def subst_qpower(self, k: int) -> "IntPoly":
        """Substitute q -> q**k (k may be negative)."""
        r = IntPoly.__new__(IntPoly)
        r._c = {e * k: c for e, c in self._c.items()}
        if k == 0:
            return IntPoly.const(sum(self._c.values()))
        return r

    # -- text form ---------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse the rendering produced by str(); inverse of __str__."""
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[int, int] = {}
        for sign, body in _signed_terms(text):
            if "*" in body:
                mag_s, var = body.split("*")
                mag = int(mag_s)
            elif body.startswith("q"):
                mag, var = 1, body
            else:
                mag, var = int(body), ""
            if var == "":
                e = 0
            elif var == "q":
                e = 1
            elif var.startswith("q^"):
                e = int(var[2:])
            else:
                raise ValueError(f"bad term {body!r}")
            out[e] = out.get(e, 0) + sign * mag
        return cls(out)


def _signed_terms(text):
    toks = text.split()
    sign = 1
    if toks and toks[0].startswith("-"):
        toks[0] = toks[0][1:]
    i = 0
    first = True
    while i < len(toks):
        if first:
            sign = -1 if text.lstrip().startswith("-") else 1
            body = toks[i]
            i += 1
            first = False
        else:
            op, body = toks[i], toks[i + 1]
            sign = 1 if op == "+" else -1
            if op not in "+-":
                raise ValueError(f"bad separator {op!r}")
            i += 2
        yield sign, body


ZERO = IntPoly()
ONE = IntPoly.const(1)
Q = IntPoly.monomial(1, 1)


# -- dense helpers for division and gcd -------------------------------------

def _to_dense(p: IntPoly) -> list:
    d = [0] * (p.degree() + 1)
    for e, c in p._c.items():
        d[e] = Fraction(c)
    return d


def _dense_divmod(num, den):
    num = list(num)
    dn = len(den) - 1
    lead = den[dn]
    quo = [Fraction(0)] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        f = num[i] / lead
        if f:
            quo[i - dn] = f
            for j, dc in enumerate(den):
                num[i - dn + j] -= f * dc
    return quo, num


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _pp_dense(u: list[int]) -> list[int]:
    """Primitive part, sign of the leading coefficient preserved."""
    g = 0
    for c in u:
        g = _gcd_int(g, c)
    if g in (0, 1):
        return list(u)
    return [c // g for c in u]


def _pseudo_rem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of u by v over the integers (both dense, v != 0)."""
    u = list(u)
    dv = len(v) - 1
    lv = v[dv]
    while len(u) - 1 >= dv and any(u):
        while u and u[-1] == 0:
            u.pop()
        if len(u) - 1 < dv or not u:
            break
        du = len(u) - 1
        c = u[du]
        u = [x * lv for x in u]
        for j in range(dv + 1):
            u[du - dv + j] -= c * v[j]
        while u and u[-1] == 0:
            u.pop()
    return u


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd in Z[q] (inputs must have nonnegative exponents).

    Primitive-part Euclid with integer-content bookkeeping; the result is
    primitive up to the gcd of the contents and has positive leading
    coefficient.
    """
    if a.is_zero:
        return b if b.is_zero or b.leading() > 0 else -b
    if b.is_zero:
        return a if a.leading() > 0 else -a
    if a.valuation() < 0 or b.valuation() < 0:
        raise ValueError("poly_gcd needs ordinary (non-Laurent) polynomials")
    cont = _gcd_int(a.content(), b.content())
    u = _pp_dense([a.coeff(e) for e in range(a.degree() + 1)])
    v = _pp_dense([b.coeff(e) for e in range(b.degree() + 1)])
    if len(u) < len(v):
        u, v = v, u
    while any(v):
        r = _pseudo_rem(u, v)
        u, v = v, _pp_dense(r)
    if u[-1] < 0:
        u = [-c for c in u]
    g = IntPoly({e: c * cont for e, c in enumerate(u)})
    return g


class QRat:
    """Fraction of IntPoly values, always in the canonical form above."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("QRat with zero denominator")
        if num.is_zero:
            self.num, self.den = ZERO, ONE
            return
        # Shift any q-power of the denominator into the numerator.
        shift = den.valuation()
        if shift:
            num = num.shifted(-shift)
            den = den.shifted(-shift)
        nv = num.valuation()
        body = num.shifted(-nv) if nv else num
        g = poly_gcd(body, den)
        if g != ONE:
            body = body.exact_div(g)
            den = den.exact_div(g)
        c = _gcd_int(body.content(), den.content())
        if c > 1:
            body = IntPoly({e: x // c for e, x in body._c.items()})
            den = IntPoly({e: x // c for e, x in den._c.items()})
        if den.leading() < 0:
            body, den = -body, -den
        self.num = body.shifted(nv) if nv else body
        self.den = den

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "QRat":
        """Internal: wrap already-canonical parts without renormalizing."""
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = QRat(other)
        return QRat(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = QRat(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = QRat(other)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = QRat(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero QRat")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat(other) / self

    def inverse(self) -> "QRat":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero QRat")
        return QRat(self.den, self.num)

    def as_intpoly(self):
        """The numerator if the denominator is 1, else None."""
        if self.den == ONE:
            return self.num
        return None

    def expect_intpoly(self, context: str = "") -> IntPoly:
        """As as_intpoly but a failure is an arithmetic error."""
        p = self.as_intpoly()
        if p is None:
            raise NonExactDivision(
                f"expected a polynomial{' in ' + context if context else ''}:"
                f" ({self.num}) / ({self.den})")
        return p

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"QRat({self})"


def one_minus_q(e: int) -> IntPoly:
    """1 - q^e, which is identically zero when e = 0."""
    if e == 0:
        return ZERO
    return IntPoly({0: 1, e: -1})


def q_power_diff(e1: int, e2: int) -> IntPoly:
    """q^e1 - q^e2 (zero when the exponents coincide)."""
    if e1 == e2:
        return ZERO
    return IntPoly({e1: 1, e2: -1})


# -- q-factorial primitives --------------------------------------------------

def qpoch(m: int, k: int) -> IntPoly:
    """The q-shifted factorial (q^m)_k = prod_{i=0}^{k-1} (1 - q^(m+i))."""
    if k < 0:
        raise ValueError("qpoch needs k >= 0")
    out = ONE
    for i in range(k):
        if m + i == 0:
            return ZERO  # factor 1 - q^0
        out = out * IntPoly({0: 1, m + i: -1})
    return out


def qbinom(n: int, m: int) -> IntPoly:
    """Gaussian binomial coefficient; 0 outside the range 0 <= m <= n."""
    if m < 0 or m > n:
        return ZERO
    num = qpoch(1, n)
    den = qpoch(1, m) * qpoch(1, n - m)
    return num.exact_div(den)


def qmultinom(a) -> IntPoly:
    """q-multinomial coefficient of a composition.

    Computed both as (q)_{|a|} / prod (q)_{a_i} and as the telescoping
    product of q-binomials of the partial sums; the two must agree.
    """
    a = tuple(a)
    if any(x < 0 for x in a):
        raise ValueError("qmultinom needs nonnegative parts")
    den = ONE
    for x in a:
        den = den * qpoch(1, x)
    direct = qpoch(1, sum(a)).exact_div(den)
    sigma = 0
    prod = ONE
    for x in a:
        sigma += x
        prod = prod * qbinom(sigma, x)
    if direct != prod:
        raise AssertionError(f"qmultinom mismatch for a={a}")
    return direct

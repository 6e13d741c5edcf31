"""Sparse multivariate Laurent polynomials over the integers.

A polynomial is a map from monomials to nonzero integer coefficients.  The
variables live in a VarTable that fixes their order once and for all:

    q,  x1 .. xn,  t[i,j] (pairs i < j),  s[i,j] (an n x m grid),  u[i]

Internally a monomial's exponent vector is packed into a single integer,
32 bits per variable with an offset of 2^31 so that negative (Laurent)
exponents are representable.  Multiplying two monomials is then a single
integer addition, which is what makes the brute-force kernel expansions
cheap enough for the verification grids.  Exponents anywhere near the
field width are unreachable for the desk-scale inputs this package
handles (they are bounded by the number of kernel factors).

MPoly values are immutable once built; every operation returns a fresh
polynomial.
"""

from __future__ import annotations

import heapq
import json

from .qpoly import IntPoly

_W = 32
_B = 1 << (_W - 1)
_FIELD = (1 << _W) - 1


class VarTable:
    """Ordered variable table: q, an x-block, and auxiliary families."""

    __slots__ = ("nx", "t_pairs", "s_shape", "u_size", "names", "nvars",
                 "off", "_index", "_xmask", "_xoff", "_tmask", "_toff",
                 "_smask", "_soff", "_umask", "_uoff")

    def __init__(self, nx: int, t_pairs=(), s_shape=None, u_size: int = 0):
        t_pairs = tuple(sorted(t_pairs))
        for i, j in t_pairs:
            if not i < j:
                raise ValueError(f"t indices must satisfy i < j, got {(i, j)}")
        self.nx = nx
        self.t_pairs = t_pairs
        self.s_shape = tuple(s_shape) if s_shape else None
        self.u_size = u_size

        names = ["q"] + [f"x{i}" for i in range(1, nx + 1)]
        names += [f"t[{i},{j}]" for i, j in t_pairs]
        if self.s_shape:
            sn, sm = self.s_shape
            names += [f"s[{i},{j}]"
                      for i in range(1, sn + 1) for j in range(1, sm + 1)]
        names += [f"u[{i}]" for i in range(1, u_size + 1)]
        self.names = tuple(names)
        self.nvars = len(names)
        self._index = {name: k for k, name in enumerate(names)}
        self.off = sum(_B << (_W * k) for k in range(self.nvars))
        self._xmask, self._xoff = self._group_mask(1, nx)
        t0 = 1 + nx
        self._tmask, self._toff = self._group_mask(t0, len(t_pairs))
        s0 = t0 + len(t_pairs)
        ns = self.s_shape[0] * self.s_shape[1] if self.s_shape else 0
        self._smask, self._soff = self._group_mask(s0, ns)
        self._umask, self._uoff = self._group_mask(s0 + ns, u_size)

    def _group_mask(self, start, count):
        mask = 0
        for k in range(start, start + count):
            mask |= _FIELD << (_W * k)
        return mask, self.off & mask

    # -- variable indices ---------------------------------------------------

    def x_index(self, i: int) -> int:
        if not 1 <= i <= self.nx:
            raise IndexError(f"x{i} not in table")
        return i

    def t_index(self, i: int, j: int) -> int:
        return self._index[f"t[{i},{j}]"]

    def s_index(self, i: int, j: int) -> int:
        return self._index[f"s[{i},{j}]"]

    def u_index(self, i: int) -> int:
        return self._index[f"u[{i}]"]

    def __eq__(self, other):
        return (isinstance(other, VarTable)
                and self.names == other.names)

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({', '.join(self.names)})"

    # -- monomial packing ---------------------------------------------------

    def encode(self, vec) -> int:
        vec = tuple(vec)
        if len(vec) != self.nvars:
            raise ValueError(f"exponent vector length {len(vec)} != {self.nvars}")
        return sum((e + _B) << (_W * k) for k, e in enumerate(vec))

    def decode(self, key: int) -> tuple:
        return tuple(((key >> (_W * k)) & _FIELD) - _B
                     for k in range(self.nvars))

    def monomial_key(self, exps: dict) -> int:
        """Pack {variable index: exponent} (missing entries are 0)."""
        key = self.off
        for k, e in exps.items():
            key += e << (_W * k)
        return key


# -- table factories -----------------------------------------------------------

def table_x(n: int) -> VarTable:
    """q and x1..xn only."""
    return VarTable(n)


def table_kernel(n: int) -> VarTable:
    """q, x1..xn and one t[i,j] per pair; carrier of the deformed kernels."""
    return VarTable(n, t_pairs=[(i, j) for i in range(1, n)
                                for j in range(i + 1, n + 1)])


def table_tau(n: int, m: int) -> VarTable:
    """Table for kernels on n + m variables whose t's are restricted:
    pairs within the first n keep their t[i,j]; pairs (i, n+j) with i <= n
    become s[i,j]; pairs inside the last m variables carry no variable."""
    return VarTable(n + m,
                    t_pairs=[(i, j) for i in range(1, n)
                             for j in range(i + 1, n + 1)],
                    s_shape=(n, m))


def table_u(n: int) -> VarTable:
    """q and u1..un (no x-block); carrier for the u-sum identities."""
    return VarTable(0, u_size=n)


class MPoly:
    __slots__ = ("table", "_terms")

    def __init__(self, table: VarTable, terms=None):
        self.table = table
        self._terms = {}
        if terms:
            for vec, c in terms:
                if not c:
                    continue
                key = table.encode(vec)
                s = self._terms.get(key, 0) + c
                if s:
                    self._terms[key] = s
                else:
                    del self._terms[key]

    # -- construction helpers ----------------------------------------------

    @classmethod
    def _make(cls, table, termdict) -> "MPoly":
        p = cls.__new__(cls)
        p.table = table
        p._terms = termdict
        return p

    @classmethod
    def zero(cls, table) -> "MPoly":
        return cls._make(table, {})

    @classmethod
    def one(cls, table) -> "MPoly":
        return cls._make(table, {table.off: 1})

    @classmethod
    def monomial(cls, table, exps: dict, coeff: int = 1) -> "MPoly":
        if not coeff:
            return cls.zero(table)
        return cls._make(table, {table.monomial_key(exps): coeff})

    @classmethod
    def from_intpoly(cls, table, p: IntPoly) -> "MPoly":
        return cls._make(table, {table.off + e: c for e, c in p.items()})

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def terms(self):
        """(exponent vector, coefficient) pairs in graded-lex order."""
        dec = self.table.decode
        out = [(dec(k), c) for k, c in self._terms.items()]
        out.sort(key=lambda vc: (sum(vc[0]), vc[0]))
        return out

    def coeff(self, vec) -> int:
        return self._terms.get(self.table.encode(vec), 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == MPoly.from_intpoly(self.table, IntPoly.const(other))
        if isinstance(other, IntPoly):
            return self == MPoly.from_intpoly(self.table, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.table == other.table and self._terms == other._terms

    def __repr__(self):
        body = str(self)
        if len(body) > 120:
            body = f"<{len(self._terms)} terms>"
        return f"MPoly({body})"

    # -- ring operations ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if isinstance(other, IntPoly):
            other = MPoly.from_intpoly(self.table, other)
        if not isinstance(other, MPoly):
            raise TypeError(f"cannot combine MPoly with {type(other).__name__}")
        if other.table != self.table:
            raise ValueError("variable tables differ")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return MPoly._make(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._make(self.table, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly.zero(self.table)
            return MPoly._make(self.table,
                               {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        off = self.table.off
        out: dict[int, int] = {}
        for k2, c2 in b.items():
            k2o = k2 - off
            for k1, c1 in a.items():
                k = k1 + k2o
                c = out.get(k)
                if c is None:
                    out[k] = c1 * c2
                else:
                    c += c1 * c2
                    if c:
                        out[k] = c
                    else:
                        del out[k]
        return MPoly._make(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of an MPoly")
        result = MPoly.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- extraction -----------------------------------------------------------

    def ct_x(self) -> "MPoly":
        """Sub-polynomial of terms whose x-exponents all vanish."""
        t = self.table
        xm, xo = t._xmask, t._xoff
        return MPoly._make(t, {k: c for k, c in self._terms.items()
                               if k & xm == xo})

    def coeff_x(self, v) -> "MPoly":
        """Coefficient of x^v; x-exponents are projected back to zero."""
        t = self.table
        v = tuple(v)
        if len(v) != t.nx:
            raise ValueError(f"coefficient vector length {len(v)} != {t.nx}")
        shift = sum(e << (_W * t.x_index(i + 1)) for i, e in enumerate(v))
        target = t._xoff + shift
        xm = t._xmask
        return MPoly._make(t, {k - shift: c for k, c in self._terms.items()
                               if k & xm == target})

    def coeff_aux(self, family: str, exponents) -> "MPoly":
        """Coefficient of a monomial in one auxiliary family.

        ``exponents`` maps the family's index tuples (pairs for t and s,
        integers for u) to exponents; omitted indices mean exponent 0.
        The matched variables are projected out (set back to exponent 0).
        """
        t = self.table
        if family == "t":
            valid = set(t.t_pairs)
            index = lambda ij: t.t_index(*ij)
            mask = t._tmask
        elif family == "s":
            if not t.s_shape:
                raise ValueError("table has no s family")
            sn, sm = t.s_shape
            valid = {(i, j) for i in range(1, sn + 1) for j in range(1, sm + 1)}
            index = lambda ij: t.s_index(*ij)
            mask = t._smask
        elif family == "u":
            valid = set(range(1, t.u_size + 1))
            index = t.u_index
            mask = t._umask
        else:
            raise ValueError(f"unknown family {family!r}")
        exps = dict(exponents)
        if not set(exps) <= valid:
            raise ValueError(f"indices {sorted(set(exps) - valid)} not in family {family}")
        shift = sum(e << (_W * index(ix)) for ix, e in exps.items())
        target = (t.off & mask) + shift
        return MPoly._make(t, {k - shift: c for k, c in self._terms.items()
                               if k & mask == target})

    # -- substitutions ----------------------------------------------------------

    def subst_x_qpower(self, alpha) -> "MPoly":
        """Substitute x_i -> q^{alpha_i}; the x-block collapses into q."""
        t = self.table
        alpha = tuple(alpha)
        if len(alpha) != t.nx:
            raise ValueError("alpha length mismatch")
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            delta = 0
            strip = 0
            for i in range(1, t.nx + 1):
                e = ((k >> (_W * i)) & _FIELD) - _B
                if e:
                    delta += alpha[i - 1] * e
                    strip += e << (_W * i)
            nk = k - strip + delta
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return MPoly._make(t, out)

    def to_intpoly(self) -> IntPoly:
        """Convert when only q carries exponents; error otherwise."""
        t = self.table
        qonly_mask = ~_FIELD  # everything above the q field
        out = {}
        for k, c in self._terms.items():
            if k & qonly_mask != t.off & qonly_mask:
                raise ValueError(f"not a pure q-polynomial: {self}")
            out[(k & _FIELD) - _B] = c
        return IntPoly(out)

    def subst_t_qpowers(self, powers) -> "MPoly":
        """Substitute t[i,j] -> q^{powers[(i,j)]} for every t variable."""
        t = self.table
        if set(powers) != set(t.t_pairs):
            raise ValueError("powers must cover exactly the t pairs")
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            delta = 0
            strip = 0
            for pair in t.t_pairs:
                ix = t.t_index(*pair)
                e = ((k >> (_W * ix)) & _FIELD) - _B
                if e:
                    delta += powers[pair] * e
                    strip += e << (_W * ix)
            nk = k - strip + delta
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return MPoly._make(t, out)

    def subst_t_zero(self) -> "MPoly":
        """Substitute every t[i,j] -> 0 (keep only the t-free part)."""
        t = self.table
        tm, to = t._tmask, t._toff
        out = {}
        for k, c in self._terms.items():
            part = k & tm
            if part == to:
                out[k] = c
            elif any(((k >> (_W * t.t_index(*p))) & _FIELD) - _B < 0
                     for p in t.t_pairs):
                raise ValueError("negative t exponent under t -> 0")
        return MPoly._make(t, out)

    def subst_t_perm(self, w) -> "MPoly":
        """Relabel t[i,j] -> t[w(i),w(j)], inverting when w(i) > w(j).

        This is the t-alphabet action used alongside permuting x and a;
        reversed pairs pick up inverse variables, i.e. negated exponents.
        """
        t = self.table
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            nk = k
            for pair in t.t_pairs:
                ix = t.t_index(*pair)
                e = ((k >> (_W * ix)) & _FIELD) - _B
                if not e:
                    continue
                a, b = w(pair[0]), w(pair[1])
                nk -= e << (_W * ix)
                if a < b:
                    nk += e << (_W * t.t_index(a, b))
                else:
                    nk -= e << (_W * t.t_index(b, a))
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return MPoly._make(t, out)

    def permute_x(self, w) -> "MPoly":
        """Substitute x_i -> x_{w(i)} (q and auxiliaries untouched)."""
        t = self.table
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            nk = k
            for i in range(1, t.nx + 1):
                e = ((k >> (_W * i)) & _FIELD) - _B
                if e and w(i) != i:
                    nk += (e << (_W * w(i))) - (e << (_W * i))
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return MPoly._make(t, out)

    def collapse_t_single(self) -> IntPoly:
        """Substitute every t[i,j] -> t and read off a univariate polynomial
        (returned as an IntPoly whose variable stands for t).  Only valid
        when nothing but t variables carry exponents."""
        t = self.table
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            if k & ~t._tmask != t.off & ~t._tmask:
                raise ValueError("non-t exponents present")
            deg = sum(((k >> (_W * t.t_index(*p))) & _FIELD) - _B
                      for p in t.t_pairs)
            out[deg] = out.get(deg, 0) + c
        return IntPoly(out)

    def gamma_shift(self) -> "MPoly":
        """The q-shifted cyclic action L(x1,...,xn) -> L(x2,...,xn,x1/q)."""
        return self._gamma(inverse=False)

    def gamma_shift_inv(self) -> "MPoly":
        """Inverse of gamma_shift: L(x1,...,xn) -> L(q*xn,x1,...,xn-1)."""
        return self._gamma(inverse=True)

    def _gamma(self, inverse: bool) -> "MPoly":
        t = self.table
        n = t.nx
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            e = [((k >> (_W * i)) & _FIELD) - _B for i in range(1, n + 1)]
            if inverse:
                ne = e[1:] + e[:1]
                dq = e[0]
            else:
                ne = e[-1:] + e[:-1]
                dq = -e[-1]
            nk = k + dq
            for i in range(n):
                nk += (ne[i] - e[i]) << (_W * (i + 1))
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                del out[nk]
        return MPoly._make(t, out)

    # -- structure checks ---------------------------------------------------------

    def x_degrees(self):
        """Set of total x-degrees over all terms."""
        t = self.table
        degs = set()
        for k in self._terms:
            degs.add(sum(((k >> (_W * i)) & _FIELD) - _B
                         for i in range(1, t.nx + 1)))
        return degs

    def max_x_exponents(self):
        """Per-variable maximum x-exponents (0 for the zero polynomial)."""
        t = self.table
        mx = [0] * t.nx
        for k in self._terms:
            for i in range(1, t.nx + 1):
                e = ((k >> (_W * i)) & _FIELD) - _B
                if e > mx[i - 1]:
                    mx[i - 1] = e
        return tuple(mx)

    def min_x_exponent(self) -> int:
        t = self.table
        lo = 0
        for k in self._terms:
            for i in range(1, t.nx + 1):
                e = ((k >> (_W * i)) & _FIELD) - _B
                if e < lo:
                    lo = e
        return lo

    # -- text and machine forms ------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.table.names
        parts = []
        for vec, c in self.terms():
            factors = []
            for name, e in zip(names, vec):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def serialize(self) -> str:
        """Machine-readable JSON: variable names plus term list."""
        return json.dumps({
            "vars": list(self.table.names),
            "terms": [[list(vec), str(c)] for vec, c in self.terms()],
        })

    @classmethod
    def deserialize(cls, text: str, table: VarTable) -> "MPoly":
        data = json.loads(text)
        if tuple(data["vars"]) != table.names:
            raise ValueError("serialized variable table does not match")
        return cls(table, [(tuple(vec), int(c)) for vec, c in data["terms"]])


# -- products of many factors ----------------------------------------------------

def product(factors, table: VarTable) -> MPoly:
    """Multiply a list of MPoly factors.

    Always combines the two currently-smallest operands (term count), which
    keeps intermediate supports small for the kernel products; ties break on
    insertion order so the result is reproducible (the value is of course
    schedule-independent).
    """
    factors = list(factors)
    if not factors:
        return MPoly.one(table)
    heap = [(len(f), idx, f) for idx, f in enumerate(factors)]
    heapq.heapify(heap)
    counter = len(factors)
    while len(heap) > 1:
        _, _, f1 = heapq.heappop(heap)
        _, _, f2 = heapq.heappop(heap)
        p = f1 * f2
        heapq.heappush(heap, (len(p), counter, p))
        counter += 1
    return heap[0][2]


def mul_coeff_x(p1: MPoly, p2: MPoly, v) -> MPoly:
    """coeff_x(p1 * p2, v) without materialising the full product.

    Terms of p2 are bucketed by their x-part; each term of p1 then only
    meets the single complementary bucket.
    """
    t = p1.table
    if p2.table != t:
        raise ValueError("variable tables differ")
    v = tuple(v)
    if len(v) != t.nx:
        raise ValueError("coefficient vector length mismatch")
    xm = t._xmask
    xoff = t._xoff
    buckets: dict[int, list] = {}
    for k, c in p2._terms.items():
        buckets.setdefault(k & xm, []).append((k, c))
    vkey = xoff + sum(e << (_W * t.x_index(i + 1)) for i, e in enumerate(v))
    out: dict[int, int] = {}
    off = t.off
    for k1, c1 in p1._terms.items():
        want = vkey - (k1 & xm) + xoff
        block = buckets.get(want)
        if not block:
            continue
        base = k1 - off
        for k2, c2 in block:
            nk = base + k2 - (vkey - xoff)
            s = out.get(nk, 0) + c1 * c2
            if s:
                out[nk] = s
            else:
                del out[nk]
    return MPoly._make(t, out)


# -- kernel builders ----------------------------------------------------------------

def poch_factor(table: VarTable, i: int, j: int, shift: int, count: int) -> MPoly:
    """(q^shift * x_i / x_j)_count as an expanded polynomial."""
    if count < 0:
        raise ValueError("poch_factor needs count >= 0")
    xi, xj = table.x_index(i), table.x_index(j)
    out = MPoly.one(table)
    for k in range(count):
        out = out * MPoly._make(table, {
            table.off: 1,
            table.monomial_key({0: shift + k, xi: 1, xj: -1}): -1,
        })
    return out


def _poch_binomials(table, i, j, shift, count):
    xi, xj = table.x_index(i), table.x_index(j)
    return [MPoly._make(table, {
        table.off: 1,
        table.monomial_key({0: shift + k, xi: 1, xj: -1}): -1,
    }) for k in range(count)]


def _t_binomial(table, var_index, i, j):
    """1 - t * x_j / x_i for the given auxiliary variable index."""
    xi, xj = table.x_index(i), table.x_index(j)
    return MPoly._make(table, {
        table.off: 1,
        table.monomial_key({var_index: 1, xj: 1, xi: -1}): -1,
    })


def dyson_kernel(a, table: VarTable | None = None) -> MPoly:
    """prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}; a_i >= 0."""
    a = tuple(a)
    n = len(a)
    if any(x < 0 for x in a):
        raise ValueError("dyson_kernel needs nonnegative a")
    if table is None:
        table = table_x(n)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors += _poch_binomials(table, i, j, 0, a[i - 1])
            factors += _poch_binomials(table, j, i, 1, a[j - 1])
    out = product(factors, table)
    if out.x_degrees() - {0}:
        raise AssertionError("dyson kernel is not homogeneous of x-degree 0")
    return out


def tkernel(a, table: VarTable | None = None) -> MPoly:
    """prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j - 1} (1 - t[i,j] x_j/x_i)."""
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("tkernel needs positive a")
    if table is None:
        table = table_kernel(n)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors += _poch_binomials(table, i, j, 0, a[i - 1])
            factors += _poch_binomials(table, j, i, 1, a[j - 1] - 1)
            factors.append(_t_binomial(table, table.t_index(i, j), i, j))
    return product(factors, table)


def tzero_kernel(a, table: VarTable | None = None) -> MPoly:
    """prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j - 1}: the t -> 0 kernel."""
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("tzero_kernel needs positive a")
    if table is None:
        table = table_x(n)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors += _poch_binomials(table, i, j, 0, a[i - 1])
            factors += _poch_binomials(table, j, i, 1, a[j - 1] - 1)
    return product(factors, table)


def tau_kernel(a, m: int, table: VarTable | None = None) -> MPoly:
    """The (n+m)-variable kernel for the sequence (a, 1^m) whose t's vanish
    beyond the first n indices: pairs inside the x-block keep t[i,j], pairs
    crossing into the appended block carry s[i,j], pairs inside the appended
    block reduce to (1 - x_i/x_j)."""
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("tau_kernel needs positive a")
    if table is None:
        table = table_tau(n, m)
    factors = []
    full = a + (1,) * m
    for i in range(1, n + m + 1):
        for j in range(i + 1, n + m + 1):
            factors += _poch_binomials(table, i, j, 0, full[i - 1])
            factors += _poch_binomials(table, j, i, 1, full[j - 1] - 1)
            if j <= n:
                factors.append(_t_binomial(table, table.t_index(i, j), i, j))
            elif i <= n:
                factors.append(_t_binomial(table, table.s_index(i, j - n), i, j))
    return product(factors, table)


def tournament_kernel(t, a, table: VarTable | None = None) -> MPoly:
    """prod over directed edges (i, j) of (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j-1}."""
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError("tournament_kernel needs positive a")
    if len(a) != t.n:
        raise ValueError("length of a must match the tournament")
    if table is None:
        table = table_x(t.n)
    factors = []
    for i, j in sorted(t.edges):
        factors += _poch_binomials(table, i, j, 0, a[i - 1])
        factors += _poch_binomials(table, j, i, 1, a[j - 1] - 1)
    return product(factors, table)


def bg_kernel(a, index_set, table: VarTable | None = None) -> MPoly:
    """prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j - chi(j in I)}."""
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("bg_kernel needs positive a")
    index_set = set(index_set)
    if table is None:
        table = table_x(n)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors += _poch_binomials(table, i, j, 0, a[i - 1])
            factors += _poch_binomials(table, j, i, 1,
                                       a[j - 1] - (1 if j in index_set else 0))
    return product(factors, table)


def bg_alternating_kernel(a, table: VarTable | None = None) -> MPoly:
    """prod_{i<j} (x_j/x_i - x_i/x_j) * prod_{i != j} (q x_i/x_j)_{a_i - 1}."""
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("bg_alternating_kernel needs positive a")
    if table is None:
        table = table_x(n)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            xi, xj = table.x_index(i), table.x_index(j)
            factors.append(MPoly._make(table, {
                table.monomial_key({xj: 1, xi: -1}): 1,
                table.monomial_key({xi: 1, xj: -1}): -1,
            }))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                factors += _poch_binomials(table, i, j, 1, a[i - 1] - 1)
    return product(factors, table)

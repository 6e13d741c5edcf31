"""Coefficient extraction through multivariate Lagrange interpolation.

The generic lemma: for a polynomial F in x_1..x_n of total degree at most
d_1 + ... + d_n and point sets A_i of size d_i + 1, the coefficient of
prod x_i^{d_i} is the sum of F(c) / prod phi_i'(c_i) over the grid, with
phi_i(z) = prod_{a in A_i} (z - a).  All grids here consist of integer
powers of q, so every evaluation stays inside exact q-arithmetic.

On top of the generic extractor sit the two bespoke grids: one that makes
at most a single point of the Poincare-deformed Dyson coefficient survive
(and exactly one precisely when the pair set is a recording set), and one
for the near-constant-term coefficient of the plain Dyson product.  The
closed evaluation pipeline reproduces the surviving value through
factorised q-factorial products, checking the sign and q-power bookkeeping
identities along the way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combi import Permutation, ell_stats, partial_sums
from .identities import c_w
from .mpoly import MPoly, product, table_x
from .qpoly import IntPoly, QRat, q_power_diff, qpoch


class ClosedEvalError(AssertionError):
    """An exponent identity of the factorised evaluation failed."""


@dataclass(frozen=True)
class Grid:
    """Per-variable evaluation sets; entry b stands for the point q^b."""

    points: tuple  # tuple of sorted tuples of integer exponents

    def __post_init__(self):
        for b in self.points:
            if len(set(b)) != len(b):
                raise ValueError("grid exponents must be distinct")

    @property
    def n(self) -> int:
        return len(self.points)

    def sizes(self) -> tuple:
        return tuple(len(b) for b in self.points)

    def iter_points(self):
        from itertools import product as iproduct
        yield from iproduct(*self.points)


def default_grid(d) -> Grid:
    """B_i = {0, 1, ..., d_i}: the simplest admissible grid."""
    return Grid(tuple(tuple(range(di + 1)) for di in d))


def phi_prime(b_set, alpha: int) -> IntPoly:
    """phi'(q^alpha) = prod over the other grid exponents of (q^alpha - q^b)."""
    out = IntPoly.const(1)
    for b in b_set:
        if b != alpha:
            out = out * q_power_diff(alpha, b)
    return out


def generic_coeff(F: MPoly, d, grid: Grid) -> QRat:
    """Coefficient of prod x_i^{d_i} in F by summation over the full grid."""
    d = tuple(d)
    table = F.table
    if len(d) != table.nx or grid.n != table.nx:
        raise ValueError("degree profile and grid must match the x block")
    if grid.sizes() != tuple(di + 1 for di in d):
        raise ValueError("grid sizes must be d_i + 1")
    if F.min_x_exponent() < 0:
        raise ValueError("F must be a polynomial in x")
    degs = F.x_degrees()
    if degs and max(degs) > sum(d):
        raise ValueError("total degree exceeds the interpolation bound")
    acc = QRat(0)
    for alpha in grid.iter_points():
        val = F.subst_x_qpower(alpha).to_intpoly()
        if val.is_zero:
            continue
        den = IntPoly.const(1)
        for b_set, a_i in zip(grid.points, alpha):
            den = den * phi_prime(b_set, a_i)
        acc = acc + QRat(val, den)
    return acc


# -- the deformed Dyson coefficient ------------------------------------------------

def fs_factors(a, S):
    """(sign, factors) of the homogenised coefficient polynomial F_S.

    Each factor (u, v, k) stands for (x_u - x_v q^k); the sign is
    (-1)^{number of pairs in S}.
    """
    a = tuple(a)
    n = len(a)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(a[i - 1]):
                factors.append((j, i, k))
            for k in range(1, a[j - 1]):
                factors.append((i, j, k))
    return (-1) ** len(S), factors


def fs_polynomial(a, S, table=None) -> MPoly:
    """F_S fully expanded (used by the generic extractor at small n)."""
    a = tuple(a)
    if table is None:
        table = table_x(len(a))
    sign, factors = fs_factors(a, S)
    polys = []
    for u, v, k in factors:
        polys.append(MPoly.monomial(table, {table.x_index(u): 1})
                     - MPoly.monomial(table, {0: k, table.x_index(v): 1}))
    return product(polys, table) * sign


def fs_degree_profile(a, S) -> tuple:
    """Exponents of the target monomial of F_S."""
    a = tuple(a)
    n = len(a)
    total = sum(a)
    d_in, e_out, _, _ = ell_stats(S, n)
    return tuple(total - a[i - 1] - (n - i) - d_in[i - 1] + e_out[i - 1]
                 for i in range(1, n + 1))


def eval_factored(sign: int, factors, alpha) -> IntPoly:
    """Evaluate a factored polynomial at x_i = q^{alpha_i}."""
    out = IntPoly.const(sign)
    for u, v, k in factors:
        f = q_power_diff(alpha[u - 1], alpha[v - 1] + k)
        if f.is_zero:
            return IntPoly()
        out = out * f
    return out


def dyson_grid(a, S, rng=None):
    """The bespoke grid for the pair set S; returns (Grid, pi or None).

    pi is the permutation locating the unique surviving point when
    K(S) = n; for K(S) < n every grid point annihilates F_S.  Free choices
    (indices outside the tau chain) are filled with the smallest admissible
    exponents, or sampled when an rng is supplied.
    """
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("dyson_grid needs positive a")
    total = sum(a)
    _, _, ell, K = ell_stats(S, n)
    tau = {}
    for k in range(1, K + 1):
        tau[k] = ell.index(k - 1) + 1
    chain = {tau[k]: k for k in tau}
    chain_sums = [sum(a[tau[j] - 1] for j in range(1, k + 1))
                  for k in range(0, K + 1)]  # chain_sums[k] = a_{tau(1..k)}
    points = []
    for i in range(1, n + 1):
        top = total - a[i - 1]
        if i in chain:
            pos = chain[i]
            excluded = {top - chain_sums[k] for k in range(0, pos - 1)}
            b = [v for v in range(top + 1) if v not in excluded]
        else:
            size = total - a[i - 1] - ell[i - 1] + 1
            excluded = {top - chain_sums[k] for k in range(0, K + 1)}
            pool = [v for v in range(top + 1) if v not in excluded]
            if len(pool) < size:
                raise AssertionError("free grid pool too small")
            if rng is None:
                b = pool[:size]
            else:
                b = sorted(rng.sample(pool, size))
        points.append(tuple(b))
    grid = Grid(tuple(points))
    if K < n:
        return grid, None
    pi = Permutation(tuple(tau[n - i + 1] for i in range(1, n + 1)))
    return grid, pi


def dyson_coeff_interpolated(a, S, rng=None):
    """The t_S coefficient of the deformed Dyson constant term, by
    interpolation over the bespoke grid.

    Returns (value, survivors, pi); survivors collects the grid points with
    F_S nonzero.  Postconditions of the construction are enforced: at most
    one survivor, exactly one iff K(S) = n, located at the partial sums
    along pi.
    """
    a = tuple(a)
    grid, pi = dyson_grid(a, S, rng)
    sign, factors = fs_factors(a, S)
    acc = QRat(0)
    survivors = []
    for alpha in grid.iter_points():
        val = eval_factored(sign, factors, alpha)
        if val.is_zero:
            continue
        survivors.append(alpha)
        den = IntPoly.const(1)
        for b_set, a_i in zip(grid.points, alpha):
            den = den * phi_prime(b_set, a_i)
        acc = acc + QRat(val, den)
    if len(survivors) > 1:
        raise AssertionError(f"multiple surviving points: {survivors}")
    if (pi is not None) != (len(survivors) == 1):
        raise AssertionError("survivor count does not match the K dichotomy")
    if pi is not None:
        expected = [0] * len(a)
        acc_sum = 0
        for i in range(1, len(a) + 1):
            expected[pi(i) - 1] = acc_sum
            acc_sum += a[pi(i) - 1]
        if survivors[0] != tuple(expected):
            raise AssertionError(
                f"survivor {survivors[0]} is not at the partial sums {expected}")
    return acc.expect_intpoly("interpolated Dyson coefficient"), survivors, pi


# -- the factorised closed evaluation ----------------------------------------------

def closed_eval(a, w: Permutation) -> IntPoly:
    """Evaluate the surviving interpolation term for S = R(w) through the
    factorised products, checking the bookkeeping identities:

      * the sign exponents cancel: l(w) + s_less + s_greater = sum_j s_j,
      * the q-power exponents cancel: t_less + t_greater = sum_i t_i,
      * the assembled product equals the closed-form coefficient c_w(a).
    """
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("closed_eval needs positive a")
    pi = w
    s = [0] * (n + 2)  # s[1..n+1]
    for i in range(1, n + 1):
        s[i + 1] = s[i] + a[pi(i) - 1]
    total = s[n + 1]

    t_phi = [0] * (n + 1)
    for i in range(1, n + 1):
        si = s[i]
        t_phi[i] = si * (si - 1) // 2 + si * (total - s[i + 1]) - (n - i) * si

    s_less = s_greater = 0
    t_less = t_greater = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            contrib = (a[pi(i) - 1] * (a[pi(i) - 1] - 1) // 2
                       + (a[pi(i) - 1] + a[pi(j) - 1] - 1) * s[i])
            if pi(i) < pi(j):
                s_less += a[pi(i) - 1]
                t_less += contrib
            else:
                s_greater += a[pi(i) - 1] - 1
                t_greater += contrib

    length = w.length()
    if length + s_less + s_greater != sum(s[1:n + 1]):
        raise ClosedEvalError(
            f"sign identity failed for a={a}, w={w.word}: "
            f"l(w)+s_<+s_> = {length + s_less + s_greater}, "
            f"sum s_j = {sum(s[1:n + 1])}")
    if t_less + t_greater != sum(t_phi[1:]):
        raise ClosedEvalError(
            f"q-power identity failed for a={a}, w={w.word}: "
            f"t_<+t_> = {t_less + t_greater}, sum t_i = {sum(t_phi[1:])}")

    num = IntPoly.const(1)
    den = IntPoly.const(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num = num * qpoch(1, s[j + 1] - s[i])
            den = den * IntPoly({0: 1, s[j + 1] - s[i]: -1})
            den = den * qpoch(1, s[j] - s[i + 1])
    for i in range(1, n + 1):
        den = den * qpoch(1, s[i]) * qpoch(1, total - s[i + 1])
        for j in range(i + 1, n + 1):
            num = num * IntPoly({0: 1, s[j + 1] - s[i + 1]: -1})
    value = QRat(num, den).expect_intpoly("closed evaluation")
    reference = c_w(a, w)
    if value != reference:
        raise ClosedEvalError(
            f"closed evaluation {value} differs from c_w {reference} "
            f"for a={a}, w={w.word}")
    return value


# -- the near-constant-term grid of the plain Dyson product --------------------------

def sills_factors(a):
    """Factored form of the homogenised plain Dyson product."""
    a = tuple(a)
    n = len(a)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(a[i - 1]):
                factors.append((j, i, k))
            for k in range(1, a[j - 1] + 1):
                factors.append((i, j, k))
    return 1, factors


def sills_degree_profile(a, r: int) -> tuple:
    a = tuple(a)
    total = sum(a)
    return tuple(total - a[i - 1] + (1 if i == 1 else 0) - (1 if i == r else 0)
                 for i in range(1, len(a) + 1))


def sills_grid(a, r: int, keep_excluded: bool = False) -> Grid:
    """The grid of the direct interpolation proof of the near-constant-term
    formula, normalised to s = 1.  ``keep_excluded`` readmits the point
    removed from B_r (useful only for demonstrating that a second
    evaluation point would survive)."""
    a = tuple(a)
    n = len(a)
    if not 2 <= r <= n:
        raise ValueError("need 2 <= r <= n after the s = 1 normalisation")
    if any(x < 1 for i, x in enumerate(a, start=1) if i != r):
        raise ValueError("a_i must be positive for i != r")
    if a[r - 1] < 0:
        raise ValueError("a_r must be nonnegative")
    total = sum(a)
    points = []
    for i in range(1, n + 1):
        if i == 1:
            b = list(range(total - a[0] + 2))
        elif i == r:
            cut = sum(a[1:r - 1])
            b = [v for v in range(total - a[r - 1] + 1)
                 if keep_excluded or v != cut]
        else:
            b = list(range(total - a[i - 1] + 1))
        points.append(tuple(b))
    return Grid(tuple(points))


def scan_survivors(sign, factors, grid: Grid):
    """Grid points where the factored polynomial does not vanish."""
    out = []
    for alpha in grid.iter_points():
        if not eval_factored(sign, factors, alpha).is_zero:
            out.append(alpha)
    return out


def sills_coeff_interpolated(a, r: int):
    """Interpolated value of CT[(x_r/x_1) * plain Dyson product].

    Returns (value, survivors).  Exactly one surviving point is expected
    (the identity permutation, alpha_i = a_1 + ... + a_{i-1}); a second one
    would be flagged as an assertion failure.
    """
    a = tuple(a)
    grid = sills_grid(a, r)
    sign, factors = sills_factors(a)
    survivors = scan_survivors(sign, factors, grid)
    if len(survivors) != 1:
        raise AssertionError(f"expected a unique surviving point, got {survivors}")
    expected = tuple(partial_sums((0,) + a[:-1]))
    if survivors[0] != expected:
        raise AssertionError(
            f"survivor {survivors[0]} is not at the partial sums {expected}")
    acc = QRat(0)
    for alpha in survivors:
        val = eval_factored(sign, factors, alpha)
        den = IntPoly.const(1)
        for b_set, a_i in zip(grid.points, alpha):
            den = den * phi_prime(b_set, a_i)
        acc = acc + QRat(val, den)
    return acc.expect_intpoly("interpolated Sills coefficient"), survivors

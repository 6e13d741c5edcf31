"""Closed-form right-hand sides and brute-force verifiers.

Each identity gets two independent routes: a left-hand side computed by
brute-force expansion and constant-term extraction, and a right-hand side
assembled from q-factorial closed forms.  Closed forms that are a priori
rational are always computed in QRat and coerced to polynomials, so a
wrong formula shows up as an arithmetic error rather than silent drift.

Verifier functions return a VerifyReport whose ``equal`` flag compares the
canonical serializations of the two sides.
"""

from __future__ import annotations

import functools
import itertools
import json
import time
from dataclasses import dataclass

from .combi import (
    Permutation, Tournament, left_justified_from_rows, all_pairs, ell_stats,
    partial_sums, sort_desc, reverse, staircase, conjugate, is_partition,
    is_strict, weight,
)
from .mpoly import (
    MPoly, VarTable, bg_alternating_kernel, bg_kernel, dyson_kernel,
    mul_coeff_x, product, table_kernel, table_u, table_x, tau_kernel,
    tkernel, tournament_kernel, tzero_kernel,
)
from .qpoly import IntPoly, QRat, one_minus_q, q_power_diff, qbinom, qmultinom, qpoch
from .symfun import schur_principal


# -- small helpers -------------------------------------------------------------

def w_sigma(a, w: Permutation, i: int) -> int:
    """a_{w(1)} + ... + a_{w(i)}."""
    return sum(a[w(j) - 1] for j in range(1, i + 1))


def t_monomial(table: VarTable, S) -> MPoly:
    return MPoly.monomial(table, {table.t_index(i, j): 1 for i, j in S})


def t_coefficients(p: MPoly) -> dict:
    """Split a polynomial in q and t into {t-exponent tuple: IntPoly in q}.

    Requires every other variable to carry exponent zero.
    """
    table = p.table
    pairs = table.t_pairs
    pair_positions = [table.t_index(i, j) for i, j in pairs]
    out: dict[tuple, dict] = {}
    for vec, c in p.terms():
        texp = tuple(vec[k] for k in pair_positions)
        rest = list(vec)
        for k in pair_positions:
            rest[k] = 0
        qexp = rest[0]
        rest[0] = 0
        if any(rest):
            raise ValueError("term carries non-(q,t) exponents")
        out.setdefault(texp, {})[qexp] = c
    return {texp: IntPoly(d) for texp, d in out.items()}


def serialize_t_coefficients(coeffs: dict, pairs) -> str:
    body = {}
    for texp, poly in sorted(coeffs.items()):
        name = "*".join(f"t[{i},{j}]^{e}" if e != 1 else f"t[{i},{j}]"
                        for (i, j), e in zip(pairs, texp) if e) or "1"
        body[name] = str(poly)
    return json.dumps(body, sort_keys=True)


# -- closed forms ---------------------------------------------------------------

def rhs_qdyson(a) -> IntPoly:
    return qmultinom(a)


def c_w(a, w: Permutation) -> IntPoly:
    """The weight of one permutation in the deformed Poincare sum:

        qmultinom(a) * prod_i (1 - q^{a_i}) / (1 - q^{a_{w(1)}+...+a_{w(i)}})

    reduced to a genuine polynomial.
    """
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError("c_w needs positive a")
    num = qmultinom(a)
    for x in a:
        num = num * one_minus_q(x)
    den = IntPoly.const(1)
    for i in range(1, len(a) + 1):
        den = den * one_minus_q(w_sigma(a, w, i))
    return QRat(num, den).expect_intpoly("c_w")


def rhs_poincare_qdyson(a, table: VarTable | None = None) -> MPoly:
    """sum_w c_w(a) t_{R(w)}."""
    a = tuple(a)
    if table is None:
        table = table_kernel(len(a))
    out = MPoly.zero(table)
    for w in Permutation.all_perms(len(a)):
        out = out + t_monomial(table, w.recording_set()) * c_w(a, w)
    return out


def poincare_W(n: int, table: VarTable | None = None) -> MPoly:
    """The multivariable Poincare polynomial sum_w t_{R(w)}."""
    if table is None:
        table = table_kernel(n)
    out = MPoly.zero(table)
    for w in Permutation.all_perms(n):
        out = out + t_monomial(table, w.recording_set())
    return out


def poincare_single_product(n: int) -> IntPoly:
    """prod_{i=2}^{n} (1 - t^i)/(1 - t) as an exact geometric product."""
    out = IntPoly.const(1)
    for i in range(2, n + 1):
        out = out * IntPoly({e: 1 for e in range(i)})
    return out


def rhs_bg_general(a, index_set) -> IntPoly:
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError("rhs_bg_general needs positive a")
    sigma = partial_sums(a)
    num = qmultinom(a)
    den = IntPoly.const(1)
    for i in sorted(index_set):
        num = num * one_minus_q(a[i - 1])
        den = den * one_minus_q(sigma[i - 1])
    return QRat(num, den).expect_intpoly("bg general")


def rhs_bg_alternating(a) -> IntPoly:
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError("rhs_bg_alternating needs positive a")
    num = qmultinom(a)
    den = IntPoly.const(1)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            num = num * q_power_diff(a[i], a[j])
            den = den * one_minus_q(a[i] + a[j])
    return QRat(num, den).expect_intpoly("bg alternating")


def rhs_tournament(t: Tournament, a) -> IntPoly:
    w = t.winner()
    if w is None:
        return IntPoly()
    return c_w(a, w)


# -- Kadell-type coefficients ------------------------------------------------------

def D_vlambda(v, lam, a, t_mode: str = "qa",
              table: VarTable | None = None) -> MPoly:
    """Brute-force CT[ x^{-v} s_lambda(x^(a)) kernel ].

    ``t_mode`` picks the kernel deformation: "symbolic" keeps the t
    variables, "qa" substitutes t[i,j] = q^{a_j} (the plain product), and
    "zero" drops the t factors entirely.
    """
    v = tuple(v)
    a = tuple(a)
    n = len(a)
    if len(v) != n:
        raise ValueError("v and a must share a length")
    if t_mode == "symbolic":
        if table is None:
            table = table_kernel(n)
        kern = tkernel(a, table)
    elif t_mode == "qa":
        if table is None:
            table = table_x(n)
        kern = dyson_kernel(a, table)
    elif t_mode == "zero":
        if table is None:
            table = table_x(n)
        kern = tzero_kernel(a, table)
    else:
        raise ValueError(f"unknown t_mode {t_mode!r}")
    s = schur_principal(lam, a, table)
    out = mul_coeff_x(s, kern, v)
    if weight(v) != sum(lam):
        if not out.is_zero:
            raise AssertionError("homogeneity violated: nonzero CT at |v| != |la|")
    return out


def rhs_kadell(v, a) -> IntPoly:
    """Closed form for CT[x^{-v} h_m(x^(a)) * Dyson kernel], |v| = m >= 1."""
    v = tuple(v)
    a = tuple(a)
    m = weight(v)
    if m < 1:
        raise ValueError("rhs_kadell needs |v| >= 1")
    if sort_desc(v) != (m,) + (0,) * (len(v) - 1):
        return IntPoly()
    k = v.index(m) + 1
    total = sum(a)
    if total == 0 or a[k - 1] == 0:
        return IntPoly()
    sigma = partial_sums(a)
    num = (one_minus_q(a[k - 1]) * qpoch(total, m) * qmultinom(a)).shifted(
        sigma[-1] - sigma[k - 1])
    den = one_minus_q(total) * qpoch(total - a[k - 1] + 1, m)
    return QRat(num, den).expect_intpoly("Kadell closed form")


def rhs_kadell_t(k: int, m: int, a, table: VarTable | None = None) -> MPoly:
    """The symbolic-t closed form for v = (0^{k-1}, m, 0^{n-k}):

        sum over w with w(n) = k of t_{R(w)} times a per-w polynomial weight.
    """
    a = tuple(a)
    n = len(a)
    if any(x < 1 for x in a):
        raise ValueError("rhs_kadell_t needs positive a")
    if m < 1:
        raise ValueError("rhs_kadell_t needs m >= 1")
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    if table is None:
        table = table_kernel(n)
    sigma = partial_sums(a)
    total = sigma[-1]
    base_num = qpoch(total, m)
    for i in range(1, n + 1):
        base_num = base_num * qbinom(sigma[i - 1] - 1, a[i - 1] - 1)
    base_den = qpoch(total - a[k - 1] + 1, m)
    out = MPoly.zero(table)
    for w in Permutation.all_perms(n):
        if w(n) != k:
            continue
        num = base_num
        den = base_den
        for i in range(1, n + 1):
            num = num * one_minus_q(sigma[i - 1])
            den = den * one_minus_q(w_sigma(a, w, i))
        coeff = QRat(num, den).expect_intpoly("Kadell t-coefficient")
        out = out + t_monomial(table, w.recording_set()) * coeff
    return out


def rhs_strict(lam, a, w: Permutation) -> IntPoly:
    """Closed form for D_{w^{-1}(reversed lam)}(a), lam a strict partition."""
    lam = tuple(lam)
    a = tuple(a)
    n = len(a)
    if len(lam) != n:
        raise ValueError("lam must have the full length n (pad with zeros)")
    if not is_strict(lam):
        raise ValueError(f"not a strict partition: {lam}")
    if any(x < 1 for x in a):
        raise ValueError("rhs_strict needs positive a")
    lam_bar = reverse(lam)
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * qbinom(lam_bar[i - 1] + w_sigma(a, w, i) - 1, a[w(i) - 1] - 1)
    shift = sum(a[j - 1] for _, j in w.recording_set())
    return out.shifted(shift)


# -- u-sum identities ----------------------------------------------------------------

def _u_subset_monomial(table, subset):
    return MPoly.monomial(table, {table.u_index(i): 1 for i in subset})


def _u_chain(w: Permutation):
    chain = []
    seen = []
    for i in range(1, w.n + 1):
        seen.append(w(i))
        chain.append(frozenset(seen))
    return chain


def usum_cleared_sides(n: int):
    """Numerators of both sides of the full u-sum identity after clearing
    the denominator prod over nonempty subsets A of (1 - u_A)."""
    table = table_u(n)
    subsets = [frozenset(s) for r in range(1, n + 1)
               for s in itertools.combinations(range(1, n + 1), r)]
    lhs = MPoly.zero(table)
    for w in Permutation.all_perms(n):
        chain = set(_u_chain(w))
        term = MPoly.one(table)
        for i in range(1, n + 1):
            term = term * (MPoly.one(table) - _u_subset_monomial(table, {w(i)}))
        for _, j in w.recording_set():
            term = term * _u_subset_monomial(table, {j})
        for sub in subsets:
            if sub not in chain:
                term = term * (MPoly.one(table) - _u_subset_monomial(table, sub))
        lhs = lhs + term
    rhs = product([MPoly.one(table) - _u_subset_monomial(table, sub)
                   for sub in subsets], table)
    return lhs, rhs


def usum_k_cleared_sides(n: int, k: int):
    """Cleared numerators for the w(n) = k refinement of the u-sum."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    table = table_u(n)
    subsets = [frozenset(s) for r in range(1, n + 1)
               for s in itertools.combinations(range(1, n + 1), r)]
    full = frozenset(range(1, n + 1))
    lhs = MPoly.zero(table)
    for w in Permutation.all_perms(n):
        if w(n) != k:
            continue
        chain = set(_u_chain(w))
        term = MPoly.one(table)
        for i in range(1, n + 1):
            term = term * (MPoly.one(table) - _u_subset_monomial(table, {w(i)}))
        for _, j in w.recording_set():
            term = term * _u_subset_monomial(table, {j})
        for sub in subsets:
            if sub not in chain:
                term = term * (MPoly.one(table) - _u_subset_monomial(table, sub))
        lhs = lhs + term
    rhs = _u_subset_monomial(table, set(range(k + 1, n + 1)))
    rhs = rhs * (MPoly.one(table) - _u_subset_monomial(table, {k}))
    rhs = rhs * product([MPoly.one(table) - _u_subset_monomial(table, sub)
                         for sub in subsets if sub != full], table)
    return lhs, rhs


# -- (0,1)-matrix propositions ---------------------------------------------------------

@functools.lru_cache(maxsize=None)
def d0_tau_ct(a: tuple, m: int) -> MPoly:
    """CT_x of the restricted-t kernel on n+m variables (cached)."""
    return tau_kernel(a, m).ct_x()


def solve_column_relation(kappa, m: int):
    """All (lam, w) with conj(lam) = w(c(kappa) + delta_m) - delta_m."""
    delta = staircase(m)
    c = kappa.col_sums()
    out = []
    for w in Permutation.all_perms(m):
        u = tuple(x - d for x, d in zip(w.act(tuple(x + d for x, d in zip(c, delta))),
                                        delta))
        if any(x < 0 for x in u) or not is_partition(u):
            continue
        lam_conj = tuple(x for x in u if x)
        out.append((conjugate(lam_conj) if lam_conj else (), w))
    return out


def prop_kappa_sides(kappa, lam, w: Permutation, a):
    """Both sides of the kappa-extraction identity as t-coefficient maps."""
    a = tuple(a)
    n, m = kappa.shape
    if len(a) != n:
        raise ValueError("a must have one entry per row of kappa")
    lam_full = tuple(lam) + (0,) * (sum(a) - len(lam))
    lhs = D_vlambda(kappa.row_sums(), tuple(x for x in lam if x), a, "symbolic")
    exps = {(i + 1, j + 1): kappa.rows[i][j]
            for i in range(n) for j in range(m) if kappa.rows[i][j]}
    rhs = d0_tau_ct(a, m).coeff_aux("s", exps) * w.sign()
    return t_coefficients(lhs), t_coefficients(rhs)


def prop_vnu_sides(v, a, m: int):
    """Both sides of the rectangle-composition extraction identity."""
    v = tuple(v)
    a = tuple(a)
    if any(x < 0 or x > m for x in v):
        raise ValueError(f"v must fit in the n x {m} rectangle")
    kappa = left_justified_from_rows(v, m)
    lam = tuple(x for x in sort_desc(v) if x)
    lhs = D_vlambda(v, lam, a, "symbolic")
    exps = {(i + 1, j + 1): 1 for i in range(len(v)) for j in range(v[i])}
    rhs = d0_tau_ct(a, m).coeff_aux("s", exps)
    return t_coefficients(lhs), t_coefficients(rhs)


def contributing_perms(lam_bar, a, m: int):
    """Permutations of n+m letters that survive both the restricted-t
    truncation and the s-monomial extraction for v = lam_bar."""
    n = len(lam_bar)
    want = frozenset((i, n + j) for i in range(1, n + 1)
                     for j in range(1, lam_bar[i - 1] + 1))
    out = []
    for w in Permutation.all_perms(n + m):
        r = w.recording_set()
        if any(i > n for i, j in r):
            continue
        crossing = frozenset(p for p in r if p[1] > n)
        if crossing == want:
            out.append(w)
    return out


# -- near-constant-term coefficients (Sills, Lv-Xin-Zhou) -------------------------------

def cyclic_interval(s: int, r: int, n: int):
    """Indices strictly between s and r, walking cyclically s+1, s+2, ..."""
    out = []
    i = s % n + 1
    while i != r:
        out.append(i)
        i = i % n + 1
    return out


def rhs_sills(a, r: int, s: int) -> IntPoly:
    a = tuple(a)
    n = len(a)
    if r == s or not (1 <= r <= n and 1 <= s <= n):
        raise ValueError("need distinct indices r, s in 1..n")
    e_rs = (1 if r < s else 0) + sum(a[i - 1] for i in cyclic_interval(s, r, n))
    num = -(one_minus_q(a[s - 1]) * qmultinom(a)).shifted(e_rs)
    den = one_minus_q(1 + sum(a) - a[s - 1])
    return QRat(num, den).expect_intpoly("Sills closed form")


def rhs_lxz(v, a) -> IntPoly:
    v = tuple(v)
    a = tuple(a)
    n = len(a)
    if weight(v) != 0 or max(v) > 1 or v[0] != 1:
        raise ValueError("need |v| = 0, max(v) <= 1 and v_1 = 1")
    prefix = partial_sums(v)
    index_set = [i for i in range(1, n + 1) if v[i - 1] == 1]
    total = sum(a)
    acc = QRat(0)
    for size in range(len(index_set) + 1):
        for J in itertools.combinations(index_set, size):
            aJ = sum(a[j - 1] for j in J)
            if aJ == 0:
                continue  # the factor 1 - q^0 kills the term (incl. J = {})
            eJ = sum(prefix[j - 1] * a[j - 1]
                     for j in range(1, n + 1) if j not in J)
            sign = -1 if size % 2 else 1
            term = QRat(one_minus_q(aJ).shifted(eJ) * sign,
                        one_minus_q(1 + total - aJ))
            acc = acc + term
    return (acc * qmultinom(a)).expect_intpoly("LXZ closed form")


@functools.lru_cache(maxsize=4)
def _dyson_kernel_cached(a: tuple) -> MPoly:
    # consecutive coefficient extractions share one kernel expansion
    return dyson_kernel(a)


def sills_lhs(a, r: int, s: int) -> IntPoly:
    """CT[(x_r/x_s) * Dyson kernel] by brute force."""
    a = tuple(a)
    v = tuple((1 if i == s else 0) - (1 if i == r else 0)
              for i in range(1, len(a) + 1))
    return _dyson_kernel_cached(a).coeff_x(v).to_intpoly()


def lxz_lhs(v, a) -> IntPoly:
    """CT[x^{-v} * Dyson kernel] by brute force (v may have negatives)."""
    return _dyson_kernel_cached(tuple(a)).coeff_x(v).to_intpoly()


# -- symmetry and reduction cross-checks -----------------------------------------------

def lemma_sym_check(v, lam, a, w: Permutation) -> bool:
    """D_{v,lam}(a; t) = t_{R(w)} * D_{w(v),lam}(w(a); w(t)), all symbolic."""
    table = table_kernel(len(a))
    lhs = D_vlambda(v, lam, a, "symbolic", table)
    inner = D_vlambda(w.act(v), lam, w.act(a), "symbolic", table)
    rhs = inner.subst_t_perm(w) * t_monomial(table, w.recording_set())
    return lhs == rhs


def reduction_check(v, a, m: int) -> bool:
    """D_{v,(m)}(a) = D_{v^I,(m)}(a^I) * prod(delta_{v_i,0}) over zero a_i."""
    v = tuple(v)
    a = tuple(a)
    zeros = [i for i, x in enumerate(a) if x == 0]
    lhs = D_vlambda(v, (m,), a, "qa")
    if any(v[i] != 0 for i in zeros):
        return lhs.is_zero
    keep = [i for i in range(len(a)) if a[i] != 0]
    if not keep:
        return lhs.is_zero == (m != 0)
    sub_v = tuple(v[i] for i in keep)
    sub_a = tuple(a[i] for i in keep)
    rhs = D_vlambda(sub_v, (m,), sub_a, "qa")
    return lhs.to_intpoly() == rhs.to_intpoly()


# -- reports ------------------------------------------------------------------------

@dataclass
class VerifyReport:
    identity: str
    params: dict
    lhs: str
    rhs: str
    equal: bool
    millis: int

    def to_json(self) -> str:
        return json.dumps({
            "identity": self.identity, "params": self.params,
            "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal,
            "millis": self.millis,
        }, sort_keys=True)

    def text_line(self) -> str:
        status = "PASS" if self.equal else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{status} {self.identity} {params} | lhs={self.lhs} rhs={self.rhs}"


def _report(identity, params, lhs_str, rhs_str, started) -> VerifyReport:
    return VerifyReport(identity, params, lhs_str, rhs_str,
                        lhs_str == rhs_str,
                        int((time.perf_counter() - started) * 1000))


def verify_qdyson(a) -> VerifyReport:
    start = time.perf_counter()
    lhs = dyson_kernel(a).ct_x().to_intpoly()
    rhs = rhs_qdyson(a)
    return _report("q-dyson", {"a": list(a)}, str(lhs), str(rhs), start)


def verify_poincare(a) -> VerifyReport:
    """Full t-expansion of the deformed kernel against sum_w c_w t_{R(w)},
    including the vanishing of every t_S coefficient with K(S) < n."""
    start = time.perf_counter()
    a = tuple(a)
    n = len(a)
    table = table_kernel(n)
    lhs = tkernel(a, table).ct_x()
    rhs = rhs_poincare_qdyson(a, table)
    lhs_str = serialize_t_coefficients(t_coefficients(lhs), table.t_pairs)
    rhs_str = serialize_t_coefficients(t_coefficients(rhs), table.t_pairs)
    # independent support check: only recording sets may appear
    pairs = sorted(all_pairs(n))
    for texp in t_coefficients(lhs):
        S = frozenset(p for p, e in zip(pairs, texp) if e)
        _, _, _, K = ell_stats(S, n)
        if K != n:
            lhs_str += f" [nonzero at K<{n}: {sorted(S)}]"
    return _report("poincare", {"a": list(a)}, lhs_str, rhs_str, start)


def verify_equal_collapse(n: int, k: int) -> VerifyReport:
    start = time.perf_counter()
    a = (k,) * n
    table = table_kernel(n)
    lhs = tkernel(a, table).ct_x()
    scale = IntPoly.const(1)
    for i in range(1, n):
        scale = scale * qbinom((i + 1) * k - 1, k - 1)
    rhs = poincare_W(n, table) * scale
    return _report("poincare-equal", {"n": n, "k": k}, str(lhs), str(rhs), start)


def verify_wtd(n: int) -> VerifyReport:
    start = time.perf_counter()
    lhs = tkernel((1,) * n).ct_x().collapse_t_single()
    rhs = poincare_single_product(n)
    also = poincare_W(n).collapse_t_single()
    lhs_str = str(lhs) if lhs == also else f"{lhs} != {also}"
    return _report("wtd", {"n": n}, lhs_str, str(rhs), start)


def verify_bg_general(a, index_set) -> VerifyReport:
    start = time.perf_counter()
    lhs = bg_kernel(a, index_set).ct_x().to_intpoly()
    rhs = rhs_bg_general(a, index_set)
    return _report("bg-general", {"a": list(a), "I": sorted(index_set)},
                   str(lhs), str(rhs), start)


def verify_bg_alternating(a) -> VerifyReport:
    start = time.perf_counter()
    lhs = bg_alternating_kernel(a).ct_x().to_intpoly()
    rhs = rhs_bg_alternating(a)
    return _report("bg-alternating", {"a": list(a)}, str(lhs), str(rhs), start)


def verify_tournament(t: Tournament, a) -> VerifyReport:
    start = time.perf_counter()
    lhs = tournament_kernel(t, a).ct_x().to_intpoly()
    rhs = rhs_tournament(t, a)
    edges = " ".join(f"{i}>{j}" for i, j in sorted(t.edges))
    return _report("tournament", {"a": list(a), "edges": edges},
                   str(lhs), str(rhs), start)


def verify_kadell(v, a) -> VerifyReport:
    start = time.perf_counter()
    m = weight(v)
    lhs = D_vlambda(v, (m,), a, "qa").to_intpoly()
    rhs = rhs_kadell(v, a)
    return _report("kadell", {"v": list(v), "a": list(a)},
                   str(lhs), str(rhs), start)


def verify_kadell_t(k: int, m: int, a) -> VerifyReport:
    start = time.perf_counter()
    a = tuple(a)
    n = len(a)
    v = (0,) * (k - 1) + (m,) + (0,) * (n - k)
    table = table_kernel(n)
    lhs = D_vlambda(v, (m,), a, "symbolic", table)
    rhs = rhs_kadell_t(k, m, a, table)
    lhs_str = serialize_t_coefficients(t_coefficients(lhs), table.t_pairs)
    rhs_str = serialize_t_coefficients(t_coefficients(rhs), table.t_pairs)
    return _report("kadell-t", {"k": k, "m": m, "a": list(a)},
                   lhs_str, rhs_str, start)


def verify_strict(lam, a, w: Permutation) -> VerifyReport:
    start = time.perf_counter()
    lam = tuple(lam)
    v = w.inverse().act(reverse(lam))
    lhs = D_vlambda(v, tuple(x for x in lam if x), a, "qa").to_intpoly()
    rhs = rhs_strict(lam, a, w)
    return _report("strict", {"lam": list(lam), "a": list(a),
                              "w": w.serialize()},
                   str(lhs), str(rhs), start)


def verify_usum(n: int) -> VerifyReport:
    start = time.perf_counter()
    lhs, rhs = usum_cleared_sides(n)
    return _report("usum", {"n": n}, str(lhs), str(rhs), start)


def verify_usum_k(n: int, k: int) -> VerifyReport:
    start = time.perf_counter()
    lhs, rhs = usum_k_cleared_sides(n, k)
    return _report("usum-k", {"n": n, "k": k}, str(lhs), str(rhs), start)


def verify_prop_kappa(kappa, lam, w, a) -> VerifyReport:
    start = time.perf_counter()
    lhs, rhs = prop_kappa_sides(kappa, lam, w, a)
    pairs = table_kernel(len(a)).t_pairs
    return _report("prop-kappa",
                   {"kappa": kappa.serialize(), "lam": list(lam),
                    "w": w.serialize(), "a": list(a)},
                   serialize_t_coefficients(lhs, pairs),
                   serialize_t_coefficients(rhs, pairs), start)


def verify_prop_zero(kappa, lam, a) -> VerifyReport:
    start = time.perf_counter()
    lhs = D_vlambda(kappa.row_sums(), tuple(x for x in lam if x), a, "symbolic")
    return _report("prop-zero",
                   {"kappa": kappa.serialize(), "lam": list(lam), "a": list(a)},
                   str(lhs), "0", start)


def verify_prop_vnu(v, a, m: int) -> VerifyReport:
    start = time.perf_counter()
    lhs, rhs = prop_vnu_sides(v, a, m)
    pairs = table_kernel(len(a)).t_pairs
    return _report("prop-vnu", {"v": list(v), "a": list(a), "m": m},
                   serialize_t_coefficients(lhs, pairs),
                   serialize_t_coefficients(rhs, pairs), start)


def verify_sills(a, r: int, s: int) -> VerifyReport:
    start = time.perf_counter()
    lhs = sills_lhs(a, r, s)
    rhs = rhs_sills(a, r, s)
    return _report("sills", {"a": list(a), "r": r, "s": s},
                   str(lhs), str(rhs), start)


def verify_lxz(v, a) -> VerifyReport:
    start = time.perf_counter()
    lhs = lxz_lhs(v, a)
    rhs = rhs_lxz(v, a)
    return _report("lxz", {"v": list(v), "a": list(a)},
                   str(lhs), str(rhs), start)


def verify_hook_content(lam, a: int) -> VerifyReport:
    from .symfun import hook_content, schur_onevar_value
    start = time.perf_counter()
    lhs = schur_onevar_value(lam, a)
    rhs = hook_content(lam, a)
    return _report("hook-content", {"lam": list(lam), "a": a},
                   str(lhs), str(rhs), start)

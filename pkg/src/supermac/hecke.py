"""Affine Hecke operators, non-symmetric Macdonald polynomials, the
symmetrized construction of the superspace Macdonald polynomials, the pair
of eigenoperators acting on them, and the product-support machinery.

Operators act on XPoly values: sparse polynomials in x_1..x_N over Q(q,t)
keyed by exponent tuples (no anticommuting variables at this level).  The
generator T_i is

    T_i f = t f + (t x_i - x_{i+1}) * (K_{i,i+1} f - f) / (x_i - x_{i+1}),

whose divided-difference part is always polynomial, so only exact divisions
occur.  The affine generator T_0, the shift tau_i, the rotation omega, the
Cherednik elements Y_i and the t-(anti)symmetrizers over variable ranges are
all built from the same pieces.

Non-symmetric Macdonald polynomials E_eta are constructed by a memoized
recursion: adjacent entries are exchanged through the known T_i action on
the E basis, and the degree is raised through the rotation

    E_(eta_2, ..., eta_N, eta_1 + 1) = q^(-eta_1) x_N omega E_eta.

An independent constructor solves the simultaneous Y-eigenproblem on the
span of Bruhat-lower monomials; it is used as a cross-check oracle.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .ratfun import RF_ONE, RF_ZERO, RatFun, q_power, rf_prod, t_power
from .shapes import SuperPartition, dominates_leq, inversions, occupancy_t_factor
from .superpoly import SuperPolyN, _sort_word

# ---------------------------------------------------------------------------
# XPoly: {exponent tuple: RatFun}
# ---------------------------------------------------------------------------


def xp_zero():
    return {}


def xp_one(N):
    return {(0,) * N: RF_ONE}


def xp_monomial(exp):
    return {tuple(exp): RF_ONE}


def xp_add(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, RF_ZERO) + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def xp_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, RF_ZERO) - c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def xp_scale(a, c):
    if c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def xp_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, RF_ZERO) + ca * cb
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def xp_swap(a, i, j):
    """Exchange variables x_i and x_j (1-based)."""
    out = {}
    for k, c in a.items():
        kk = list(k)
        kk[i - 1], kk[j - 1] = kk[j - 1], kk[i - 1]
        out[tuple(kk)] = c
    return out


def xp_permute(a, sigma):
    """x_i -> x_sigma(i)."""
    out = {}
    n = len(sigma)
    for k, c in a.items():
        kk = [0] * n
        for i in range(n):
            kk[sigma[i] - 1] = k[i]
        key = tuple(kk)
        s = out.get(key, RF_ZERO) + c
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return out


def xp_tau(a, i, power=1):
    """x_i -> q^power x_i."""
    out = {}
    for k, c in a.items():
        out[k] = c * q_power(power * k[i - 1]) if k[i - 1] else c
    return out


def xp_divexact_binomial(f, hi, lo, c_hi, c_lo):
    """Exact division by (c_hi x_hi - c_lo x_lo), both variables 1-based.

    Synthetic division treating f as a polynomial in x_hi whose coefficients
    live in the remaining variables.  Raises ArithmeticError on a nonzero
    remainder (a symmetry bug upstream).
    """
    if not f:
        return {}
    by_deg = {}
    for k, c in f.items():
        by_deg.setdefault(k[hi - 1], {})[k] = c
    dmax = max(by_deg)
    quot = {}
    carry = {}  # g_k, keyed by full exponent tuples with x_hi-degree k
    inv_chi = RF_ONE / c_hi
    for d in range(dmax, 0, -1):
        cd = by_deg.get(d, {})
        # g_{d-1} = (c_d + c_lo * x_lo * g_d) / c_hi  with everything at x_hi-degree d
        g = dict(cd)
        for k, c in carry.items():
            kk = list(k)
            kk[lo - 1] += 1
            kk = tuple(kk)
            s = g.get(kk, RF_ZERO) + c * c_lo
            if s.is_zero():
                g.pop(kk, None)
            else:
                g[kk] = s
        new_carry = {}
        for k, c in g.items():
            kk = list(k)
            kk[hi - 1] -= 1
            new_carry[tuple(kk)] = c * inv_chi
        for k, c in new_carry.items():
            quot[k] = c
        carry = new_carry
    # remainder: c_0 + c_lo x_lo g_0 must vanish
    rem = dict(by_deg.get(0, {}))
    for k, c in carry.items():
        kk = list(k)
        kk[lo - 1] += 1
        kk = tuple(kk)
        s = rem.get(kk, RF_ZERO) + c * c_lo
        if s.is_zero():
            rem.pop(kk, None)
        else:
            rem[kk] = s
    if rem:
        raise ArithmeticError("inexact division by a variable binomial")
    return quot


def xp_mul_binomial(f, hi, lo, c_hi, c_lo):
    """Multiply by (c_hi x_hi - c_lo x_lo)."""
    out = {}
    for k, c in f.items():
        k1 = list(k)
        k1[hi - 1] += 1
        k1 = tuple(k1)
        s = out.get(k1, RF_ZERO) + c * c_hi
        if s.is_zero():
            out.pop(k1, None)
        else:
            out[k1] = s
        k2 = list(k)
        k2[lo - 1] += 1
        k2 = tuple(k2)
        s = out.get(k2, RF_ZERO) - c * c_lo
        if s.is_zero():
            out.pop(k2, None)
        else:
            out[k2] = s
    return out


# ---------------------------------------------------------------------------
# the operator layer
# ---------------------------------------------------------------------------


def apply_T(f, i, N):
    """T_i = t + (t x_i - x_{i+1})/(x_i - x_{i+1}) (K_{i,i+1} - 1)."""
    h = xp_sub(xp_swap(f, i, i + 1), f)
    if not h:
        return xp_scale(f, RF_T_CONST)
    g = xp_divexact_binomial(h, i, i + 1, RF_ONE, RF_ONE)
    return xp_add(xp_scale(f, RF_T_CONST), xp_mul_binomial(g, i, i + 1, RF_T_CONST, RF_ONE))


def apply_T_inv(f, i, N):
    """T_i^{-1} = t^{-1} - 1 + t^{-1} T_i."""
    tf = apply_T(f, i, N)
    tm1 = t_power(-1)
    return xp_add(xp_scale(f, tm1 - RF_ONE), xp_scale(tf, tm1))


def apply_T0(f, N):
    """T_0 = t + (qt x_N - x_1)/(q x_N - x_1) (K_{1,N} tau_1 tau_N^{-1} - 1)."""
    g = xp_tau(xp_tau(f, N, -1), 1, 1)
    g = xp_swap(g, 1, N)
    h = xp_sub(g, f)
    if not h:
        return xp_scale(f, RF_T_CONST)
    quot = xp_divexact_binomial(h, N, 1, RF_Q_CONST, RF_ONE)
    return xp_add(
        xp_scale(f, RF_T_CONST),
        xp_mul_binomial(quot, N, 1, RF_Q_CONST * RF_T_CONST, RF_ONE),
    )


def apply_omega(f, N):
    """omega = K_{N-1,N} ... K_{1,2} tau_1: sends x_1 -> q x_N, x_i -> x_{i-1}."""
    out = {}
    for k, c in f.items():
        kk = k[1:] + (k[0],)
        cc = c * q_power(k[0]) if k[0] else c
        s = out.get(kk, RF_ZERO) + cc
        if s.is_zero():
            out.pop(kk, None)
        else:
            out[kk] = s
    return out


def apply_Y(f, i, N):
    """Cherednik element Y_i = t^{i-N} T_i ... T_{N-1} omega T_1^{-1} ... T_{i-1}^{-1}."""
    g = f
    for j in range(i - 1, 0, -1):
        g = apply_T_inv(g, j, N)
    g = apply_omega(g, N)
    for j in range(N - 1, i - 1, -1):
        g = apply_T(g, j, N)
    return xp_scale(g, t_power(i - N))


def apply_Y_sum(f, N, weights=None):
    """sum_i w_i Y_i f (weights default to all ones)."""
    out = {}
    for i in range(1, N + 1):
        g = apply_Y(f, i, N)
        if weights is not None and not weights[i - 1].is_one():
            g = xp_scale(g, weights[i - 1])
        out = xp_add(out, g)
    return out


def apply_U(f, lo, hi, N, minus=False):
    """t-symmetrizer (or antisymmetrizer) over the variable range lo..hi.

    U+ = sum_sigma T_sigma, U- = sum_sigma (-t)^{-l(sigma)} T_sigma over the
    symmetric group on x_lo..x_hi, computed through the coset factorization
    so only O((hi-lo)^3) generator applications are needed.
    """
    if hi - lo + 1 <= 1:
        return dict(f)
    weight = -(t_power(-1)) if minus else RF_ONE
    # chain sum over the coset representatives {e, s_{hi-1}, s_{hi-1}s_{hi-2}, ...}
    # of the subgroup fixing x_hi; the representative chain applies T_j first
    total = dict(f)
    for j in range(hi - 1, lo - 1, -1):
        g = f
        for k in range(j, hi):
            g = apply_T(g, k, N)
        total = xp_add(total, xp_scale(g, weight ** (hi - j)))
    return apply_U(total, lo, hi - 1, N, minus=minus)


def apply_A(f, lo, hi, N):
    """Plain antisymmetrization sum_sigma sign(sigma) K_sigma over x_lo..x_hi."""
    out = {}
    idx = list(range(lo, hi + 1))
    n = len(idx)
    for perm in itertools.permutations(range(n)):
        inv = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        sigma = list(range(1, N + 1))
        for a in range(n):
            sigma[idx[a] - 1] = idx[perm[a]]
        g = xp_permute(f, tuple(sigma))
        out = xp_add(out, g if inv % 2 == 0 else xp_scale(g, -RF_ONE))
    return out


def vandermonde(lo, hi, N, tcoef=False):
    """prod_{lo <= i < j <= hi} (x_i - x_j), or (t x_i - x_j) when tcoef."""
    out = xp_one(N)
    chi = RF_T_CONST if tcoef else RF_ONE
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            out = xp_mul_binomial(out, i, j, chi, RF_ONE)
    return out


def divide_vandermonde(f, lo, hi, tcoef=False):
    """Exact division by the (t-)Vandermonde on x_lo..x_hi."""
    chi = RF_T_CONST if tcoef else RF_ONE
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            f = xp_divexact_binomial(f, i, j, chi, RF_ONE)
    return f


RF_T_CONST = t_power(1)
RF_Q_CONST = q_power(1)


# ---------------------------------------------------------------------------
# non-symmetric Macdonald polynomials
# ---------------------------------------------------------------------------


def cherednik_eigenvalue(eta, i):
    """q^{eta_i} t^{-lbar(i)} with lbar counting the printed co-inversion rule."""
    v = eta[i - 1]
    lbar = sum(1 for k in range(i - 1) if eta[k] >= v) + sum(
        1 for k in range(i, len(eta)) if eta[k] > v
    )
    return q_power(v) * t_power(-lbar)


_E_CACHE = {}


def nonsym_macdonald(eta):
    """E_eta, monic on x^eta, built by the exchange/rotation recursion."""
    eta = tuple(eta)
    out = _E_CACHE.get(eta)
    if out is not None:
        return out
    N = len(eta)
    if all(v == 0 for v in eta):
        out = xp_one(N)
        _E_CACHE[eta] = out
        return out
    # find a descent to undo; otherwise eta is weakly increasing and the
    # rotation E_eta = q^{1-eta_N} x_N omega E_(eta_N - 1, eta_1..eta_{N-1}) applies
    desc = next((i for i in range(N - 1) if eta[i] > eta[i + 1]), None)
    if desc is None:
        prev = (eta[-1] - 1,) + eta[:-1]
        g = apply_omega(nonsym_macdonald(prev), N)
        out = {}
        for k, c in g.items():
            kk = list(k)
            kk[N - 1] += 1
            out[tuple(kk)] = c
        out = xp_scale(out, q_power(1 - eta[-1]))
    else:
        i = desc + 1  # 1-based
        prev = list(eta)
        prev[desc], prev[desc + 1] = prev[desc + 1], prev[desc]
        prev = tuple(prev)
        e_prev = nonsym_macdonald(prev)
        delta = cherednik_eigenvalue(prev, i) / cherednik_eigenvalue(prev, i + 1)
        a = (RF_T_CONST - RF_ONE) / (RF_ONE - RF_ONE / delta)
        g = xp_sub(apply_T(e_prev, i, N), xp_scale(e_prev, a))
        out = xp_scale(g, t_power(-1))
    _E_CACHE[eta] = out
    return out


# -- Bruhat order on compositions -------------------------------------------


def _sorted_desc(eta):
    return tuple(sorted(eta, reverse=True))


def min_length_perm(eta):
    """w with eta = w(eta+), stable on equal entries; returned as images tuple."""
    plus = _sorted_desc(eta)
    used = [False] * len(plus)
    w_inv = []
    for v in eta:
        for j, pv in enumerate(plus):
            if not used[j] and pv == v:
                used[j] = True
                w_inv.append(j + 1)
                break
    w = [0] * len(eta)
    for i, j in enumerate(w_inv):
        w[j - 1] = i + 1
    return tuple(w)


def perm_bruhat_leq(u, v):
    """Tableau criterion for the (strong) Bruhat order on permutations."""
    n = len(u)
    for k in range(1, n):
        us = sorted(u[:k])
        vs = sorted(v[:k])
        if any(a > b for a, b in zip(us, vs)):
            return False
    return True


def bruhat_less(nu, eta):
    """nu strictly below eta: smaller dominance orbit, or same orbit and the
    minimal word of eta is a proper subword of that of nu (kept exactly as
    the printed convention: dominant rearrangements are maximal)."""
    if nu == eta or sum(nu) != sum(eta):
        return False
    np_, ep = _sorted_desc(nu), _sorted_desc(eta)
    if np_ != ep:
        return dominates_leq(np_, ep)
    wn, we = min_length_perm(nu), min_length_perm(eta)
    return we != wn and perm_bruhat_leq(we, wn)


def nonsym_macdonald_eigensolve(eta):
    """Oracle constructor: solve (Y_i - ebar_i) E = 0 on the invariant span of
    monomials x^nu with nu+ dominated by eta+ (same total degree)."""
    eta = tuple(eta)
    N = len(eta)
    deg = sum(eta)
    span = [
        nu
        for nu in itertools.product(range(deg + 1), repeat=N)
        if sum(nu) == deg and dominates_leq(_sorted_desc(nu), _sorted_desc(eta))
    ]
    span.sort()
    index = {nu: j for j, nu in enumerate(span)}
    unknowns = [nu for nu in span if nu != eta]
    uidx = {nu: j for j, nu in enumerate(unknowns)}
    rows = []
    rhs = []
    for i in range(1, N + 1):
        ebar = cherednik_eigenvalue(eta, i)
        images = {}
        for nu in span:
            img = apply_Y(xp_monomial(nu), i, N)
            images[nu] = img
        for target in span:
            row = [RF_ZERO] * len(unknowns)
            b = RF_ZERO
            for nu in span:
                c = images[nu].get(target, RF_ZERO)
                if nu == target:
                    c = c - ebar
                if nu == eta:
                    b = b - c
                elif not c.is_zero():
                    row[uidx[nu]] = c
            rows.append(row)
            rhs.append(b)
    sol = _solve_exact(rows, rhs, len(unknowns))
    out = {eta: RF_ONE}
    for nu, c in zip(unknowns, sol):
        if not c.is_zero():
            out[nu] = c
    return out


def _solve_exact(rows, rhs, k):
    """Gaussian elimination over Q(q,t) for a consistent (possibly overdetermined)
    system; raises on inconsistency or underdetermination."""
    aug = [row + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(aug)) if not aug[i][col].is_zero()), None)
        if piv is None:
            raise ArithmeticError("underdetermined eigenproblem")
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(aug)):
        if not aug[i][k].is_zero():
            raise ArithmeticError("inconsistent eigenproblem")
    return [aug[i][k] for i in range(k)]


# ---------------------------------------------------------------------------
# symmetrization to the Macdonald superpolynomials
# ---------------------------------------------------------------------------


def composition_for(lam: SuperPartition, N):
    """The composition (a_m..a_1, s-part padded reversed) indexing the seed E."""
    m = lam.m
    s_padded = list(lam.s_parts) + [0] * (N - m - len(lam.s_parts))
    return tuple(reversed(lam.a_parts)) + tuple(reversed(s_padded))


def symmetrize_to_P(lam: SuperPartition, N) -> SuperPolyN:
    """The Macdonald superpolynomial from its non-symmetric seed:
    normalized coset-symmetrization of theta_1..theta_m A_m U+ E."""
    m = lam.m
    if N < lam.ell or N < m:
        raise ValueError("not enough variables")
    eta = composition_for(lam, N)
    e = nonsym_macdonald(eta)
    g = apply_U(e, m + 1, N, N)
    g = apply_A(g, 1, m, N) if m >= 2 else g
    # attach theta_1..theta_m and spread over coset representatives
    word = tuple(range(1, m + 1))
    base = SuperPolyN(N, {(word, k): c for k, c in g.items()})
    total = SuperPolyN(N)
    for subset in itertools.combinations(range(1, N + 1), m):
        rest = [i for i in range(1, N + 1) if i not in subset]
        sigma = [0] * N
        for a, s in enumerate(subset):
            sigma[a] = s
        for a, s in enumerate(rest):
            sigma[m + a] = s
        total = total + base.kappa(tuple(sigma))
    npad = N - m
    sign = -1 if comb(m, 2) % 2 else 1
    const = RatFun.from_int(sign) / (
        occupancy_t_factor(lam.s_parts, npad) * t_power(inversions(lam.s_parts, npad))
    )
    return total.scale(const)


# ---------------------------------------------------------------------------
# the commuting eigenoperator pair
# ---------------------------------------------------------------------------


def epsilon_eigenvalue(parts, N):
    """sum_{i=1..N} q^{parts_i} t^{1-i} (parts padded with zeros)."""
    padded = list(parts) + [0] * (N - len(parts))
    out = RF_ZERO
    for i, p in enumerate(padded, start=1):
        out = out + q_power(p) * t_power(1 - i)
    return out


def d1_operator(f: SuperPolyN, which) -> SuperPolyN:
    """The degree-one eigenoperator pair acting on a symmetric superpolynomial.

    which = 'star' applies the plain Cherednik sum; 'circledast' weights the
    first m Cherednik elements by q.  On a Macdonald superpolynomial the
    eigenvalues are the epsilon values of star / circledast respectively.
    """
    N = f.n_vars
    m = f.fermionic_degree()
    word = tuple(range(1, m + 1))
    g = f.theta_coefficient(word)
    if not g:
        return SuperPolyN(N)
    if m >= 2:
        g = divide_vandermonde(g, 1, m, tcoef=False)
        g = xp_mul(vandermonde(1, m, N, tcoef=True), g)
    if which == "star":
        weights = None
    elif which == "circledast":
        weights = [RF_Q_CONST] * m + [RF_ONE] * (N - m)
    else:
        raise ValueError("which must be 'star' or 'circledast'")
    g = apply_Y_sum(g, N, weights)
    if m >= 2:
        g = divide_vandermonde(g, 1, m, tcoef=True)
        g = xp_mul(vandermonde(1, m, N, tcoef=False), g)
    base = SuperPolyN(N, {(word, k): c for k, c in g.items()})
    total = SuperPolyN(N)
    for subset in itertools.combinations(range(1, N + 1), m):
        rest = [i for i in range(1, N + 1) if i not in subset]
        sigma = [0] * N
        for a, s in enumerate(subset):
            sigma[a] = s
        for a, s in enumerate(rest):
            sigma[m + a] = s
        total = total + base.kappa(tuple(sigma))
    return total


# ---------------------------------------------------------------------------
# product supports (the interpolation bound)
# ---------------------------------------------------------------------------


def interp_leq(nu, eta):
    """nu <= eta in the matching order: some permutation pi has
    nu_i < eta_pi(i) when i < pi(i) and nu_i <= eta_pi(i) otherwise."""
    n = len(nu)
    for pi in itertools.permutations(range(1, n + 1)):
        ok = True
        for i in range(1, n + 1):
            j = pi[i - 1]
            v, w = nu[i - 1], eta[j - 1]
            if i < j:
                if not v < w:
                    ok = False
                    break
            else:
                if not v <= w:
                    ok = False
                    break
        if ok:
            return True
    return False


def support_set(N, p, eta):
    """All mu with eta <= mu <= eta + 1^N in the matching order, |mu| = |eta|+p."""
    plus = tuple(v + 1 for v in eta)
    out = []
    for mu in itertools.product(range(max(plus) + 1), repeat=N):
        if sum(mu) != sum(eta) + p:
            continue
        if interp_leq(eta, mu) and interp_leq(mu, plus):
            out.append(mu)
    return out


def expand_in_E(f, N):
    """Expansion of an XPoly in the E basis by Bruhat-maximal elimination."""
    f = dict(f)
    out = {}
    while f:
        support = list(f)
        mx = support[0]
        for nu in support[1:]:
            if bruhat_less(mx, nu):
                mx = nu
        c = f[mx]
        out[mx] = c
        f = xp_sub(f, xp_scale(nonsym_macdonald(mx), c))
        if mx in f:
            raise ArithmeticError("elimination failed to clear the leading term")
    return out


def pieri_support_set(eta, idx):
    """Support of (prod_{i in idx} x_i) E_eta in the E basis; asserts the
    support lies inside the matching-order window and returns it."""
    eta = tuple(eta)
    N = len(eta)
    f = nonsym_macdonald(eta)
    for i in idx:
        f = xp_mul(f, xp_monomial(tuple(1 if j == i - 1 else 0 for j in range(N))))
    coeffs = expand_in_E(f, N)
    support = set(coeffs)
    window = set(support_set(N, len(set(idx)), eta))
    outside = support - window
    if outside:
        raise AssertionError(f"support escapes the interpolation window: {outside}")
    return support

"""Exact arithmetic in the coefficient field Q(q,t) and the ring Q(q,t)[u].

Representations (everything exact, nothing floating-point):

  QTPoly  =  wrapper over Dict[(dq, dt), Fraction]
             a polynomial in q and t; the zero polynomial is the empty dict
  RatFun  =  scale * num / den where scale is a Fraction and num, den are
             integer-coefficient dicts, both content-free (integer-primitive)
             with positive leading coefficient in graded lexicographic order
             with q > t, and gcd(num, den) = 1.  This normal form is unique,
             so equality of RatFun values is structural.  The frozen monomial
             order (graded-lex, q > t) is used for all canonical forms and
             printing.
  UPoly   =  tuple of RatFun coefficients of u^0, u^1, ... (trailing zeros
             stripped; the zero polynomial is the empty tuple)

Keeping the rational content out of the coefficient dicts makes the hot
polynomial kernels pure integer arithmetic.  The bivariate gcd runs modular
images (Brown's method: monic gcds of univariate images mod a large prime,
Newton interpolation, symmetric lift, trial-division verification) with a
primitive polynomial-remainder sequence as the rarely-taken fallback.

Laurent-type inputs (q^-1, t^-1) are cleared into num/den form; there is no
separate Laurent type.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Fr = Fraction
_F0 = Fraction(0)
_F1 = Fraction(1)
_ONE_D = {(0, 0): 1}

# ---------------------------------------------------------------------------
# integer dict-level polynomial helpers ({(dq, dt): int}, no zero values)
# ---------------------------------------------------------------------------


def _qt_add(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _qt_scaled_add(a, alpha, b, beta):
    """alpha*a + beta*b for integer scalars."""
    out = {k: alpha * c for k, c in a.items()} if alpha != 1 else dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + beta * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _qt_mul(a, b):
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a
    out = {}
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            k = (qa + qb, ta + tb)
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _qt_shift(a, dq, dt):
    """Multiply by the monomial q^dq * t^dt (dq, dt may be negative)."""
    return {(kq + dq, kt + dt): c for (kq, kt), c in a.items()}


def _grlex_key(k):
    return (k[0] + k[1], k[0])


def _qt_lead(a):
    k = max(a, key=_grlex_key)
    return k, a[k]


def _qt_content_sign(a):
    """(content, sign) with content > 0; content of the zero dict is 0."""
    if not a:
        return 0, 1
    g = 0
    for c in a.values():
        g = int_gcd(g, c if c >= 0 else -c)
        if g == 1:
            break
    _, lc = _qt_lead(a)
    return g, (1 if lc > 0 else -1)


def _qt_primitive(a):
    """(rational_content_with_sign, primitive positive-leading dict)."""
    if not a:
        return _F0, {}
    g, sign = _qt_content_sign(a)
    div = g * sign
    if div == 1:
        return _F1, a
    return Fraction(div), {k: c // div for k, c in a.items()}


def _qt_divexact(a, b):
    """Exact division of integer dicts; raises ArithmeticError if inexact."""
    if not a:
        return {}
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(b) == 1:
        (bq, bt), bc = next(iter(b.items()))
        out = {}
        for (kq, kt), c in a.items():
            if kq < bq or kt < bt or c % bc:
                raise ArithmeticError("inexact polynomial division")
            out[(kq - bq, kt - bt)] = c // bc
        return out
    rem = dict(a)
    out = {}
    bk, bc = _qt_lead(b)
    while rem:
        rk, rc = _qt_lead(rem)
        kq, kt = rk[0] - bk[0], rk[1] - bk[1]
        if kq < 0 or kt < 0 or rc % bc:
            raise ArithmeticError("inexact polynomial division")
        qc = rc // bc
        out[(kq, kt)] = qc
        for (mq, mt), mc in b.items():
            k = (mq + kq, mt + kt)
            s = rem.get(k, 0) - qc * mc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return out


# -- integer univariate helpers (little-endian int lists) --------------------


def _zt_strip(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _zt_content(p):
    g = 0
    for c in p:
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _zt_primitive(p):
    g = _zt_content(p)
    if g > 1:
        return [c // g for c in p]
    return list(p)


def _zt_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _zt_strip(out)


def _zt_scale(a, c):
    return _zt_strip([x * c for x in a])


def _zt_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _zt_strip(out)


def _zt_pseudo_rem(a, b):
    """Pseudo-remainder of a by b over Z (b nonzero)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da, la = len(a) - 1, a[-1]
        a = _zt_scale(a, lb)
        shifted = [0] * (da - db) + _zt_scale(b, la)
        a = _zt_sub(a, shifted)
        if len(a) - 1 == da:
            raise ArithmeticError("pseudo-division failed to reduce degree")
    return a


def _zt_divexact(a, b):
    """Exact division over Z[t]; integer arithmetic only."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        if any(a):
            raise ArithmeticError("inexact univariate division")
        return []
    out = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        top = a[k + db]
        if top % lb:
            raise ArithmeticError("inexact univariate division")
        c = top // lb
        out[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return _zt_strip(out)


def _zt_divides(d, a):
    try:
        _zt_divexact(a, d)
        return True
    except ArithmeticError:
        return False


_GCD_PRIMES = (2147483647, 2147483629, 1000000007, 998244353)


def _fp_gcd(a, b, p):
    """Monic Euclidean gcd of a, b in F_p[t] (little-endian int lists).

    Inner reductions are inverse-free; only the final monic scaling divides.
    """
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and not b[-1]:
        b.pop()
    while a and not a[-1]:
        a.pop()
    while b:
        lb = b[-1]
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            la = a[-1]
            k = len(a) - 1 - db
            a = [c * lb % p for c in a]
            for i, bc in enumerate(b):
                a[k + i] = (a[k + i] - la * bc) % p
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _zt_gcd(a, b):
    """Primitive gcd of integer univariate polynomials.

    Modular images with a trial-division check do nearly all the work; the
    primitive PRS remains as the (rare) fallback for unlucky primes.
    """
    a, b = _zt_strip(list(a)), _zt_strip(list(b))
    if not a:
        return _zt_primitive(b)
    if not b:
        return _zt_primitive(a)
    ca, cb = _zt_content(a), _zt_content(b)
    cg = int_gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return [cg]
    ap = [c // ca for c in a]
    bp = [c // cb for c in b]
    for p in _GCD_PRIMES:
        if ap[-1] % p == 0 or bp[-1] % p == 0:
            continue
        gp = _fp_gcd(ap, bp, p)
        if len(gp) == 1:
            return [cg]
        lcg = int_gcd(ap[-1], bp[-1])
        cand = [(c * lcg) % p for c in gp]
        cand = [c - p if c > p // 2 else c for c in cand]
        cand = _zt_primitive(_zt_strip(cand))
        if cand and _zt_divides(cand, ap) and _zt_divides(cand, bp):
            g = _zt_scale(cand, cg)
            if g[-1] < 0:
                g = [-c for c in g]
            return g
        break
    while bp:
        r = _zt_pseudo_rem(ap, bp)
        ap, bp = bp, _zt_primitive(r)
    g = _zt_scale(ap, cg)
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


# -- bivariate gcd over Z[t][q] ----------------------------------------------


def _qt_to_zq(a):
    """{dq: little-endian int t-poly} view of an integer dict."""
    zq = {}
    for (dq, dt), c in a.items():
        row = zq.setdefault(dq, {})
        row[dt] = c
    out = {}
    for dq, row in zq.items():
        lst = [0] * (max(row) + 1)
        for dt, v in row.items():
            lst[dt] = v
        out[dq] = lst
    return out


def _rows_content(rows):
    """Gcd over Z[t] of a family of rows (the in-q content).

    A modular fold detects the common constant-content case cheaply; it is
    sound as long as the starting row's leading coefficient survives mod p.
    """
    nz = sorted((r for r in rows if r), key=len)
    if not nz:
        return []
    if len(nz) == 1:
        out = _zt_primitive(nz[0])
        if out[-1] < 0:
            out = [-c for c in out]
        return out
    p = _GCD_PRIMES[0]
    if nz[0][-1] % p:
        g = [c % p for c in nz[0]]
        for r in nz[1:]:
            g = _fp_gcd(g, [c % p for c in r], p)
            if len(g) == 1:
                cg = 0
                for r2 in nz:
                    cg = int_gcd(cg, _zt_content(r2))
                    if cg == 1:
                        break
                return [cg]
    cont = nz[0]
    for r in nz[1:]:
        cont = _zt_gcd(cont, r)
        if cont == [1]:
            break
    if cont[-1] < 0:
        cont = [-c for c in cont]
    return cont


def _zq_primitive_part(zq):
    cont = _rows_content(zq.values())
    if cont == [1]:
        return cont, zq
    return cont, {dq: _zt_divexact(lst, cont) for dq, lst in zq.items()}


def _zq_dense(zq):
    d = max(zq) if zq else -1
    return [list(zq.get(i, [])) for i in range(d + 1)]


def _zq_pseudo_rem(a, b):
    a = [list(x) for x in a]
    while a and not a[-1]:
        a.pop()
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        la = a[-1]
        a = [_zt_mul(x, lb) for x in a]
        for i in range(db + 1):
            a[da - db + i] = _zt_sub(a[da - db + i], _zt_mul(b[i], la))
        while a and not a[-1]:
            a.pop()
        if a and len(a) - 1 == da:
            raise ArithmeticError("bivariate pseudo-division failed")
    return a


def _zq_primitive(a):
    cont = _rows_content(a)
    if not cont or cont == [1]:
        return a
    return [_zt_divexact(x, cont) if x else [] for x in a]


def _zt_eval_mod(poly, x, p):
    out = 0
    for c in reversed(poly):
        out = (out * x + c) % p
    return out


_INV_CACHE = {}


def _mod_inverse(x, p):
    key = (x, p)
    v = _INV_CACHE.get(key)
    if v is None:
        v = pow(x, p - 2, p)
        if len(_INV_CACHE) < 1 << 16:
            _INV_CACHE[key] = v
    return v


def _fp_interpolate(xs, ys, p):
    """Newton interpolation in F_p; returns little-endian coefficients."""
    n = len(xs)
    coef = [y % p for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            inv = _mod_inverse((xs[i] - xs[i - j]) % p, p)
            coef[i] = (coef[i] - coef[i - 1]) * inv % p
    poly = [coef[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [0] + poly
        for k in range(len(poly)):
            shifted[k] = (shifted[k] - xs[i] * poly[k]) % p
        while shifted and not shifted[-1]:
            shifted.pop()
        poly = shifted or [0]
        poly[0] = (poly[0] + coef[i]) % p
        while poly and not poly[-1]:
            poly.pop()
        poly = poly or [0]
    return poly


def _zq_divexact_dense(a, b):
    """Exact division of dense Z[t][q] polynomials; raises if inexact."""
    a = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if any(any(r) for r in a):
            raise ArithmeticError("inexact bivariate division")
        return []
    out = [[] for _ in range(len(a) - db)]
    for k in range(len(a) - 1 - db, -1, -1):
        top = a[k + db]
        c = _zt_divexact(top, lb) if top else []
        out[k] = c
        if c:
            for i in range(db + 1):
                if b[i]:
                    a[k + i] = _zt_sub(a[k + i], _zt_mul(b[i], c))
    if any(any(r) for r in a):
        raise ArithmeticError("inexact bivariate division")
    return out


def _zq_divides(g, a):
    try:
        _zq_divexact_dense(a, g)
        return True
    except ArithmeticError:
        return False


def _zq_modular_gcd(da, db_):
    """Gcd of primitive dense Z[t][q] polynomials by modular images.

    Monic image gcds at enough t-points are scaled by the leading-coefficient
    gcd, interpolated, lifted symmetrically and verified by trial division.
    Sound: every retained point keeps both leading coefficients nonzero mod p,
    so image degrees bound the true degree from above, and a verified divisor
    of matching degree must be the gcd.  Returns None when a lift fails
    (unlucky prime), [[1]] for provably coprime inputs.
    """
    p = _GCD_PRIMES[0]
    lca, lcb = da[-1], db_[-1]
    gamma = _zt_gcd(lca, lcb)
    degt = min(
        max((len(c) - 1 for c in da if c), default=0),
        max((len(c) - 1 for c in db_ if c), default=0),
    )
    need = len(gamma) + degt
    xs, imgs, dmin = [], [], None
    t0 = 0
    while len(xs) < need:
        t0 += 1
        if t0 > 5 * need + 50:
            return None
        if _zt_eval_mod(lca, t0, p) == 0 or _zt_eval_mod(lcb, t0, p) == 0:
            continue
        ia = [_zt_eval_mod(c, t0, p) for c in da]
        ib = [_zt_eval_mod(c, t0, p) for c in db_]
        g0 = _fp_gcd(ia, ib, p)
        d0 = len(g0) - 1
        if d0 == 0:
            return [[1]]
        if dmin is None or d0 < dmin:
            dmin, xs, imgs = d0, [], []
        if d0 == dmin:
            gam0 = _zt_eval_mod(gamma, t0, p)
            xs.append(t0)
            imgs.append([c * gam0 % p for c in g0])
    cand = []
    for j in range(dmin + 1):
        cj = _fp_interpolate(xs, [img[j] for img in imgs], p)
        cj = [c - p if c > p // 2 else c for c in cj]
        cand.append(_zt_strip(cj))
    if not cand[-1]:
        return None
    cont = []
    for c in cand:
        cont = _zt_gcd(cont, c)
        if cont == [1]:
            break
    if cont and cont != [1]:
        cand = [_zt_divexact(c, cont) if c else [] for c in cand]
    if _zq_divides(cand, da) and _zq_divides(cand, db_):
        return cand
    return None


_GCD_MEMO = {}


def qt_gcd(a, b):
    """Gcd of integer q,t-dicts: primitive, positive leading coefficient.

    Results are memoized; the same numerator/denominator pairs recur heavily
    in orthogonalization sweeps.
    """
    if not a:
        c, s = _qt_content_sign(b)
        return {k: v // (c * s) for k, v in b.items()} if c else {}
    if not b:
        c, s = _qt_content_sign(a)
        return {k: v // (c * s) for k, v in a.items()} if c else {}
    if len(a) == 1 or len(b) == 1:
        aq = min(k[0] for k in a)
        at = min(k[1] for k in a)
        bq = min(k[0] for k in b)
        bt = min(k[1] for k in b)
        ca, _ = _qt_content_sign(a)
        cb, _ = _qt_content_sign(b)
        return {(min(aq, bq), min(at, bt)): int_gcd(ca, cb)}
    key = (frozenset(a.items()), frozenset(b.items()))
    hit = _GCD_MEMO.get(key)
    if hit is not None:
        return dict(hit)
    g = _qt_gcd_raw(a, b)
    if len(_GCD_MEMO) < 1 << 17:
        _GCD_MEMO[key] = dict(g)
    return g


def _qt_gcd_raw(a, b):
    aq = min(k[0] for k in a)
    at = min(k[1] for k in a)
    bq = min(k[0] for k in b)
    bt = min(k[1] for k in b)
    mq, mt = min(aq, bq), min(at, bt)
    a = _qt_shift(a, -aq, -at)
    b = _qt_shift(b, -bq, -bt)
    za = _qt_to_zq(a)
    zb = _qt_to_zq(b)
    ca, za = _zq_primitive_part(za)
    cb, zb = _zq_primitive_part(zb)
    cg = _zt_gcd(ca, cb)
    da, db_ = _zq_dense(za), _zq_dense(zb)
    if len(da) < len(db_):
        da, db_ = db_, da
    if len(db_) == 1:
        # one side is free of q: the gcd is univariate in t
        cont = db_[0]
        for row in da:
            cont = _zt_gcd(cont, row)
            if cont == [1]:
                break
        g = [cont]
    else:
        g = _zq_modular_gcd(da, db_)
        if g is None:
            while db_:
                r = _zq_pseudo_rem(da, db_)
                da, db_ = db_, _zq_primitive(r)
            g = da
    out = {}
    for dq, lst in enumerate(g):
        for dt, c in enumerate(lst):
            if c:
                out[(dq, dt)] = c
    if cg != [1]:
        cgd = {(0, dt): c for dt, c in enumerate(cg) if c}
        out = _qt_mul(out, cgd)
    out = _qt_shift(out, mq, mt)
    c, s = _qt_content_sign(out)
    if c * s != 1:
        out = {k: v // (c * s) for k, v in out.items()}
    return out


# ---------------------------------------------------------------------------
# QTPoly: the Fraction-coefficient public polynomial view
# ---------------------------------------------------------------------------


class QTPoly:
    """Immutable sparse polynomial in q and t over Q."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {
            k: Fraction(v) for k, v in (terms or {}).items() if v
        }
        self._hash = None

    @staticmethod
    def const(c):
        return QTPoly({(0, 0): c})

    @staticmethod
    def monomial(dq, dt, c=1):
        return QTPoly({(dq, dt): c})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): _F1}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, QTPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _merge(self, other, sign):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, _F0) + sign * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._hash = None
        return p

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def __neg__(self):
        p = QTPoly.__new__(QTPoly)
        p.terms = {k: -c for k, c in self.terms.items()}
        p._hash = None
        return p

    def __mul__(self, other):
        out = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                k = (qa + qb, ta + tb)
                s = out.get(k, _F0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        p = QTPoly.__new__(QTPoly)
        p.terms = out
        p._hash = None
        return p

    def degree_q(self):
        return max((k[0] for k in self.terms), default=-1)

    def degree_t(self):
        return max((k[1] for k in self.terms), default=-1)

    def eval_at(self, qv, tv):
        total = _F0
        for (dq, dt), c in self.terms.items():
            total += c * qv**dq * tv**dt
        return total

    def __str__(self):
        return poly_str(self.terms)

    def __repr__(self):
        return f"QTPoly({self})"


QT_ZERO = QTPoly()
QT_ONE = QTPoly.const(1)


def poly_str(terms):
    """Canonical text form: graded-lex descending, explicit * and ^."""
    if not terms:
        return "0"
    parts = []
    for (dq, dt) in sorted(terms, key=_grlex_key, reverse=True):
        c = Fraction(terms[(dq, dt)])
        factors = []
        if dq:
            factors.append("q" if dq == 1 else f"q^{dq}")
        if dt:
            factors.append("t" if dt == 1 else f"t^{dt}")
        mono = "*".join(factors)
        ac = abs(c)
        if not mono:
            body = str(ac)
        elif ac == 1:
            body = mono
        else:
            body = f"{ac}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _split_fraction_dict(terms):
    """(content Fraction, primitive positive-leading int dict)."""
    if not terms:
        return _F0, {}
    lcm = 1
    for c in terms.values():
        d = Fraction(c).denominator
        lcm = lcm * d // int_gcd(lcm, d)
    ints = {k: int(Fraction(c) * lcm) for k, c in terms.items()}
    g, sign = _qt_content_sign(ints)
    div = g * sign
    return Fraction(div, lcm), {k: c // div for k, c in ints.items()}


# ---------------------------------------------------------------------------
# RatFun
# ---------------------------------------------------------------------------


class RatFun:
    """Element of Q(q,t) in the normal form scale * num / den.

    num and den are coprime integer-primitive dicts with positive graded-lex
    leading coefficients; the rational content and the sign live in scale.
    """

    __slots__ = ("sc", "nd", "dd", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = QTPoly.const(num)
        if den is None:
            den = QT_ONE
        elif isinstance(den, (int, Fraction)):
            den = QTPoly.const(den)
        sn, n = _split_fraction_dict(num.terms)
        sd, d = _split_fraction_dict(den.terms)
        if not d:
            raise ZeroDivisionError("zero denominator in Q(q,t)")
        if not n:
            self.sc, self.nd, self.dd = _F0, {}, dict(_ONE_D)
            self._hash = None
            return
        sc, n, d = _reduce(sn / sd, n, d)
        self.sc, self.nd, self.dd = sc, n, d
        self._hash = None

    @staticmethod
    def _trusted(sc, nd, dd):
        r = RatFun.__new__(RatFun)
        r.sc, r.nd, r.dd = sc, nd, dd
        r._hash = None
        return r

    @staticmethod
    def from_int(c):
        c = Fraction(c)
        if not c:
            return RF_ZERO
        return RatFun._trusted(c, dict(_ONE_D), dict(_ONE_D))

    @staticmethod
    def monomial(dq, dt, c=1):
        """c * q^dq * t^dt, with negative exponents cleared into the denominator."""
        c = Fraction(c)
        if not c:
            return RF_ZERO
        return RatFun._trusted(
            c,
            {(max(dq, 0), max(dt, 0)): 1},
            {(max(-dq, 0), max(-dt, 0)): 1},
        )

    # -- views ------------------------------------------------------------

    @property
    def num(self):
        """Numerator as a QTPoly (scale folded in)."""
        p = QTPoly.__new__(QTPoly)
        p.terms = {k: self.sc * c for k, c in self.nd.items()}
        p._hash = None
        return p

    @property
    def den(self):
        p = QTPoly.__new__(QTPoly)
        p.terms = {k: Fraction(c) for k, c in self.dd.items()}
        p._hash = None
        return p

    def is_zero(self):
        return not self.sc

    def is_one(self):
        return self.sc == 1 and self.nd == _ONE_D and self.dd == _ONE_D

    def __bool__(self):
        return bool(self.sc)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFun.from_int(other)
        return (
            isinstance(other, RatFun)
            and self.sc == other.sc
            and self.nd == other.nd
            and self.dd == other.dd
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.sc, frozenset(self.nd.items()), frozenset(self.dd.items()))
            )
        return self._hash

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFun.from_int(other)
        if not self.sc:
            return other
        if not other.sc:
            return self
        pa, pb = self.sc, other.sc
        s0 = Fraction(
            int_gcd(pa.numerator, pb.numerator),
            pa.denominator * pb.denominator // int_gcd(pa.denominator, pb.denominator),
        )
        alpha = int(pa / s0)
        beta = int(pb / s0)
        d1, d2 = self.dd, other.dd
        if d1 == d2:
            n = _qt_scaled_add(self.nd, alpha, other.nd, beta)
            if not n:
                return RF_ZERO
            c, n2 = _qt_primitive(n)
            sc, n2, d = _reduce(s0 * c, n2, dict(d1))
            return RatFun._trusted(sc, n2, d)
        g = qt_gcd(d1, d2)
        if g == _ONE_D:
            n = _qt_scaled_add(
                _qt_mul(self.nd, d2), alpha, _qt_mul(other.nd, d1), beta
            )
            if not n:
                return RF_ZERO
            c, n = _qt_primitive(n)
            # coprime reduced inputs: the sum is already reduced
            return RatFun._trusted(s0 * c, n, _qt_mul(d1, d2))
        e1 = _qt_divexact(d1, g)
        e2 = _qt_divexact(d2, g)
        n = _qt_scaled_add(_qt_mul(self.nd, e2), alpha, _qt_mul(other.nd, e1), beta)
        if not n:
            return RF_ZERO
        c, n = _qt_primitive(n)
        h = qt_gcd(n, g)
        if h != _ONE_D:
            n = _qt_divexact(n, h)
            g = _qt_divexact(g, h)
        return RatFun._trusted(s0 * c, n, _qt_mul(g, _qt_mul(e1, e2)))

    __radd__ = __add__

    def __neg__(self):
        if not self.sc:
            return self
        return RatFun._trusted(-self.sc, self.nd, self.dd)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFun.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFun.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFun.from_int(other)
        if not self.sc or not other.sc:
            return RF_ZERO
        sc = self.sc * other.sc
        if self.dd == _ONE_D and other.dd == _ONE_D:
            n = _qt_mul(self.nd, other.nd)
            return RatFun._trusted(sc, n, dict(_ONE_D))
        g1 = qt_gcd(self.nd, other.dd)
        g2 = qt_gcd(other.nd, self.dd)
        a_num = self.nd if g1 == _ONE_D else _qt_divexact(self.nd, g1)
        b_den = other.dd if g1 == _ONE_D else _qt_divexact(other.dd, g1)
        b_num = other.nd if g2 == _ONE_D else _qt_divexact(other.nd, g2)
        a_den = self.dd if g2 == _ONE_D else _qt_divexact(self.dd, g2)
        return RatFun._trusted(sc, _qt_mul(a_num, b_num), _qt_mul(a_den, b_den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFun.from_int(other)
        if not other.sc:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        inv = RatFun._trusted(1 / other.sc, other.dd, other.nd)
        return self * inv

    def __rtruediv__(self, other):
        return RatFun.from_int(other) / self

    def __pow__(self, k):
        if k < 0:
            return RF_ONE / (self ** (-k))
        out = RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        return RF_ONE / self

    # -- substitution and evaluation -----------------------------------------

    def substitute(self, mapping):
        """Image under q -> mapping['q'], t -> mapping['t'].

        Values may be RatFun or one of the strings 'q', 't', '1/q', '1/t'.
        Monomial-to-monomial maps take a fast path that rewrites exponents.
        """
        qm = _subst_target(mapping.get("q", "q"))
        tm = _subst_target(mapping.get("t", "t"))
        if isinstance(qm, tuple) and isinstance(tm, tuple):
            n = _mono_map(self.nd, qm, tm)
            d = _mono_map(self.dd, qm, tm)
            low_q = min(
                min((k[0] for k in n), default=0), min((k[0] for k in d), default=0)
            )
            low_t = min(
                min((k[1] for k in n), default=0), min((k[1] for k in d), default=0)
            )
            if low_q < 0 or low_t < 0:
                n = _qt_shift(n, -min(low_q, 0), -min(low_t, 0))
                d = _qt_shift(d, -min(low_q, 0), -min(low_t, 0))
            if not n:
                return RF_ZERO
            cn, n = _qt_primitive(n)
            cd, d = _qt_primitive(d)
            sc, n, d = _reduce(self.sc * cn / cd, n, d)
            return RatFun._trusted(sc, n, d)
        qv = qm if isinstance(qm, RatFun) else _mono_ratfun(qm)
        tv = tm if isinstance(tm, RatFun) else _mono_ratfun(tm)
        num = _eval_int_poly(self.nd, qv, tv)
        den = _eval_int_poly(self.dd, qv, tv)
        return RatFun.from_int(self.sc) * num / den

    def eval_at(self, qv, tv):
        """Exact value at rational (qv, tv); denominator must not vanish."""
        num = _F0
        for (dq, dt), c in self.nd.items():
            num += c * qv**dq * tv**dt
        den = _F0
        for (dq, dt), c in self.dd.items():
            den += c * qv**dq * tv**dt
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.sc * num / den

    def __str__(self):
        if self.dd == _ONE_D:
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFun({self})"


def _reduce(sc, n, d):
    """Normalize (scale, int num, int den): inputs must be primitive dicts."""
    if not n:
        return _F0, {}, dict(_ONE_D)
    if d == _ONE_D:
        return sc, n, d
    g = qt_gcd(n, d)
    if g != _ONE_D:
        n = _qt_divexact(n, g)
        d = _qt_divexact(d, g)
    return sc, n, d


def _subst_target(v):
    if isinstance(v, RatFun):
        return v
    table = {"q": (1, 0), "t": (0, 1), "1/q": (-1, 0), "1/t": (0, -1)}
    if v in table:
        return table[v]
    raise ValueError(f"unsupported substitution target: {v!r}")


def _mono_map(terms, qm, tm):
    out = {}
    for (dq, dt), c in terms.items():
        k = (dq * qm[0] + dt * tm[0], dq * qm[1] + dt * tm[1])
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mono_ratfun(m):
    return RatFun.monomial(m[0], m[1])


def _eval_int_poly(terms, qv, tv):
    total = RF_ZERO
    for (dq, dt), c in terms.items():
        total = total + RatFun.from_int(c) * qv**dq * tv**dt
    return total


RF_ZERO = RatFun._trusted(_F0, {}, dict(_ONE_D))
RF_ONE = RatFun._trusted(_F1, dict(_ONE_D), dict(_ONE_D))
RF_Q = RatFun._trusted(_F1, {(1, 0): 1}, dict(_ONE_D))
RF_T = RatFun._trusted(_F1, {(0, 1): 1}, dict(_ONE_D))


def rf(n):
    """Shorthand: integer or Fraction -> RatFun."""
    return RatFun.from_int(n)


def q_power(k):
    return RatFun.monomial(k, 0)


def t_power(k):
    return RatFun.monomial(0, k)


def one_minus_qt(a, b):
    """1 - q^a * t^b as a RatFun (a, b >= 0)."""
    return RF_ONE - RatFun.monomial(a, b)


def rf_sum(values):
    """Sum a sequence of RatFun with a single final normalization.

    Terms with equal denominators merge by pure integer addition; the groups
    are then put over an incrementally-built least common denominator, so the
    only full gcd runs once on the assembled numerator.
    """
    groups = {}
    for v in values:
        if not v.sc:
            continue
        key = frozenset(v.dd.items())
        prev = groups.get(key)
        if prev is None:
            groups[key] = [v.sc, dict(v.nd), v.dd]
        else:
            pa, pb = prev[0], v.sc
            s0 = Fraction(
                int_gcd(pa.numerator, pb.numerator),
                pa.denominator
                * pb.denominator
                // int_gcd(pa.denominator, pb.denominator),
            )
            prev[1] = _qt_scaled_add(prev[1], int(pa / s0), v.nd, int(pb / s0))
            prev[0] = s0
    gl = [g for g in groups.values() if g[1]]
    if not gl:
        return RF_ZERO
    if len(gl) == 1:
        sc, n, d = gl[0]
        c, n = _qt_primitive(n)
        sc, n, d = _reduce(sc * c, n, dict(d))
        return RatFun._trusted(sc, n, d) if sc else RF_ZERO
    lcm_d = dict(gl[0][2])
    mults = [dict(_ONE_D)]
    for _, _, d in gl[1:]:
        g = qt_gcd(lcm_d, d)
        f = d if g == _ONE_D else _qt_divexact(d, g)
        if f != _ONE_D:
            mults = [_qt_mul(mu, f) for mu in mults]
            lcm_d = _qt_mul(lcm_d, f)
        mults.append(_qt_divexact(lcm_d, d))
    s_num = 0
    s_den = 1
    for sc, _, _ in gl:
        s_num = int_gcd(s_num, sc.numerator)
        s_den = s_den * sc.denominator // int_gcd(s_den, sc.denominator)
    s0 = Fraction(s_num, s_den)
    num = {}
    for (sc, n, _), mu in zip(gl, mults):
        num = _qt_scaled_add(num, 1, _qt_mul(n, mu), int(sc / s0))
    if not num:
        return RF_ZERO
    c, num = _qt_primitive(num)
    sc, num, d = _reduce(s0 * c, num, lcm_d)
    return RatFun._trusted(sc, num, d)


def rf_prod(values):
    out = RF_ONE
    for v in values:
        out = out * v
    return out


# ---------------------------------------------------------------------------
# UPoly: polynomials in u over Q(q,t)
# ---------------------------------------------------------------------------


class UPoly:
    """Polynomial in the extra indeterminate u with RatFun coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def const(c):
        if isinstance(c, (int, Fraction)):
            c = RatFun.from_int(c)
        return UPoly((c,))

    @staticmethod
    def u_power(k, c=None):
        return UPoly((RF_ZERO,) * k + (c if c is not None else RF_ONE,))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, RatFun)):
            other = UPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else RF_ZERO
            b = other.coeffs[i] if i < len(other.coeffs) else RF_ZERO
            out.append(a + b)
        return UPoly(out)

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, RatFun)):
            other = UPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatFun)):
            c = other if isinstance(other, RatFun) else RatFun.from_int(other)
            return UPoly(tuple(a * c for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [RF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __call__(self, u0):
        """Horner evaluation at a RatFun point."""
        out = RF_ZERO
        for c in reversed(self.coeffs):
            out = out * u0 + c
        return out

    def coefficient(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else RF_ZERO

    def divexact(self, other):
        """Exact division in Q(q,t)[u]; raises ArithmeticError on remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("UPoly division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        lead = other.coeffs[-1]
        if len(rem) < len(other.coeffs):
            if any(not c.is_zero() for c in rem):
                raise ArithmeticError("inexact UPoly division")
            return UPoly()
        out = [RF_ZERO] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lead
            out[k] = c
            if not c.is_zero():
                for i, bc in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * bc
        if any(not c.is_zero() for c in rem):
            raise ArithmeticError("inexact UPoly division")
        return UPoly(out)

    def substitute_qt(self, mapping):
        return UPoly(tuple(c.substitute(mapping) for c in self.coeffs))

    def scale_u(self, factor):
        """u -> factor * u for a RatFun factor."""
        out = []
        p = RF_ONE
        for c in self.coeffs:
            out.append(c * p)
            p = p * factor
        return UPoly(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*u")
            else:
                parts.append(f"{c}*u^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UPoly({self})"


UP_ZERO = UPoly()
UP_ONE = UPoly((RF_ONE,))
UP_U = UPoly((RF_ZERO, RF_ONE))


# ---------------------------------------------------------------------------
# parser for the textual coefficient grammar
# ---------------------------------------------------------------------------


class RatFunParseError(ValueError):
    """Parse failure; carries the 0-based offset of the offending character."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    """Recursive-descent parser for +, -, *, /, ^, parentheses, q, t and u.

    Evaluates directly in Q(q,t)[u]; division requires the divisor to be
    u-free (or to divide exactly).
    """

    def __init__(self, text, allow_u):
        self.text = text
        self.n = len(text)
        self.i = 0
        self.allow_u = allow_u

    def skip(self):
        while self.i < self.n and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < self.n else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise RatFunParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def parse(self):
        v = self.expr()
        self.skip()
        if self.i != self.n:
            raise RatFunParseError("trailing input", self.i)
        return v

    def expr(self):
        c = self.peek()
        if c == "-":
            self.i += 1
            v = -self.term()
        else:
            if c == "+":
                self.i += 1
            v = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.i += 1
                v = v + self.term()
            elif c == "-":
                self.i += 1
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.i += 1
                v = v * self.factor()
            elif c == "/":
                self.i += 1
                w = self.factor()
                v = self._divide(v, w, self.i)
            else:
                return v

    def _divide(self, v, w, pos):
        if w.degree() <= 0:
            c = w.coefficient(0)
            if c.is_zero():
                raise RatFunParseError("division by zero", pos)
            return v * (RF_ONE / c)
        try:
            return v.divexact(w)
        except ArithmeticError:
            raise RatFunParseError("inexact division by a u-dependent value", pos)

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.i += 1
            k = self.integer()
            if k >= 0:
                out = UP_ONE
                for _ in range(k):
                    out = out * base
                return out
            if base.degree() > 0:
                raise RatFunParseError("negative power of a u-dependent value", self.i)
            c = base.coefficient(0)
            if c.is_zero():
                raise RatFunParseError("negative power of zero", self.i)
            return UPoly.const((RF_ONE / c) ** (-k))
        return base

    def base(self):
        c = self.peek()
        if c == "(":
            self.i += 1
            v = self.expr()
            self.expect(")")
            return v
        if c == "-":
            self.i += 1
            return -self.factor()
        if c == "q":
            self.i += 1
            return UPoly.const(RF_Q)
        if c == "t":
            self.i += 1
            return UPoly.const(RF_T)
        if c == "u":
            if not self.allow_u:
                raise RatFunParseError("u not allowed here", self.i)
            self.i += 1
            return UP_U
        if c.isdigit():
            return UPoly.const(RatFun.from_int(self.integer()))
        raise RatFunParseError("unexpected character", self.i)

    def integer(self):
        self.skip()
        start = self.i
        if self.i < self.n and self.text[self.i] == "-":
            self.i += 1
        if self.i >= self.n or not self.text[self.i].isdigit():
            raise RatFunParseError("expected integer", self.i)
        while self.i < self.n and self.text[self.i].isdigit():
            self.i += 1
        return int(self.text[start : self.i])


def parse_ratfun(text):
    """Parse the canonical coefficient grammar, e.g. ``(1-q^2*t)/(1-t)``."""
    up = _Parser(text, allow_u=False).parse()
    return up.coefficient(0)


def parse_upoly(text):
    """Parse an expression that may involve u, e.g. ``(1-u)*(1-q*u)``."""
    return _Parser(text, allow_u=True).parse()

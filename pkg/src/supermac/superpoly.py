"""Finite-variable superpolynomials and the classical superspace bases.

A superpolynomial in N variables lives in Q(q,t)[x_1..x_N] tensored with the
exterior algebra on theta_1..theta_N.  Terms are keyed by

    (theta_word, x_exponents)

where theta_word is a strictly increasing tuple of indices in 1..N and
x_exponents is a length-N tuple of non-negative ints.  Reordering theta
factors tracks the sign (theta_j theta_i = -theta_i theta_j, theta_i^2 = 0).

The module also provides the monomial / elementary / power-sum bases of
symmetric superpolynomials, a SymFun container for basis-tagged coefficient
maps, and exact basis conversions.  Conversion matrices are computed by
targeted coefficient extraction: the coefficient of one specific monomial in
a product of generators is found by a pruned product sweep, so full
expansions are never needed for transitions (they stay rational-number
valued, with no q,t dependence).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .ratfun import RF_ONE, RF_ZERO, RatFun, parse_ratfun
from .shapes import SuperPartition, enumerate_superpartitions, parse_superpartition

# ---------------------------------------------------------------------------
# theta-word helpers
# ---------------------------------------------------------------------------


def merge_theta(w1, w2):
    """Merge two increasing words; returns (sign, word) or (0, None) on repeats."""
    if not w1:
        return 1, w2
    if not w2:
        return 1, w1
    if set(w1) & set(w2):
        return 0, None
    # inversions = pairs (a in w1, b in w2) with b < a
    inv = 0
    for a in w1:
        for b in w2:
            if b < a:
                inv += 1
    merged = tuple(sorted(w1 + w2))
    return (-1) ** inv, merged


def _sort_word(word):
    """Sort an arbitrary repeat-free word, returning (sign, sorted tuple)."""
    inv = 0
    lst = list(word)
    for i in range(len(lst)):
        for j in range(i + 1, len(lst)):
            if lst[i] > lst[j]:
                inv += 1
    return (-1) ** inv, tuple(sorted(lst))


class SuperPolyN:
    """Sparse superpolynomial in x_1..x_N, theta_1..theta_N over Q(q,t)."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars, terms=None):
        self.n_vars = n_vars
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero(n_vars):
        return SuperPolyN(n_vars)

    @staticmethod
    def one(n_vars):
        return SuperPolyN(n_vars, {((), (0,) * n_vars): RF_ONE})

    @staticmethod
    def from_terms(n_vars, items):
        out = {}
        for key, c in items:
            if c.is_zero():
                continue
            prev = out.get(key)
            s = c if prev is None else prev + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SuperPolyN(n_vars, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SuperPolyN)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, RF_ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SuperPolyN(self.n_vars, out)

    def __neg__(self):
        return SuperPolyN(self.n_vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatFun)):
            return self.scale(other if isinstance(other, RatFun) else RatFun.from_int(other))
        self._check(other)
        out = {}
        for (w1, e1), c1 in self.terms.items():
            for (w2, e2), c2 in other.terms.items():
                sign, w = merge_theta(w1, w2)
                if sign == 0:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if sign < 0:
                    c = -c
                key = (w, e)
                s = out.get(key, RF_ZERO) + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return SuperPolyN(self.n_vars, out)

    __rmul__ = __mul__

    def scale(self, c):
        if c.is_zero():
            return SuperPolyN(self.n_vars)
        return SuperPolyN(self.n_vars, {k: v * c for k, v in self.terms.items()})

    def _check(self, other):
        if self.n_vars != other.n_vars:
            raise ValueError("mismatched number of variables")

    # -- symmetry action ------------------------------------------------------

    def kappa(self, sigma):
        """Apply the diagonal action sending x_i -> x_sigma(i) and theta_i -> theta_sigma(i).

        sigma is a tuple with sigma[i-1] = image of i.
        """
        out = {}
        n = self.n_vars
        for (w, e), c in self.terms.items():
            new_e = [0] * n
            for i in range(n):
                new_e[sigma[i] - 1] = e[i]
            sign, new_w = _sort_word(tuple(sigma[i - 1] for i in w))
            key = (new_w, tuple(new_e))
            cc = c if sign > 0 else -c
            s = out.get(key, RF_ZERO) + cc
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SuperPolyN(n, out)

    def is_symmetric(self):
        """Exact invariance under all adjacent transpositions."""
        n = self.n_vars
        for i in range(1, n):
            sigma = list(range(1, n + 1))
            sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
            if self.kappa(tuple(sigma)) != self:
                return False
        return True

    # -- Grassmann calculus ----------------------------------------------------

    def theta_derivative(self, i):
        """Signed Grassmann derivative with respect to theta_i."""
        out = {}
        for (w, e), c in self.terms.items():
            if i not in w:
                continue
            pos = w.index(i)
            new_w = w[:pos] + w[pos + 1 :]
            cc = c if pos % 2 == 0 else -c
            key = (new_w, e)
            s = out.get(key, RF_ZERO) + cc
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SuperPolyN(self.n_vars, out)

    def restrict(self, i):
        """Set x_i = theta_i = 0 and drop the slot (result has N-1 variables)."""
        out = {}
        for (w, e), c in self.terms.items():
            if i in w or e[i - 1] != 0:
                continue
            new_w = tuple(j if j < i else j - 1 for j in w)
            new_e = e[: i - 1] + e[i:]
            out[(new_w, new_e)] = c
        return SuperPolyN(self.n_vars - 1, out)

    def set_x_zero(self, i):
        """Set x_i = 0 only (theta_i untouched, slot kept)."""
        return SuperPolyN(
            self.n_vars, {k: c for k, c in self.terms.items() if k[1][i - 1] == 0}
        )

    def theta_coefficient(self, word):
        """Coefficient of the exact theta word (an x-only polynomial as dict)."""
        word = tuple(word)
        return {e: c for (w, e), c in self.terms.items() if w == word}

    def fermionic_degree(self):
        degs = {len(w) for (w, _) in self.terms}
        if len(degs) > 1:
            raise ValueError("mixed fermionic degrees")
        return degs.pop() if degs else 0

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (w, e) in sorted(self.terms, key=lambda k: (k[0], k[1])):
            c = self.terms[(w, e)]
            factors = [f"th{i}" for i in w]
            factors += [
                f"x{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            ]
            mono = "*".join(factors) if factors else "1"
            bits.append(f"{c}*{mono}")
        return " + ".join(bits)

    def __repr__(self):
        return f"SuperPolyN({self.n_vars}, {self})"


# ---------------------------------------------------------------------------
# expansions of the classical bases
# ---------------------------------------------------------------------------


def _multiset_placements(values, slots):
    """Maps slot -> value for each distinct placement of the multiset values."""
    values = sorted(values, reverse=True)
    out = []

    def rec(vals, avail, acc):
        if not vals:
            out.append(dict(acc))
            return
        v = vals[0]
        count = 1
        while count < len(vals) and vals[count] == v:
            count += 1
        for chosen in itertools.combinations(avail, count):
            rest = [s for s in avail if s not in chosen]
            for s in chosen:
                acc[s] = v
            rec(vals[count:], rest, acc)
            for s in chosen:
                del acc[s]

    rec(values, list(slots), {})
    return out


def expand_monomial(lam: SuperPartition, N: int) -> SuperPolyN:
    """The monomial symmetric superpolynomial m_Lambda in N variables.

    Zero when N < length(Lambda).  The coefficient of
    theta_1...theta_m x^(a_parts, s_parts) is exactly 1.
    """
    m = lam.m
    if lam.ell > N:
        return SuperPolyN(N)
    terms = {}
    slots = list(range(1, N + 1))
    for theta_slots in itertools.combinations(slots, m):
        bos_slots = [s for s in slots if s not in theta_slots]
        # fermionic exponents: every bijection a_parts -> theta_slots
        for perm in itertools.permutations(range(m)):
            sign, word = 1, theta_slots
            # word is already sorted; the sign is the parity of perm since
            # assigning part perm[k] to slot word[k] corresponds to reordering
            inv = sum(
                1
                for i in range(m)
                for j in range(i + 1, m)
                if perm[i] > perm[j]
            )
            sign = (-1) ** inv
            for placement in _multiset_placements(lam.s_parts, bos_slots):
                e = [0] * N
                for k in range(m):
                    e[theta_slots[k] - 1] = lam.a_parts[perm[k]]
                for s, v in placement.items():
                    e[s - 1] = v
                key = (theta_slots, tuple(e))
                c = RatFun.from_int(sign)
                prev = terms.get(key)
                terms[key] = c if prev is None else prev + c
    return SuperPolyN(N, {k: v for k, v in terms.items() if not v.is_zero()})


def gen_p(r, N):
    """Power sum p_r = sum x_i^r."""
    out = {}
    for i in range(N):
        e = [0] * N
        e[i] = r
        out[((), tuple(e))] = RF_ONE
    return SuperPolyN(N, out)


def gen_pt(a, N):
    """Fermionic power sum: sum theta_i x_i^a."""
    out = {}
    for i in range(N):
        e = [0] * N
        e[i] = a
        out[((i + 1,), tuple(e))] = RF_ONE
    return SuperPolyN(N, out)


def gen_e(r, N):
    """Elementary e_r = sum of squarefree monomials of degree r."""
    out = {}
    for S in itertools.combinations(range(N), r):
        e = [0] * N
        for i in S:
            e[i] = 1
        out[((), tuple(e))] = RF_ONE
    return SuperPolyN(N, out)


def gen_et(k, N):
    """Fermionic elementary: sum theta_i x_S over i not in S, |S| = k."""
    out = {}
    for i in range(N):
        for S in itertools.combinations([j for j in range(N) if j != i], k):
            e = [0] * N
            for j in S:
                e[j] = 1
            out[((i + 1,), tuple(e))] = RF_ONE
    return SuperPolyN(N, out)


def generator_factors(lam: SuperPartition, basis):
    """The generator list whose product is p_Lambda or e_Lambda."""
    kind_f, kind_b = ("pt", "p") if basis == "powersum" else ("et", "e")
    out = [(kind_f, a) for a in lam.a_parts]
    out += [(kind_b, s) for s in lam.s_parts]
    return out


def expand_p(lam: SuperPartition, N: int) -> SuperPolyN:
    out = SuperPolyN.one(N)
    for kind, v in generator_factors(lam, "powersum"):
        out = out * (gen_pt(v, N) if kind == "pt" else gen_p(v, N))
    return out


def expand_e(lam: SuperPartition, N: int) -> SuperPolyN:
    out = SuperPolyN.one(N)
    for kind, v in generator_factors(lam, "elementary"):
        out = out * (gen_et(v, N) if kind == "et" else gen_e(v, N))
    return out


EXPANDERS = {"monomial": expand_monomial, "powersum": expand_p, "elementary": expand_e}


# ---------------------------------------------------------------------------
# SymFun: basis-tagged coefficient maps
# ---------------------------------------------------------------------------

BASES = ("monomial", "elementary", "powersum", "macdonald")


@dataclass
class SymFun:
    """A symmetric superfunction as a coefficient map over superpartitions."""

    basis: str
    m: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        self.coeffs = {
            k: v for k, v in self.coeffs.items() if not v.is_zero()
        }
        for k in self.coeffs:
            if k.m != self.m:
                raise ValueError("mixed fermionic degrees in SymFun")

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, SymFun)
            and self.basis == other.basis
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.basis != other.basis or self.m != other.m:
            raise ValueError("incompatible SymFun addition")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, RF_ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SymFun(self.basis, self.m, out)

    def scale(self, c):
        return SymFun(self.basis, self.m, {k: v * c for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + other.scale(RatFun.from_int(-1))

    def homogeneous_degree(self):
        degs = {k.n for k in self.coeffs}
        if len(degs) > 1:
            raise ValueError("inhomogeneous SymFun")
        return degs.pop() if degs else 0

    def to_json_dict(self):
        return {
            "basis": self.basis,
            "m": self.m,
            "coeffs": [
                {"sp": str(k), "c": str(v)}
                for k, v in sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())
            ],
        }

    @staticmethod
    def from_json_dict(d):
        coeffs = {
            parse_superpartition(e["sp"]): parse_ratfun(e["c"]) for e in d["coeffs"]
        }
        return SymFun(d["basis"], d["m"], coeffs)


def expand_symfun(f: SymFun, N: int) -> SuperPolyN:
    """Expand an m/e/p-basis SymFun into N variables."""
    if f.basis not in EXPANDERS:
        raise ValueError(f"cannot expand basis {f.basis!r} here")
    out = SuperPolyN(N)
    expander = EXPANDERS[f.basis]
    for lam, c in f.coeffs.items():
        out = out + expander(lam, N).scale(c)
    return out


def symfun_p_product(f: SymFun, g: SymFun) -> SymFun:
    """Product of two power-sum SymFuns (the p-basis is multiplicative up to sign)."""
    if f.basis != "powersum" or g.basis != "powersum":
        raise ValueError("p-product requires powersum basis")
    out = {}
    for lf, cf in f.coeffs.items():
        for lg, cg in g.coeffs.items():
            merged_a = lf.a_parts + lg.a_parts
            if len(set(merged_a)) != len(merged_a):
                continue
            inv = sum(
                1 for a in lf.a_parts for b in lg.a_parts if b > a
            )
            a_sorted = tuple(sorted(merged_a, reverse=True))
            s_sorted = tuple(sorted(lf.s_parts + lg.s_parts, reverse=True))
            key = SuperPartition(a_sorted, s_sorted)
            c = cf * cg
            if inv % 2:
                c = -c
            s = out.get(key, RF_ZERO) + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return SymFun("powersum", f.m + g.m, out)


# ---------------------------------------------------------------------------
# targeted coefficient extraction and basis transitions
# ---------------------------------------------------------------------------


def coeff_in_generator_product(factors, target_word, target_exp):
    """Coefficient of theta_(target_word) x^(target_exp) in prod(factors).

    factors: list of (kind, value) with kind in {p, pt, e, et}.  The sweep
    keeps only partial products dividing the target, so the cost depends on
    the target's support rather than on the ambient variable count.
    """
    target_word = tuple(target_word)
    tset = set(target_word)
    support = [i for i, p in enumerate(target_exp) if p > 0]
    states = {(frozenset(), (0,) * len(target_exp)): Fraction(1)}
    for kind, v in factors:
        new = {}
        for (used, part), coeff in states.items():
            for used2, part2, sign in _factor_moves(
                kind, v, used, part, tset, support, target_exp
            ):
                key = (used2, part2)
                new[key] = new.get(key, Fraction(0)) + coeff * sign
        states = {k: c for k, c in new.items() if c}
        if not states:
            return Fraction(0)
    return states.get((frozenset(tset), tuple(target_exp)), Fraction(0))


def _theta_sign(used, i):
    s = sum(1 for j in used if j > i)
    return -1 if s % 2 else 1


def _factor_moves(kind, v, used, part, tset, support, target):
    if kind == "p":
        for s in support:
            if part[s] + v <= target[s]:
                p2 = list(part)
                p2[s] += v
                yield used, tuple(p2), 1
    elif kind == "pt":
        for i in tset - used:
            if v == 0 or (target[i - 1] >= part[i - 1] + v):
                if v and (i - 1) not in support:
                    continue
                p2 = list(part)
                p2[i - 1] += v
                yield used | {i}, tuple(p2), _theta_sign(used, i)
    elif kind == "e":
        good = [s for s in support if part[s] + 1 <= target[s]]
        for S in itertools.combinations(good, v):
            p2 = list(part)
            for s in S:
                p2[s] += 1
            yield used, tuple(p2), 1
    elif kind == "et":
        for i in tset - used:
            good = [s for s in support if part[s] + 1 <= target[s] and s != i - 1]
            sign = _theta_sign(used, i)
            for S in itertools.combinations(good, v):
                p2 = list(part)
                for s in S:
                    p2[s] += 1
                yield used | {i}, tuple(p2), sign
    else:
        raise ValueError(f"unknown generator kind {kind!r}")


def leading_monomial_key(lam: SuperPartition, N: int):
    """The key of m_Lambda's leading term: theta_1..theta_m x^(a_parts, s_parts)."""
    e = list(lam.a_parts) + list(lam.s_parts)
    e += [0] * (N - len(e))
    return (tuple(range(1, lam.m + 1)), tuple(e))


def monomial_coords(f: SuperPolyN, block):
    """Coefficients of each m_Lambda (Lambda in block) read off the expansion."""
    out = {}
    for lam in block:
        key = leading_monomial_key(lam, f.n_vars)
        c = f.terms.get(key)
        if c is not None and not c.is_zero():
            out[lam] = c
    return out


class BasisTransitions:
    """Per-(n, m) transition matrices between m and the multiplicative bases.

    All entries are exact rationals (no q,t dependence).  Rows/columns are
    indexed by the frozen enumeration order of the block.
    """

    def __init__(self, n, m):
        self.n = n
        self.m = m
        self.block = enumerate_superpartitions(n, m)
        self.index = {lam: i for i, lam in enumerate(self.block)}
        self._to_m = {}
        self._from_m = {}

    def to_m_matrix(self, basis):
        """Rows: basis elements expanded in the m-basis."""
        if basis == "monomial":
            k = len(self.block)
            return [[Fraction(i == j) for j in range(k)] for i in range(k)]
        if basis not in self._to_m:
            rows = []
            width = self.n + self.m
            for lam in self.block:
                factors = generator_factors(lam, basis)
                row = []
                for om in self.block:
                    word, exp = leading_monomial_key(om, width)
                    row.append(coeff_in_generator_product(factors, word, exp))
                rows.append(row)
            self._to_m[basis] = rows
        return self._to_m[basis]

    def from_m_matrix(self, basis):
        if basis not in self._from_m:
            self._from_m[basis] = _fraction_inverse(self.to_m_matrix(basis))
        return self._from_m[basis]

    def convert(self, f: SymFun, basis) -> SymFun:
        """Exact basis change within the block."""
        if f.basis == basis:
            return f
        if f.basis == "macdonald" or basis == "macdonald":
            raise ValueError("macdonald conversions live in the macdonald module")
        # to m-coordinates
        if f.basis == "monomial":
            vec = {lam: c for lam, c in f.coeffs.items()}
        else:
            mat = self.to_m_matrix(f.basis)
            vec = {}
            for lam, c in f.coeffs.items():
                row = mat[self.index[lam]]
                for j, a in enumerate(row):
                    if a:
                        om = self.block[j]
                        s = vec.get(om, RF_ZERO) + c * RatFun.from_int(a)
                        if s.is_zero():
                            vec.pop(om, None)
                        else:
                            vec[om] = s
        if basis == "monomial":
            return SymFun("monomial", self.m, vec)
        # coefficients in the target basis: c_target = vec . inv (vec as row)
        inv = self.from_m_matrix(basis)
        out = {}
        for i, lam in enumerate(self.block):
            total = RF_ZERO
            for j, om in enumerate(self.block):
                c = vec.get(om)
                if c is None:
                    continue
                a = inv[j][i]
                if a:
                    total = total + c * RatFun.from_int(a)
            if not total.is_zero():
                out[lam] = total
        return SymFun(basis, self.m, out)


def _fraction_inverse(mat):
    """Exact inverse of a square Fraction matrix (Gauss-Jordan)."""
    k = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(k)]
         for i, row in enumerate(mat)]
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular transition matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[k:] for row in a]


_TRANSITIONS = {}


def transitions(n, m) -> BasisTransitions:
    key = (n, m)
    if key not in _TRANSITIONS:
        _TRANSITIONS[key] = BasisTransitions(n, m)
    return _TRANSITIONS[key]


def to_basis(f: SuperPolyN, basis, m, n) -> SymFun:
    """Exact coefficient map of a symmetric homogeneous superpolynomial.

    Requires N >= n + m so that the block's monomials stay independent.
    Raises on non-symmetric input.
    """
    if f.n_vars < n + m:
        raise ValueError("need at least n + m variables for a faithful conversion")
    if not f.is_symmetric():
        raise ValueError("input is not symmetric")
    tr = transitions(n, m)
    mvec = monomial_coords(f, tr.block)
    g = SymFun("monomial", m, mvec)
    # confirm nothing outside the block: re-expand and compare
    if expand_symfun(g, f.n_vars) != f:
        raise ValueError("input is not homogeneous of the stated bidegree")
    return tr.convert(g, basis)

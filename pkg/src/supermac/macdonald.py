"""Macdonald superpolynomials: scalar product, triangular orthogonalization,
norms, product coefficients, skew functions and the duality homomorphism.

The scalar product is diagonal on the power-sum basis,

    <p_Lambda | p_Omega> = z_Lambda(q,t) delta_{Lambda Omega},
    z_Lambda(q,t) = z_{Lambda^s} q^{|Lambda^a|}
                    prod_i (1 - q^{Lambda^s_i}) / (1 - t^{Lambda^s_i}).

(The sign-free diagonal is the convention under which the closed norm
formula, the evaluation formulas and the duality theorem below are all
simultaneously exact; see the project notes for the derivation.)

P_Lambda is built per degree block (n, m) by Gram-Schmidt against the
monomial basis in a fixed linear extension of the dominance order; all
linear algebra happens in power-sum coordinates, where products of basis
elements are single basis elements up to sign, so no polynomial expansions
are needed.  Tables can be exported to / imported from versioned JSON so
expensive blocks are computed once.
"""

from __future__ import annotations

import json
import os
from math import comb, factorial

from .ratfun import (
    RF_ONE,
    RF_ZERO,
    RatFun,
    parse_ratfun,
    q_power,
    rf_prod,
    rf_sum,
)
from .shapes import (
    SuperPartition,
    arm,
    cells_B,
    dominance_leq,
    enumerate_superpartitions,
    leg,
    parse_superpartition,
    sp_contains,
)
from .superpoly import SymFun, expand_symfun, symfun_p_product, transitions

FORMAT_VERSION = 1

# ---------------------------------------------------------------------------
# the diagonal pairing
# ---------------------------------------------------------------------------


def z_classical(parts):
    """z_lambda = prod_j j^{m_j} m_j! over part multiplicities."""
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for j, mj in mult.items():
        out *= j**mj * factorial(mj)
    return out


def z_super(lam: SuperPartition) -> RatFun:
    """Diagonal weight of p_Lambda under the (q,t) pairing."""
    out = RatFun.from_int(z_classical(lam.s_parts)) * q_power(sum(lam.a_parts))
    for s in lam.s_parts:
        out = out * ((RF_ONE - q_power(s)) / (RF_ONE - RatFun.monomial(0, s)))
    return out


_Z_CACHE = {}


def _z(lam):
    v = _Z_CACHE.get(lam)
    if v is None:
        v = z_super(lam)
        _Z_CACHE[lam] = v
    return v


def pair_p_coeffs(a: dict, b: dict) -> RatFun:
    """Pairing of two power-sum coefficient maps."""
    if len(b) < len(a):
        a, b = b, a
    return rf_sum(c * b[k] * _z(k) for k, c in a.items() if k in b)


def scalar_product(f: SymFun, g: SymFun, conv=True) -> RatFun:
    """Bilinear pairing; converts m/e inputs to the power-sum basis first."""
    if f.m != g.m:
        return RF_ZERO
    if f.basis != "powersum":
        if not conv:
            raise ValueError("scalar_product requires powersum basis")
        f = transitions(f.homogeneous_degree(), f.m).convert(f, "powersum")
    if g.basis != "powersum":
        if not conv:
            raise ValueError("scalar_product requires powersum basis")
        g = transitions(g.homogeneous_degree(), g.m).convert(g, "powersum")
    return pair_p_coeffs(f.coeffs, g.coeffs)


# ---------------------------------------------------------------------------
# block tables
# ---------------------------------------------------------------------------


class MacdonaldTable:
    """All P_Lambda of one (total degree, fermionic degree) block."""

    def __init__(self, n, m, p_coords, norms):
        self.n = n
        self.m = m
        self.block = enumerate_superpartitions(n, m)
        self.index = {lam: i for i, lam in enumerate(self.block)}
        self.p_coords = p_coords  # lam -> {om: RatFun}, P_lam on p_om
        self.norms = norms  # lam -> RatFun
        self._m_coords = None

    def p_symfun(self, lam) -> SymFun:
        return SymFun("powersum", self.m, self.p_coords[lam])

    def m_coords(self):
        """P_lam in monomial coordinates (computed on first use)."""
        if self._m_coords is None:
            tr = transitions(self.n, self.m)
            to_m = tr.to_m_matrix("powersum")
            out = {}
            for lam, pc in self.p_coords.items():
                row = {}
                for om, c in pc.items():
                    i = tr.index[om]
                    for j, a in enumerate(to_m[i]):
                        if a:
                            ga = tr.block[j]
                            s = row.get(ga, RF_ZERO) + c * RatFun.from_int(a)
                            if s.is_zero():
                                row.pop(ga, None)
                            else:
                                row[ga] = s
                out[lam] = row
            self._m_coords = out
        return self._m_coords

    def m_symfun(self, lam) -> SymFun:
        return SymFun("monomial", self.m, self.m_coords()[lam])

    def norm_squared(self, lam) -> RatFun:
        return self.norms[lam]

    def to_json_dict(self):
        entries = []
        for lam in self.block:
            entries.append(
                {
                    "sp": str(lam),
                    "p": {
                        str(om): str(c)
                        for om, c in sorted(
                            self.p_coords[lam].items(), key=lambda kv: kv[0].sort_key()
                        )
                    },
                    "norm2": str(self.norms[lam]),
                }
            )
        return {
            "format_version": FORMAT_VERSION,
            "n": self.n,
            "m": self.m,
            "entries": entries,
        }

    @staticmethod
    def from_json_dict(d):
        if d.get("format_version") != FORMAT_VERSION:
            raise ValueError("unsupported table format version")
        p_coords, norms = {}, {}
        for e in d["entries"]:
            lam = parse_superpartition(e["sp"])
            p_coords[lam] = {
                parse_superpartition(k): parse_ratfun(v) for k, v in e["p"].items()
            }
            norms[lam] = parse_ratfun(e["norm2"])
        return MacdonaldTable(d["n"], d["m"], p_coords, norms)


def build_table(n, m, order=None) -> MacdonaldTable:
    """Triangular orthogonalization over the block; `order` overrides the
    processing order (any linear extension of dominance gives the same table).

    Since the already-built vectors are pairwise orthogonal, every projection
    coefficient can be paired against the original monomial vector, and each
    coordinate of the new vector is assembled in one balanced summation.
    """
    tr = transitions(n, m)
    block = order if order is not None else tr.block
    inv = tr.from_m_matrix("powersum")
    m_in_p = {}
    for lam in block:
        row = inv[tr.index[lam]]
        m_in_p[lam] = {
            tr.block[j]: RatFun.from_int(a) for j, a in enumerate(row) if a
        }
    p_coords, norms = {}, {}
    done = []
    for lam in block:
        v0 = m_in_p[lam]
        projections = []
        for om in done:
            if not dominance_leq(om, lam):
                continue
            c = pair_p_coeffs(v0, p_coords[om]) / norms[om]
            if not c.is_zero():
                projections.append((c, p_coords[om]))
        keys = set(v0)
        for _, pc in projections:
            keys.update(pc)
        vec = {}
        for k in keys:
            total = rf_sum(
                [v0.get(k, RF_ZERO)]
                + [-(c * pc[k]) for c, pc in projections if k in pc]
            )
            if not total.is_zero():
                vec[k] = total
        p_coords[lam] = vec
        norms[lam] = pair_p_coeffs(vec, vec)
        if norms[lam].is_zero():
            raise ArithmeticError(f"degenerate pairing on block ({n},{m}) at {lam}")
        done.append(lam)
    return MacdonaldTable(n, m, p_coords, norms)


_TABLES = {}


def get_table(n, m, cache_dir=None) -> MacdonaldTable:
    """Memoized table access with optional JSON disk cache."""
    key = (n, m)
    tab = _TABLES.get(key)
    if tab is not None:
        return tab
    if cache_dir:
        path = os.path.join(cache_dir, f"macdonald_n{n}_m{m}_v{FORMAT_VERSION}.json")
        if os.path.exists(path):
            with open(path) as fh:
                tab = MacdonaldTable.from_json_dict(json.load(fh))
            _TABLES[key] = tab
            return tab
    tab = build_table(n, m)
    _TABLES[key] = tab
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, f"macdonald_n{n}_m{m}_v{FORMAT_VERSION}.json")
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(tab.to_json_dict(), fh, sort_keys=True)
        os.replace(tmp, path)
    return tab


def macdonald_p_symfun(lam: SuperPartition, cache_dir=None) -> SymFun:
    return get_table(lam.n, lam.m, cache_dir).p_symfun(lam)


def expand_macdonald(lam: SuperPartition, N: int, cache_dir=None):
    """P_Lambda as an explicit superpolynomial in N variables."""
    tab = get_table(lam.n, lam.m, cache_dir)
    return expand_symfun(tab.m_symfun(lam), N)


def norm_squared(lam: SuperPartition, cache_dir=None) -> RatFun:
    return get_table(lam.n, lam.m, cache_dir).norm_squared(lam)


# ---------------------------------------------------------------------------
# the closed norm formula
# ---------------------------------------------------------------------------


def norm_formula(lam: SuperPartition) -> RatFun:
    """Closed form: q^{|a|} prod over the B-cells of
    (1 - q^{arm*+1} t^{leg@}) / (1 - q^{arm@} t^{leg*+1})."""
    star, circ = lam.star, lam.circledast
    num, den = RF_ONE, RF_ONE
    for cell in cells_B(lam):
        num = num * (RF_ONE - RatFun.monomial(arm(star, cell) + 1, leg(circ, cell)))
        den = den * (RF_ONE - RatFun.monomial(arm(circ, cell), leg(star, cell) + 1))
    return q_power(sum(lam.a_parts)) * num / den


# ---------------------------------------------------------------------------
# products, g coefficients, skew functions
# ---------------------------------------------------------------------------


def g_coefficient(lam, om, ga, cache_dir=None) -> RatFun:
    """<P_lam | P_om P_ga>; zero unless the bidegrees add up."""
    if lam.n != om.n + ga.n or lam.m != om.m + ga.m:
        return RF_ZERO
    prod = symfun_p_product(
        macdonald_p_symfun(om, cache_dir), macdonald_p_symfun(ga, cache_dir)
    )
    return pair_p_coeffs(macdonald_p_symfun(lam, cache_dir).coeffs, prod.coeffs)


def product_in_macdonald(om, ga, cache_dir=None) -> SymFun:
    """P_om P_ga expanded back in the Macdonald basis."""
    n, m = om.n + ga.n, om.m + ga.m
    tab = get_table(n, m, cache_dir)
    prod = symfun_p_product(
        macdonald_p_symfun(om, cache_dir), macdonald_p_symfun(ga, cache_dir)
    )
    out = {}
    for lam in tab.block:
        c = pair_p_coeffs(tab.p_coords[lam], prod.coeffs) / tab.norms[lam]
        if not c.is_zero():
            out[lam] = c
    return SymFun("macdonald", m, out)


def skew(lam, om, cache_dir=None) -> SymFun:
    """P_{lam/om} in the Macdonald basis; the zero function on non-containment."""
    if not sp_contains(om, lam):
        return SymFun("macdonald", lam.m - om.m, {})
    n, m = lam.n - om.n, lam.m - om.m
    tab = get_table(n, m, cache_dir)
    out = {}
    for ga in tab.block:
        g = g_coefficient(lam, om, ga, cache_dir)
        if not g.is_zero():
            out[ga] = g / tab.norms[ga]
    return SymFun("macdonald", m, out)


def macdonald_to_p(f: SymFun, cache_dir=None) -> SymFun:
    """Expand a Macdonald-basis SymFun in power sums."""
    if f.basis != "macdonald":
        raise ValueError("expected macdonald basis")
    out = {}
    for lam, c in f.coeffs.items():
        for om, v in macdonald_p_symfun(lam, cache_dir).coeffs.items():
            s = out.get(om, RF_ZERO) + c * v
            if s.is_zero():
                out.pop(om, None)
            else:
                out[om] = s
    return SymFun("powersum", f.m, out)


# ---------------------------------------------------------------------------
# the duality homomorphism
# ---------------------------------------------------------------------------


def omega_qt_factor(lam: SuperPartition) -> RatFun:
    """Eigenvalue of the duality homomorphism on p_Lambda."""
    sign = -1 if (lam.n - len(lam.s_parts)) % 2 else 1
    out = RatFun.from_int(sign) * q_power(sum(lam.a_parts))
    for s in lam.s_parts:
        out = out * ((RF_ONE - q_power(s)) / (RF_ONE - RatFun.monomial(0, s)))
    return out


def omega_qt(f: SymFun) -> SymFun:
    """Apply the duality homomorphism to a power-sum SymFun."""
    if f.basis != "powersum":
        raise ValueError("omega_qt acts on the powersum basis")
    return SymFun(
        "powersum", f.m, {k: c * omega_qt_factor(k) for k, c in f.coeffs.items()}
    )


_SWAP_INV = {"q": "1/t", "t": "1/q"}


def duality_check(lam: SuperPartition, cache_dir=None) -> bool:
    """Exact p-expansion identity:
    omega_qt P_lam(q,t) = (-1)^{binom(m,2)} (q/t)^{|lam|} Q_{lam'}(1/t, 1/q)."""
    m = lam.m
    lhs = omega_qt(macdonald_p_symfun(lam, cache_dir))
    conj = lam.conjugate()
    pc = macdonald_p_symfun(conj, cache_dir)
    nrm = norm_squared(conj, cache_dir).substitute(_SWAP_INV)
    sign = RatFun.from_int(-1 if comb(m, 2) % 2 else 1)
    pref = sign * q_power(lam.n) * RatFun.monomial(0, -lam.n) / nrm
    rhs_coeffs = {k: c.substitute(_SWAP_INV) * pref for k, c in pc.coeffs.items()}
    return lhs.coeffs == {k: c for k, c in rhs_coeffs.items() if not c.is_zero()}

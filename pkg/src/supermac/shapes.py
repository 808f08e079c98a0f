"""Superpartitions, their diagrams, statistics and first-column operations.

A superpartition is stored in the canonical encoding (a_parts; s_parts):
a_parts is a strictly decreasing tuple of non-negative integers (so at most
one zero, necessarily last) and s_parts is an ordinary partition (weakly
decreasing positive integers).  The equivalent pair of ordinary partitions
(star, circledast) is always derived, never stored:

  star        =  all parts sorted decreasingly, zeros dropped
  circledast  =  same with every a_part incremented first

Rows are indexed from 1 top-down, columns from 1; a cell is a (row, col)
tuple.  The rows of the diagram where circledast exceeds star carry circles.

Ordinary partitions are plain tuples of ints throughout this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ratfun import RF_ONE, RatFun, rf_prod, t_power

Cell = tuple  # (row, col), both >= 1

# ---------------------------------------------------------------------------
# ordinary partition helpers
# ---------------------------------------------------------------------------


def is_partition(parts):
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        p >= 1 for p in parts
    )


def conjugate_partition(parts):
    """Transpose of the Ferrers diagram."""
    if not parts:
        return ()
    out = []
    for j in range(1, parts[0] + 1):
        out.append(sum(1 for p in parts if p >= j))
    return tuple(out)


def dominates_leq(mu, lam):
    """mu <= lam in dominance order (equal weights assumed checked by caller)."""
    if sum(mu) != sum(lam):
        return False
    pm = pl = 0
    for i in range(max(len(mu), len(lam))):
        pm += mu[i] if i < len(mu) else 0
        pl += lam[i] if i < len(lam) else 0
        if pm > pl:
            return False
    return True


def contains_partition(mu, lam):
    """mu subseteq lam as diagrams."""
    return all((mu[i] if i < len(mu) else 0) <= (lam[i] if i < len(lam) else 0)
               for i in range(len(mu)))


def skew_cells(lam, mu):
    """Cells of lam/mu; assumes mu subseteq lam."""
    cells = []
    for i, p in enumerate(lam, start=1):
        lo = mu[i - 1] if i - 1 < len(mu) else 0
        for j in range(lo + 1, p + 1):
            cells.append((i, j))
    return cells


def is_horizontal_strip(lam, mu, size):
    """lam/mu a horizontal strip of the given size (no two cells per column)."""
    if not contains_partition(mu, lam):
        return False
    if sum(lam) - sum(mu) != size:
        return False
    lamc, muc = conjugate_partition(lam), conjugate_partition(mu)
    return all(lamc[j] - (muc[j] if j < len(muc) else 0) <= 1 for j in range(len(lamc)))


def is_vertical_strip(lam, mu, size):
    """lam/mu a vertical strip of the given size (no two cells per row)."""
    if not contains_partition(mu, lam):
        return False
    if sum(lam) - sum(mu) != size:
        return False
    return all(lam[i] - (mu[i] if i < len(mu) else 0) <= 1 for i in range(len(lam)))


def n_stat(arg):
    """n(lambda) = sum_i (i-1) lambda_i, or sum of (row-1) over a cell set."""
    if isinstance(arg, (list, set, frozenset)):
        return sum(i - 1 for (i, _) in arg)
    return sum(i * p for i, p in enumerate(arg))


def arm(lam, cell):
    i, j = cell
    if i > len(lam) or j > lam[i - 1]:
        raise ValueError(f"cell {cell} outside partition {lam}")
    return lam[i - 1] - j


def leg(lam, cell):
    i, j = cell
    if i > len(lam) or j > lam[i - 1]:
        raise ValueError(f"cell {cell} outside partition {lam}")
    return sum(1 for p in lam if p >= j) - i


def staircase(k):
    """delta_k = (k-1, k-2, ..., 1, 0)."""
    return tuple(range(k - 1, -1, -1))


def partitions_of(n, max_part=None):
    """All partitions of n with parts <= max_part, in reverse-lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# SuperPartition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SuperPartition:
    """Superpartition in the (a_parts; s_parts) encoding."""

    a_parts: tuple
    s_parts: tuple

    def __post_init__(self):
        a, s = tuple(self.a_parts), tuple(self.s_parts)
        object.__setattr__(self, "a_parts", a)
        object.__setattr__(self, "s_parts", s)
        if any(a[i] <= a[i + 1] for i in range(len(a) - 1)) or any(p < 0 for p in a):
            raise ValueError(f"a_parts must be strictly decreasing >= 0: {a}")
        if not is_partition(s):
            raise ValueError(f"s_parts must be a partition: {s}")

    # -- degrees and encodings ------------------------------------------------

    @property
    def m(self):
        """Fermionic degree (number of circles)."""
        return len(self.a_parts)

    @property
    def n(self):
        """Total degree |star|."""
        return sum(self.a_parts) + sum(self.s_parts)

    @property
    def star(self):
        merged = sorted(self.a_parts + self.s_parts, reverse=True)
        return tuple(p for p in merged if p > 0)

    @property
    def circledast(self):
        merged = sorted(tuple(p + 1 for p in self.a_parts) + self.s_parts, reverse=True)
        return tuple(merged)

    @property
    def ell(self):
        """Length of the diagram = length of circledast."""
        return len(self.circledast)

    def fermionic_rows(self):
        """Row indices (1-based, in the diagram) that carry a circle."""
        circ, star = self.circledast, self.star
        rows = []
        for i in range(len(circ)):
            s = star[i] if i < len(star) else 0
            if circ[i] != s:
                rows.append(i + 1)
        return rows

    def conjugate(self):
        return from_star_circledast(
            conjugate_partition(self.star), conjugate_partition(self.circledast)
        )

    def sort_key(self):
        """Frozen enumeration key: lexicographic on (star, circledast)."""
        return (self.star, self.circledast)

    def __str__(self):
        return ",".join(map(str, self.a_parts)) + ";" + ",".join(map(str, self.s_parts))

    def __repr__(self):
        return f"SuperPartition({self})"


def sp(text):
    """Parse the 'a1,...,am;s1,...' grammar (whitespace ignored)."""
    return parse_superpartition(text)


class SuperPartitionParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def parse_superpartition(text):
    stripped = []
    positions = []
    for i, ch in enumerate(text):
        if not ch.isspace():
            stripped.append(ch)
            positions.append(i)
    s = "".join(stripped)
    if s.count(";") != 1:
        raise SuperPartitionParseError("expected exactly one ';'", len(text))
    k = s.index(";")

    def parse_side(chunk, offset):
        if not chunk:
            return ()
        out = []
        for piece in chunk.split(","):
            if not piece.isdigit():
                pos = positions[offset] if offset < len(positions) else len(text)
                raise SuperPartitionParseError(f"expected integer, got {piece!r}", pos)
            out.append(int(piece))
            offset += len(piece) + 1
        return tuple(out)

    a = parse_side(s[:k], 0)
    sp_ = parse_side(s[k + 1 :], k + 1)
    try:
        return SuperPartition(a, sp_)
    except ValueError as e:
        raise SuperPartitionParseError(str(e), positions[0] if positions else 0)


def from_star_circledast(star, circ):
    """Inverse of (star, circledast); validates the rook-strip condition."""
    star, circ = tuple(star), tuple(circ)
    if not (is_partition(star) and is_partition(circ)):
        raise ValueError("inputs must be partitions")
    if not contains_partition(star, circ):
        bad = next(
            i + 1
            for i in range(len(circ) + 1)
            if (star[i] if i < len(star) else 0) > (circ[i] if i < len(circ) else 0)
        )
        raise ValueError(f"star not contained in circledast (row {bad})")
    a, s = [], []
    for i in range(len(circ)):
        st = star[i] if i < len(star) else 0
        d = circ[i] - st
        if d == 0:
            s.append(st)
        elif d == 1:
            a.append(st)
        else:
            raise ValueError(f"row {i + 1} of the skew has {d} cells (at most 1 allowed)")
    circ_conj, star_conj = conjugate_partition(circ), conjugate_partition(star)
    for j in range(len(circ_conj)):
        sc = star_conj[j] if j < len(star_conj) else 0
        if circ_conj[j] - sc > 1:
            raise ValueError(f"column {j + 1} of the skew has {circ_conj[j] - sc} cells")
    if len(star) > len(circ):
        raise ValueError("star longer than circledast")
    s = tuple(p for p in s if p > 0)
    return SuperPartition(tuple(a), s)


# ---------------------------------------------------------------------------
# orders, containment, strips
# ---------------------------------------------------------------------------


def dominance_leq(om, lam):
    """om <= lam in the superspace dominance order."""
    if om.n != lam.n or om.m != lam.m:
        return False
    return dominates_leq(om.star, lam.star) and dominates_leq(
        om.circledast, lam.circledast
    )


def sp_contains(om, lam):
    """om subseteq lam: containment of both diagram members."""
    return contains_partition(om.star, lam.star) and contains_partition(
        om.circledast, lam.circledast
    )


def is_strip(lam, om, kind, tilde, size):
    """Is lam/om a (tilde-)strip of the given kind and size?

    Plain: both star and circledast skews are size-strips.  Tilde: the star
    skew is a size-strip and the circledast skew a (size+1)-strip.  Returns
    False (never raises) when containment fails.
    """
    check = is_horizontal_strip if kind == "horizontal" else is_vertical_strip
    big = size + 1 if tilde else size
    return check(lam.star, om.star, size) and check(lam.circledast, om.circledast, big)


# ---------------------------------------------------------------------------
# diagram cell sets and statistics
# ---------------------------------------------------------------------------


def cells_B(lam):
    """Boxes of the diagram not lying in both a circled row and a circled column."""
    star = lam.star
    frows = set(lam.fermionic_rows())
    star_padded = list(star) + [0] * (lam.ell - len(star))
    fcols = {star_padded[i - 1] + 1 for i in frows}
    cells = []
    for i, p in enumerate(star, start=1):
        for j in range(1, p + 1):
            if i in frows and j in fcols:
                continue
            cells.append((i, j))
    return cells


def cells_S(lam, tilde=False):
    """Skew cells circledast/delta_{m+1}, or star/delta_m for the tilde variant."""
    if tilde:
        outer, delta = lam.star, staircase(lam.m)
    else:
        outer, delta = lam.circledast, staircase(lam.m + 1)
    cells = []
    for i, p in enumerate(outer, start=1):
        lo = delta[i - 1] if i - 1 < len(delta) else 0
        for j in range(lo + 1, p + 1):
            cells.append((i, j))
    return cells


def zeta_stat(lam):
    """Sum, over boxes lying in both a circled row and a circled column, of the
    number of boxes above them that sit in non-circled rows."""
    star = lam.star
    frows = set(lam.fermionic_rows())
    star_padded = list(star) + [0] * (lam.ell - len(star))
    fcols = {star_padded[i - 1] + 1 for i in frows}
    total = 0
    for i, p in enumerate(star, start=1):
        if i not in frows:
            continue
        for j in range(1, p + 1):
            if j not in fcols:
                continue
            total += sum(
                1 for i2 in range(1, i) if i2 not in frows and star[i2 - 1] >= j
            )
    return total


def remove_first_column(lam):
    """Diagram minus its first column; requires no circle in the first column."""
    if lam.m > 0 and lam.a_parts[-1] == 0:
        raise ValueError("first column has a circle; use remove_first_circle")
    if lam.ell == 0:
        raise ValueError("empty superpartition has no first column")
    a = tuple(p - 1 for p in lam.a_parts)
    s = tuple(p - 1 for p in lam.s_parts if p - 1 > 0)
    return SuperPartition(a, s)


def remove_first_circle(lam):
    """Delete the circle in the first column; requires the last a_part to be 0."""
    if lam.m == 0 or lam.a_parts[-1] != 0:
        raise ValueError("no circle in the first column")
    return SuperPartition(lam.a_parts[:-1], lam.s_parts)


def fermionic_rows_after_tilde(lam):
    """Circled rows of remove_first_circle(lam), as a set of row indices."""
    return set(remove_first_circle(lam).fermionic_rows())


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def strict_partitions_of(total, length):
    """Strictly decreasing tuples of non-negative ints with given sum and length."""
    yield from _strict_capped(total, length, total)


def _strict_capped(total, length, cap):
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        rest = total - first
        # the tail holds length-1 distinct values in [0, first-1]
        if rest < (length - 1) * (length - 2) // 2:
            continue
        if length > 1 and rest > (length - 1) * first - length * (length - 1) // 2:
            continue
        if length == 1 and rest != 0:
            continue
        for tail in _strict_capped(rest, length - 1, first - 1):
            yield (first,) + tail


def enumerate_superpartitions(n, m):
    """All superpartitions of total degree n, fermionic degree m.

    Frozen deterministic order: ascending lexicographic on (star, circledast),
    which refines the dominance order (smaller superpartitions come first).
    """
    out = []
    min_a = m * (m - 1) // 2
    for a_total in range(min_a, n + 1):
        for a in strict_partitions_of(a_total, m):
            for s in partitions_of(n - a_total):
                out.append(SuperPartition(a, s))
    out.sort(key=lambda x: x.sort_key())
    return out


def count_superpartitions(n, m):
    """Generating-function count: coefficient of z^m x^n in
    prod_{k>=1} 1/(1-x^k) * prod_{k>=0} (1 + z x^k)."""
    ferm = [[0] * (m + 1) for _ in range(n + 1)]
    ferm[0][0] = 1
    for part in range(0, n + 1):  # 0/1 knapsack over distinct fermionic parts
        for tot in range(n, part - 1, -1):
            for k in range(m, 0, -1):
                ferm[tot][k] += ferm[tot - part][k - 1]
    bos = [0] * (n + 1)
    bos[0] = 1
    for part in range(1, n + 1):
        for tot in range(part, n + 1):
            bos[tot] += bos[tot - part]
    return sum(ferm[k][m] * bos[n - k] for k in range(n + 1))


# ---------------------------------------------------------------------------
# assorted statistics used by the symmetrized construction and evaluations
# ---------------------------------------------------------------------------


def inversions(parts, num_entries=None):
    """inv(lambda) = #{ i > j : lambda_i < lambda_j }, counting trailing zeros.

    The sequence is padded with zeros to num_entries entries (defaults to its
    own length).
    """
    seq = list(parts)
    if num_entries is not None:
        if num_entries < len(seq):
            raise ValueError("num_entries shorter than the sequence")
        seq += [0] * (num_entries - len(seq))
    return sum(
        1
        for j in range(len(seq))
        for i in range(j + 1, len(seq))
        if seq[i] < seq[j]
    )


def t_factorial(k):
    """[k]_t! = [1]_t [2]_t ... [k]_t with [j]_t = (1-t^j)/(1-t)."""
    out = RF_ONE
    for j in range(1, k + 1):
        out = out * ((RF_ONE - t_power(j)) / (RF_ONE - t_power(1)))
    return out


def occupancy_t_factor(parts, num_entries=None):
    """prod_j [n_j]_t! over the multiplicities n_j of each value j >= 0.

    Zeros count according to the padding length num_entries.
    """
    seq = list(parts)
    if num_entries is not None:
        if num_entries < len(seq):
            raise ValueError("num_entries shorter than the sequence")
        seq += [0] * (num_entries - len(seq))
    mult = {}
    for p in seq:
        mult[p] = mult.get(p, 0) + 1
    return rf_prod(t_factorial(k) for k in mult.values())


def a_minus_delta(lam):
    """The partition (a_1 - (m-1), a_2 - (m-2), ..., a_m)."""
    m = lam.m
    return tuple(lam.a_parts[i] - (m - 1 - i) for i in range(m))


def misc_stats(lam, num_entries=None):
    """Record of small statistics: occupancy t-factor, inversions, a-delta data."""
    m = lam.m
    delta = staircase(m)
    a_deg = sum(lam.a_parts) - sum(delta)
    a_n = n_stat(lam.a_parts) - n_stat(delta)
    conj_a = lam.conjugate().a_parts
    conj_n = n_stat(conj_a) - n_stat(delta)
    return {
        "f_t": occupancy_t_factor(lam.s_parts, num_entries),
        "inv": inversions(lam.s_parts, num_entries),
        "a_minus_delta": a_minus_delta(lam),
        "a_over_delta_size": a_deg,
        "n_a_over_delta": a_n,
        "n_conj_a_over_delta": conj_n,
    }

"""Counting connected cyclic (v_3) configurations, three independent ways.

Write U(v) for the unit group and B for the connected base triples
through 0.  Units act on B by multiplication combined with translation
back into the slice, and the isomorphism classes of connected cyclic
(v_3) configurations correspond to the orbits of that action.  Orbit
counting over the group of order 3*phi(v) gives

    classes = (1 / (3 phi(v))) * sum over units l of fixed(v, l)

where fixed(v, l) counts triples X in B with l*X a translate of X.

Three routes to the same number are implemented:

* count_closed_formula: the closed expression
  bigphi(v)/6 + w * 2**k - (2 for odd v, 3 for even v), with k the
  number of distinct primes of v and w a case weight depending on the
  primes mod 3 (odd v) or on v mod 8 (even v).
* count_unit_sum: bigphi(v)/6 - 1 + g2 / 2 + g3 / 3 (minus a totient
  ratio for even v), where g2 and g3 count the order-2 and order-3
  units that actually fix triples; both counts come from iterating over
  units, with closed forms checked against them.
* count_orbit_scan: brute-force enumeration of the slice and a
  union-find walk of the affine action.  No formula enters; this is the
  oracle for the other two.

All intermediate division is done in exact rationals and asserted
integral, so a wrong formula fails loudly rather than rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .baseline import canonical_form, ensure_enumerable, enumerate_base_lines
from .residue_ring import (
    big_phi,
    factorization,
    mult_order,
    phi,
    unit_group_generators,
    units,
)


def _require_v(v: int) -> None:
    if v <= 4:
        raise ValueError(f"counts are defined for v > 4, got v={v}")


# ---------------------------------------------------------------- fixed counts


def count_fixed_identity(v: int) -> int:
    """Number of connected base triples through 0 (fixed by the unit 1).

    phi(v) (bigphi(v) - 6) / 2 for odd v; even v subtracts 3 phi(v/2)
    for the pairs whose third difference degenerates at v/2.
    """
    _require_v(v)
    n = phi(v) * (big_phi(v) - 6)
    assert n % 2 == 0
    n //= 2
    if v % 2 == 0:
        n -= 3 * phi(v // 2)
    return n


def count_fixed_closed(v: int, l: int) -> int:
    """Closed count of connected base triples through 0 that the unit l
    maps to a translate of themselves.

    Nonzero only when l has multiplicative order 1, 2 or 3.  Order 2
    contributes 3 phi(v)/2 unless l = -1 or (4 | v and l = 1 mod v/2);
    order 3 contributes phi(v) exactly when l*l + l + 1 = 0 mod v.
    """
    _require_v(v)
    l %= v
    order = mult_order(l, v)  # rejects non-units
    if l == 1:
        return count_fixed_identity(v)
    if order > 3:
        return 0
    if order == 2:
        if (l + 1) % v == 0:
            return 0
        if v % 4 == 0 and l % (v // 2) == 1:
            return 0
        n = 3 * phi(v)
        assert n % 2 == 0
        return n // 2
    return phi(v) if (l * l + l + 1) % v == 0 else 0


@lru_cache(maxsize=8)
def _slice_shift_keys(v: int, k: int) -> tuple[tuple[tuple[int, ...], ...], tuple[frozenset, ...]]:
    # cap=v: permission is the caller's job, through ensure_enumerable
    slice_ = tuple(enumerate_base_lines(v, k, connected_only=True, cap=v))
    keys = tuple(
        frozenset(tuple(sorted((s - x) % v for s in X)) for x in X) for X in slice_
    )
    return slice_, keys


def count_fixed_bruteforce(v: int, k: int, l: int, cap: int | None = None) -> int:
    """Exhaustive version of the fixed count, for any k.

    Walks the connected slice and counts the sets X with l*X equal to
    X - x for some x in X.  Shares no arithmetic with the closed forms.
    """
    ensure_enumerable(v, k, cap)
    mult_order(l, v)  # rejects non-units
    slice_, keys = _slice_shift_keys(v, k)
    count = 0
    for X, shifts in zip(slice_, keys):
        image = tuple(sorted(l * x % v for x in X))
        if image in shifts:
            count += 1
    return count


# ------------------------------------------------------------- unit censuses


def contributor_counts(v: int) -> tuple[int, int]:
    """(order-2 count, order-3 count) of units that fix some triple.

    Order-2 units qualify unless l = -1 mod v or, when 4 | v,
    l = 1 mod v/2; order-3 units qualify iff l*l + l + 1 = 0 mod v.
    Computed by direct iteration over the unit group.
    """
    _require_v(v)
    g2 = g3 = 0
    for l in units(v):
        order = mult_order(l, v)
        if order == 2:
            if (l + 1) % v == 0:
                continue
            if v % 4 == 0 and l % (v // 2) == 1:
                continue
            g2 += 1
        elif order == 3 and (l * l + l + 1) % v == 0:
            g3 += 1
    return g2, g3


def order2_contributors_closed(v: int) -> int:
    """Closed form of the order-2 census for even v, from v mod 8.

    2**(k-1) - 2 for v = 2, 6 mod 8; 2**k - 3 for v = 4 mod 8;
    2**(k+1) - 3 for v = 0 mod 8, with k the number of distinct primes.
    Returned raw, without clamping; the iterating census arbitrates.
    """
    _require_v(v)
    if v % 2:
        raise ValueError(f"closed order-2 census applies to even v, got {v}")
    k = len(factorization(v))
    r = v % 8
    if r in (2, 6):
        return 2 ** (k - 1) - 2
    if r == 4:
        return 2**k - 3
    return 2 ** (k + 1) - 3


# ------------------------------------------------------------------- the counts


@dataclass(frozen=True)
class FormulaCase:
    """Case weight of the closed formula and which branch chose it."""

    parity: str
    weight: Fraction
    label: str


def formula_case(v: int) -> FormulaCase:
    """Branch on the primes of v (odd) or v mod 8 (even)."""
    _require_v(v)
    facs = factorization(v)
    if v % 2:
        if all(p % 3 == 1 for p, _ in facs):
            return FormulaCase("odd", Fraction(5, 6), "all primes 1 mod 3")
        if facs[0] == (3, 1) and all(p % 3 == 1 for p, _ in facs[1:]):
            return FormulaCase("odd", Fraction(2, 3), "single 3, rest 1 mod 3")
        return FormulaCase("odd", Fraction(1, 2), "generic odd")
    r = v % 8
    if r in (2, 6):
        return FormulaCase("even", Fraction(1, 4), "v = 2, 6 mod 8")
    if r == 4:
        return FormulaCase("even", Fraction(1, 2), "v = 4 mod 8")
    return FormulaCase("even", Fraction(1, 1), "v = 0 mod 8")


def count_closed_formula(v: int) -> int:
    """Number of connected cyclic (v_3) configurations, closed form."""
    case = formula_case(v)
    k = len(factorization(v))
    total = Fraction(big_phi(v), 6) + case.weight * 2**k - (2 if v % 2 else 3)
    assert total.denominator == 1, f"formula not integral at v={v}"
    return int(total)


def count_unit_sum(v: int) -> int:
    """Same count through the unit censuses instead of the case table."""
    _require_v(v)
    g2, g3 = contributor_counts(v)
    total = Fraction(big_phi(v), 6) - 1 + Fraction(g2, 2) + Fraction(g3, 3)
    if v % 2 == 0:
        total -= Fraction(phi(v // 2), phi(v))
    assert total.denominator == 1, f"unit sum not integral at v={v}"
    return int(total)


class _DisjointSet:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def count_orbit_scan(v: int, k: int = 3, cap: int | None = None) -> int:
    """Count affine orbits on connected base lines by enumeration.

    Builds the translation slice, joins each set to its images under a
    few unit-group generators and under the shifts moving each element
    to 0 (together these generate the whole slice action), and counts
    components.  Canonical forms of the components are checked distinct,
    tying the scan to the canonicalizer without trusting any formula.
    """
    slice_ = enumerate_base_lines(v, k, connected_only=True, cap=cap)
    if not slice_:
        return 0
    index = {X: i for i, X in enumerate(slice_)}
    dsu = _DisjointSet(len(slice_))
    gens = unit_group_generators(v)
    for X, i in index.items():
        for a in gens:
            dsu.union(i, index[tuple(sorted(a * x % v for x in X))])
        for x in X:
            dsu.union(i, index[tuple(sorted((s - x) % v for s in X))])
    roots = {dsu.find(i) for i in range(len(slice_))}
    canon = {canonical_form(slice_[r], v) for r in roots}
    assert len(canon) == len(roots), f"canonical forms collide at v={v}"
    return len(roots)


@dataclass(frozen=True)
class CountBreakdown:
    """Per-unit fixed counts and the orbit total they imply."""

    v: int
    fixed_by_unit: dict[int, int]
    order2_contributors: int
    order3_contributors: int
    total: int


def count_breakdown(v: int) -> CountBreakdown:
    """Assemble the closed per-unit counts and reduce them exactly.

    The reduction sum(fixed) / (3 phi(v)) must be an integer; a failed
    division signals a wrong branch somewhere and raises.
    """
    _require_v(v)
    fixed = {l: count_fixed_closed(v, l) for l in units(v)}
    g2, g3 = contributor_counts(v)
    total, rem = divmod(sum(fixed.values()), 3 * phi(v))
    if rem:
        raise ArithmeticError(f"orbit reduction not integral at v={v}")
    return CountBreakdown(v, fixed, g2, g3, total)

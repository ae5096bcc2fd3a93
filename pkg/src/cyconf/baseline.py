"""Base lines: the k-subsets of Z_v whose translates form a configuration.

A k-subset S of Z_v is a base line when its difference set S - S has the
maximal size k*k - k + 1, i.e. all nonzero differences are distinct.  The
v translates S + i are then the lines of a combinatorial (v_k)
configuration.  The affine group {x -> a*x + b : a a unit} acts on base
lines; its orbits are exactly the isomorphism classes for k = 3 and 4,
which is what makes the canonical form here decisive.

Enumeration works on the translation slice (subsets containing 0): every
base line has exactly k translates containing 0, so nothing is lost and
the slice is v/k times smaller.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import gcd

from .residue_ring import (
    CapExceeded,
    ENUMERATION_CAP,
    factorization,
    units,
)

# Enumeration is O(v**(k-1)) subsets before filtering; defaults keep runs
# in the minutes range.  CLI callers may override per invocation.
DEFAULT_ENUMERATION_CAPS = {3: 300, 4: 60}
FALLBACK_ENUMERATION_CAP = 40


def enumeration_cap(k: int, cap: int | None = None) -> int:
    chosen = cap if cap is not None else DEFAULT_ENUMERATION_CAPS.get(k, FALLBACK_ENUMERATION_CAP)
    return min(chosen, ENUMERATION_CAP)


def ensure_enumerable(v: int, k: int, cap: int | None = None) -> None:
    """Raise CapExceeded when v is too large to enumerate at this k."""
    limit = enumeration_cap(k, cap)
    if v > limit:
        raise CapExceeded(f"v={v} exceeds the enumeration cap {limit} for k={k}")


def difference_set(S, v: int) -> frozenset[int]:
    """The set of differences s1 - s2 mod v over all pairs from S."""
    S = [s % v for s in S]
    return frozenset((a - b) % v for a in S for b in S)


def is_base_line(S, v: int, k: int | None = None) -> bool:
    """True iff S is a k-subset of Z_v with |S - S| = k*k - k + 1.

    k defaults to |S|; k < 3 is rejected outright since the configuration
    axioms below degenerate there.
    """
    elems = {s % v for s in S}
    if k is None:
        k = len(elems)
    if k < 3:
        raise ValueError(f"base lines need k >= 3, got k={k}")
    if len(elems) != k:
        return False
    return len(difference_set(elems, v)) == k * k - k + 1


def is_connected(S, v: int) -> bool:
    """True iff the differences of S generate all of Z_v."""
    elems = sorted({s % v for s in S})
    if not elems:
        return False
    s0 = elems[0]
    return gcd(v, *[s - s0 for s in elems[1:]]) == 1 if len(elems) > 1 else v == 1


def contains_coset(S, v: int) -> bool:
    """True iff S contains a coset of a subgroup of prime order.

    Only prime orders need checking: any coset of a larger subgroup
    contains one of prime order.  Base lines never contain a coset,
    which the tests verify exhaustively at small v.
    """
    elems = {s % v for s in S}
    for p, _ in factorization(v):
        step = v // p
        for x in elems:
            if all((x + j * step) % v in elems for j in range(1, p)):
                return True
    return False


def affine_image(S, a: int, b: int, v: int) -> tuple[int, ...]:
    """The sorted tuple a*S + b mod v."""
    return tuple(sorted((a * s + b) % v for s in S))


def affine_map_between(S1, S2, v: int) -> tuple[int, int] | None:
    """Least (a, b) lexicographically with a*S1 + b == S2, or None.

    Units are tried in increasing order; for each a only the b that send
    the least element of S1 into S2 can work, so those are the only
    candidates tested.
    """
    set1 = frozenset(s % v for s in S1)
    set2 = frozenset(s % v for s in S2)
    if len(set1) != len(set2):
        return None
    s0 = min(set1)
    for a in units(v):
        base = a * s0
        for b in sorted((t - base) % v for t in set2):
            if all((a * s + b) % v in set2 for s in set1):
                return a, b
    return None


def zero_slice_orbit(S, v: int) -> frozenset[tuple[int, ...]]:
    """All affine images of S that contain 0, as sorted tuples.

    These are exactly the sets a*(S - x) for units a and x in S, and any
    affine image of S containing 0 is one of them.
    """
    elems = [s % v for s in S]
    out = set()
    for x in elems:
        shifted = [(s - x) % v for s in elems]
        for a in units(v):
            out.add(tuple(sorted(a * t % v for t in shifted)))
    return frozenset(out)


def canonical_form(S, v: int) -> tuple[int, ...]:
    """Lexicographically least sorted tuple among all a*S + b.

    The least image always contains 0 (translating the minimum to 0 can
    only shrink the tuple), so scanning the images through 0 suffices;
    the tests compare against a full a,b scan.
    """
    elems = [s % v for s in S]
    best: tuple[int, ...] | None = None
    for x in elems:
        shifted = [(s - x) % v for s in elems]
        for a in units(v):
            cand = tuple(sorted(a * t % v for t in shifted))
            if best is None or cand < best:
                best = cand
    if best is None:
        raise ValueError("empty set has no canonical form")
    return best


def orbit_size(S, v: int) -> int:
    """Number of distinct affine images of S.

    Counting pairs (image T, element t of T) two ways gives
    |orbit| * k = |images through 0| * v, valid even for periodic S.
    """
    k = len({s % v for s in S})
    total = len(zero_slice_orbit(S, v)) * v
    assert total % k == 0
    return total // k


@lru_cache(maxsize=16)
def _slice(v: int, k: int, connected: bool) -> tuple[tuple[int, ...], ...]:
    if k * k - k + 1 > v:
        return ()
    out = []
    target = k * k - k + 1
    for comb in combinations(range(1, v), k - 1):
        X = (0,) + comb
        if len(difference_set(X, v)) != target:
            continue
        if connected and gcd(v, *comb) != 1:
            continue
        out.append(X)
    return tuple(out)


def enumerate_base_lines(
    v: int,
    k: int,
    *,
    connected_only: bool = False,
    expand: bool = False,
    representatives_only: bool = False,
    cap: int | None = None,
) -> list[tuple[int, ...]]:
    """Base lines of Z_v with |S| = k, in lexicographic order.

    By default only the translation slice (sets containing 0) is
    returned.  ``expand`` lists every base line, ``representatives_only``
    collapses to one canonical representative per affine orbit.  The
    result is empty when k*k - k + 1 > v.
    """
    if k < 3:
        raise ValueError(f"base lines need k >= 3, got k={k}")
    if expand and representatives_only:
        raise ValueError("expand and representatives_only are mutually exclusive")
    ensure_enumerable(v, k, cap)
    slice_ = _slice(v, k, connected_only)
    if representatives_only:
        return sorted({canonical_form(X, v) for X in slice_})
    if expand:
        seen = {tuple(sorted((x + b) % v for x in X)) for X in slice_ for b in range(v)}
        return sorted(seen)
    return list(slice_)

"""Isomorphism of cyclic configurations, by multiplier and by exhaustive search.

Two configurations on Z_v are isomorphic when some point bijection maps
the line set of one onto the line set of the other.  Affine maps
x -> a*x + b with a a unit always work when a*S1 + b = S2 (multiplier
equivalence).  The exhaustive route searches all point bijections by
backtracking on the line systems and is the oracle everything else is
measured against; it shares no arithmetic with the multiplier route.

For k = 3 and k = 4, and for any k when v is a prime power, a product
of two distinct primes, or coprime to phi(v), multiplier equivalence is
complete: isomorphic configurations are always affinely related.  The
dispatcher uses the cheap route exactly in those cases.  Disconnected
configurations are compared through their component decompositions, and
the returned witness is still a full point bijection, assembled from an
affine match of the components and replayable like any other witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _search
from .baseline import affine_map_between, canonical_form, is_connected
from .configuration import CyclicConfiguration
from .residue_ring import CapExceeded, factorization, is_ci_order

EXACT_SEARCH_CAP = 300


@dataclass(frozen=True)
class IsoWitness:
    """A verified isomorphism: either an affine map or an explicit bijection.

    kind is "multiplier" (fields a, b) or "explicit" (field point_map).
    Either way, as_point_map gives the bijection on points.
    """

    kind: str
    a: int | None = None
    b: int | None = None
    point_map: tuple[int, ...] | None = None

    def as_point_map(self, v: int) -> tuple[int, ...]:
        if self.kind == "multiplier":
            assert self.a is not None and self.b is not None
            return tuple((self.a * x + self.b) % v for x in range(v))
        assert self.point_map is not None
        return self.point_map


def multiplier_equivalent(v: int, S1, S2) -> tuple[int, int] | None:
    """Least (a, b) lexicographically with a*S1 + b = S2, or None."""
    return affine_map_between(S1, S2, v)


def witness_valid(C1: CyclicConfiguration, C2: CyclicConfiguration, w: IsoWitness) -> bool:
    """Replay a witness: the point map must carry lines onto lines, bijectively."""
    if C1.v != C2.v:
        return False
    sigma = w.as_point_map(C1.v)
    if sorted(sigma) != list(range(C1.v)):
        return False
    target = C2.line_set()
    image = {frozenset(sigma[x] for x in line) for line in C1.lines()}
    return image == target


def exact_isomorphic(
    C1: CyclicConfiguration, C2: CyclicConfiguration, cap: int | None = None
) -> IsoWitness | None:
    """Search all point bijections; witness or None.  The oracle route.

    Equal line sets short-circuit to the identity.  Otherwise a
    backtracking search over the two line systems runs with sigma(0)
    pinned to 0, which is complete because translations are
    automorphisms.  Deterministic: the first witness in increasing
    candidate order is returned.
    """
    if C1.v != C2.v:
        raise ValueError("isomorphism needs a common point count")
    limit = cap if cap is not None else EXACT_SEARCH_CAP
    if C1.v > limit:
        raise CapExceeded(f"v={C1.v} exceeds the exact search cap {limit}")
    if C1.k != C2.k:
        return None
    if C1.line_set() == C2.line_set():
        return IsoWitness(kind="explicit", point_map=tuple(range(C1.v)))
    for sigma in _search.line_bijections(C1.v, C1.lines(), C2.lines(), fix_zero=True):
        return IsoWitness(kind="explicit", point_map=sigma)
    return None


def automorphisms(C: CyclicConfiguration, cap: int | None = None) -> list[tuple[int, ...]]:
    """All point bijections preserving the line set, in search order."""
    limit = cap if cap is not None else EXACT_SEARCH_CAP
    if C.v > limit:
        raise CapExceeded(f"v={C.v} exceeds the exact search cap {limit}")
    lines = C.lines()
    return list(_search.line_bijections(C.v, lines, lines, fix_zero=False))


def _multiplier_complete(v: int, k: int) -> bool:
    # complete for k <= 4 always; otherwise for prime powers, products
    # of two distinct primes, and orders coprime to phi(v)
    if k in (3, 4):
        return True
    facs = factorization(v)
    if len(facs) == 1:
        return True
    if len(facs) == 2 and facs[0][1] == 1 and facs[1][1] == 1:
        return True
    return is_ci_order(v)


def _component_witness(
    C1: CyclicConfiguration, C2: CyclicConfiguration
) -> IsoWitness | None:
    """Match disconnected configurations component by component.

    Both bases are translated to contain 0; the components then live on
    the residue classes modulo g = v/d.  All components of one cyclic
    configuration are mutually isomorphic, so the multiset comparison
    reduces to equality of g and of the canonical component base.  The
    witness maps class r to class r through one affine map of Z_d.
    """
    v = C1.v
    m1, m2 = C1.base[0], C2.base[0]
    sh1 = [s - m1 for s in C1.base]
    sh2 = [s - m2 for s in C2.base]
    g1 = gcd(v, *sh1)
    g2 = gcd(v, *sh2)
    if g1 != g2:
        return None
    g, d = g1, v // g1
    t1 = [s // g for s in sh1]
    t2 = [s // g for s in sh2]
    if canonical_form(t1, d) != canonical_form(t2, d):
        return None
    ab = affine_map_between(t1, t2, d)
    assert ab is not None
    a, b = ab
    sigma = [0] * v
    for x in range(v):
        # undo C1's shift, split into class and quotient, map on Z_d,
        # and reapply C2's shift
        y = (x - m1) % v
        r, t = y % g, y // g
        sigma[x] = (r + g * ((a * t + b) % d) + m2) % v
    return IsoWitness(kind="explicit", point_map=tuple(sigma))


def isomorphic(
    C1: CyclicConfiguration,
    C2: CyclicConfiguration,
    method: str = "auto",
    cap: int | None = None,
) -> IsoWitness | None:
    """Decide isomorphism, dispatching on structure unless forced.

    method "multiplier" trusts affine equivalence outright, "exact" runs
    the backtracking oracle, "solving-set" delegates to the two-prime
    solving-set procedure, and "auto" picks: component comparison for
    disconnected inputs, the multiplier route where it is complete,
    the exact search otherwise.
    """
    if C1.v != C2.v:
        raise ValueError("isomorphism needs a common point count")
    v = C1.v
    if method == "exact":
        return exact_isomorphic(C1, C2, cap=cap)
    if method == "multiplier":
        ab = multiplier_equivalent(v, C1.base, C2.base)
        return IsoWitness(kind="multiplier", a=ab[0], b=ab[1]) if ab else None
    if method == "solving-set":
        from .solving_sets import solve_iso_pq

        return solve_iso_pq(C1, C2, cap=cap)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    if C1.k != C2.k:
        return None
    conn1 = is_connected(C1.base, v)
    conn2 = is_connected(C2.base, v)
    if conn1 != conn2:
        return None
    if not conn1:
        return _component_witness(C1, C2)
    if _multiplier_complete(v, C1.k):
        ab = multiplier_equivalent(v, C1.base, C2.base)
        return IsoWitness(kind="multiplier", a=ab[0], b=ab[1]) if ab else None
    return exact_isomorphic(C1, C2, cap=cap)


def completeness_report(
    v: int,
    k: int,
    *,
    exact_members: int | None = None,
    cap: int | None = None,
) -> dict:
    """Compare the affine-orbit partition with the exact oracle at (v, k).

    Enumerates the connected translation slice, groups it into affine
    orbits, and checks that the exact oracle induces the same partition:
    members must be isomorphic to their orbit representative and
    distinct representatives must not be isomorphic.  Isomorphism is an
    equivalence relation, so those two facts pin the whole partition.

    Every member is checked against its representative by replaying the
    affine witness as a point bijection; ``exact_members`` of them per
    orbit (all when None) are additionally pushed through the
    backtracking oracle.

    Returns a dict with orbit count, member count and a list of
    mismatch descriptions (empty means agreement).
    """
    from .baseline import enumerate_base_lines

    mismatches: list[str] = []
    slice_ = enumerate_base_lines(v, k, connected_only=True, cap=cap)
    orbits: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for X in slice_:
        orbits.setdefault(canonical_form(X, v), []).append(X)
    reps = sorted(orbits)
    for rep in reps:
        rep_cfg = CyclicConfiguration(v, rep)
        for idx, member in enumerate(orbits[rep]):
            cfg = CyclicConfiguration(v, member)
            ab = multiplier_equivalent(v, member, rep)
            if ab is None:
                mismatches.append(f"no affine map {member} -> {rep}")
                continue
            w = IsoWitness(kind="multiplier", a=ab[0], b=ab[1])
            if not witness_valid(cfg, rep_cfg, w):
                mismatches.append(f"affine witness fails replay {member} -> {rep}")
            if exact_members is None or idx < exact_members:
                if exact_isomorphic(cfg, rep_cfg, cap=cap) is None:
                    mismatches.append(f"oracle misses {member} ~ {rep}")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            w = exact_isomorphic(
                CyclicConfiguration(v, reps[i]),
                CyclicConfiguration(v, reps[j]),
                cap=cap,
            )
            if w is not None:
                mismatches.append(f"oracle merges {reps[i]} ~ {reps[j]}")
    return {
        "v": v,
        "k": k,
        "orbits": len(reps),
        "members": len(slice_),
        "mismatches": mismatches,
    }

"""Backtracking search for point bijections between line systems.

A line system is a list of point subsets of Z_v, one per translation
index, possibly with repeats (periodic supports repeat translates).  The
search looks for bijections sigma on points such that the multiset
{sigma(L) : L in lines1} equals the multiset lines2.  This is exactly
color-preserving isomorphism of the two bipartite incidence graphs.

The search assigns point images one at a time, keeping for every line of
the first system the set of still-compatible lines of the second, and
always extends the most constrained line next.  Candidate images are
tried in increasing point order, so the first solution found is
deterministic.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator


def line_bijections(
    v: int,
    lines1,
    lines2,
    *,
    fix_zero: bool = False,
    cap: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield point bijections carrying the first line multiset onto the second.

    ``fix_zero`` restricts the search to sigma(0) = 0, which is complete
    for finding one witness whenever lines2 is closed under translation
    (composing with a translation moves sigma(0) anywhere).  Never set it
    when every solution is wanted.
    """
    if cap is not None and v > cap:
        raise ValueError(f"v={v} exceeds the search cap {cap}")
    lines1 = [frozenset(L) for L in lines1]
    lines2 = [frozenset(L) for L in lines2]
    if len(lines1) != len(lines2):
        return
    if Counter(map(len, lines1)) != Counter(map(len, lines2)):
        return
    m = len(lines1)
    target = Counter(lines2)

    point_lines1: list[list[int]] = [[] for _ in range(v)]
    for i, L in enumerate(lines1):
        for x in L:
            point_lines1[x].append(i)

    sigma: list[int] = [-1] * v
    used = [False] * v
    assigned_in: list[int] = [0] * m  # assigned points per line of system 1
    cand: list[set[int]] = [
        {j for j in range(m) if len(lines2[j]) == len(lines1[i])} for i in range(m)
    ]

    def pick_point() -> int:
        # the unassigned point on the tightest partially-assigned line,
        # falling back to the least unassigned point
        best, best_key = -1, None
        for i in range(m):
            if 0 < assigned_in[i] < len(lines1[i]):
                key = (len(cand[i]), i)
                if best_key is None or key < best_key:
                    pts = [x for x in sorted(lines1[i]) if sigma[x] < 0]
                    if pts:
                        best, best_key = pts[0], key
        if best >= 0:
            return best
        for x in range(v):
            if sigma[x] < 0:
                return x
        return -1

    def candidates(x: int) -> list[int]:
        allowed: set[int] | None = None
        for i in point_lines1[x]:
            pool = set()
            for j in cand[i]:
                pool |= lines2[j]
            allowed = pool if allowed is None else allowed & pool
            if not allowed:
                return []
        if allowed is None:
            return [y for y in range(v) if not used[y]]
        return sorted(y for y in allowed if not used[y])

    def assign(x: int, y: int) -> list[tuple[int, set[int]]] | None:
        trail: list[tuple[int, set[int]]] = []
        for i in point_lines1[x]:
            keep = {j for j in cand[i] if y in lines2[j]}
            trail.append((i, cand[i]))
            cand[i] = keep
            assigned_in[i] += 1
            if not keep:
                undo(x, trail)
                return None
        sigma[x] = y
        used[y] = True
        return trail

    def undo(x: int, trail: list[tuple[int, set[int]]]) -> None:
        for i, old in reversed(trail):
            cand[i] = old
            assigned_in[i] -= 1
        if sigma[x] >= 0:
            used[sigma[x]] = False
            sigma[x] = -1

    def search(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == v:
            if Counter(frozenset(sigma[x] for x in L) for L in lines1) == target:
                yield tuple(sigma)
            return
        x = pick_point()
        for y in candidates(x):
            trail = assign(x, y)
            if trail is None:
                continue
            yield from search(depth + 1)
            undo(x, trail)

    if fix_zero:
        if v == 0:
            return
        trail = assign(0, 0)
        if trail is None:
            return
        yield from search(1)
        undo(0, trail)
    else:
        yield from search(0)

"""Brute-force ground truth for small instances.

Everything here is deliberately naive: cut enumeration for the lattice
completion, cubic-time dominance covers, and exhaustive dimension
testing over linear extensions. These routines certify the fast
pipeline in tests and back the CLI --verify mode, so none of them may
share code with the constructions they check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .poset import Poset

Pair = tuple[int, int]


class TooLargeForOracle(ValueError):
    """Instance exceeds the exponential-enumeration guard."""


class DuplicatePointError(ValueError):
    """Two input points occupy the same grid cell."""


@dataclass(frozen=True)
class Cut:
    """A pair (lower, upper) with upper = bounds-above(lower) and
    lower = bounds-below(upper)."""

    lower: frozenset[str]
    upper: frozenset[str]


@dataclass(frozen=True)
class Completion:
    """Smallest complete lattice containing a poset, as explicit cuts.

    ``poset`` is the lattice viewed as a Poset; its element labels are
    the sorted lower sets, e.g. "{a,b}". ``cuts[i]`` corresponds to
    ``poset.labels[i]``.
    """

    cuts: tuple[Cut, ...]
    poset: Poset

    def element_cut_index(self, label: str) -> int:
        """Index of the cut representing an original element."""
        for i, cut in enumerate(self.cuts):
            if label in cut.lower and label in cut.upper:
                return i
        raise KeyError(label)


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _down_sets(down: list[int], n: int) -> Iterator[int]:
    """All down-sets of the order, as bitmasks (grown one minimal
    element of the complement at a time)."""
    seen = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        yield d
        for x in range(n):
            bit = 1 << x
            if d & bit:
                continue
            if down[x] & ~(d | bit):
                continue  # some strict predecessor of x is missing
            grown = d | bit
            if grown not in seen:
                seen.add(grown)
                stack.append(grown)


def dm_completion(p: Poset, *, max_n: int = 20) -> Completion:
    """All cuts of p, ordered by containment of the lower sets.

    Enumerates closures (bounds-below of bounds-above) of candidate
    subsets: every subset for n <= 12, down-sets only beyond that
    (a cut's lower set is always a down-set). Guarded at ``max_n``.
    """
    n = p.n
    if n > max_n:
        raise TooLargeForOracle(f"completion oracle limited to n <= {max_n}")
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if p.leq[i, j]:
                up[i] |= 1 << j
                down[j] |= 1 << i
    full = (1 << n) - 1

    def bounds_above(mask: int) -> int:
        b = full
        for i in _bit_indices(mask):
            b &= up[i]
        return b

    def bounds_below(mask: int) -> int:
        b = full
        for i in _bit_indices(mask):
            b &= down[i]
        return b

    candidates = range(1 << n) if n <= 12 else _down_sets(down, n)
    cuts_by_lower: dict[int, int] = {}
    for x in candidates:
        b = bounds_above(x)
        a = bounds_below(b)
        cuts_by_lower.setdefault(a, b)

    lowers = sorted(cuts_by_lower)
    m = len(lowers)
    leq = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(lowers):
        for j, c in enumerate(lowers):
            leq[i, j] = (a & ~c) == 0  # lower-set containment
    cuts = []
    labels = []
    for a in lowers:
        lower = frozenset(p.labels[i] for i in _bit_indices(a))
        upper = frozenset(p.labels[i] for i in _bit_indices(cuts_by_lower[a]))
        cuts.append(Cut(lower, upper))
        labels.append("{" + ",".join(sorted(lower)) + "}")
    return Completion(tuple(cuts), Poset(labels, leq))


def dominance_covers(
    points: Sequence[tuple[int, int]]
) -> frozenset[tuple[tuple[int, int], tuple[int, int]]]:
    """Cover pairs of the dominance order on grid points.

    p dominates q iff both coordinates of p are >= those of q and
    p != q. Returns (q, p) pairs with nothing strictly between, found
    by checking every candidate intermediate point.
    """
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePointError("points must occupy distinct grid cells")
    if not pts:
        return frozenset()
    xs = np.array([x for x, _ in pts])
    ys = np.array([y for _, y in pts])
    dom = (xs[:, None] <= xs[None, :]) & (ys[:, None] <= ys[None, :])
    strict = dom & ~np.eye(len(pts), dtype=bool)
    two_step = strict.astype(np.float64) @ strict.astype(np.float64)
    covers = strict & (two_step == 0)
    return frozenset((pts[a], pts[b]) for a, b in np.argwhere(covers))


def linear_extensions(p: Poset) -> Iterator[tuple[int, ...]]:
    """All linear extensions, as tuples of element indices."""
    n = p.n
    pred = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and p.leq[j, i]:
                pred[i] |= 1 << j

    def rec(remaining: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield acc
            return
        for x in _bit_indices(remaining):
            if pred[x] & remaining == 0:
                yield from rec(remaining & ~(1 << x), acc + (x,))

    yield from rec((1 << n) - 1, ())


def order_dimension_le2(p: Poset, *, max_n: int = 7) -> bool:
    """Exhaustively decide whether two linear extensions realize p.

    For a fixed first extension the second is forced: comparable pairs
    keep their order, incomparable pairs must flip. It therefore
    suffices to test, for every linear extension, whether that forced
    companion relation is transitive (equivalently, a linear order).
    """
    n = p.n
    if n > max_n:
        raise TooLargeForOracle(f"dimension oracle limited to n <= {max_n}")
    if n <= 2:
        return True
    succ = [0] * n
    inc = [0] * n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if p.leq[i, j]:
                succ[i] |= 1 << j
            elif not p.leq[j, i]:
                inc[i] |= 1 << j

    for ext in linear_extensions(p):
        forced = list(succ)
        before = 0
        for x in ext:
            forced[x] |= inc[x] & before  # incomparable predecessors flip above x
            before |= 1 << x
        ok = True
        for x in range(n):
            fx = forced[x]
            for y in _bit_indices(fx):
                if forced[y] & ~fx:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def is_lattice(p: Poset) -> bool:
    """Every pair of elements has a meet and a join."""
    n = p.n
    if n == 0:
        return False
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if p.leq[i, j]:
                up[i] |= 1 << j
                down[j] |= 1 << i

    def has_extreme(common: int, bounds: list[int]) -> bool:
        # true iff some member of `common` bounds all the others
        for x in _bit_indices(common):
            if common & ~bounds[x] == 0:
                return True
        return False

    for i in range(n):
        for j in range(i, n):
            uppers = up[i] & up[j]
            lowers = down[i] & down[j]
            # join: the common upper bounds need a least member
            if not uppers or not has_extreme(uppers, up):
                return False
            # meet: the common lower bounds need a greatest member
            if not lowers or not has_extreme(lowers, down):
                return False
    return True


def scene_matches_completion(scene, p: Poset) -> bool:
    """Certify that the dominance order on a grid scene's points is
    order-isomorphic to the completion of p, with vertices mapped to
    their element cuts.

    Each point is keyed by the set of poset elements it dominates; the
    scene matches iff those keys are exactly the completion's lower
    sets and point dominance coincides with key containment.
    """
    comp = dm_completion(p)
    pts = list(scene.points)
    if len(pts) != len(comp.cuts):
        return False
    label_bit = {lab: 1 << i for i, lab in enumerate(p.labels)}
    verts = [q for q in pts if q.kind == "vertex"]
    keys = []
    for q in pts:
        key = 0
        for v in verts:
            if v.x <= q.x and v.y <= q.y:
                key |= label_bit[v.label]
        keys.append(key)
    cut_lowers = {
        sum(label_bit[lab] for lab in cut.lower) for cut in comp.cuts
    }
    if set(keys) != cut_lowers or len(set(keys)) != len(keys):
        return False
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            dominated = a.x <= b.x and a.y <= b.y
            if dominated != ((keys[i] & ~keys[j]) == 0):
                return False
    # vertices must key to their own element cut
    for v, key in zip(pts, keys):
        if v.kind == "vertex":
            down = 0
            vi = p.index(v.label)
            for j in range(p.n):
                if p.leq[j, vi]:
                    down |= 1 << j
            if key != down:
                return False
    return True

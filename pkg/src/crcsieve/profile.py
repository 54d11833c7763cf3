"""Distance profiles n -> d(n) over all usable lengths, and the score S(M).

The minimum distance of a shortened code never increases with length, so
the profile over [p+1, min(M, order)] is a non-increasing step function.
It is pinned down exactly with far fewer evaluations than one per length:
evaluate both ends of an interval, fill the interval when they agree, and
bisect when they differ.  The score S(M) is the sum of d(n) over all
lengths up to M, computed run by run; it is reported as inapplicable
(``None``) when the generator's order is below M, since beyond the order
the code degenerates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .distance import DistanceEngine
from .gf2poly import Gf2Poly, canonical


@dataclass(frozen=True)
class DistanceProfile:
    """Run-length encoded map of length to exact minimum distance.

    ``runs`` are maximal (n_lo, n_hi, d) triples, contiguous from p+1 up
    to min(target, order), with strictly decreasing d.  ``evaluations``
    counts the transforms spent building the profile.
    """

    g: Gf2Poly
    target: int
    order: int
    runs: tuple[tuple[int, int, int], ...]
    evaluations: int = 0

    def distance_at(self, n: int) -> int:
        for lo, hi, d in self.runs:
            if lo <= n <= hi:
                return d
        raise ValueError(f"length {n} outside profile range of {self.g}")

    def as_dict(self) -> dict:
        return {
            "poly": self.g.to_hex(),
            "degree": self.g.degree,
            "order": self.order,
            "target": self.target,
            "runs": [{"n_lo": lo, "n_hi": hi, "d": d} for lo, hi, d in self.runs],
        }


@dataclass(frozen=True)
class ScoreResult:
    """Scores S(M) for one polynomial; None marks targets beyond its order."""

    g: Gf2Poly
    order: int
    scores: dict[int, int | None]


# Pivot offset for the initial three-way seed of the split: profiles of good
# generators drop fastest just above p, so an early pivot settles most runs
# cheaply.  Affects evaluation count only, never the result.
PIVOT_OFFSET = 64


def build_profile(
    g: Gf2Poly,
    target: int,
    *,
    engine: DistanceEngine | None = None,
    order: int | None = None,
) -> DistanceProfile:
    """Exact distance profile of g over [p+1, min(target, order(g))].

    Seeds the interval-splitting with evaluations at p+1, at a pivot near
    p+1, and at the top of the range; an interval whose endpoint distances
    agree is filled without further work (the profile is monotone), the
    rest are bisected.
    """
    p = g.degree
    if target < p + 1:
        raise ValueError(f"target {target} below minimum length {p + 1} for degree {p}")
    if engine is None:
        engine = DistanceEngine(g, order=order)
    start_evals = engine.eval_count
    n_c = engine.order
    hi = min(target, n_c)
    if hi < p + 1:
        # Order below every usable length: nothing to profile.
        return DistanceProfile(g, target, n_c, (), 0)

    known: dict[int, int] = {}

    def evaluate(n: int) -> int:
        if n not in known:
            known[n] = engine.min_distance(n)
        return known[n]

    lo = p + 1
    pivot = min(lo + PIVOT_OFFSET, hi)
    evaluate(lo)
    evaluate(pivot)
    evaluate(hi)
    work = [(lo, pivot), (pivot, hi)]
    while work:
        a, b = work.pop()
        if b - a <= 1 or known[a] == known[b]:
            continue
        mid = (a + b) // 2
        evaluate(mid)
        work.append((a, mid))
        work.append((mid, b))

    runs: list[tuple[int, int, int]] = []
    for n in sorted(known):
        d = known[n]
        if runs and runs[-1][2] == d:
            runs[-1] = (runs[-1][0], n, d)
        else:
            if runs and n != runs[-1][1] + 1:
                raise RuntimeError(f"split left a gap at n={n} for {g}")
            if runs and d >= runs[-1][2]:
                raise RuntimeError(f"distance increased at n={n} for {g}")
            runs.append((n, n, d))
    return DistanceProfile(g, target, n_c, tuple(runs), engine.eval_count - start_evals)


def score(profile: DistanceProfile, m: int) -> int | None:
    """S(M): sum of d(n) for n = p+1..M, or None when the order is below M."""
    if m > profile.target:
        raise ValueError(f"score at M={m} exceeds profile target {profile.target}")
    if profile.order < m:
        return None
    total = 0
    for lo, hi, d in profile.runs:
        if lo > m:
            break
        total += (min(hi, m) - lo + 1) * d
    return total


def score_targets(
    g: Gf2Poly,
    targets: tuple[int, ...] | list[int],
    *,
    engine: DistanceEngine | None = None,
    order: int | None = None,
) -> ScoreResult:
    """Scores at several targets from one profile built to the largest."""
    targets = tuple(targets)
    if not targets:
        raise ValueError("no targets given")
    if engine is None and order is None:
        profile = cached_profile(g, max(targets))
        n_c = profile.order
    else:
        profile = build_profile(g, max(targets), engine=engine, order=order)
        n_c = profile.order
    return ScoreResult(g, n_c, {m: score(profile, m) for m in targets})


@lru_cache(maxsize=256)
def _profile_data(canonical_mask: int, target: int) -> tuple[int, tuple[tuple[int, int, int], ...], int]:
    prof = build_profile(Gf2Poly(canonical_mask), target)
    return prof.order, prof.runs, prof.evaluations


def cached_profile(g: Gf2Poly, target: int) -> DistanceProfile:
    """Profile via a process-wide cache keyed by (canonical(g), target).

    Reciprocal polynomials generate equivalent codes, so both share one
    cache slot; the returned profile is relabeled with the requested g.
    """
    n_c, runs, evals = _profile_data(canonical(g).mask, target)
    return DistanceProfile(g, target, n_c, runs, evals)

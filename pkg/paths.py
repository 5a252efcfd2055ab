#!/usr/bin/env python3
"""
Littelmann path model with exact rational breakpoints

An LS path of shape lam is stored as its segment directions (weights in the
orbit W lam) and breakpoints 0 = a_0 < ... < a_r = 1. The coset tau_j of a
direction is recovered through the orbit-coset bijection.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import pairwise
from typing import Dict, List, Optional, Tuple
import logging

from config import Config
from rootdata import ParabolicCoset, Weight, WeylElement, WeylGroup

logger = logging.getLogger(__name__)

RationalVector = Tuple[Fraction, ...]
Segment = Tuple[Weight, Fraction, Fraction]


@dataclass(frozen=True)
class LSPath:
    """pi(t) = (t - a_{j-1}) dirs[j] + sum_{i<j} (a_i - a_{i-1}) dirs[i]"""
    lam: Weight
    dirs: Tuple[Weight, ...]
    breaks: Tuple[Fraction, ...]

    def segments(self) -> List[Segment]:
        return [(d, a, b) for d, (a, b) in zip(self.dirs, pairwise(self.breaks))]


@dataclass(frozen=True)
class PathSet:
    """Deduplicated paths of one shape in canonical (generation) order"""
    lam: Weight
    paths: Tuple[LSPath, ...]

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __contains__(self, path):
        return path in self.paths


def straight_path(weyl: WeylGroup, lam: Weight) -> LSPath:
    """pi_lam(t) = t lam"""
    weyl.rs.require_dominant(lam)
    return LSPath(tuple(lam), (tuple(lam),), (Fraction(0), Fraction(1)))


def evaluate(path: LSPath, t) -> RationalVector:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError(f"Path parameter {t} outside [0, 1]")
    point = [Fraction(0)] * len(path.lam)
    for d, a, b in path.segments():
        if t <= a:
            break
        step = min(t, b) - a
        point = [p + step * x for p, x in zip(point, d)]
    return tuple(point)


def endpoint(path: LSPath) -> Weight:
    """pi(1), which lies in the weight lattice"""
    point = evaluate(path, 1)
    if any(x.denominator != 1 for x in point):
        raise RuntimeError(f"Path endpoint {point} is not integral")
    return tuple(int(x) for x in point)


def _heights(path: LSPath, i: int) -> List[Fraction]:
    """h(t) = <pi(t), alpha_i^vee> at every breakpoint"""
    values = [Fraction(0)]
    for d, a, b in path.segments():
        values.append(values[-1] + (b - a) * d[i - 1])
    return values


def _split(segments: List[Segment], t: Fraction) -> List[Segment]:
    out = []
    for d, a, b in segments:
        if a < t < b:
            out.extend([(d, a, t), (d, t, b)])
        else:
            out.append((d, a, b))
    return out


def _rebuild(weyl: WeylGroup, path: LSPath, lo: Fraction, hi: Fraction, i: int) -> LSPath:
    """Reflect the increments on [lo, hi] by s_i and merge collinear segments"""
    pieces = _split(_split(path.segments(), lo), hi)
    dirs: List[Weight] = []
    breaks: List[Fraction] = [Fraction(0)]
    for d, a, b in pieces:
        if lo <= a and b <= hi:
            d = weyl.rs.reflect(d, i)
        if dirs and dirs[-1] == d:
            breaks[-1] = b
        else:
            dirs.append(d)
            breaks.append(b)
    return LSPath(path.lam, tuple(dirs), tuple(breaks))


def root_op_f(weyl: WeylGroup, i: int, path: LSPath) -> Optional[LSPath]:
    """
    Lowering operator f_i.

    With m the minimum of h, returns None when h(1) - m < 1. Otherwise q is
    the last time h = m and p the first time after q with h = m + 1; the
    increments on [q, p] are reflected by s_i, which lowers the endpoint by alpha_i.
    """
    weyl.rs._check_index(i)
    h = _heights(path, i)
    m = min(h)
    if h[-1] - m < 1:
        return None

    last_min = max(k for k, value in enumerate(h) if value == m)
    q = path.breaks[last_min]
    p = None
    for k in range(last_min, len(path.dirs)):
        if h[k + 1] >= m + 1:
            slope = path.dirs[k][i - 1]
            p = path.breaks[k] + (m + 1 - h[k]) / slope
            break
    if p is None:
        raise RuntimeError(f"f_{i}: height never reaches {m + 1} after t={q}")

    result = _rebuild(weyl, path, q, p, i)
    check_path(weyl, result)
    return result


def root_op_e(weyl: WeylGroup, i: int, path: LSPath) -> Optional[LSPath]:
    """
    Raising operator e_i, inverse to f_i.

    Returns None when m > -1. Otherwise q is the first time h = m and p the
    last time before q with h = m + 1; the increments on [p, q] are reflected.
    """
    weyl.rs._check_index(i)
    h = _heights(path, i)
    m = min(h)
    if m > -1:
        return None

    first_min = min(k for k, value in enumerate(h) if value == m)
    q = path.breaks[first_min]
    p = None
    for k in range(first_min - 1, -1, -1):
        if h[k] >= m + 1:
            slope = path.dirs[k][i - 1]
            p = path.breaks[k] + (m + 1 - h[k]) / slope
            break
    if p is None:
        raise RuntimeError(f"e_{i}: height never reaches {m + 1} before t={q}")

    result = _rebuild(weyl, path, p, q, i)
    check_path(weyl, result)
    return result


def coset_chain(weyl: WeylGroup, path: LSPath) -> List[ParabolicCoset]:
    """tau_1, ..., tau_r in W/W_lam"""
    orbit = weyl.orbit(path.lam)
    gens = weyl.stabilizer_set(path.lam)
    chain = []
    for d in path.dirs:
        if d not in orbit:
            raise RuntimeError(f"Direction {d} is not in the orbit of {path.lam}")
        chain.append(ParabolicCoset(orbit[d], gens))
    return chain


def check_path(weyl: WeylGroup, path: LSPath):
    """Re-validate every LSPath invariant; RuntimeError on violation"""
    if len(path.breaks) != len(path.dirs) + 1 or not path.dirs:
        raise RuntimeError(f"Malformed path encoding: {path}")
    if path.breaks[0] != 0 or path.breaks[-1] != 1:
        raise RuntimeError(f"Breakpoints must run from 0 to 1: {path.breaks}")
    for a, b in pairwise(path.breaks):
        if not isinstance(a, Fraction) or not a < b:
            raise RuntimeError(f"Breakpoints not strictly increasing rationals: {path.breaks}")
    chain = coset_chain(weyl, path)
    for upper, lower in pairwise(chain):
        if upper == lower or not weyl.coset_leq(lower, upper):
            raise RuntimeError(
                f"Coset chain not strictly decreasing: {upper.label} then {lower.label} in {path}"
            )
    endpoint(path)


@lru_cache(maxsize=256)
def generate_paths(weyl: WeylGroup, lam: Weight, max_paths: Optional[int] = None) -> PathSet:
    """Breadth-first closure of pi_lam under f_1, ..., f_l"""
    lam = tuple(lam)
    cap = max_paths or Config.MAX_PATHS
    start = straight_path(weyl, lam)
    found = [start]
    seen = {start}
    frontier = [start]

    while frontier:
        next_frontier = []
        for path in frontier:
            for i in range(1, weyl.rank + 1):
                lowered = root_op_f(weyl, i, path)
                if lowered is None or lowered in seen:
                    continue
                seen.add(lowered)
                found.append(lowered)
                next_frontier.append(lowered)
                if len(found) > cap:
                    raise RuntimeError(f"More than {cap} paths for shape {lam}; raise KPIERI_MAX_PATHS")
        frontier = next_frontier

    logger.debug(f"T^{lam} in {weyl.rs.name}: {len(found)} paths")
    return PathSet(lam, tuple(found))


def initial_direction(weyl: WeylGroup, path: LSPath) -> ParabolicCoset:
    """iota(pi) = tau_1"""
    return coset_chain(weyl, path)[0]


def restrict_le(weyl: WeylGroup, paths: PathSet, w: WeylElement) -> PathSet:
    """T^lam_{<=w}: paths whose initial direction lies below w W_lam"""
    bound = weyl.coset_of(w, weyl.stabilizer_set(paths.lam))
    kept = tuple(p for p in paths if weyl.coset_leq(initial_direction(weyl, p), bound))
    return PathSet(paths.lam, kept)


def final_direction(weyl: WeylGroup, path: LSPath, w: WeylElement) -> WeylElement:
    """v(pi, w): last element of the maximal lift of the coset chain below w"""
    return weyl.maximal_lift(w, coset_chain(weyl, path))[-1]


def character(paths: PathSet) -> Dict[Weight, int]:
    """Sum of e^{eta(1)} over the set, as a weight multiplicity map"""
    counts: Dict[Weight, int] = {}
    for p in paths:
        mu = endpoint(p)
        counts[mu] = counts.get(mu, 0) + 1
    return counts


def path_to_json(path: LSPath) -> Dict:
    return {
        'dirs': [list(d) for d in path.dirs],
        'breaks': [str(a) for a in path.breaks],
        'endpoint': list(endpoint(path)),
    }

#!/usr/bin/env python3
"""
Root systems, weight-lattice arithmetic and Weyl groups for KPIERI

Weights are tuples of integers in the fundamental-weight basis. Cartan
matrices follow Bourbaki numbering with a_ij = <alpha_j, alpha_i^vee>, so the
simple root alpha_j in weight coordinates is column j of the Cartan matrix.
See ROOT_SYSTEM_CONVENTIONS.md for the orientation of the non-simply-laced
types.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import pairwise
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import logging

import networkx as nx
import numpy as np

from config import Config

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

# Classical positive-root counts, used as an internal-consistency check
POSITIVE_ROOT_COUNTS = {
    'A': lambda n: n * (n + 1) // 2,
    'B': lambda n: n * n,
    'C': lambda n: n * n,
    'D': lambda n: n * (n - 1),
    'E': lambda n: {6: 36, 7: 63, 8: 120}[n],
    'F': lambda n: 24,
    'G': lambda n: 6,
}

# Ranks each type exists at (finite, reduced, irreducible)
VALID_RANKS = {
    'A': range(1, 9),
    'B': range(2, 9),
    'C': range(2, 9),
    'D': range(4, 9),
    'E': range(6, 9),
    'F': range(4, 5),
    'G': range(2, 3),
}


def _cartan_matrix(type_letter: str, rank: int) -> List[List[int]]:
    """Bourbaki Cartan matrix, a[i][j] = <alpha_j, alpha_i^vee> (0-based)"""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    if type_letter in 'ABC':
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if type_letter == 'B':
            # alpha_n short
            a[rank - 1][rank - 2] = -2
        elif type_letter == 'C':
            # alpha_n long
            a[rank - 2][rank - 1] = -2
    elif type_letter == 'D':
        for i in range(rank - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif type_letter == 'F':
        a[0][1] = a[1][0] = -1
        a[1][2] = -1
        a[2][1] = -2
        a[2][3] = a[3][2] = -1
    elif type_letter == 'G':
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
    return a


@dataclass(frozen=True)
class RootSystemSpec:
    """Cartan datum of a finite root system at fixed rank"""
    type_letter: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    # Positive roots as weights, each paired with its coroot row:
    # <lam, beta^vee> = sum_k row[k] * lam[k]
    positive_roots: Tuple[Weight, ...]
    coroot_rows: Tuple[Tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise ValueError(f"Simple index {i} out of range 1..{self.rank} for {self.name}")

    def _check_weight(self, lam: Weight):
        if len(lam) != self.rank:
            raise ValueError(f"Weight {lam} has {len(lam)} coordinates, {self.name} needs {self.rank}")

    def simple_root(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(row[i - 1] for row in self.cartan)

    def pair(self, lam: Weight, i: int) -> int:
        """<lam, alpha_i^vee>; in the fundamental-weight basis this is the i-th coordinate"""
        self._check_index(i)
        return lam[i - 1]

    def reflect(self, lam: Weight, i: int) -> Weight:
        """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i"""
        k = self.pair(lam, i)
        if k == 0:
            return tuple(lam)
        return tuple(x - k * a for x, a in zip(lam, self.simple_root(i)))

    def is_dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    def require_dominant(self, lam: Weight):
        self._check_weight(lam)
        if not self.is_dominant(lam):
            raise ValueError(f"Weight {lam} is not dominant for {self.name}")

    def rho(self) -> Weight:
        return (1,) * self.rank

    def coroot_pairing(self, lam: Weight, index: int) -> int:
        """<lam, beta^vee> for the index-th positive root beta"""
        return sum(c * x for c, x in zip(self.coroot_rows[index], lam))

    def weyl_dimension(self, lam: Weight) -> int:
        """Weyl dimension formula, exact"""
        self.require_dominant(lam)
        shifted = tuple(x + 1 for x in lam)
        dim = Fraction(1)
        for k in range(len(self.positive_roots)):
            dim *= Fraction(self.coroot_pairing(shifted, k), self.coroot_pairing(self.rho(), k))
        if dim.denominator != 1:
            raise RuntimeError(f"Weyl dimension of {lam} is not integral: {dim}")
        return int(dim)


def _positive_roots(cartan: List[List[int]]) -> List[Tuple[Weight, Tuple[int, ...]]]:
    """
    Close the simple roots under reflections that stay positive.

    Roots are tracked in simple-root coordinates together with their coroots
    in simple-coroot coordinates; returns (root as weight, coroot row) pairs.
    """
    n = len(cartan)
    units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = {(u, u) for u in units}
    queue = deque(sorted(seen))

    while queue:
        beta, gamma = queue.popleft()
        for j in range(n):
            c = sum(beta[k] * cartan[j][k] for k in range(n))
            d = sum(gamma[k] * cartan[k][j] for k in range(n))
            new_beta = tuple(b - (c if k == j else 0) for k, b in enumerate(beta))
            new_gamma = tuple(g - (d if k == j else 0) for k, g in enumerate(gamma))
            if min(new_beta) < 0:
                continue
            pair = (new_beta, new_gamma)
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)

    ordered = sorted(seen, key=lambda p: (sum(p[0]), p[0]))
    result = []
    for beta, gamma in ordered:
        weight = tuple(sum(cartan[i][k] * beta[k] for k in range(n)) for i in range(n))
        result.append((weight, gamma))
    return result


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystemSpec:
    """Build the root system of the given finite type and rank"""
    type_letter = str(type_letter).upper()
    if type_letter not in VALID_RANKS:
        raise ValueError(f"Unknown Cartan type {type_letter!r}; expected one of {', '.join(VALID_RANKS)}")
    if rank not in VALID_RANKS[type_letter]:
        raise ValueError(f"{type_letter}{rank} is not a finite root system")
    if rank > Config.MAX_RANK:
        raise ValueError(f"{type_letter}{rank} exceeds the supported rank {Config.MAX_RANK}")

    cartan = _cartan_matrix(type_letter, rank)
    roots = _positive_roots(cartan)
    expected = POSITIVE_ROOT_COUNTS[type_letter](rank)
    if len(roots) != expected:
        raise RuntimeError(f"{type_letter}{rank}: found {len(roots)} positive roots, expected {expected}")

    logger.debug(f"Built {type_letter}{rank} with {len(roots)} positive roots")
    return RootSystemSpec(
        type_letter=type_letter,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(w for w, _ in roots),
        coroot_rows=tuple(g for _, g in roots),
    )


def parse_root_system(name: str) -> RootSystemSpec:
    """'A2' -> build_root_system('A', 2)"""
    name = (name or '').strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"Root system must look like 'A2' or 'G2', got {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Element of W, identified by its action on the fundamental weights"""
    action: np.ndarray
    length: int
    word: Tuple[int, ...]

    def __post_init__(self):
        self.action.flags.writeable = False

    @property
    def key(self) -> bytes:
        return self.action.tobytes()

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WeylElement({self.label})"

    @property
    def label(self) -> str:
        return ''.join(f"s{i}" for i in self.word) or '1'

    def sort_key(self):
        return (self.length, self.word)


@dataclass(frozen=True)
class ParabolicCoset:
    """Coset w W_J, stored by its minimal-length representative"""
    min_rep: WeylElement
    gens: FrozenSet[int]

    @property
    def label(self) -> str:
        return f"{self.min_rep.label}W_{{{','.join(map(str, sorted(self.gens)))}}}"


def _reflection_matrix(cartan, i: int) -> np.ndarray:
    """Matrix of s_i: column j is the image of omega_j"""
    n = len(cartan)
    m = np.eye(n, dtype=np.int64)
    m[:, i] -= np.array([row[i] for row in cartan], dtype=np.int64)
    return m


class WeylGroup:
    """
    The finite Weyl group of a root system, fully enumerated.

    Elements are canonicalized by their action matrix and carry the
    lexicographically least reduced word. Bruhat order comes from the cover
    digraph (v covers u iff v = u t for a reflection t and l(v) = l(u) + 1).
    """

    def __init__(self, rs: RootSystemSpec):
        self.rs = rs
        self.rank = rs.rank
        self._gens = [_reflection_matrix(rs.cartan, i) for i in range(rs.rank)]
        self._index: Dict[bytes, WeylElement] = {}
        self.elements: List[WeylElement] = []
        self._enumerate()
        self.identity = self.elements[0]
        self.simple = [self.element((i,)) for i in range(1, rs.rank + 1)]
        self._reflections: Optional[FrozenSet[WeylElement]] = None
        self._graph: Optional[nx.DiGraph] = None
        self._below: Dict[WeylElement, FrozenSet[WeylElement]] = {}
        self._orbits: Dict[Weight, Dict[Weight, WeylElement]] = {}
        self._subgroups: Dict[FrozenSet[int], List[WeylElement]] = {}
        logger.info(f"Enumerated W({rs.name}): {len(self.elements)} elements")

    def _enumerate(self):
        """Breadth-first by length; each level sorted by canonical word"""
        identity = WeylElement(np.eye(self.rank, dtype=np.int64), 0, ())
        self._index[identity.key] = identity
        self.elements.append(identity)
        level = [identity]

        while level:
            candidates: Dict[bytes, Tuple[np.ndarray, Tuple[int, ...]]] = {}
            for u in level:
                for i, s in enumerate(self._gens, start=1):
                    m = u.action @ s
                    key = m.tobytes()
                    if key in self._index:
                        continue
                    word = u.word + (i,)
                    if key not in candidates or word < candidates[key][1]:
                        candidates[key] = (m, word)
            level = sorted(
                (WeylElement(m, len(word), word) for m, word in candidates.values()),
                key=lambda e: e.word,
            )
            for e in level:
                self._index[e.key] = e
            self.elements.extend(level)

    def __len__(self):
        return len(self.elements)

    def _lookup(self, matrix: np.ndarray) -> WeylElement:
        try:
            return self._index[matrix.astype(np.int64).tobytes()]
        except KeyError:
            raise RuntimeError(f"Matrix is not an element of W({self.rs.name}):\n{matrix}")

    def element(self, word: Iterable[int]) -> WeylElement:
        """Product s_{i_1} ... s_{i_p}, canonicalized"""
        m = np.eye(self.rank, dtype=np.int64)
        for i in word:
            self.rs._check_index(i)
            m = m @ self._gens[i - 1]
        return self._lookup(m)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._lookup(u.action @ v.action)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.element(reversed(w.word))

    def right_multiply_simple(self, w: WeylElement, i: int) -> WeylElement:
        return self._lookup(w.action @ self._gens[i - 1])

    def left_multiply_simple(self, i: int, w: WeylElement) -> WeylElement:
        return self._lookup(self._gens[i - 1] @ w.action)

    def longest(self) -> WeylElement:
        return self.elements[-1]

    def act(self, w: WeylElement, lam: Weight) -> Weight:
        """Matrix-vector application on the weight lattice"""
        self.rs._check_weight(lam)
        return tuple(int(x) for x in w.action @ np.asarray(lam, dtype=np.int64))

    def inversion_count(self, w: WeylElement) -> int:
        """Number of positive roots sent negative by w^{-1}"""
        inverse = self.inverse(w)
        positive = set(self.rs.positive_roots)
        return sum(1 for beta in self.rs.positive_roots if self.act(inverse, beta) not in positive)

    def reflections(self) -> FrozenSet[WeylElement]:
        """All reflections w s_i w^{-1}"""
        if self._reflections is None:
            found = set()
            for w in self.elements:
                w_inv = self.inverse(w)
                for s in self._gens:
                    found.add(self._lookup(w.action @ s @ w_inv.action))
            self._reflections = frozenset(found)
        return self._reflections

    def bruhat_graph(self) -> nx.DiGraph:
        """Cover digraph, edges point from v down to each u it covers"""
        if self._graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(self.elements)
            for u in self.elements:
                for t in self.reflections():
                    v = self.multiply(u, t)
                    if v.length == u.length + 1:
                        graph.add_edge(v, u)
            logger.debug(f"Bruhat graph of {self.rs.name}: {graph.number_of_edges()} covers")
            self._graph = graph
        return self._graph

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        if u == v:
            return True
        if u.length >= v.length:
            return False
        if v not in self._below:
            self._below[v] = frozenset(nx.descendants(self.bruhat_graph(), v))
        return u in self._below[v]

    def bruhat_matrix(self) -> List[List[int]]:
        return [[int(self.bruhat_leq(u, v)) for v in self.elements] for u in self.elements]

    def stabilizer_set(self, lam: Weight) -> FrozenSet[int]:
        """Simple indices generating W_lam for dominant lam"""
        self.rs.require_dominant(lam)
        return frozenset(i for i in range(1, self.rank + 1) if self.rs.pair(lam, i) == 0)

    def _check_gens(self, gens: Iterable[int]) -> FrozenSet[int]:
        gens = frozenset(gens)
        for j in gens:
            self.rs._check_index(j)
        return gens

    def parabolic_subgroup(self, gens: Iterable[int]) -> List[WeylElement]:
        """W_J: elements whose reduced words only use letters from J"""
        gens = self._check_gens(gens)
        if gens not in self._subgroups:
            self._subgroups[gens] = [e for e in self.elements if set(e.word) <= gens]
        return self._subgroups[gens]

    def coset_of(self, w: WeylElement, gens: Iterable[int]) -> ParabolicCoset:
        """w W_J with its minimal representative (strip right J-descents)"""
        gens = self._check_gens(gens)
        rep = w
        stripped = True
        while stripped:
            stripped = False
            for j in sorted(gens):
                shorter = self.right_multiply_simple(rep, j)
                if shorter.length < rep.length:
                    rep = shorter
                    stripped = True
                    break
        return ParabolicCoset(rep, gens)

    def coset_elements(self, coset: ParabolicCoset) -> List[WeylElement]:
        found = {self.multiply(coset.min_rep, z) for z in self.parabolic_subgroup(coset.gens)}
        return sorted(found, key=WeylElement.sort_key)

    def coset_leq(self, c1: ParabolicCoset, c2: ParabolicCoset) -> bool:
        """Induced Bruhat order on W/W_J via minimal representatives"""
        if c1.gens != c2.gens:
            raise ValueError(f"Cosets of different parabolics: {sorted(c1.gens)} vs {sorted(c2.gens)}")
        return self.bruhat_leq(c1.min_rep, c2.min_rep)

    def maximal_lift(self, w: WeylElement, chain: List[ParabolicCoset]) -> List[WeylElement]:
        """
        Greedy Bruhat-maximal representatives t_1 > ... > t_r of a strictly
        decreasing coset chain, bounded above by w.
        """
        if not chain:
            return []
        gens = chain[0].gens
        for upper, lower in pairwise(chain):
            if lower == upper or not self.coset_leq(lower, upper):
                raise ValueError(f"Coset chain is not strictly decreasing at {upper.label} > {lower.label}")
        if not self.coset_leq(chain[0], self.coset_of(w, gens)):
            raise ValueError(f"Chain starts at {chain[0].label}, which is not below {w.label}")

        bound = w
        lift = []
        for coset in chain:
            below = [x for x in self.coset_elements(coset) if self.bruhat_leq(x, bound)]
            tops = [x for x in below if not any(x != y and self.bruhat_leq(x, y) for y in below)]
            if len(tops) != 1:
                raise RuntimeError(
                    f"No unique maximal element of {coset.label} below {bound.label}: "
                    f"{[t.label for t in tops]}"
                )
            bound = tops[0]
            lift.append(bound)
        return lift

    def orbit(self, lam: Weight) -> Dict[Weight, WeylElement]:
        """Orbit of dominant lam, each weight mapped to its minimal coset representative"""
        self.rs.require_dominant(lam)
        lam = tuple(lam)
        if lam not in self._orbits:
            orbit: Dict[Weight, WeylElement] = {}
            for w in self.elements:
                orbit.setdefault(self.act(w, lam), w)
            self._orbits[lam] = orbit
        return self._orbits[lam]


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystemSpec) -> WeylGroup:
    """Shared enumerated group per root system"""
    return WeylGroup(rs)


def enumerate_weyl(rs: RootSystemSpec) -> List[WeylElement]:
    """All elements ordered by length, then canonical word"""
    return list(weyl_group(rs).elements)


def box_weights(rank: int, low: int, high: int) -> List[Weight]:
    """All integer vectors with coordinates in [low, high], lexicographic"""
    weights = [()]
    for _ in range(rank):
        weights = [w + (x,) for w in weights for x in range(low, high + 1)]
    return weights


def dominant_box(rank: int, bound: int) -> List[Weight]:
    return box_weights(rank, 0, bound)


# Example usage
if __name__ == "__main__":
    for name in ('A1', 'A2', 'B2', 'G2', 'A3'):
        rs = parse_root_system(name)
        group = weyl_group(rs)
        print(f"{name}: cartan={rs.cartan} |roots+|={len(rs.positive_roots)} |W|={len(group)}")

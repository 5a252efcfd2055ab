#!/usr/bin/env python3
"""
Group algebra Z[P] of the weight lattice

Elements are finite sums of monomials e^lam with Python integer coefficients.
The tag separates fiber classes y^lam from base classes x^lam; both obey
the same monoid law and only differ in bookkeeping.
"""
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple
import logging

from rootdata import Weight, WeylElement, WeylGroup

logger = logging.getLogger(__name__)

TAGS = ('x', 'y')


@dataclass(frozen=True)
class GroupRingElt:
    """Immutable element of Z[P]; terms sorted by weight, no zero coefficients"""
    terms: Tuple[Tuple[Weight, int], ...] = ()
    tag: str = 'y'

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"Unknown lattice tag {self.tag!r}")
        acc = defaultdict(int)
        for lam, c in self.terms:
            acc[tuple(int(x) for x in lam)] += int(c)
        object.__setattr__(self, 'terms', tuple(sorted((lam, c) for lam, c in acc.items() if c != 0)))

    @classmethod
    def from_mapping(cls, coeffs: Mapping[Weight, int], tag: str = 'y') -> 'GroupRingElt':
        return cls(tuple(coeffs.items()), tag)

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam: Weight) -> int:
        return self.as_dict().get(tuple(lam), 0)

    def __add__(self, other):
        return gr_add(self, other)

    def __sub__(self, other):
        return gr_add(self, gr_scale(other, -1))

    def __neg__(self):
        return gr_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return gr_scale(self, other)
        return gr_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return f"0[{self.tag}]"
        parts = [f"{c}*{self.tag}^{lam}" for lam, c in self.terms]
        return ' + '.join(parts)


def _check_tags(f: GroupRingElt, g: GroupRingElt):
    if f.tag != g.tag:
        raise ValueError(f"Cannot combine {f.tag}-lattice and {g.tag}-lattice elements")


def gr_zero(tag: str = 'y') -> GroupRingElt:
    return GroupRingElt((), tag)


def gr_monomial(lam: Weight, tag: str = 'y') -> GroupRingElt:
    """e^lam (x^lam or y^lam) with coefficient 1"""
    return GroupRingElt(((tuple(lam), 1),), tag)


def gr_add(f: GroupRingElt, g: GroupRingElt) -> GroupRingElt:
    _check_tags(f, g)
    acc = defaultdict(int, f.terms)
    for lam, c in g.terms:
        acc[lam] += c
    return GroupRingElt.from_mapping(acc, f.tag)


def gr_sum(elements: Iterable[GroupRingElt], tag: str = 'y') -> GroupRingElt:
    acc = defaultdict(int)
    for f in elements:
        if f.tag != tag:
            raise ValueError(f"Cannot sum a {f.tag}-lattice element into the {tag}-lattice")
        for lam, c in f.terms:
            acc[lam] += c
    return GroupRingElt.from_mapping(acc, tag)


def gr_scale(f: GroupRingElt, k: int) -> GroupRingElt:
    if k == 0:
        return gr_zero(f.tag)
    return GroupRingElt(tuple((lam, k * c) for lam, c in f.terms), f.tag)


def gr_mul(f: GroupRingElt, g: GroupRingElt) -> GroupRingElt:
    """e^lam e^mu = e^{lam+mu}, extended bilinearly"""
    _check_tags(f, g)
    acc = defaultdict(int)
    for lam, a in f.terms:
        for mu, b in g.terms:
            acc[tuple(x + y for x, y in zip(lam, mu))] += a * b
    return GroupRingElt.from_mapping(acc, f.tag)


def gr_act(weyl: WeylGroup, w: WeylElement, f: GroupRingElt) -> GroupRingElt:
    """w e^lam = e^{w lam}"""
    acc = defaultdict(int)
    for lam, c in f.terms:
        acc[weyl.act(w, lam)] += c
    return GroupRingElt.from_mapping(acc, f.tag)


def gr_orbit_sum(weyl: WeylGroup, lam: Weight, tag: str = 'y') -> GroupRingElt:
    """Monomial symmetric function: sum of e^mu over the orbit W lam"""
    return GroupRingElt.from_mapping({mu: 1 for mu in weyl.orbit(lam)}, tag)


def gr_specialize(f: GroupRingElt) -> int:
    """Send every monomial to 1"""
    return sum(c for _, c in f.terms)


def gr_to_json(f: GroupRingElt) -> List[Dict]:
    return [{'mu': list(lam), 'c': c} for lam, c in f.terms]


def gr_from_json(data: Iterable[Mapping], tag: str = 'y') -> GroupRingElt:
    acc = defaultdict(int)
    for item in data:
        acc[tuple(int(x) for x in item['mu'])] += int(item['c'])
    return GroupRingElt.from_mapping(acc, tag)

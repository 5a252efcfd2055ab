#!/usr/bin/env python3
"""
Demazure operators T_i on Z[P], multiplication operators Y^lam and the
commutation relation

    Y^lam T_i = T_i Y^{s_i lam} + (Y^lam - Y^{s_i lam}) / (1 - Y^{-alpha_i})

Operators are plain functions on GroupRingElt. Products follow
T_w = T_{i_1} ... T_{i_p}: the last letter acts first.
"""
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple
import logging

from grouping import GroupRingElt
from rootdata import RootSystemSpec, Weight, WeylElement, WeylGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OperatorWord:
    """Word in the simple indices, flagged reduced when it is a reduced word of its element"""
    word: Tuple[int, ...] = ()
    reduced: bool = False

    @classmethod
    def of(cls, w: WeylElement) -> 'OperatorWord':
        return cls(tuple(w.word), True)

    @classmethod
    def checked(cls, weyl: WeylGroup, word: Sequence[int]) -> 'OperatorWord':
        word = tuple(word)
        return cls(word, weyl.element(word).length == len(word))


@lru_cache(maxsize=65536)
def _demazure_monomial(alpha: Weight, i: int, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    """Closed form of T_i(e^lam) as a geometric sum along the alpha_i-string"""
    k = lam[i - 1]
    if k >= 0:
        return tuple((tuple(x - j * a for x, a in zip(lam, alpha)), 1) for j in range(k + 1))
    if k == -1:
        return ()
    return tuple((tuple(x + j * a for x, a in zip(lam, alpha)), -1) for j in range(1, -k))


def _require_y(f: GroupRingElt):
    if f.tag != 'y':
        raise ValueError("Demazure operators act on the y-lattice; got an x-tagged element")


def demazure_apply(rs: RootSystemSpec, i: int, f: GroupRingElt) -> GroupRingElt:
    """T_i(e^lam) = (e^{lam+alpha_i} - e^{s_i lam}) / (e^{alpha_i} - 1), extended linearly"""
    _require_y(f)
    alpha = rs.simple_root(i)
    acc = defaultdict(int)
    for lam, c in f.terms:
        for mu, d in _demazure_monomial(alpha, i, lam):
            acc[mu] += c * d
    return GroupRingElt.from_mapping(acc, 'y')


def demazure_word(weyl: WeylGroup, word, f: GroupRingElt) -> GroupRingElt:
    """T_{i_1}(T_{i_2}(... T_{i_p}(f))) for a reduced word (i_1, ..., i_p)"""
    if not isinstance(word, OperatorWord):
        word = OperatorWord.checked(weyl, word)
    elif not word.reduced:
        word = OperatorWord.checked(weyl, word.word)
    if not word.reduced:
        raise ValueError(
            f"Word {list(word.word)} is not reduced; use the canonical word "
            f"{list(weyl.element(word.word).word)} instead"
        )
    result = f
    for i in reversed(word.word):
        result = demazure_apply(weyl.rs, i, result)
    return result


def demazure_element(weyl: WeylGroup, w: WeylElement, f: GroupRingElt) -> GroupRingElt:
    """T_w along the canonical reduced word of w"""
    return demazure_word(weyl, OperatorWord.of(w), f)


def y_mul(lam: Weight, f: GroupRingElt) -> GroupRingElt:
    """Y^lam: multiplication by e^lam"""
    _require_y(f)
    return GroupRingElt(
        tuple((tuple(x + y for x, y in zip(lam, mu)), c) for mu, c in f.terms),
        'y',
    )


def chevalley_divided_term(rs: RootSystemSpec, lam: Weight, i: int) -> GroupRingElt:
    """(y^lam - y^{s_i lam}) / (1 - y^{-alpha_i}) as a finite sum"""
    k = rs.pair(lam, i)
    alpha = rs.simple_root(i)
    if k >= 1:
        coeffs = {tuple(x - j * a for x, a in zip(lam, alpha)): 1 for j in range(k)}
    elif k == 0:
        coeffs = {}
    else:
        coeffs = {tuple(x + j * a for x, a in zip(lam, alpha)): -1 for j in range(1, -k + 1)}
    return GroupRingElt.from_mapping(coeffs, 'y')


def coxeter_order(rs: RootSystemSpec, i: int, j: int) -> int:
    """Order m_ij of s_i s_j"""
    if i == j:
        return 1
    product = rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[product]


def alternating_word(i: int, j: int, length: int) -> Tuple[int, ...]:
    return tuple(i if k % 2 == 0 else j for k in range(length))

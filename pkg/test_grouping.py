#!/usr/bin/env python3
"""
Test group-algebra arithmetic on Z[P]
"""
import random
import sys

from grouping import (GroupRingElt, gr_act, gr_add, gr_from_json, gr_monomial, gr_mul,
                      gr_orbit_sum, gr_specialize, gr_sum, gr_to_json, gr_zero)
from rootdata import parse_root_system, weyl_group


def test_normal_form():
    f = GroupRingElt.from_mapping({(1, 0): 2, (0, 0): 0, (-1, 1): -1})
    assert f.terms == (((-1, 1), -1), ((1, 0), 2))
    assert f.coefficient((0, 0)) == 0
    assert gr_zero().is_zero()


def test_constructor_normalizes_terms():
    assert GroupRingElt((((1,), 0),)) == gr_zero()
    assert GroupRingElt((((1,), 0),)).is_zero()
    unsorted = GroupRingElt((((1,), 1), ((0,), 1)))
    assert unsorted == GroupRingElt.from_mapping({(1,): 1, (0,): 1})
    assert unsorted.terms == (((0,), 1), ((1,), 1))
    repeated = GroupRingElt((((2,), 3), ((2,), -3), ((1,), 2), ((1,), 1)))
    assert repeated.terms == (((1,), 3),)


def test_addition_and_cancellation():
    f = gr_monomial((1, 0))
    assert (f + f).coefficient((1, 0)) == 2
    assert (f - f).is_zero()
    assert (-f).coefficient((1, 0)) == -1
    assert gr_add(f, gr_zero()) == f
    assert (3 * f).coefficient((1, 0)) == 3
    assert (f * 0).is_zero()


def test_tags_do_not_mix():
    try:
        gr_add(gr_monomial((1,), 'x'), gr_monomial((1,), 'y'))
        raise AssertionError("x and y lattices must stay apart")
    except ValueError:
        pass
    try:
        gr_sum([gr_monomial((1,), 'x')], 'y')
        raise AssertionError("sum into the wrong lattice")
    except ValueError:
        pass
    try:
        GroupRingElt((), 'z')
        raise AssertionError("unknown tag")
    except ValueError:
        pass


def test_multiplication():
    up, down = gr_monomial((1,)), gr_monomial((-1,))
    product = gr_mul(up + down, up - down)
    assert product.as_dict() == {(2,): 1, (-2,): -1}
    assert up * down == gr_monomial((0,))


def test_big_coefficients():
    f = gr_monomial((1,))
    for _ in range(70):
        f = f + f
    assert f.coefficient((1,)) == 2 ** 70


def test_weyl_action():
    weyl = weyl_group(parse_root_system('A2'))
    s1, s2 = weyl.simple
    assert gr_act(weyl, s1, gr_monomial((1, 0))) == gr_monomial((-1, 1))
    chi = gr_orbit_sum(weyl, (1, 0))
    assert len(chi.terms) == 3
    assert gr_act(weyl, s1, chi) == chi
    assert gr_act(weyl, s2, chi) == chi


def test_specialize():
    f = GroupRingElt.from_mapping({(1, 0): 2, (0, -1): 3}, 'x')
    assert gr_specialize(f) == 5
    assert gr_specialize(gr_zero('x')) == 0


def test_json():
    f = GroupRingElt.from_mapping({(1, 0): 1, (-1, 1): 4}, 'x')
    data = gr_to_json(f)
    assert data == [{'mu': [-1, 1], 'c': 4}, {'mu': [1, 0], 'c': 1}]
    assert gr_from_json(data, 'x') == f

def random_element(rng, rank=2):
    coeffs = {}
    for _ in range(rng.randint(0, 4)):
        lam = tuple(rng.randint(-2, 2) for _ in range(rank))
        coeffs[lam] = rng.randint(-3, 3)
    return GroupRingElt.from_mapping(coeffs)


def test_ring_axioms_on_samples():
    rng = random.Random(7)
    for _ in range(100):
        f, g, h = (random_element(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert f + gr_zero() == f and f * gr_monomial((0, 0)) == f


def test_weyl_action_is_multiplicative_and_composes():
    weyl = weyl_group(parse_root_system('B2'))
    rng = random.Random(11)
    for _ in range(60):
        f, g = random_element(rng), random_element(rng)
        w, v = rng.choice(weyl.elements), rng.choice(weyl.elements)
        assert gr_act(weyl, w, f * g) == gr_act(weyl, w, f) * gr_act(weyl, w, g)
        assert gr_act(weyl, w, gr_act(weyl, v, f)) == gr_act(weyl, weyl.multiply(w, v), f)



if __name__ == "__main__":
    tests = [(name, fn) for name, fn in list(globals().items()) if name.startswith('test_') and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"✓ {name}")
        except Exception as e:
            failed += 1
            print(f"✗ {name}: {e}")
    print(f"\n{len(tests) - failed}/{len(tests)} passed")
    sys.exit(1 if failed else 0)

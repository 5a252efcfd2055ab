#!/usr/bin/env python3
"""
Test the Pieri-Chevalley expansion, the operator identity and the string lemma
"""
import json
import sys
from pathlib import Path

from grouping import GroupRingElt, gr_monomial
from paths import generate_paths
from pieri import (VerificationReport, expand, expand_via_operators, expansion_from_json,
                   expansion_to_json, expansion_to_tsv, run_grid, schubert_class, schubert_step,
                   specialize_absolute, string_decompose, theorem_lhs, theorem_rhs,
                   verify_string_lemma, verify_theorem)
from rootdata import dominant_box, parse_root_system, weyl_group

GOLDEN = Path(__file__).parent / 'golden'

A1 = weyl_group(parse_root_system('A1'))
A2 = weyl_group(parse_root_system('A2'))
B2 = weyl_group(parse_root_system('B2'))


def x(mapping):
    return GroupRingElt.from_mapping(mapping, 'x')


def y(mapping):
    return GroupRingElt.from_mapping(mapping, 'y')


def test_expand_a1():
    result = expand(A1, (1,), A1.simple[0])
    assert result.as_dict() == {A1.identity: x({(1,): 1}), A1.simple[0]: x({(-1,): 1})}
    assert [v.word for v, _ in result.terms] == [(), (1,)]


def test_expand_a2():
    s1s2 = A2.element((1, 2))
    result = expand(A2, (1, 0), s1s2)
    assert result.as_dict() == {A2.element((2,)): x({(1, 0): 1}), s1s2: x({(-1, 1): 1})}
    assert specialize_absolute(result) == {A2.element((2,)): 1, s1s2: 1}


def test_golden_expansions():
    cases = (
        ('expand_A1_1_s1.json', A1, (1,), (1,)),
        ('expand_A2_10_s1s2.json', A2, (1, 0), (1, 2)),
    )
    for filename, weyl, lam, word in cases:
        with open(GOLDEN / filename) as f:
            golden = json.load(f)
        assert expansion_to_json(expand(weyl, lam, weyl.element(word))) == golden, filename


def test_identity_expansion():
    for weyl in (A1, A2, B2):
        for lam in dominant_box(weyl.rank, 2):
            result = expand(weyl, lam, weyl.identity)
            assert result.as_dict() == {weyl.identity: x({lam: 1})}


def test_zero_weight():
    result = expand(A2, (0, 0), A2.simple[0])
    assert result.as_dict() == {A2.simple[0]: x({(0, 0): 1})}


def test_mass_and_top_element():
    for weyl, lam in ((A2, (1, 1)), (B2, (1, 1))):
        top = expand(weyl, lam, weyl.longest())
        assert sum(specialize_absolute(top).values()) == weyl.rs.weyl_dimension(lam)
        assert top.mass() == len(generate_paths(weyl, lam))
        assert all(c >= 1 for _, coeff in top.terms for _, c in coeff.terms)


def test_theorem_sides_a1():
    s1 = A1.simple[0]
    one, omega = gr_monomial((0,)), gr_monomial((1,))
    assert theorem_lhs(A1, (1,), s1, one) == omega
    assert theorem_rhs(A1, (1,), s1, one) == omega
    assert theorem_lhs(A1, (1,), s1, omega) == y({(2,): 1, (0,): 1})
    assert theorem_rhs(A1, (1,), s1, omega) == y({(2,): 1, (0,): 1})
    f = y({(3,): 2, (-2,): -1})
    assert theorem_rhs(A1, (2,), A1.identity, f) == theorem_lhs(A1, (2,), A1.identity, f)


def test_verify_theorem():
    report = verify_theorem(A1, 2, 2)
    assert report.passed and report.counterexample is None
    assert report.checked == 3 * 2 * 5
    report = verify_theorem(A2, 1, 1)
    assert report.passed
    assert report.checked == 4 * 6 * 9


def test_verify_theorem_parallel_matches():
    sequential = verify_theorem(B2, 1, 1, jobs=1)
    parallel = verify_theorem(B2, 1, 1, jobs=2)
    assert sequential.to_dict() == parallel.to_dict()
    assert parallel.passed


def test_string_decompose():
    strings = string_decompose(A1, generate_paths(A1, (1,)), 1)
    assert [len(s) for s in strings] == [2]

    paths = generate_paths(A2, (1, 0))
    pi, f1pi, f2f1pi = paths.paths
    assert string_decompose(A2, paths, 1) == [[pi, f1pi], [f2f1pi]]
    assert string_decompose(A2, paths, 2) == [[pi], [f1pi, f2f1pi]]


def test_string_lemma():
    assert verify_string_lemma(A1, (1,), A1.simple[0], 1, mu_box=2).passed
    assert verify_string_lemma(A1, (0,), A1.identity, 1).passed
    for w in A2.elements:
        for i in (1, 2):
            report = verify_string_lemma(A2, (1, 0), w, i)
            assert report.passed, report.counterexample
            assert report.checked > 0


def test_schubert_classes():
    assert schubert_step(A2, 1, A2.identity) == A2.simple[0]
    assert schubert_step(A2, 1, A2.simple[0]) == A2.simple[0]
    for weyl in (A2, B2):
        for w in weyl.elements:
            assert schubert_class(weyl, weyl.inverse(w).word) == w


def test_operator_route_agrees():
    for weyl, lam in ((A2, (1, 0)), (A2, (1, 1)), (B2, (1, 1))):
        for w in weyl.elements:
            assert expand_via_operators(weyl, lam, w) == expand(weyl, lam, w)


def test_serialization():
    result = expand(B2, (1, 1), B2.element((1, 2, 1)))
    assert expansion_from_json(B2, expansion_to_json(result)) == result
    try:
        expansion_from_json(A2, expansion_to_json(result))
        raise AssertionError("root system mismatch must be rejected")
    except ValueError:
        pass

    tsv = expansion_to_tsv(expand(A2, (1, 0), A2.element((1, 2))))
    assert tsv == 'v\tmu\tc\ns2\t1,0\t1\ns1s2\t-1,1\t1\n'


def test_run_grid_order():
    assert run_grid(abs, [-3, 1, -2]) == [3, 1, 2]
    assert run_grid(abs, [-3, 1, -2], jobs=2) == [3, 1, 2]


def test_report_keeps_first_failure():
    report = VerificationReport('sample', 'A1')
    report.fail({'mu': [1]})
    report.fail({'mu': [2]})
    assert not report.passed
    assert report.to_dict()['counterexample'] == {'mu': [1]}


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

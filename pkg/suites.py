#!/usr/bin/env python3
"""
Verification suites shared by the CLI and the acceptance runner

Every suite takes an enumerated Weyl group and coordinate boxes and returns a
list of VerificationReports. Operator identities are tested extensionally on
monomials e^mu with |mu_j| <= mu_box; failures are reported, never raised.
"""
from typing import Callable, Dict, List
import logging

from demazure import (alternating_word, chevalley_divided_term, coxeter_order,
                      demazure_apply, demazure_element, y_mul)
from grouping import GroupRingElt, gr_monomial, gr_orbit_sum, gr_to_json
from paths import (character, endpoint, generate_paths, path_to_json,
                   restrict_le, root_op_e, root_op_f)
from pieri import (VerificationReport, expand, expand_via_operators,
                   expansion_from_json, expansion_to_json, schubert_class,
                   specialize_absolute, string_decompose, theorem_lhs,
                   theorem_rhs, verify_string_lemma, verify_theorem)
from rootdata import WeylGroup, box_weights, dominant_box

logger = logging.getLogger(__name__)


def _monomials(weyl: WeylGroup, mu_box: int):
    return [(mu, gr_monomial(mu)) for mu in box_weights(weyl.rank, -mu_box, mu_box)]


def _compose(weyl: WeylGroup, word, f: GroupRingElt) -> GroupRingElt:
    for i in reversed(word):
        f = demazure_apply(weyl.rs, i, f)
    return f


def verify_commutation(weyl: WeylGroup, lambda_box: int, mu_box: int) -> VerificationReport:
    """Y^lam T_i = T_i Y^{s_i lam} + (Y^lam - Y^{s_i lam}) / (1 - Y^{-alpha_i}) for every lam in the box"""
    rs = weyl.rs
    report = VerificationReport('commutation', rs.name, {'lambda_box': lambda_box, 'mu_box': mu_box})
    for lam in box_weights(weyl.rank, -lambda_box, lambda_box):
        for i in range(1, weyl.rank + 1):
            divided = chevalley_divided_term(rs, lam, i)
            reflected = rs.reflect(lam, i)
            for mu, f in _monomials(weyl, mu_box):
                lhs = y_mul(lam, demazure_apply(rs, i, f))
                rhs = demazure_apply(rs, i, y_mul(reflected, f)) + divided * f
                report.checked += 1
                if lhs != rhs:
                    report.fail({'lambda': list(lam), 'i': i, 'mu': list(mu),
                                 'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs)})
                    return report
    return report


def verify_braid(weyl: WeylGroup, mu_box: int) -> VerificationReport:
    """Alternating products of length m_ij agree for every pair i < j"""
    report = VerificationReport('braid', weyl.rs.name, {'mu_box': mu_box})
    for i in range(1, weyl.rank + 1):
        for j in range(i + 1, weyl.rank + 1):
            m = coxeter_order(weyl.rs, i, j)
            left, right = alternating_word(i, j, m), alternating_word(j, i, m)
            for mu, f in _monomials(weyl, mu_box):
                lhs, rhs = _compose(weyl, left, f), _compose(weyl, right, f)
                report.checked += 1
                if lhs != rhs:
                    report.fail({'i': i, 'j': j, 'm': m, 'mu': list(mu),
                                 'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs)})
                    return report
    return report


def verify_idempotence(weyl: WeylGroup, mu_box: int) -> VerificationReport:
    report = VerificationReport('idempotence', weyl.rs.name, {'mu_box': mu_box})
    for i in range(1, weyl.rank + 1):
        for mu, f in _monomials(weyl, mu_box):
            once = demazure_apply(weyl.rs, i, f)
            twice = demazure_apply(weyl.rs, i, once)
            report.checked += 1
            if once != twice:
                report.fail({'i': i, 'mu': list(mu), 'lhs': gr_to_json(twice), 'rhs': gr_to_json(once)})
                return report
    return report


def verify_defining_relation(weyl: WeylGroup, mu_box: int) -> VerificationReport:
    """(e^{alpha_i} - 1) T_i(e^lam) = e^{lam + alpha_i} - e^{s_i lam}"""
    rs = weyl.rs
    report = VerificationReport('defining_relation', rs.name, {'mu_box': mu_box})
    one = gr_monomial((0,) * weyl.rank)
    for i in range(1, weyl.rank + 1):
        alpha = rs.simple_root(i)
        denominator = gr_monomial(alpha) - one
        for mu, f in _monomials(weyl, mu_box):
            lhs = denominator * demazure_apply(rs, i, f)
            shifted = tuple(x + a for x, a in zip(mu, alpha))
            rhs = gr_monomial(shifted) - gr_monomial(rs.reflect(mu, i))
            report.checked += 1
            if lhs != rhs:
                report.fail({'i': i, 'mu': list(mu), 'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs)})
                return report
    return report


def verify_invariant_linearity(weyl: WeylGroup, lambda_box: int, mu_box: int) -> VerificationReport:
    """T_i(chi f) = chi T_i(f) for W-invariant chi = sum over a dominant orbit"""
    report = VerificationReport('invariant_linearity', weyl.rs.name,
                                {'lambda_box': lambda_box, 'mu_box': mu_box})
    for nu in dominant_box(weyl.rank, lambda_box):
        chi = gr_orbit_sum(weyl, nu)
        for i in range(1, weyl.rank + 1):
            for mu, f in _monomials(weyl, mu_box):
                lhs = demazure_apply(weyl.rs, i, chi * f)
                rhs = chi * demazure_apply(weyl.rs, i, f)
                report.checked += 1
                if lhs != rhs:
                    report.fail({'nu': list(nu), 'i': i, 'mu': list(mu),
                                 'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs)})
                    return report
    return report


def verify_operator_algebra(weyl: WeylGroup, lambda_box: int, mu_box: int) -> List[VerificationReport]:
    return [
        verify_idempotence(weyl, mu_box),
        verify_braid(weyl, mu_box),
        verify_defining_relation(weyl, mu_box),
        verify_invariant_linearity(weyl, lambda_box, mu_box),
        verify_commutation(weyl, lambda_box, mu_box),
    ]


def verify_dimensions(weyl: WeylGroup, lambda_box: int) -> List[VerificationReport]:
    """|T^lam| against the Weyl dimension formula, and the full character against T_{w0}(e^lam)"""
    name = weyl.rs.name
    counts = VerificationReport('dimension', name, {'lambda_box': lambda_box})
    characters = VerificationReport('w0_character', name, {'lambda_box': lambda_box})
    w0 = weyl.longest()
    for lam in dominant_box(weyl.rank, lambda_box):
        paths = generate_paths(weyl, lam)
        expected = weyl.rs.weyl_dimension(lam)
        counts.checked += 1
        if len(paths) != expected:
            counts.fail({'lambda': list(lam), 'paths': len(paths), 'weyl_dimension': expected})
        demazure = demazure_element(weyl, w0, gr_monomial(lam)).as_dict()
        characters.checked += 1
        if character(paths) != demazure:
            characters.fail({'lambda': list(lam), 'w': list(w0.word)})
    return [counts, characters]


def verify_characters(weyl: WeylGroup, lambda_box: int) -> VerificationReport:
    """sum over iota(eta) <= w of e^{eta(1)} = T_w(e^lam) for every w"""
    report = VerificationReport('demazure_character', weyl.rs.name, {'lambda_box': lambda_box})
    for lam in dominant_box(weyl.rank, lambda_box):
        paths = generate_paths(weyl, lam)
        for w in weyl.elements:
            lhs = character(restrict_le(weyl, paths, w))
            rhs = demazure_element(weyl, w, gr_monomial(lam)).as_dict()
            report.checked += 1
            if lhs != rhs:
                report.fail({'lambda': list(lam), 'w': list(w.word),
                             'paths': sorted(map(list, lhs)), 'demazure': sorted(map(list, rhs))})
                return report
    return report


def verify_crystal(weyl: WeylGroup, lambda_box: int) -> VerificationReport:
    """e_i f_i = id on the domain of f_i, f_i e_i = id on the domain of e_i, endpoint shift by alpha_i"""
    report = VerificationReport('crystal', weyl.rs.name, {'lambda_box': lambda_box})
    for lam in dominant_box(weyl.rank, lambda_box):
        paths = generate_paths(weyl, lam)
        members = set(paths.paths)
        for path in paths:
            for i in range(1, weyl.rank + 1):
                alpha = weyl.rs.simple_root(i)
                report.checked += 1
                lowered = root_op_f(weyl, i, path)
                if lowered is not None:
                    shifted = tuple(x - a for x, a in zip(endpoint(path), alpha))
                    if (lowered not in members or endpoint(lowered) != shifted
                            or root_op_e(weyl, i, lowered) != path):
                        report.fail({'lambda': list(lam), 'i': i, 'op': 'f', 'path': path_to_json(path)})
                        return report
                raised = root_op_e(weyl, i, path)
                if raised is not None and root_op_f(weyl, i, raised) != path:
                    report.fail({'lambda': list(lam), 'i': i, 'op': 'e', 'path': path_to_json(path)})
                    return report
    return report


def verify_string_partition(weyl: WeylGroup, lambda_box: int) -> VerificationReport:
    """Strings cover T^lam once each; heads have no e_i preimage, tails no f_i image"""
    report = VerificationReport('string_partition', weyl.rs.name, {'lambda_box': lambda_box})
    for lam in dominant_box(weyl.rank, lambda_box):
        paths = generate_paths(weyl, lam)
        for i in range(1, weyl.rank + 1):
            strings = string_decompose(weyl, paths, i)
            flat = [p for s in strings for p in s]
            report.checked += 1
            ok = (len(flat) == len(paths) and set(flat) == set(paths.paths)
                  and all(root_op_e(weyl, i, s[0]) is None for s in strings)
                  and all(root_op_f(weyl, i, s[-1]) is None for s in strings))
            if not ok:
                report.fail({'lambda': list(lam), 'i': i, 'strings': [len(s) for s in strings]})
                return report
    return report


def verify_strings(weyl: WeylGroup, lambda_box: int, mu_box: int) -> List[VerificationReport]:
    """String lemma for every dominant lam in the box, every w and every i"""
    lemma = VerificationReport('string_lemma', weyl.rs.name, {'lambda_box': lambda_box, 'mu_box': mu_box})
    for lam in dominant_box(weyl.rank, lambda_box):
        for w in weyl.elements:
            for i in range(1, weyl.rank + 1):
                single = verify_string_lemma(weyl, lam, w, i, mu_box)
                lemma.checked += single.checked
                if not single.passed:
                    lemma.fail(single.counterexample)
                    return [verify_string_partition(weyl, lambda_box), lemma]
    return [verify_string_partition(weyl, lambda_box), lemma]


def verify_corollary(weyl: WeylGroup, lambda_box: int) -> VerificationReport:
    """
    Consistency of the expansion y^lam [O_w] = sum_v [O_v] c_v:

    expand(lam, 1) = {1: x^lam}; coefficients positive; mass = |T^lam_{<=w}|;
    the operator route through [O_v] = T_{v^{-1}} [O_1] gives the same
    expansion; both theorem sides agree in mass on the constant 1; JSON
    round trip; the w0 mass is the Weyl dimension.
    """
    report = VerificationReport('corollary', weyl.rs.name, {'lambda_box': lambda_box})
    one = gr_monomial((0,) * weyl.rank)
    for w in weyl.elements:
        report.checked += 1
        if schubert_class(weyl, weyl.inverse(w).word) != w:
            report.fail({'w': list(w.word), 'check': 'schubert_class'})
            return report

    for lam in dominant_box(weyl.rank, lambda_box):
        paths = generate_paths(weyl, lam)
        trivial = expand(weyl, lam, weyl.identity)
        report.checked += 1
        if trivial.as_dict() != {weyl.identity: gr_monomial(lam, 'x')}:
            report.fail({'lambda': list(lam), 'check': 'identity_expansion'})
            return report

        for w in weyl.elements:
            result = expand(weyl, lam, w)
            report.checked += 1
            problem = None
            if any(c < 1 for _, coeff in result.terms for _, c in coeff.terms):
                problem = 'positivity'
            elif result.mass() != len(restrict_le(weyl, paths, w)):
                problem = 'mass'
            elif expand_via_operators(weyl, lam, w) != result:
                problem = 'operator_route'
            elif expansion_from_json(weyl, expansion_to_json(result)) != result:
                problem = 'json_round_trip'
            else:
                lhs = theorem_lhs(weyl, lam, w, one)
                rhs = theorem_rhs(weyl, lam, w, one)
                if sum(c for _, c in lhs.terms) != sum(c for _, c in rhs.terms):
                    problem = 'constant_mass'
            if problem:
                report.fail({'lambda': list(lam), 'w': list(w.word), 'check': problem,
                             'expansion': expansion_to_json(result)})
                return report

        top = expand(weyl, lam, weyl.longest())
        report.checked += 1
        if sum(specialize_absolute(top).values()) != weyl.rs.weyl_dimension(lam):
            report.fail({'lambda': list(lam), 'check': 'w0_mass'})
            return report
    return report


def _theorem(weyl, lambda_box, mu_box, jobs):
    return [verify_theorem(weyl, lambda_box, mu_box, jobs)]


SUITES: Dict[str, Callable[[WeylGroup, int, int, int], List[VerificationReport]]] = {
    'theorem': _theorem,
    'commutation': lambda weyl, lb, mb, jobs: [verify_commutation(weyl, lb, mb)],
    'braid': lambda weyl, lb, mb, jobs: [verify_braid(weyl, mb)],
    'ops': lambda weyl, lb, mb, jobs: verify_operator_algebra(weyl, lb, mb),
    'strings': lambda weyl, lb, mb, jobs: verify_strings(weyl, lb, mb),
    'dimensions': lambda weyl, lb, mb, jobs: verify_dimensions(weyl, lb),
    'characters': lambda weyl, lb, mb, jobs: [verify_characters(weyl, lb)],
    'crystal': lambda weyl, lb, mb, jobs: [verify_crystal(weyl, lb)],
    'corollary': lambda weyl, lb, mb, jobs: [verify_corollary(weyl, lb)],
}

SUITE_NAMES = tuple(SUITES) + ('all',)


def run_suite(name: str, weyl: WeylGroup, lambda_box: int, mu_box: int,
              jobs: int = 1) -> List[VerificationReport]:
    """Run one named suite, or every suite in registry order for 'all'"""
    if name not in SUITE_NAMES:
        raise ValueError(f"Unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == 'all' else [name]
    reports = []
    for suite in names:
        logger.info(f"Running {suite} on {weyl.rs.name} (lambda_box={lambda_box}, mu_box={mu_box})")
        reports.extend(SUITES[suite](weyl, lambda_box, mu_box, jobs))
    return reports

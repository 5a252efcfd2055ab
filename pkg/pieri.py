#!/usr/bin/env python3
"""
Pieri-Chevalley expansion in the K-theory of a G/B-bundle

For dominant lam and w in W,

    Y^lam T_{w^{-1}} = sum over eta in T^lam_{<=w} of T_{v(eta,w)^{-1}} Y^{eta(1)}

as operators, and applied to the class of the section,

    y^lam [O_w] = sum over eta of [O_{v(eta,w)}] x^{eta(1)}.

Schubert classes [O_v] are represented symbolically by Weyl elements, and
K(X) coefficients by x-tagged elements of Z[P]. The operator identity is
checked extensionally on monomial boxes of the full group algebra.
"""
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from demazure import demazure_apply, demazure_word, y_mul
from grouping import (GroupRingElt, gr_from_json, gr_monomial, gr_specialize,
                      gr_sum, gr_to_json)
from paths import (LSPath, PathSet, endpoint, final_direction, generate_paths,
                   restrict_le, root_op_e, root_op_f)
from rootdata import (Weight, WeylElement, WeylGroup,
                      box_weights, build_root_system, dominant_box, weyl_group)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Expansion:
    """y^lam [O_w] = sum_v [O_v] * terms[v], coefficients in the x-lattice"""
    root_system: str
    lam: Weight
    w: WeylElement
    terms: Tuple[Tuple[WeylElement, GroupRingElt], ...]

    def as_dict(self) -> Dict[WeylElement, GroupRingElt]:
        return dict(self.terms)

    def mass(self) -> int:
        return sum(gr_specialize(c) for _, c in self.terms)


@dataclass
class VerificationReport:
    """Outcome of one identity check over a parameter grid"""
    name: str
    root_system: str
    params: Dict = field(default_factory=dict)
    passed: bool = True
    checked: int = 0
    counterexample: Optional[Dict] = None

    def fail(self, counterexample: Dict):
        """Record the first failure; later ones are ignored"""
        if self.passed:
            self.passed = False
            self.counterexample = counterexample
            logger.error(f"{self.name} failed on {self.root_system}: {counterexample}")

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'root_system': self.root_system,
            'params': self.params,
            'passed': self.passed,
            'checked': self.checked,
            'counterexample': self.counterexample,
        }


def _sorted_terms(buckets: Mapping[WeylElement, GroupRingElt]):
    return tuple(sorted(buckets.items(), key=lambda item: item[0].sort_key()))


def expand(weyl: WeylGroup, lam: Weight, w: WeylElement) -> Expansion:
    """Group T^lam_{<=w} by final direction; coefficient of v is sum of x^{eta(1)}"""
    lam = tuple(lam)
    weyl.rs.require_dominant(lam)
    below = restrict_le(weyl, generate_paths(weyl, lam), w)
    buckets: Dict[WeylElement, Counter] = defaultdict(Counter)
    for eta in below:
        buckets[final_direction(weyl, eta, w)][endpoint(eta)] += 1
    terms = {v: GroupRingElt.from_mapping(counts, 'x') for v, counts in buckets.items()}
    return Expansion(weyl.rs.name, lam, w, _sorted_terms(terms))


def specialize_absolute(expansion: Expansion) -> Dict[WeylElement, int]:
    """X = pt: every x^mu becomes 1"""
    return {v: gr_specialize(c) for v, c in expansion.terms}


def theorem_lhs(weyl: WeylGroup, lam: Weight, w: WeylElement, f: GroupRingElt) -> GroupRingElt:
    """Y^lam T_{w^{-1}} (f)"""
    return y_mul(lam, demazure_word(weyl, weyl.inverse(w).word, f))


def theorem_terms(weyl: WeylGroup, lam: Weight, w: WeylElement) -> List[Tuple[Tuple[int, ...], Weight]]:
    """(word of v(eta,w)^{-1}, eta(1)) for every eta in T^lam_{<=w}"""
    below = restrict_le(weyl, generate_paths(weyl, tuple(lam)), w)
    return [(weyl.inverse(final_direction(weyl, eta, w)).word, endpoint(eta)) for eta in below]


def theorem_rhs(weyl: WeylGroup, lam: Weight, w: WeylElement, f: GroupRingElt,
                terms: Optional[List] = None) -> GroupRingElt:
    """sum over eta of T_{v(eta,w)^{-1}} Y^{eta(1)} (f)"""
    if terms is None:
        terms = theorem_terms(weyl, lam, w)
    return gr_sum((demazure_word(weyl, word, y_mul(mu, f)) for word, mu in terms), 'y')


def run_grid(cell: Callable, tasks: Sequence, jobs: int = 1) -> List:
    """Evaluate cells in task order, on a process pool when jobs > 1"""
    if jobs <= 1 or len(tasks) <= 1:
        return [cell(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(cell, tasks))


def collect(report: VerificationReport, results: Sequence[Tuple[int, Optional[Dict]]]) -> VerificationReport:
    """Merge (checked, counterexample) cell results in canonical grid order"""
    for checked, counterexample in results:
        report.checked += checked
        if counterexample is not None:
            report.fail(counterexample)
    return report


def _group_for(name: str) -> WeylGroup:
    return weyl_group(build_root_system(name[0], int(name[1:])))


def _theorem_cell(task) -> Tuple[int, Optional[Dict]]:
    name, lam, word, mu_box = task
    weyl = _group_for(name)
    w = weyl.element(word)
    terms = theorem_terms(weyl, lam, w)
    checked = 0
    for mu in box_weights(weyl.rank, -mu_box, mu_box):
        f = gr_monomial(mu)
        lhs = theorem_lhs(weyl, lam, w, f)
        rhs = theorem_rhs(weyl, lam, w, f, terms)
        checked += 1
        if lhs != rhs:
            return checked, {
                'lambda': list(lam), 'w': list(w.word), 'mu': list(mu),
                'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs),
            }
    return checked, None


def verify_theorem(weyl: WeylGroup, lambda_box: int, mu_box: int, jobs: int = 1) -> VerificationReport:
    """Y^lam T_{w^{-1}} = sum T_{v^{-1}} Y^{eta(1)} on every box monomial, every w, every dominant lam"""
    name = weyl.rs.name
    report = VerificationReport('theorem', name, {'lambda_box': lambda_box, 'mu_box': mu_box})
    tasks = [(name, lam, w.word, mu_box) for lam in dominant_box(weyl.rank, lambda_box) for w in weyl.elements]
    logger.info(f"Theorem grid on {name}: {len(tasks)} (lambda, w) cells")
    return collect(report, run_grid(_theorem_cell, tasks, jobs))


def string_decompose(weyl: WeylGroup, paths: PathSet, i: int) -> List[List[LSPath]]:
    """
    Partition into alpha_i-strings, each listed from its head pi down to f_i^m pi.

    A head is a member whose e_i image is null or not a member.
    """
    members = set(paths.paths)
    strings = []
    for path in paths:
        raised = root_op_e(weyl, i, path)
        if raised is not None and raised in members:
            continue
        string = [path]
        lowered = root_op_f(weyl, i, path)
        while lowered is not None and lowered in members:
            string.append(lowered)
            lowered = root_op_f(weyl, i, lowered)
        strings.append(string)
    return strings


def string_bounds(weyl: WeylGroup, w: WeylElement, i: int) -> Tuple[WeylElement, WeylElement]:
    """(u, s_i u) with l(s_i u) = l(u) + 1, u in {w, s_i w}"""
    other = weyl.left_multiply_simple(i, w)
    return (w, other) if other.length > w.length else (other, w)


def verify_string_lemma(weyl: WeylGroup, lam: Weight, w: WeylElement, i: int,
                        mu_box: int = 1) -> VerificationReport:
    """
    String-by-string form of the induction step:

        sum_{eta in S, iota <= s_i u} T_{v(eta, s_i u)^{-1}} Y^{eta(1)}
            = sum_{pi in S, iota <= u} T_{v(pi, u)^{-1}} Y^{pi(1)} T_i
    """
    lam = tuple(lam)
    report = VerificationReport(
        'string_lemma', weyl.rs.name,
        {'lambda': list(lam), 'w': list(w.word), 'i': i, 'mu_box': mu_box},
    )
    lower, upper = string_bounds(weyl, w, i)
    everything = generate_paths(weyl, lam)
    below_lower = set(restrict_le(weyl, everything, lower).paths)
    below_upper = set(restrict_le(weyl, everything, upper).paths)

    for string in string_decompose(weyl, everything, i):
        lhs_terms = [(weyl.inverse(final_direction(weyl, eta, upper)).word, endpoint(eta))
                     for eta in string if eta in below_upper]
        rhs_terms = [(weyl.inverse(final_direction(weyl, eta, lower)).word, endpoint(eta))
                     for eta in string if eta in below_lower]
        if not lhs_terms and not rhs_terms:
            continue
        for mu in box_weights(weyl.rank, -mu_box, mu_box):
            f = gr_monomial(mu)
            lhs = gr_sum((demazure_word(weyl, word, y_mul(nu, f)) for word, nu in lhs_terms), 'y')
            shifted = demazure_apply(weyl.rs, i, f)
            rhs = gr_sum((demazure_word(weyl, word, y_mul(nu, shifted)) for word, nu in rhs_terms), 'y')
            report.checked += 1
            if lhs != rhs:
                report.fail({
                    'lambda': list(lam), 'w': list(w.word), 'i': i, 'mu': list(mu),
                    'head_endpoint': list(endpoint(string[0])),
                    'lhs': gr_to_json(lhs), 'rhs': gr_to_json(rhs),
                })
                return report
    return report


def schubert_step(weyl: WeylGroup, j: int, v: WeylElement) -> WeylElement:
    """T_j on the symbol [O_v]: [O_{v s_j}] if l(v s_j) > l(v), else [O_v]"""
    longer = weyl.right_multiply_simple(v, j)
    return longer if longer.length > v.length else v


def schubert_class(weyl: WeylGroup, word: Sequence[int]) -> WeylElement:
    """T_{i_1} ... T_{i_p} [O_1], last letter first"""
    v = weyl.identity
    for j in reversed(tuple(word)):
        v = schubert_step(weyl, j, v)
    return v


def expand_via_operators(weyl: WeylGroup, lam: Weight, w: WeylElement) -> Expansion:
    """Apply the operator identity to [O_1]: Y^mu [O_1] = x^mu [O_1], then T_{v^{-1}} [O_1] = [O_v]"""
    lam = tuple(lam)
    buckets: Dict[WeylElement, Counter] = defaultdict(Counter)
    for word, mu in theorem_terms(weyl, lam, w):
        buckets[schubert_class(weyl, word)][mu] += 1
    terms = {v: GroupRingElt.from_mapping(counts, 'x') for v, counts in buckets.items()}
    return Expansion(weyl.rs.name, lam, w, _sorted_terms(terms))


def expansion_to_json(expansion: Expansion) -> Dict:
    return {
        'root_system': expansion.root_system,
        'lambda': list(expansion.lam),
        'w': list(expansion.w.word),
        'terms': [{'v': list(v.word), 'coeff': gr_to_json(c)} for v, c in expansion.terms],
    }


def expansion_from_json(weyl: WeylGroup, data: Mapping) -> Expansion:
    if data.get('root_system') != weyl.rs.name:
        raise ValueError(f"Expansion is for {data.get('root_system')}, not {weyl.rs.name}")
    terms = {weyl.element(item['v']): gr_from_json(item['coeff'], 'x') for item in data['terms']}
    return Expansion(
        weyl.rs.name,
        tuple(int(x) for x in data['lambda']),
        weyl.element(data['w']),
        _sorted_terms(terms),
    )


def expansion_to_tsv(expansion: Expansion) -> str:
    lines = ['v\tmu\tc']
    for v, coeff in expansion.terms:
        for mu, c in coeff.terms:
            lines.append(f"{v.label}\t{','.join(map(str, mu))}\t{c}")
    return '\n'.join(lines) + '\n'


# Example usage
if __name__ == "__main__":
    group = weyl_group(build_root_system('A', 2))
    result = expand(group, (1, 0), group.element((1, 2)))
    for v, coeff in result.terms:
        print(f"[O_{v.label}] * {coeff}")

"""
Individual verification checks.

Each check recomputes the same quantity along independent routes and reports every
number it compared, so a failing report always shows which equality broke. All
comparisons are exact.
"""

import logging
from datetime import datetime
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, field_serializer
from sympy import binomial

from src.representation.algebra_models import (
    c2_gl_decomposition,
    c2_graded_dims,
    isotypic_dim,
    so_even_branching,
    so_quotient_decomposition,
    sp_branching,
    zhu_decomposition,
    zhu_dimension,
)
from src.representation.character_oracle import (
    restrict_big_to_small_sp,
    restrict_gl_to_sp,
    restrict_to_pair,
    so_exterior_identity_check,
    tensor_decompose,
)
from src.representation.errors import InternalInconsistencyError, RankValidityError
from src.representation.folding import restrict_gl_to_sp_kt
from src.representation.partition_core import Isotypic, partitions_up_to
from src.representation.root_systems import DominantWeight, RootSystem, weyl_dim

logger = logging.getLogger(__name__)

BRANCH_CASES = ('sp', 'so-even', 'so-even-dual')


class VerificationReport(BaseModel):
    """Outcome of one check; quantities serialize as decimal strings"""
    model_config = ConfigDict(frozen=True)

    check_id: str
    inputs: Dict[str, Any]
    quantities: Dict[str, int] = Field(default_factory=dict)
    passed: bool
    elapsed: float = 0.0
    details: List[str] = Field(default_factory=list)

    @field_serializer('quantities')
    def _decimal_strings(self, quantities: Dict[str, int]) -> Dict[str, str]:
        return {name: str(value) for name, value in sorted(quantities.items())}

    def as_record(self) -> Dict[str, Any]:
        """Stable JSON record: timings are left out so repeated runs are byte-identical"""
        record = {'check': self.check_id}
        record.update(self.inputs)
        record['quantities'] = self.model_dump(mode='json')['quantities']
        record['passed'] = self.passed
        if self.details:
            record['details'] = list(self.details)
        return record

    def sort_key(self):
        # inputs keep their declaration order (case, family, m, k, ...)
        return (self.check_id, tuple(self.inputs.items()))


def _finish(check_id: str, inputs: Dict[str, Any], quantities: Dict[str, int], passed: bool,
            start: datetime, details: List[str] = None) -> VerificationReport:
    report = VerificationReport(
        check_id=check_id,
        inputs=inputs,
        quantities=quantities,
        passed=passed,
        elapsed=(datetime.now() - start).total_seconds(),
        details=details or [],
    )
    if passed:
        logger.debug(f"✅ {check_id} {inputs}")
    else:
        logger.warning(f"❌ {check_id} {inputs}: {report.model_dump(mode='json')['quantities']}")
    return report


def _highest_weight_multiple(family: str, rank: int, index: int, k: int) -> DominantWeight:
    """k·ω_index of the given algebra"""
    return DominantWeight.fundamental(RootSystem(family, rank), index, k)


def _branch_target(case: str, m: int, k: int):
    """(branching formula, doubled-rank highest weight) for a branching case"""
    if case == 'sp':
        return sp_branching(m, k), _highest_weight_multiple('C', 2 * m, 2 * m, k)
    if case == 'so-even':
        return so_even_branching(m, k, dual_form=False), _highest_weight_multiple('D', 2 * m, 2 * m, k)
    if case == 'so-even-dual':
        return so_even_branching(m, k, dual_form=True), _highest_weight_multiple('D', 2 * m, 2 * m - 1, k)
    raise RankValidityError(f"unknown branching case {case!r}; expected one of {', '.join(BRANCH_CASES)}")


def verify_conjecture_c(m: int, k: int) -> VerificationReport:
    """Zhu dimension = graded C₂ total = Weyl dimension of V(kω_2m) for sp_4m"""
    start = datetime.now()
    quantities = {
        'zhu_dim': zhu_dimension(RootSystem('C', m), k),
        'c2_graded_total': c2_graded_dims(m, k).total_dim,
        'c2_weyl': weyl_dim(_highest_weight_multiple('C', 2 * m, 2 * m, k)),
    }
    passed = len(set(quantities.values())) == 1
    return _finish('conjecture-c', {'m': m, 'k': k}, quantities, passed, start)


def verify_branching_dims(case: str, m: int, k: int) -> VerificationReport:
    start = datetime.now()
    formula, top = _branch_target(case, m, k)
    quantities = {'branching_sum': isotypic_dim(formula), 'weyl_dim': weyl_dim(top)}
    passed = quantities['branching_sum'] == quantities['weyl_dim']
    return _finish('branch-dims', {'case': case, 'm': m, 'k': k}, quantities, passed, start)


def verify_kt_against_oracle(m: int, max_size: int) -> VerificationReport:
    """Combinatorial restriction rule against torus specialization, every λ with ℓ ≤ 2m and |λ| ≤ max_size"""
    start = datetime.now()
    checked, mismatches = 0, []
    for lam in partitions_up_to(max_size, max_length=2 * m):
        checked += 1
        try:
            combinatorial = restrict_gl_to_sp_kt(m, lam)
        except InternalInconsistencyError as e:
            mismatches.append(f"{lam}: {e}")
            continue
        oracle = restrict_gl_to_sp(m, lam)
        if combinatorial != oracle:
            mismatches.append(f"{lam}: rule {combinatorial!r} vs oracle {oracle!r}")
    quantities = {'partitions_checked': checked, 'mismatches': len(mismatches)}
    return _finish('kt-oracle', {'m': m, 'max_size': max_size}, quantities, not mismatches, start, mismatches)


def verify_positivity_and_laws(m: int, k: int) -> VerificationReport:
    """Degree-0 and degree-1 laws, degree support, and nonnegative multiplicities"""
    start = datetime.now()
    rs = RootSystem('C', m)
    details = []
    top_degree = 2 * m * k
    out_of_range = [s for s in c2_gl_decomposition(m, k) if not 0 <= s.degree <= top_degree]
    if out_of_range:
        details.append(f"degrees outside 0..{top_degree}: {sorted({s.degree for s in out_of_range})}")
    graded = c2_graded_dims(m, k)
    for j, component in sorted(graded.components.items()):
        negative = [mult for _, mult in component.items() if mult < 1]
        if negative:
            details.append(f"degree {j} carries nonpositive multiplicities {negative}")
    if graded.components[0] != Isotypic({DominantWeight.zero(rs): 1}):
        details.append(f"degree 0 is {graded.components[0]!r}, expected the trivial module")
    quantities = {'a0_dim': isotypic_dim(graded.components[0]), 'total_dim': graded.total_dim}
    if k >= 1:
        adjoint = DominantWeight.fundamental(rs, 1, 2)
        quantities['a1_dim'] = isotypic_dim(graded.components[1])
        quantities['adjoint_dim'] = 2 * m * m + m
        if graded.components[1] != Isotypic({adjoint: 1}):
            details.append(f"degree 1 is {graded.components[1]!r}, expected the adjoint module")
    quantities['palindromic'] = int(graded.palindromic)
    return _finish('laws', {'m': m, 'k': k}, quantities, not details, start, details)


def verify_pair_oracle(case: str, m: int, k: int) -> VerificationReport:
    """Branching formula against the oracle restriction to the block subalgebra"""
    start = datetime.now()
    formula, top = _branch_target(case, m, k)
    family = 'C' if case == 'sp' else 'D'
    oracle = restrict_to_pair(family, m, top)
    quantities = {
        'formula_dim': isotypic_dim(formula),
        'oracle_dim': isotypic_dim(oracle),
        'formula_summands': len(formula),
        'oracle_summands': len(oracle),
    }
    details = [] if formula == oracle else [f"formula {formula!r} vs oracle {oracle!r}"]
    return _finish('pair-oracle', {'case': case, 'm': m, 'k': k}, quantities, not details, start, details)


def verify_levi_diagonal(m: int, k: int) -> VerificationReport:
    """Levi-embedded restriction of V(kω_2m) equals Σ V(λ) ⊗ V(λ) restricted to the diagonal"""
    start = datetime.now()
    levi = restrict_big_to_small_sp(m, _highest_weight_multiple('C', 2 * m, 2 * m, k))
    diagonal = Isotypic()
    for (left, right), mult in sp_branching(m, k).items():
        diagonal = diagonal + tensor_decompose(left, right).scaled(mult)
    quantities = {'levi_dim': isotypic_dim(levi), 'diagonal_dim': isotypic_dim(diagonal), 'summands': len(levi)}
    details = [] if levi == diagonal else [f"levi {levi!r} vs diagonal {diagonal!r}"]
    return _finish('levi-diagonal', {'m': m, 'k': k}, quantities, not details, start, details)


def verify_orthogonal_quotient(family: str, m: int, k: int) -> VerificationReport:
    """Quotient and Zhu dimensions side by side; the quotient must sit inside the Zhu index set"""
    start = datetime.now()
    rs = RootSystem(family, m)
    quotient = so_quotient_decomposition(rs, k)
    zhu = zhu_decomposition(rs, k)
    quantities = {'quotient_dim': isotypic_dim(quotient), 'zhu_dim': isotypic_dim(zhu)}
    details = [f"{pair[0]} ⊗ {pair[1]} is not a Zhu summand" for pair in quotient.keys() if pair not in zhu]
    if quantities['quotient_dim'] > quantities['zhu_dim']:
        details.append("quotient dimension exceeds the Zhu dimension")
    return _finish('quotient', {'family': rs.family, 'm': m, 'k': k}, quantities, not details, start, details)


def verify_exterior_identity(m: int) -> VerificationReport:
    """Λ^2m ℂ^4m = V(2ω_2m) ⊕ V(2ω_2m-1) for so_4m, by dimension and by character"""
    start = datetime.now()
    if m < 2:
        raise RankValidityError(f"the exterior identity needs m ≥ 2 (got {m})")
    quantities = {
        'exterior_dim': int(binomial(4 * m, 2 * m)),
        'first_dim': weyl_dim(_highest_weight_multiple('D', 2 * m, 2 * m, 2)),
        'second_dim': weyl_dim(_highest_weight_multiple('D', 2 * m, 2 * m - 1, 2)),
    }
    details = []
    if quantities['exterior_dim'] != quantities['first_dim'] + quantities['second_dim']:
        details.append("dimensions do not add up")
    elif not so_exterior_identity_check(m):
        details.append("characters differ")
    return _finish('exterior', {'m': m}, quantities, not details, start, details)

"""
Verification suite orchestrator.

Plans the checks of one or more suites over an (m, k) grid, refuses anything outside
the suite envelopes, runs the checks in-process or on a worker pool, and merges the
reports in a deterministic order followed by cross-report consistency checks.
"""

import inspect
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from datetime import datetime
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from tqdm import tqdm

from config.settings import SUITE_CONFIG
from src.representation.errors import RepresentationError, SuiteEnvelopeError
from src.representation.root_systems import RootSystem
from src.verification.verify import (
    VerificationReport,
    verify_branching_dims,
    verify_conjecture_c,
    verify_exterior_identity,
    verify_kt_against_oracle,
    verify_levi_diagonal,
    verify_orthogonal_quotient,
    verify_pair_oracle,
    verify_positivity_and_laws,
)

logger = logging.getLogger(__name__)

SUITES = ('conjecture-c', 'branch-dims', 'kt-oracle', 'laws', 'pair-oracle', 'levi-diagonal', 'quotient', 'exterior')
# suites that only sweep m
M_ONLY_SUITES = ('kt-oracle', 'exterior')

# suite id each check reports under
CHECK_IDS = {
    verify_conjecture_c.__name__: 'conjecture-c',
    verify_branching_dims.__name__: 'branch-dims',
    verify_kt_against_oracle.__name__: 'kt-oracle',
    verify_positivity_and_laws.__name__: 'laws',
    verify_pair_oracle.__name__: 'pair-oracle',
    verify_levi_diagonal.__name__: 'levi-diagonal',
    verify_orthogonal_quotient.__name__: 'quotient',
    verify_exterior_identity.__name__: 'exterior',
}

Task = Tuple[Callable[..., VerificationReport], Tuple[Any, ...]]


class SuiteSummary(BaseModel):
    suites: List[str]
    reports: List[VerificationReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def failed(self) -> List[VerificationReport]:
        return [report for report in self.reports if not report.passed]

    def as_records(self) -> List[Dict[str, Any]]:
        return [report.as_record() for report in self.reports]


def _run_task(task: Task) -> VerificationReport:
    """Run one check; errors become failed reports that carry the message"""
    check, args = task
    start = datetime.now()
    try:
        return check(*args)
    except RepresentationError as e:
        check_id = CHECK_IDS.get(check.__name__, check.__name__)
        inputs = dict(zip(inspect.signature(check).parameters, args))
        logger.error(f"❌ {check_id} {inputs}: {e}")
        return VerificationReport(
            check_id=check_id,
            inputs=inputs,
            passed=False,
            elapsed=(datetime.now() - start).total_seconds(),
            details=[f"{type(e).__name__}: {e}"],
        )


class SuiteRunner:
    """Plans, runs and merges verification suites"""

    def __init__(self, parallel_workers: Optional[int] = None, show_progress: Optional[bool] = None,
                 config: Optional[Dict[str, Any]] = None):
        self.config = config or SUITE_CONFIG
        self.parallel_workers = parallel_workers or self.config['parallel_workers']
        self.show_progress = self.config['show_progress'] if show_progress is None else show_progress
        self.logger = logging.getLogger(__name__)

    # --- planning -------------------------------------------------------------

    def _envelope(self, suite: str, ms: Sequence[int], ks: Sequence[int]) -> None:
        envelope = self.config['envelopes'][suite]
        if not ms:
            raise SuiteEnvelopeError(f"suite {suite} needs an m range")
        if suite not in M_ONLY_SUITES and not ks:
            raise SuiteEnvelopeError(f"suite {suite} needs a k range")
        if min(ms) < 1 or max(ms) > envelope['max_m']:
            raise SuiteEnvelopeError(f"suite {suite} runs for 1 ≤ m ≤ {envelope['max_m']}, asked for {min(ms)}..{max(ms)}")
        if ks and suite not in M_ONLY_SUITES and (min(ks) < 0 or max(ks) > envelope['max_k']):
            raise SuiteEnvelopeError(f"suite {suite} runs for 0 ≤ k ≤ {envelope['max_k']}, asked for {min(ks)}..{max(ks)}")

    def plan(self, suite: str, ms: Sequence[int], ks: Sequence[int], family: str = 'D') -> List[Task]:
        if suite not in SUITES:
            raise SuiteEnvelopeError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
        self._envelope(suite, ms, ks)
        grid = [(m, k) for m in ms for k in ks]

        if suite == 'conjecture-c':
            return [(verify_conjecture_c, (m, k)) for m, k in grid]
        if suite == 'laws':
            return [(verify_positivity_and_laws, (m, k)) for m, k in grid]
        if suite == 'branch-dims':
            tasks = []
            for m, k in grid:
                cases = ('sp', 'so-even', 'so-even-dual') if m >= 3 else ('sp',)
                tasks.extend((verify_branching_dims, (case, m, k)) for case in cases)
            return tasks
        if suite == 'kt-oracle':
            cap = self.config['envelopes']['kt-oracle']['max_size']
            max_size = self.config['kt_oracle_max_size']
            return [(verify_kt_against_oracle, (m, min(max_size[m], cap))) for m in ms]
        if suite == 'pair-oracle':
            return self._plan_pair_oracle(grid)
        if suite == 'levi-diagonal':
            bounds = self.config['levi_diagonal_bounds']
            for m, k in grid:
                if k > bounds.get(m, -1):
                    raise SuiteEnvelopeError(f"levi-diagonal runs for k ≤ {bounds.get(m)} at m={m}, asked for k={k}")
            return [(verify_levi_diagonal, (m, k)) for m, k in grid]
        if suite == 'quotient':
            for m in ms:
                RootSystem(family.upper(), m)
            return [(verify_orthogonal_quotient, (family.upper(), m, k)) for m, k in grid]
        if min(ms) < 2:
            raise SuiteEnvelopeError(f"suite exterior runs for m ≥ 2, asked for {min(ms)}")
        return [(verify_exterior_identity, (m,)) for m in ms]

    def _plan_pair_oracle(self, grid: Iterable[Tuple[int, int]]) -> List[Task]:
        limits = self.config['pair_oracle_cases']
        tasks = []
        for m, k in grid:
            cases = []
            if m <= limits['sp']['max_m'] and k <= limits['sp']['max_k']:
                cases.append('sp')
            if 3 <= m <= limits['so']['max_m'] and k <= limits['so']['max_k']:
                cases.extend(['so-even', 'so-even-dual'])
            if not cases:
                raise SuiteEnvelopeError(f"pair-oracle has no feasible case at m={m}, k={k}")
            tasks.extend((verify_pair_oracle, (case, m, k)) for case in cases)
        return tasks

    # --- running --------------------------------------------------------------

    def _execute(self, tasks: List[Task], description: str) -> List[VerificationReport]:
        reports = []
        if self.parallel_workers <= 1:
            for task in tqdm(tasks, desc=description, disable=not self.show_progress):
                reports.append(_run_task(task))
            return reports

        with ProcessPoolExecutor(max_workers=self.parallel_workers) as executor:
            futures = [executor.submit(_run_task, task) for task in tasks]
            for future in tqdm(as_completed(futures), total=len(futures), desc=description,
                               disable=not self.show_progress):
                reports.append(future.result())
        return reports

    def cross_check(self, reports: List[VerificationReport]) -> List[VerificationReport]:
        """Shared quantities must agree between conjecture-c and branch-dims(sp) on the same (m, k)"""
        conjecture = {(r.inputs['m'], r.inputs['k']): r for r in reports if r.check_id == 'conjecture-c'}
        branch = {(r.inputs['m'], r.inputs['k']): r for r in reports
                  if r.check_id == 'branch-dims' and r.inputs.get('case') == 'sp'}
        extra = []
        for key in sorted(set(conjecture) & set(branch)):
            left, right = conjecture[key].quantities, branch[key].quantities
            quantities = {}
            for name in ('zhu_dim', 'c2_weyl'):
                if name in left:
                    quantities[name] = left[name]
            for name in ('branching_sum', 'weyl_dim'):
                if name in right:
                    quantities[name] = right[name]
            details = []
            if len(quantities) < 4:
                # an errored check upstream leaves nothing to compare
                details.append(f"missing quantities at m={key[0]}, k={key[1]}")
                passed = False
            else:
                passed = (quantities['zhu_dim'] == quantities['branching_sum']
                          and quantities['c2_weyl'] == quantities['weyl_dim'])
            extra.append(VerificationReport(check_id='consistency', inputs={'m': key[0], 'k': key[1]},
                                            quantities=quantities, passed=passed, details=details))
        return extra

    def run(self, suites: Sequence[str], ms: Sequence[int], ks: Sequence[int] = (), family: str = 'D') -> SuiteSummary:
        start = datetime.now()
        ms, ks = list(ms), list(ks)
        plans = [(suite, self.plan(suite, ms, ks, family)) for suite in suites]
        self.logger.info(f"🚀 Running {', '.join(suites)}: {sum(len(t) for _, t in plans)} checks, "
                         f"{self.parallel_workers} worker(s)")

        reports: List[VerificationReport] = []
        for suite, tasks in plans:
            reports.extend(self._execute(tasks, suite))
        reports.sort(key=VerificationReport.sort_key)
        reports.extend(self.cross_check(reports))

        summary = SuiteSummary(suites=list(suites), reports=reports)
        if summary.passed:
            self.logger.info(f"✅ {len(reports)} reports passed in {datetime.now() - start}")
        else:
            self.logger.error(f"❌ {len(summary.failed)} of {len(reports)} reports failed")
        self.logger.info(f"📊 {sum(r.elapsed for r in reports):.2f}s spent inside checks")
        return summary


def run_suite(suite: str, m_range: Sequence[int], k_range: Sequence[int] = (), parallel: int = 1,
              family: str = 'D') -> SuiteSummary:
    return SuiteRunner(parallel_workers=parallel).run([suite], m_range, k_range, family)

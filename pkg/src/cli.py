#!/usr/bin/env python3
"""
Command-line front end: decompositions, folding, LR coefficients, restrictions and verification suites.

Data goes to stdout (table, json or csv); diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure or internal error, 2 usage/validity error.
"""

import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

import click
import pandas as pd
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from config.settings import LOGGING_CONFIG, OUTPUT_CONFIG, SUITE_CONFIG
from src.representation.algebra_models import (
    c2_graded_character,
    c2_graded_dims,
    isotypic_dim,
    so_even_branching,
    so_quotient_decomposition,
    sp_branching,
    zhu_decomposition,
)
from src.representation.character_oracle import character_to_json, irreducible_character, restrict_gl_to_sp
from src.representation.errors import InternalInconsistencyError, OracleScaleExceeded, RepresentationError
from src.representation.folding import Zero, fold_sp, restrict_gl_to_sp_kt
from src.representation.partition_core import Isotypic, Partition, lr_coefficient
from src.representation.root_systems import DominantWeight, RootSystem, weyl_dim
from src.verification.run_suites import SUITES, SuiteRunner

logger = logging.getLogger(__name__)

BRANCH_CASES = ('sp', 'so-even', 'so-even-dual', 'so-quotient', 'b-quotient')
FORMAT_OPTION = click.option('--format', 'fmt', type=click.Choice(OUTPUT_CONFIG['formats']),
                             default=OUTPUT_CONFIG['default_format'], show_default=True)


def setup_logging(verbose: bool = False, quiet: bool = False):
    """Route all library logging through one RichHandler on stderr"""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else getattr(logging, LOGGING_CONFIG['level'])
    handlers = []
    if LOGGING_CONFIG['console_handler']:
        handlers.append(RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True))
    logging.basicConfig(
        level=level,
        format=LOGGING_CONFIG['format'],
        datefmt=LOGGING_CONFIG['datefmt'],
        handlers=handlers,
        force=True,
    )


class ExitCodeGroup(click.Group):
    """Maps the error hierarchy onto the exit-code contract"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (InternalInconsistencyError, OracleScaleExceeded) as e:
            logger.error(f"❌ {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(1)
        except RepresentationError as e:
            raise click.UsageError(str(e), ctx) from e


# --- parsing helpers ----------------------------------------------------------

def _parse_range(ctx, param, value: Optional[str]) -> List[int]:
    if value is None:
        return []
    try:
        if '..' in value:
            low, high = (int(piece) for piece in value.split('..', 1))
        else:
            low = high = int(value)
    except ValueError:
        raise click.BadParameter(f"expected a..b, got {value!r}")
    if low > high:
        raise click.BadParameter(f"empty range {value!r}")
    return list(range(low, high + 1))


def _parse_partition(ctx, param, value: Optional[str]) -> Optional[Partition]:
    if value is None:
        return None
    try:
        return Partition.parse(value)
    except RepresentationError as e:
        raise click.BadParameter(str(e))


# --- rendering ----------------------------------------------------------------

def _coeffs(weight: DominantWeight) -> str:
    return ','.join(str(a) for a in weight.coeffs)


def _pretty_pair(pair) -> str:
    left, right = pair
    if left.is_zero() and right.is_zero():
        return 'ℂ'
    return f"V({left})⊗V({right})"


def _weight_rows(obj: str, iso: Isotypic, j: Optional[int] = None) -> List[Dict[str, str]]:
    return [{'object': obj, 'j': '' if j is None else str(j), 'left': _coeffs(weight), 'right': '',
             'mult': str(mult), 'dim': str(mult * weyl_dim(weight))} for weight, mult in iso.items()]


def _pair_rows(obj: str, iso: Isotypic) -> List[Dict[str, str]]:
    return [{'object': obj, 'j': '', 'left': _coeffs(left), 'right': _coeffs(right),
             'mult': str(mult), 'dim': str(mult * weyl_dim(left) * weyl_dim(right))}
            for (left, right), mult in iso.items()]


def _weight_summands(iso: Isotypic) -> List[Dict[str, Any]]:
    return [{'weight': list(weight.coeffs), 'mult': mult, 'dim': str(mult * weyl_dim(weight))}
            for weight, mult in iso.items()]


def _pair_summands(iso: Isotypic) -> List[Dict[str, Any]]:
    return [{'left': list(left.coeffs), 'right': list(right.coeffs), 'mult': mult,
             'dim': str(mult * weyl_dim(left) * weyl_dim(right))} for (left, right), mult in iso.items()]


def emit(fmt: str, payload: Dict[str, Any], rows: List[Dict[str, str]],
         columns: Sequence[str] = OUTPUT_CONFIG['csv_columns'], title: str = '', caption: str = ''):
    if fmt == 'json':
        click.echo(json.dumps(payload, indent=OUTPUT_CONFIG['json_indent'], ensure_ascii=False))
    elif fmt == 'csv':
        click.echo(pd.DataFrame(rows, columns=list(columns), dtype=str).to_csv(index=False), nl=False)
    else:
        table = Table(title=title or None, caption=caption or None)
        for column in columns:
            table.add_column(column, justify='right' if column in ('mult', 'dim', 'j') else 'left')
        for row in rows:
            table.add_row(*(row.get(column, '') for column in columns))
        Console(file=sys.stdout, width=120).print(table)


# --- commands -----------------------------------------------------------------

@click.group(cls=ExitCodeGroup)
@click.option('-v', '--verbose', is_flag=True, help='Debug logging on stderr')
@click.option('-q', '--quiet', is_flag=True, help='Warnings and errors only')
def cli(verbose: bool, quiet: bool):
    """Zhu algebras, C₂-algebras and branching rules in exact arithmetic"""
    setup_logging(verbose, quiet)


@cli.command()
@click.option('--family', type=click.Choice(['A', 'B', 'C', 'D'], case_sensitive=False), required=True)
@click.option('--rank', type=int, required=True)
@click.option('--level', 'k', type=int, required=True)
@FORMAT_OPTION
def zhu(family: str, rank: int, k: int, fmt: str):
    """Zhu algebra A(g; k) as ⊕ V(λ) ⊗ V(λ)*"""
    rs = RootSystem(family, rank)
    iso = zhu_decomposition(rs, k)
    total = isotypic_dim(iso)
    payload = {'object': 'zhu', 'family': rs.family, 'rank': rank, 'k': k,
               'summands': _pair_summands(iso), 'total_dim': str(total)}
    emit(fmt, payload, _pair_rows('zhu', iso), title=f"Zhu algebra {rs}, level {k}",
         caption=f"{len(iso)} summands, total dim {total}")


@cli.command()
@click.option('--m', 'm', type=int, required=True)
@click.option('--k', 'k', type=int, required=True)
@click.option('--degree', 'j', type=int, default=None, help='Single degree j (default: all)')
@FORMAT_OPTION
def c2(m: int, k: int, j: Optional[int], fmt: str):
    """Graded C₂-algebra of type C as Sp_2m modules"""
    if j is None:
        graded = c2_graded_dims(m, k)
        components = graded.components
    else:
        components = {j: c2_graded_character(m, k, j)}
    degrees, rows = [], []
    for degree, iso in sorted(components.items()):
        degrees.append({'j': degree, 'summands': _weight_summands(iso), 'dim': str(isotypic_dim(iso))})
        rows.extend(_weight_rows('c2-graded', iso, degree))
    total = sum(isotypic_dim(iso) for iso in components.values())
    payload = {'object': 'c2-graded', 'family': 'C', 'm': m, 'k': k, 'degrees': degrees, 'total_dim': str(total)}
    dims = [d['dim'] for d in degrees]
    if j is None:
        payload['palindromic'] = graded.palindromic
    emit(fmt, payload, rows, title=f"C₂-algebra, sp_{2 * m}, level {k}",
         caption=f"dims [{', '.join(dims)}], total {total}")


@cli.command()
@click.option('--case', type=click.Choice(BRANCH_CASES), required=True)
@click.option('--m', 'm', type=int, required=True)
@click.option('--k', 'k', type=int, required=True)
@FORMAT_OPTION
def branch(case: str, m: int, k: int, fmt: str):
    """Branching to the block subalgebra, or the orthogonal quotient decomposition"""
    if case == 'sp':
        iso = sp_branching(m, k)
    elif case in ('so-even', 'so-even-dual'):
        iso = so_even_branching(m, k, dual_form=case == 'so-even-dual')
    else:
        iso = so_quotient_decomposition(RootSystem('D' if case == 'so-quotient' else 'B', m), k)
    total = isotypic_dim(iso)
    payload = {'object': 'branch', 'case': case, 'm': m, 'k': k,
               'summands': _pair_summands(iso), 'total_dim': str(total)}
    pretty = ' ⊕ '.join(_pretty_pair(pair) for pair in iso.keys())
    emit(fmt, payload, _pair_rows('branch', iso), title=f"{case}, m={m}, k={k}",
         caption=f"{pretty}  (dim {total})")


@cli.command()
@click.option('--m', 'm', type=int, required=True)
@click.option('--partition', 'lam', callback=_parse_partition, required=True)
@FORMAT_OPTION
def fold(m: int, lam: Partition, fmt: str):
    """Fold a partition to at most m rows for Sp_2m"""
    result = fold_sp(m, lam)
    if isinstance(result, Zero):
        payload = {'object': 'fold', 'm': m, 'partition': lam.to_json(), 'result': 'zero'}
        row = {'partition': str(lam), 'result': 'zero', 'folded': '', 'sign': '0'}
    else:
        payload = {'object': 'fold', 'm': m, 'partition': lam.to_json(), 'result': 'signed',
                   'folded': result.folded.to_json(), 'sign': result.sign}
        row = {'partition': str(lam), 'result': 'signed', 'folded': str(result.folded), 'sign': str(result.sign)}
    emit(fmt, payload, [row], columns=('partition', 'result', 'folded', 'sign'), title=f"fold for Sp_{2 * m}")


@cli.command()
@click.option('--lambda', 'lam', callback=_parse_partition, required=True)
@click.option('--mu', callback=_parse_partition, required=True)
@click.option('--nu', callback=_parse_partition, required=True)
@FORMAT_OPTION
def lr(lam: Partition, mu: Partition, nu: Partition, fmt: str):
    """Littlewood-Richardson coefficient N^λ_{μ,ν}"""
    value = lr_coefficient(lam, mu, nu)
    payload = {'object': 'lr', 'lambda': lam.to_json(), 'mu': mu.to_json(), 'nu': nu.to_json(),
               'coefficient': str(value)}
    row = {'lambda': str(lam), 'mu': str(mu), 'nu': str(nu), 'coefficient': str(value)}
    emit(fmt, payload, [row], columns=('lambda', 'mu', 'nu', 'coefficient'), title='LR coefficient')


@cli.command()
@click.option('--m', 'm', type=int, required=True)
@click.option('--partition', 'lam', callback=_parse_partition, required=True)
@click.option('--method', type=click.Choice(['rule', 'oracle']), default='rule', show_default=True)
@FORMAT_OPTION
def restrict(m: int, lam: Partition, method: str, fmt: str):
    """Restrict the GL_2m module indexed by a partition to Sp_2m"""
    iso = restrict_gl_to_sp_kt(m, lam) if method == 'rule' else restrict_gl_to_sp(m, lam)
    total = isotypic_dim(iso)
    payload = {'object': 'restrict', 'm': m, 'partition': lam.to_json(), 'method': method,
               'summands': _weight_summands(iso), 'total_dim': str(total)}
    emit(fmt, payload, _weight_rows('restrict', iso), title=f"GL_{2 * m} {lam} to Sp_{2 * m}",
         caption=f"{len(iso)} summands, dim {total}")


@cli.command()
@click.option('--family', type=click.Choice(['A', 'B', 'C', 'D'], case_sensitive=False), required=True)
@click.option('--rank', type=int, required=True)
@click.option('--weight', required=True, help='Fundamental-weight coefficients, e.g. 0,1')
def character(family: str, rank: int, weight: str):
    """Dump the oracle character of V(λ) as JSON"""
    rs = RootSystem(family, rank)
    lam = DominantWeight.parse(rs, weight)
    chi = irreducible_character(lam)
    payload = {'object': 'character', 'weight': lam.to_json(), 'scale': chi.scale,
               'dim': str(chi.dimension), 'terms': character_to_json(chi)}
    click.echo(json.dumps(payload, indent=OUTPUT_CONFIG['json_indent'], ensure_ascii=False))


@cli.command()
@click.option('--suite', 'suites', type=click.Choice(SUITES), multiple=True, required=True)
@click.option('--m-range', 'ms', callback=_parse_range, required=True, help='a..b')
@click.option('--k-range', 'ks', callback=_parse_range, default=None, help='a..b')
@click.option('--family', type=click.Choice(['B', 'D'], case_sensitive=False), default='D', show_default=True,
              help='Family for the quotient suite')
@click.option('--parallel', type=click.IntRange(min=1), default=SUITE_CONFIG['parallel_workers'], show_default=True)
@click.option('--progress/--no-progress', default=SUITE_CONFIG['show_progress'])
@FORMAT_OPTION
@click.pass_context
def verify(ctx, suites, ms, ks, family: str, parallel: int, progress: bool, fmt: str):
    """Run verification suites; exit 1 if any report fails"""
    runner = SuiteRunner(parallel_workers=parallel, show_progress=progress)
    summary = runner.run(list(suites), ms, ks, family.upper())
    records = summary.as_records()
    payload = {'object': 'verify', 'suites': list(suites), 'reports': records, 'passed': summary.passed}
    rows = [{'check': r['check'],
             'inputs': ' '.join(f"{key}={value}" for key, value in r.items()
                                if key not in ('check', 'quantities', 'passed', 'details')),
             'quantities': ' '.join(f"{key}={value}" for key, value in r['quantities'].items()),
             'passed': 'yes' if r['passed'] else 'NO'} for r in records]
    emit(fmt, payload, rows, columns=('check', 'inputs', 'quantities', 'passed'),
         title=f"verification: {', '.join(suites)}",
         caption=f"{len(records) - len(summary.failed)}/{len(records)} passed")
    for report in summary.failed:
        for line in report.details:
            click.echo(f"{report.check_id}: {line}", err=True)
    if not summary.passed:
        ctx.exit(1)


def main():
    cli(prog_name='zhu-c2')


if __name__ == '__main__':
    sys.exit(main())

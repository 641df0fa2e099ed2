from __future__ import annotations

import pkgutil
import sys
from pathlib import Path
from pkgutil import get_data
from typing import Any, Dict, List, Optional, Sequence, cast

import click
import yaml

import asymlab
from asymlab.exceptions import AsymlabError

KINDS = ('latin', 'sts', 'of')
FORMAT_CHOICE = click.Choice(['json', 'csv', 'table'])


def load_config(path: Optional[str]) -> Dict[str, Any]:
    """Packaged defaults, overridden section by section by the user's
    file (``-`` reads stdin)."""
    data = get_data('asymlab', 'config.yml')
    if not data:
        raise Exception('Missing configuration data')
    config: Dict[str, Any] = yaml.full_load(data.decode('utf-8'))
    if path is None:
        return config

    if path == '-':
        with click.get_text_stream('stdin', 'utf-8') as f:
            config_str = f.read(-1)
    else:
        config_str = Path(path).read_text('utf-8')
    user = yaml.full_load(config_str) or {}
    for section, values in user.items():
        if isinstance(values, dict) and isinstance(config.get(section), dict):
            config[section].update(values)
        else:
            config[section] = values
    return config


def setup_logging(verbose: bool) -> None:
    from loguru import logger

    from asymlab.config import LOG_FILE, LOG_FORMAT, LOG_LEVEL

    logger.remove()
    logger.add(
        sys.stderr, level='DEBUG' if verbose else LOG_LEVEL,
        format=LOG_FORMAT,
    )
    if LOG_FILE:
        logger.add(LOG_FILE, level='DEBUG', format=LOG_FORMAT)


class AsymlabGroup(click.Group):
    """Reports domain errors as one line on stderr and exits with 1."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except AsymlabError as e:
            click.echo(e.one_line(), err=True)
            ctx.exit(1)


def echo(text: str) -> None:
    click.echo(text, nl=not text.endswith('\n'))


def emit(doc: Dict[str, Any]) -> None:
    """One compact JSON line with the keys in the order they were set."""
    from asymlab.structures.io import dumps_json

    click.echo(dumps_json(doc, sort_keys=False))


def _jobs(jobs: Optional[int]) -> int:
    from asymlab.config import JOBS
    return JOBS if jobs is None else jobs


def _text_argument(name: str) -> Any:
    return click.argument(
        name,
        required=True,
        nargs=1,
        type=click.Path(
            exists=True,
            dir_okay=False,
            resolve_path=True,
            allow_dash=True
        )
    )


def _read(path: str) -> str:
    if path == '-':
        with click.get_text_stream('stdin', 'utf-8') as f:
            return f.read(-1)
    return Path(path).read_text('utf-8')


@click.group(cls=AsymlabGroup)
@click.option(
    '--config', 'config_path',
    default=None,
    type=click.Path(
        exists=True,
        dir_okay=False,
        resolve_path=True,
        allow_dash=True
    ),
    help='configuration file overriding the packaged defaults'
)
@click.option(
    '-v', '--verbose',
    default=False, is_flag=True, help='log debug messages to stderr'
)
def cli(config_path: Optional[str], verbose: bool) -> None:
    """Counting, automorphism and bound checks for Latin squares, Steiner
    triple systems and 1-factorizations."""
    asymlab.install_config(load_config(config_path))
    setup_logging(verbose)


@cli.command('enumerate')
@click.option('--kind', required=True, type=click.Choice(KINDS))
@click.option('--n', 'n', required=True, type=int, help='order')
@click.option('--count-only', is_flag=True, default=False)
@click.option(
    '--reduced-only', is_flag=True, default=False,
    help='Latin squares with natural first row and column only'
)
@click.option('--jobs', type=int, default=None, help='worker processes')
@click.option('--budget', type=float, default=None, help='seconds')
@click.option('--cache-dir', type=click.Path(file_okay=False), default=None)
@click.option('--no-cache', is_flag=True, default=False)
def enumerate_cmd(
    kind: str, n: int, count_only: bool, reduced_only: bool,
    jobs: Optional[int], budget: Optional[float], cache_dir: Optional[str],
    no_cache: bool,
) -> None:
    """Count labeled structures, or stream them as JSON lines followed by
    the count."""
    from asymlab.enumeration import (enumerate_latin,
                                     enumerate_one_factorizations,
                                     enumerate_sts)
    from asymlab.parallel import ResultCache
    from asymlab.structures.io import dumps_structure

    if reduced_only and kind != 'latin':
        raise click.UsageError('--reduced-only applies to Latin squares')
    cache = ResultCache.from_options(cache_dir, no_cache)

    def visit(structure: Any) -> None:
        click.echo(dumps_structure(structure))

    options: Dict[str, Any] = dict(
        visitor=None if count_only else visit,
        count_only=count_only,
        jobs=_jobs(jobs),
        budget=budget,
        cache=cache,
    )
    if kind == 'latin':
        count = enumerate_latin(n, reduced_only=reduced_only, **options)
    elif kind == 'sts':
        count = enumerate_sts(n, **options)
    else:
        count = enumerate_one_factorizations(n, **options)

    doc: Dict[str, Any] = {'kind': kind, 'n': n, 'count': str(count)}
    if reduced_only:
        doc['reduced'] = True
    emit(doc)


@cli.command()
@_text_argument('structure')
def aut(structure: str) -> None:
    """Automorphism group order and generators of a structure.

    STRUCTURE - JSON structure document or a Latin square as text
    """
    from asymlab.permgroup import aut_order_latin, aut_order_of, aut_order_sts
    from asymlab.structures import LatinSquare, Sts
    from asymlab.structures.io import loads_structure

    x = loads_structure(_read(structure))
    generators: List[Any]
    if isinstance(x, LatinSquare):
        report: Any = aut_order_latin(x)
        generators = [g.to_dict() for g in report.generators]
        kind = 'latin'
    else:
        report = aut_order_sts(x) if isinstance(x, Sts) else aut_order_of(x)
        generators = [list(g.image) for g in report.generators]
        kind = 'sts' if isinstance(x, Sts) else 'of'
    emit({
        'kind': kind,
        'n': x.n,
        'order': str(report.order),
        'generators': generators,
    })


@cli.command()
@_text_argument('structure')
@_text_argument('permutation')
@click.option('--format', 'fmt', type=FORMAT_CHOICE, default='json')
def fixed(structure: str, permutation: str, fmt: str) -> None:
    """Fixed-structure statistics of an automorphism, with every bound
    along the way checked.

    STRUCTURE - structure file; PERMUTATION - point images separated by
    whitespace, or a JSON triple permutation for a Latin square
    """
    from asymlab.asymmetry import ep_fix_stats, latin_fix_stats, sts_fix_stats
    from asymlab.permgroup import TriplePermutation
    from asymlab.report_writer import write_report
    from asymlab.structures import LatinSquare, Sts
    from asymlab.structures.io import loads_permutation, loads_structure

    x = loads_structure(_read(structure))
    perm_text = _read(permutation)
    if isinstance(x, LatinSquare):
        stats = latin_fix_stats(TriplePermutation.loads(perm_text), x)
    elif isinstance(x, Sts):
        stats = sts_fix_stats(loads_permutation(perm_text), x)
    else:
        stats = ep_fix_stats(loads_permutation(perm_text), x)
    echo(write_report(stats, fmt))


@cli.command()
@_text_argument('matrix')
def permanent(matrix: str) -> None:
    """Exact permanent of a 0/1 matrix, with the (k/e)^n bound when the
    matrix is regular.

    MATRIX - one line of 0/1 characters per row
    """
    from asymlab.permanent import bang_friedland_lower, permanent_exact
    from asymlab.report_writer import log_text
    from asymlab.structures.io import loads_matrix

    m = loads_matrix(_read(matrix))
    per = permanent_exact(m)
    k = m.regular_sum()
    doc: Dict[str, Any] = {
        'n': m.n, 'permanent': str(per), 'regular_sum': k,
    }
    if k:
        doc['log_lower_bound'] = log_text(bang_friedland_lower(m.n, k))
    emit(doc)


@cli.command()
@click.option(
    '--kind', required=True,
    help='latin, sts or ep for both bounds, or the name of one bound'
)
@click.option('--n', 'n', required=True, type=int)
@click.option('--eps', type=float, default=None)
@click.option('--r', 'r', type=int, default=None, help='count for r-bounds')
@click.option('--k', 'k', type=int, default=None, help='valency')
def bounds(
    kind: str, n: int, eps: Optional[float], r: Optional[int],
    k: Optional[int]
) -> None:
    """Natural logs of the bound formulas at order n."""
    from asymlab.asymmetry import bound_eval
    from asymlab.config import DEFAULT_EPS
    from asymlab.report_writer import log_text

    if kind in ('latin', 'sts', 'ep'):
        eps = DEFAULT_EPS if eps is None else eps
        doc: Dict[str, Any] = {
            'kind': kind,
            'n': n,
            'lower': log_text(bound_eval(f'{kind}_lower', n, eps)),
            'aut_upper': log_text(bound_eval(f'{kind}_aut_upper', n, eps)),
        }
        if kind != 'latin':
            doc['eps'] = eps
    else:
        doc = {
            'kind': kind,
            'n': n,
            'value': log_text(bound_eval(kind, n, eps, r, k)),
        }
    emit(doc)


@cli.command()
@click.option(
    '--kind', required=True,
    type=click.Choice(['latin', 'sts', 'ep', 'latin_eps', 'ep_fpf'])
)
@click.option('--eps', type=float, default=None)
def crossover(kind: str, eps: Optional[float]) -> None:
    """Least order from which the bound comparison holds."""
    from asymlab.asymmetry import bound_gap, crossover_order
    from asymlab.config import CROSSOVER_WINDOW, DEFAULT_EPS
    from asymlab.permanent.log_scalar import ctx

    if kind in ('sts', 'ep', 'latin_eps') and eps is None:
        eps = DEFAULT_EPS
    n0 = crossover_order(kind, eps)
    doc: Dict[str, Any] = {
        'kind': kind,
        'n0': n0,
        'window': CROSSOVER_WINDOW,
        'log_gap': ctx.nstr(bound_gap(kind, n0, eps), 20),
    }
    if eps is not None:
        doc['eps'] = eps
    emit(doc)


@cli.command()
@click.option('--kind', required=True, type=click.Choice(KINDS))
@click.option('--n', 'n', required=True, type=int)
@click.option('--jobs', type=int, default=None, help='worker processes')
@click.option('--format', 'fmt', type=FORMAT_CHOICE, default='json')
def report(kind: str, n: int, jobs: Optional[int], fmt: str) -> None:
    """Proportion of labeled structures with a nontrivial automorphism."""
    from asymlab.asymmetry import asymmetry_report
    from asymlab.report_writer import write_report

    echo(write_report(asymmetry_report(kind, n, _jobs(jobs)), fmt))


@cli.command()
@click.argument(
    'source',
    required=False,
    nargs=1,
    type=click.Path(
        exists=True,
        dir_okay=False,
        resolve_path=True,
        allow_dash=True
    )
)
@click.option(
    '--classical', type=click.Choice(['triangular', 'square_lattice']),
    default=None, help='build T(n) or L2(n) instead of reading SOURCE'
)
@click.option('--multipartite', type=int, default=None, help='parts')
@click.option('--size', type=int, default=3, show_default=True)
@click.option('--n', 'n', type=int, default=None)
@click.option(
    '--compare', is_flag=True, default=False,
    help='compare graph and structure automorphism group orders'
)
@click.option(
    '--family', is_flag=True, default=False,
    help='check the least eigenvalues of the classical families'
)
@click.option('--format', 'fmt', type=FORMAT_CHOICE, default='json')
def srg(
    source: Optional[str], classical: Optional[str],
    multipartite: Optional[int], size: int, n: Optional[int],
    compare: bool, family: bool, fmt: str,
) -> None:
    """Strong regularity and least eigenvalue of a graph.

    SOURCE - graph JSON {"v":N,"edges":[...]}, or a Latin square or STS
    whose Latin square graph or Steiner graph is taken
    """
    from asymlab.report_writer import write_report
    from asymlab.srg import (aut_comparison, checked_least_eigenvalue,
                             classical_graph, complete_multipartite,
                             family_check, latin_square_graph, srg_params,
                             steiner_graph)
    from asymlab.structures import LatinSquare, Sts
    from asymlab.structures.io import loads_graph, loads_structure

    if family:
        echo(write_report(family_check(), fmt))
        return

    structure: Any = None
    if classical is not None:
        if n is None:
            raise click.UsageError('--classical needs --n')
        graph = classical_graph(classical, n)
    elif multipartite is not None:
        graph = complete_multipartite(multipartite, size)
    elif source is not None:
        text = _read(source)
        if '"edges"' in text:
            graph = loads_graph(text)
        else:
            structure = loads_structure(text)
            if isinstance(structure, LatinSquare):
                graph = latin_square_graph(structure)
            elif isinstance(structure, Sts):
                graph = steiner_graph(structure)
            else:
                raise click.UsageError('1-factorizations have no SRG here')
    else:
        raise click.UsageError('give SOURCE, --classical or --multipartite')

    params = srg_params(graph)
    if fmt != 'json':
        echo(write_report(params, fmt))
        return
    doc: Dict[str, Any] = {
        'params': params.to_dict(),
        'least_eigenvalue': round(checked_least_eigenvalue(graph, params), 9),
    }
    if compare:
        if structure is None:
            raise click.UsageError('--compare needs a structure SOURCE')
        doc['comparison'] = aut_comparison(structure, graph).to_dict()
    emit(doc)


@cli.command()
def configs() -> None:
    """Copy the default configuration file.

    config.yml - configuration file for use with `--config`
    """
    config_data = cast(bytes, pkgutil.get_data('asymlab', 'config.yml'))
    (Path('.') / 'config.yml').write_bytes(config_data)
    click.echo('Copied default configuration file.')


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code: 0 on success, 1 on
    a domain error, 2 on a usage error."""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name='asymlab',
            standalone_mode=False,
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == '__main__':
    main()

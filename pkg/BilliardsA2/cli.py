"""Command line front end: simulate, merge-events, check, predict, compare
and render."""
import functools
import io
import logging
import sys
import click
from BilliardsA2.config import RunConfig
from BilliardsA2.errors import BilliardsError, GeometryError, ParseError
from BilliardsA2.billiards.dynamics import run_seeds, assemble_runs
from BilliardsA2.billiards.dynamics import growth_profile
from BilliardsA2.billiards.invariants import check_invariants, suite_passed
from BilliardsA2.billiards.merge import list_of_modes
from BilliardsA2.billiards.step3 import extend_step3, remove_x_seeds
from BilliardsA2.billiards.step3 import list_of_strategies
from BilliardsA2.conjecture.export import export_prediction
from BilliardsA2.dataio.pkl import parse_pkl
from BilliardsA2.dataio.picture import combined_picture, collapse_triples
from BilliardsA2.dataio.heuristic import heuristic_filter
from BilliardsA2.dataio.heuristic import list_of_restrictions
from BilliardsA2.dataio.diff import diff_report
from BilliardsA2.dataio.multiset_io import dumps_points, read_points
from BilliardsA2.dataio.multiset_io import events_lines
from BilliardsA2.dataio.render import render as render_items
from BilliardsA2.dataio.render import list_of_formats as list_of_pictures


logger = logging.getLogger(__name__)

_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


class InputError(click.ClickException):
    """Malformed or incompatible input files."""

    exit_code = 2


def run_options(command):
    """Options shared by the commands that run the dynamics."""

    options = [
        click.option('--ell', type=int, required=True,
                     help='Wall spacing ell >= 3.'),
        click.option('--iterations', '-N', type=int, required=True,
                     help='Number of rounds per seed.'),
        click.option('--seed', 'seed', type=int, multiple=True,
                     help='Seed index k (repeatable).'),
        click.option('--seeds-up-to', type=int, default=0,
                     help='Use all seed indices 1..K.'),
        click.option('--legacy', is_flag=True,
                     help='Run without the merge rule.'),
        click.option('--jobs', type=int, default=1, show_default=True,
                     help='Number of worker processes.'),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _config(ell, iterations, seed, seeds_up_to, legacy, jobs, **kwargs):
    seeds = tuple(sorted(set(seed) | set(range(1, seeds_up_to + 1))))
    try:
        return RunConfig(ell=ell, seeds=seeds, iterations=iterations,
                         mode=list_of_modes[1] if legacy else list_of_modes[0],
                         jobs=jobs, **kwargs)
    except ValueError as error:
        raise click.UsageError(str(error))


def _emit(text, output):
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, 'w', encoding='utf-8', newline='\n') as stream:
        stream.write(text)
    logger.info("Wrote %s", output)


def _geometry_guard(function):
    """Turns a violated geometric assumption into exit code 1."""

    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except GeometryError as error:
            click.echo('error: {}'.format(error), err=True)
            click.get_current_context().exit(1)
    return wrapper


def _runs(config):
    return run_seeds(config.ell, config.seeds, config.iterations,
                     config.mode, config.jobs)


@click.group()
@click.option('-v', '--verbose', count=True,
              help='Log more (repeat for debug records).')
def cli(verbose):
    """Simulator and verification toolkit for the corrected billiards
    dynamics on the dominant cone of type A2."""

    if verbose:
        logging.basicConfig(level=_LEVELS[min(verbose, 2)], stream=sys.stderr,
                            format='%(levelname)s %(name)s: %(message)s',
                            force=True)


@cli.command()
@run_options
@click.option('--format', 'format', type=click.Choice(['json', 'tsv']),
              default='json', show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              default=None, help='Output file (default: stdout).')
@_geometry_guard
def simulate(format, output, **options):
    """Computes X u Y_k for the given seeds and exports the multiset."""

    config = _config(format=format, output=output, **options)
    points = assemble_runs(config.ell, _runs(config))
    _emit(dumps_points(points, config.ell, config.seeds, config.iterations,
                       config.mode, config.format), config.output)


@cli.command('merge-events')
@run_options
@click.option('--i-max', type=int, default=None,
              help='List only events whose kept label is at most this.')
@_geometry_guard
def merge_events(i_max, **options):
    """Lists the merge events of the corrected dynamics."""

    config = _config(i_max=i_max, **options)
    events = [event for run in _runs(config).values()
              for event in run.events]
    if config.i_max is not None:
        events = [event for event in events if event.label.n <= config.i_max]
    for line in events_lines(events, config.ell):
        click.echo(line)


@cli.command()
@run_options
@click.option('--growth', is_flag=True,
              help='Also print points and multiplicities per round.')
@_geometry_guard
def check(growth, **options):
    """Runs the invariant suite; exits with 1 on a violation."""

    config = _config(**options)
    runs = _runs(config)
    reports = check_invariants(runs, config.ell, config.mode)
    for report in reports:
        click.echo(report.format())
    if growth:
        for k, run in runs.items():
            profile = ' '.join('{}/{}'.format(size, top)
                               for size, top in growth_profile(run.trace))
            click.echo('growth Y_{}: {}'.format(k, profile))
    if not suite_passed(reports):
        click.get_current_context().exit(1)


@cli.command()
@run_options
@click.option('--i-max', type=int, required=True,
              help='Predict zeta_0 ... zeta_(i-max).')
@click.option('--strategy', type=click.Choice(list_of_strategies),
              default='wall-only', show_default=True)
@click.option('--heuristic', 'restriction',
              type=click.Choice(list_of_restrictions), default=None,
              help='Apply the third generation heuristic (p = 3).')
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              default=None, help='Output file (default: stdout).')
@_geometry_guard
def predict(i_max, strategy, restriction, output, **options):
    """Exports the predicted elements zeta_i for p = ell."""

    config = _config(i_max=i_max, strategy=strategy, restriction=restriction,
                     output=output, **options)
    points = assemble_runs(config.ell, _runs(config))
    extended = extend_step3(points, config.ell, config.strategy)
    z_tilde = remove_x_seeds(extended.points, config.ell)
    try:
        if config.restriction is not None:
            z_tilde = heuristic_filter(z_tilde, config.ell,
                                       restriction=config.restriction)
    except (ValueError, KeyError) as error:
        raise click.UsageError(str(error))
    stream = io.StringIO()
    export_prediction(config.i_max, z_tilde, config.ell, stream,
                      extended.partial, config.jobs)
    _emit(stream.getvalue(), config.output)


def _read_dataset(path):
    try:
        return parse_pkl(path)
    except ParseError as error:
        raise InputError(str(error))


@cli.command()
@click.argument('prediction', type=click.Path(exists=True, dir_okay=False))
@click.argument('actual', type=click.Path(exists=True, dir_okay=False))
def compare(prediction, actual):
    """Compares a prediction with computed p-KL data."""

    predicted, computed = _read_dataset(prediction), _read_dataset(actual)
    for i in computed.leading_term_violations():
        logger.warning("%s: element %d lacks the leading term 1", actual, i)
    try:
        report = diff_report(predicted, computed)
    except ValueError as error:
        raise InputError(str(error))
    for line in report.lines():
        click.echo(line)
    click.echo('{} discrepancies, {} failures'.format(len(report),
                                                      len(report.failures)))
    if report.failures:
        click.get_current_context().exit(1)


@cli.command()
@click.argument('source', type=click.Path(exists=True, dir_okay=False))
@click.option('--picture', is_flag=True,
              help='SOURCE is a p-KL dataset; draw its combined picture.')
@click.option('--collapse', is_flag=True,
              help='Collapse star operation triples of the picture.')
@click.option('--ell', type=int, default=None,
              help='Wall spacing (default: from the input).')
@click.option('--format', 'format',
              type=click.Choice(list_of_pictures),
              default='svg', show_default=True)
@click.option('--show-seeds/--no-show-seeds', default=True,
              show_default=True)
@click.option('--color-merges/--no-color-merges', default=True,
              show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False),
              default=None, help='Output file (default: stdout).')
def render(source, picture, collapse, ell, format, show_seeds, color_merges,
           output):
    """Draws a simulate export or the picture of a p-KL dataset."""

    try:
        if picture:
            dataset = parse_pkl(source)
            items = combined_picture(dataset)
            if collapse:
                items = collapse_triples(items)
            ell = ell or dataset.p
        else:
            header, items = read_points(source)
            ell = ell or header.get('ell')
    except ParseError as error:
        raise InputError(str(error))
    document = render_items(items, format, ell, show_seeds, color_merges)
    _emit(document, output)


def main():
    try:
        cli()
    except BilliardsError as error:
        click.echo('error: {}'.format(error), err=True)
        sys.exit(1)


if __name__ == '__main__':
    main()

import json
import logging

import click

from engine import __version__
from engine.report import VerificationReport
from engine.suites import SUITES, run_suite
from utils.cache import CacheManager
from utils.cli import (EXIT_FAILURE, EXIT_OK, OutputFormatter, determine_output_format,
                       error_handler, print_report_table)
from utils.config import ConfigManager

logger = logging.getLogger(__name__)


def _load_report(config_manager: ConfigManager, suite: str, max_degree: int, no_cache: bool) -> VerificationReport:
    cache_manager = None
    if config_manager.get('cache_enabled') and not no_cache:
        cache_manager = CacheManager(ttl=config_manager.get('cache_ttl'))
    try:
        if cache_manager:
            cached = cache_manager.get(suite, max_degree, version=__version__)
            if cached:
                OutputFormatter.display_cached_message()
                return VerificationReport.from_dict(cached)
        report = run_suite(suite, max_degree)
        if cache_manager:
            cache_manager.set(suite, max_degree, report.to_dict(), version=__version__)
        return report
    finally:
        if cache_manager:
            cache_manager.close()


@click.command(name='verify')
@click.option('--suite', type=click.Choice(list(SUITES)), default='all', show_default=True,
              help='Which identities to check')
@click.option('--max-degree', type=int, help='Degree bound for exhaustive checks (default from config or HQC_MAX_DEGREE)')
@click.option('--format', 'output', type=click.Choice(['text', 'json']), help='Report format')
@click.option('--stable', is_flag=True, help='Omit wall time so reruns compare byte for byte')
@click.option('--no-cache', is_flag=True, help='Recompute even when a cached report exists')
@click.pass_context
@error_handler
def verify(ctx, suite, max_degree, output, stable, no_cache):
    """check the Hopf, ideal, calculus and dual identities"""
    config_manager = ConfigManager()
    config_manager.validate()
    if max_degree is None:
        max_degree = config_manager.max_degree()

    report = _load_report(config_manager, suite, max_degree, no_cache)
    data = report.to_dict(stable=stable)
    output_format = determine_output_format(output, config_manager)
    if output_format == 'json':
        click.echo(json.dumps(data, indent=2))
    else:
        print_report_table(data)
        for record in report.failures:
            logger.debug(f"internal failure {record.id}: {record.witness}")

    ctx.exit(EXIT_OK if report.ok else EXIT_FAILURE)

#!/usr/bin/env python3
"""
hqc CLI
"""
import click
import logging
from commands.algebra_commands import EXPRESSION_COMMANDS
from commands.config_commands import config_group
from commands.verify_commands import verify
from engine import __version__
from utils.config import ConfigManager

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

@click.group()
@click.option('--verbose', is_flag=True, help='Enable verbose logging')
@click.version_option(__version__, prog_name='hqc')
@click.pass_context
def cli(ctx, verbose):
    """
    hqc - exact Hopf algebra, differential calculus and dual checks for the quantum Heisenberg group
    """
    verbose = verbose or bool(ConfigManager().get('verbose', False))
    if verbose:
        logger.setLevel(logging.DEBUG)
        logging.getLogger('engine').setLevel(logging.DEBUG)
        logging.getLogger('utils').setLevel(logging.DEBUG)
        logging.getLogger('commands').setLevel(logging.DEBUG)
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose

# Register commands
for command in EXPRESSION_COMMANDS:
    cli.add_command(command)
cli.add_command(verify)
cli.add_command(config_group)

def main():
    """Entry point for the hqc CLI"""
    cli(prog_name='hqc')

if __name__ == '__main__':
    main()

"""
Expression commands: parse an element of A and print one structure map applied to it.
"""
import logging

import click

from engine.algebra import LETTERS
from engine.calculus import FORM_LETTERS, FORM_NAMES
from engine.dual import CHI_NAMES
from engine.parser import parse_element
from engine.scalar import format_scalar
from engine.suites import Engine
from utils.cli import OutputFormatter, common_output_options, determine_output_format, error_handler
from utils.config import ConfigManager

logger = logging.getLogger(__name__)

corrected_option = click.option(
    '--corrected', is_flag=True,
    help='Use the ad-invariant ideal instead of the published one')


def _engine(ctx) -> Engine:
    ctx.ensure_object(dict)
    if 'engine' not in ctx.obj:
        ctx.obj['engine'] = Engine()
    return ctx.obj['engine']


def _emit(expression: str, output, text: str, json_value, **extra):
    output_format = determine_output_format(output, ConfigManager())
    data = {'input': expression, 'text': text, 'value': json_value, **extra}
    OutputFormatter.output_data(data, output_format, lambda d: click.echo(d['text']))


@click.command(name='normal-form')
@click.argument('expression')
@common_output_options
@error_handler
def normal_form_cmd(expression, output):
    """PBW normal form of an expression"""
    x = parse_element(expression)
    _emit(expression, output, x.to_text(), x.to_json())


@click.command(name='delta')
@click.argument('expression')
@common_output_options
@click.pass_context
@error_handler
def delta_cmd(ctx, expression, output):
    """coproduct D(x)"""
    value = _engine(ctx).hopf.delta(parse_element(expression))
    _emit(expression, output, value.to_text(), value.to_json())


@click.command(name='epsilon')
@click.argument('expression')
@common_output_options
@click.pass_context
@error_handler
def epsilon_cmd(ctx, expression, output):
    """counit e(x)"""
    value = _engine(ctx).hopf.epsilon(parse_element(expression))
    _emit(expression, output, format_scalar(value), value.to_json())


@click.command(name='antipode')
@click.argument('expression')
@common_output_options
@click.pass_context
@error_handler
def antipode_cmd(ctx, expression, output):
    """antipode S(x)"""
    value = _engine(ctx).hopf.antipode(parse_element(expression))
    _emit(expression, output, value.to_text(), value.to_json())


@click.command(name='adjoint')
@click.argument('expression')
@common_output_options
@click.pass_context
@error_handler
def adjoint_cmd(ctx, expression, output):
    """right adjoint coaction ad(x)"""
    value = _engine(ctx).hopf.adjoint(parse_element(expression))
    _emit(expression, output, value.to_text(), value.to_json())


@click.command(name='reduce')
@click.argument('expression')
@click.option('--trace', is_flag=True, help='Also print the ideal elements subtracted')
@corrected_option
@common_output_options
@click.pass_context
@error_handler
def reduce_cmd(ctx, expression, trace, corrected, output):
    """canonical representative of x modulo the right ideal R"""
    engine = _engine(ctx)
    ideal = engine.corrected_ideal if corrected else engine.ideal
    reduction = ideal.reduce_with_trace(parse_element(expression))
    text = reduction.result.to_text()
    extra = {}
    if trace:
        text = f"{text}\ntrace: {reduction.to_text()}"
        extra['trace'] = [step.to_json() for step in reduction.steps]
    _emit(expression, output, text, reduction.result.to_json(), **extra)


@click.command(name='d')
@click.argument('expression')
@corrected_option
@common_output_options
@click.pass_context
@error_handler
def d_cmd(ctx, expression, corrected, output):
    """exterior derivative dx in the left-invariant basis"""
    value = _engine(ctx).calculus(corrected).differential(parse_element(expression))
    _emit(expression, output, value.to_text(), value.to_json())


@click.command(name='chi')
@click.argument('letter', type=click.Choice(list(LETTERS)))
@click.argument('expression')
@corrected_option
@common_output_options
@click.pass_context
@error_handler
def chi_cmd(ctx, letter, expression, corrected, output):
    """evaluate the dual functional chi_<a|b|d> on x"""
    value = _engine(ctx).dual(corrected).chi(letter)(parse_element(expression))
    _emit(expression, output, format_scalar(value), value.to_json(), functional=CHI_NAMES[letter])


@click.command(name='cartan-maurer')
@corrected_option
@common_output_options
@click.pass_context
@error_handler
def cartan_maurer_cmd(ctx, corrected, output):
    """d of the left-invariant basis forms"""
    structure = _engine(ctx).calculus(corrected).cartan_maurer()
    lines = [f"d{FORM_NAMES[letter]} = {structure[letter].to_text()}" for letter in FORM_LETTERS]
    data = {FORM_NAMES[letter]: structure[letter].to_json() for letter in FORM_LETTERS}
    output_format = determine_output_format(output, ConfigManager())
    OutputFormatter.output_data({'text': "\n".join(lines), 'value': data}, output_format,
                                lambda d: click.echo(d['text']))


EXPRESSION_COMMANDS = (
    normal_form_cmd, delta_cmd, epsilon_cmd, antipode_cmd, adjoint_cmd,
    reduce_cmd, d_cmd, chi_cmd, cartan_maurer_cmd,
)

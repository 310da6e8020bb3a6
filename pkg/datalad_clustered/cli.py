"""Stand-alone command line front end ``datalad-clustered``

Every computation is exposed as a subcommand. Output is a human-readable
rendering by default and JSON with ``--json``. Exit codes: 0 success,
1 usage error, 2 domain error (reported as ``{"error": kind, ...}``),
3 failed verification checks.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from dataclasses import (
    dataclass,
    field,
)
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
)

from datalad_next.constraints import (
    Constraint,
    EnsureChoice,
    EnsureInt,
    EnsureRange,
)
from datalad_next.constraints.exceptions import ConstraintError

from . import (
    clustered as cl,
    grassmann as gr,
    osculation as osc,
    schubert as sch,
)
from .checks import (
    SCOPES,
    check_labels,
    run_suite,
)
from .constraints import (
    EnsureClassSpec,
    EnsureIntTuple,
    EnsurePolynomialSpec,
)
from .exceptions import ClusteredError
from .io import (
    format_table,
    report_tables,
    to_json,
)
from .io.jsondata import (
    class_from_json,
    form_from_json,
    poly_from_json,
)
from .p1 import (
    BinaryForm,
    MultiPolynomial,
    build_osculating_map,
    glue_along_line,
    is_balanced,
    kernel_splitting_type,
)

__all__ = ['CommandResult', 'run_command', 'main']

lgr = logging.getLogger('datalad.clustered.cli')

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY_FAILED = 3


@dataclass
class CommandResult:
    command: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any]
    citations: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    # rendered output, JSON or text
    text: str = ''

    def as_json(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'outputs': self.outputs,
            'citations': self.citations,
        }


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f'{self.prog}: {message}')


def _arg(constraint: Constraint) -> Callable[[str], Any]:
    """argparse ``type`` from a parameter constraint"""
    def convert(value: str):
        try:
            return constraint(value)
        except ConstraintError as e:
            raise argparse.ArgumentTypeError(str(e)) from e
    convert.__name__ = constraint.input_synopsis
    return convert


_int = _arg(EnsureInt())
_pos = _arg(EnsureInt() & EnsureRange(min=1))
_ctx = _arg(EnsureIntTuple(2))
_parts = _arg(EnsureIntTuple())
_poly = _arg(EnsurePolynomialSpec())
_cls = _arg(EnsureClassSpec())


def _context(args) -> gr.GrassContext:
    return gr.make_context(*args.ctx)


#
# subcommands; each returns (outputs, citations) or raises ClusteredError
#

def _lr_product(args):
    ctx = _context(args)
    a = sch.SchubertClass.sigma(ctx, args.a)
    b = sch.SchubertClass.sigma(ctx, args.b)
    out = {'class': to_json(sch.multiply_classes(a, b))}
    if args.nu is not None:
        out['coefficient'] = sch.lr_coefficient(args.a, args.b, args.nu)
    return out, ['lr-oracle']


def _nonzero(args):
    ctx = _context(args)
    return {
        'nonzero': sch.product_nonzero(
            ctx, ctx.partition(args.a), ctx.partition(args.b)),
    }, ['fact-nonvanishing']


def _shift(args):
    ctx = _context(args)
    lam = gr.shift_partition(ctx, ctx.partition(args.p), args.mode)
    return {'partition': to_json(lam)}, [
        'fact-column-product' if args.mode == 'h' else 'fact-row-product']


def _dual(args):
    ctx = _context(args)
    lam = ctx.partition(args.p)
    return {
        'partition': to_json(gr.dual_partition(ctx, lam)),
        'rigid': sch.is_rectangle_rigid(ctx, lam),
    }, ['dual-involution', 'rigid-rectangles']


def _cluster_check(args):
    ctx = _context(args)
    if args.cls is not None:
        cls = class_from_json(ctx, args.cls)
    elif args.p is not None:
        cls = sch.SchubertClass.sigma(ctx, args.p)
    else:
        raise UsageError('cluster-check needs --p or --class')
    ell = args.ell if args.ell is not None else cl.cluster_floor(cls)
    return to_json(cl.check_necessary(cls, ell)), [
        'extremal-rectangles', 'clustered-fixtures']


def _mu(args):
    ctx = _context(args)
    return to_json(cl.mu_construction(ctx, ctx.partition(args.p))), [
        'mu-construction', 'single-row-kleiman']


def _meets_z(args):
    return to_json(cl.meets_z_model(args.n, args.k, args.m, args.e)), [
        'meets-z-clustered']


def _osculation(args):
    report = osc.canonical_multidegree(args.n, args.d, args.r, args.s)
    out = {'report': to_json(report)}
    if args.n >= 2:
        out['generalTypeThresholds'] = to_json(
            osc.general_type_thresholds(args.n))
    if args.s is not None and args.r < args.d:
        out['doubleOsculationStep'] = list(
            osc.double_osculation_step(args.n, args.d, args.r))
    if args.i is not None:
        out['incidence'] = to_json(
            osc.incidence_dimension(args.n, args.d, args.i))
    return out, [
        'multidegree-formula', 'genus-coefficient', 'general-type-bounds']


def _thresholds(args):
    report = osc.lang_threshold_report(args.n, args.d)
    out = to_json(report)
    out['injectivityCodimension'] = osc.injectivity_codimension(args.n, args.d)
    return out, ['threshold-values', 'threshold-order', 'injectivity-consistency']


def _form(spec) -> BinaryForm:
    return form_from_json(spec) if isinstance(spec, dict) \
        else BinaryForm.from_expr(spec)


def _splitting(args):
    p = _form(args.p)
    m = build_osculating_map(p, [_form(f) for f in args.f or []])
    st = kernel_splitting_type(m)
    return {
        'map': {
            'sourceRank': m.source_rank,
            'targetDegree': m.target_degree,
            'entries': to_json(m.entries),
        },
        'twists': to_json(st),
        'balanced': is_balanced(st),
    }, ['splitting-balanced', 'splitting-degree']


def _multipoly(spec, prefixes: str) -> MultiPolynomial:
    if isinstance(spec, dict):
        return poly_from_json(spec)
    used = re.findall(rf'\b([{prefixes}])(\d+)\b', spec)
    if not used:
        raise ClusteredError(
            'not-homogeneous-poly',
            f'{spec!r} uses no indexed variables {prefixes[0]}0, '
            f'{prefixes[0]}1, ...')
    if len({p for p, _ in used}) > 1:
        raise ClusteredError(
            'not-homogeneous-poly',
            f'{spec!r} mixes variable names {sorted({p for p, _ in used})}')
    # the number of variables is the highest index used, plus one
    num_vars = max(max(int(i) for _, i in used) + 1, 2)
    return MultiPolynomial.from_expr(spec, num_vars, used[0][0])


def _glue(args):
    f1 = _multipoly(args.f1, 'x')
    f2 = _multipoly(args.f2, 'yx')
    return to_json(glue_along_line(f1, f2)), ['glue-pullbacks']


def _verify(args):
    summary = run_suite(
        scope=args.scope, seed=args.seed, labels=args.check, jobs=args.jobs)
    out = {
        'scope': summary.scope,
        'seed': summary.seed,
        'ok': summary.ok,
        'checks': {
            label: {
                'statement': o.statement,
                'passed': o.passed,
                'failed': o.failed,
                'failures': o.failures,
            }
            for label, o in summary.outcomes.items()
        },
    }
    return out, list(summary.outcomes)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog='datalad-clustered',
        description='Schubert calculus of clustered families and degree '
        'thresholds, with exact arithmetic',
    )
    parser.add_argument(
        '--json', action='store_true', help='machine-readable JSON output')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        return p

    def ctx_arg(p):
        p.add_argument('--ctx', type=_ctx, required=True, metavar='K,N',
                       help='Grassmannian G(K,N) of K-planes in P^N')

    p = add('lr-product', _lr_product, 'product of two Schubert classes')
    ctx_arg(p)
    p.add_argument('--a', type=_parts, required=True, metavar='PARTS')
    p.add_argument('--b', type=_parts, required=True, metavar='PARTS')
    p.add_argument('--nu', type=_parts, metavar='PARTS',
                   help='also report the coefficient of this partition')

    p = add('nonzero', _nonzero, 'whether a product of two classes vanishes')
    ctx_arg(p)
    p.add_argument('--a', type=_parts, required=True, metavar='PARTS')
    p.add_argument('--b', type=_parts, required=True, metavar='PARTS')

    p = add('shift', _shift, 'partition λ^h or λ^p')
    ctx_arg(p)
    p.add_argument('--p', type=_parts, required=True, metavar='PARTS')
    p.add_argument('--mode', choices=gr.SHIFT_MODES, required=True)

    p = add('dual', _dual, 'dual partition')
    ctx_arg(p)
    p.add_argument('--p', type=_parts, required=True, metavar='PARTS')

    p = add('cluster-check', _cluster_check,
            'necessary conditions for a class to be ℓ-clustered')
    ctx_arg(p)
    p.add_argument('--p', type=_parts, metavar='PARTS')
    p.add_argument('--class', dest='cls', type=_cls, metavar='JSON')
    p.add_argument('--ell', type=_int,
                   help='defaults to the floor certified by the class')

    p = add('mu', _mu, 'μ-construction in the containing Grassmannian')
    ctx_arg(p)
    p.add_argument('--p', type=_parts, required=True, metavar='PARTS')

    p = add('meets-z', _meets_z, 'classes of planes meeting a subvariety')
    for name in ('n', 'k', 'm', 'e'):
        p.add_argument(f'--{name}', type=_int, required=True)

    p = add('osculation', _osculation, 'canonical twists of Δ_r, Δ_(r,s)')
    p.add_argument('--n', type=_pos, required=True)
    p.add_argument('--d', type=_pos, required=True)
    p.add_argument('--r', type=_int, required=True)
    p.add_argument('--s', type=_int)
    p.add_argument('--i', type=_int,
                   help='also report the incidence dimension for i points')

    p = add('thresholds', _thresholds, 'degree threshold report')
    p.add_argument('--n', type=_int, required=True)
    p.add_argument('--d', type=_int, required=True)

    p = add('splitting', _splitting,
            'kernel splitting type of (∂p/∂s, ∂p/∂t, f_2, ...)')
    p.add_argument('--p', type=_poly, required=True, metavar='FORM')
    p.add_argument('--f', type=_poly, action='append', metavar='FORM')

    p = add('glue', _glue, 'glue two hypersurfaces along a line')
    p.add_argument('--f1', type=_poly, required=True, metavar='POLY',
                   help='polynomial in x0, x1, ...')
    p.add_argument('--f2', type=_poly, required=True, metavar='POLY',
                   help='polynomial in y0, y1, ... (or x0, x1, ...)')

    p = add('verify', _verify, 'run the labeled verification checks')
    p.add_argument('--scope', type=_arg(EnsureChoice(*SCOPES)),
                   default='fast')
    p.add_argument('--seed', type=_int,
                   help='defaults to the datalad.clustered.seed setting')
    p.add_argument('--jobs', type=_pos, default=1)
    p.add_argument('--check', action='append',
                   type=_arg(EnsureChoice(*check_labels())),
                   help='run only this check (repeatable)')
    return parser


def _inputs(args) -> Dict[str, Any]:
    skip = {'fn', 'json', 'command'}
    return {
        ('class' if k == 'cls' else k): to_json(v)
        for k, v in vars(args).items()
        if k not in skip and v is not None
    }


def _render_text(command: str, outputs: Dict[str, Any], args) -> str:
    if command == 'thresholds':
        report = osc.lang_threshold_report(args.n, args.d)
        return '\n\n'.join(
            f'[{name}]\n{format_table(rows)}'
            for name, rows in report_tables(report).items())
    if command == 'verify':
        rows = [('check', 'passed', 'failed', 'statement')] + [
            (label, o['passed'], o['failed'], o['statement'])
            for label, o in outputs['checks'].items()
        ]
        return format_table(rows)
    return '\n'.join(
        f'{k}: {json.dumps(v)}' for k, v in outputs.items())


def run_command(argv: Sequence[str]) -> CommandResult:
    """Parse ``argv``, run the subcommand and render its result"""
    argv = list(argv)
    parser = _build_parser()
    command = next((a for a in argv if not a.startswith('-')), '')
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return CommandResult(
            command=command,
            inputs={'argv': argv},
            outputs={},
            exit_code=EXIT_USAGE,
            text=str(e),
        )
    except SystemExit as e:
        # --help was printed
        return CommandResult(
            command, {'argv': argv}, {}, exit_code=int(e.code or 0))
    lgr.debug('dispatching %s', args.command)
    inputs = _inputs(args)
    try:
        outputs, citations = args.fn(args)
    except UsageError as e:
        return CommandResult(
            args.command, inputs, {}, exit_code=EXIT_USAGE, text=str(e))
    except ClusteredError as e:
        outputs = {'error': e.kind, 'message': str(e)}
        return CommandResult(
            args.command, inputs, outputs,
            exit_code=EXIT_DOMAIN, text=json.dumps(outputs))
    exit_code = EXIT_OK
    if args.command == 'verify' and not outputs['ok']:
        exit_code = EXIT_VERIFY_FAILED
    result = CommandResult(
        args.command, inputs, outputs, citations, exit_code=exit_code)
    result.text = json.dumps(result.as_json(), indent=1) if args.json \
        else _render_text(args.command, outputs, args)
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if result.exit_code == EXIT_USAGE else sys.stdout
    print(result.text, file=stream)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())

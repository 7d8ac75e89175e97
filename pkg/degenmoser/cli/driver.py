# Copyright 2024 The degenmoser Authors. All Rights Reserved.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

'''
Command-line experiments.  ``degenmoser <group> <action> [--key value ...]``
runs one experiment and writes <name>.csv and <name>.json to the output
directory.

Exit codes: 0 success, 2 invalid parameters or failed preconditions,
3 assembly or numerical failure, 4 I/O failure.
'''

import sys
import argparse
import numpy
import pandas
from pyscf import lib
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import (InvalidParameterError, AssemblyError,
                                       NumericalError)
from degenmoser.orlicz import make_young, ln_conjugate, ln_submult_ratio
from degenmoser.iterates import IterSpec, ratio_envelope, li_growth
from degenmoser.recurrence import run_recurrence, minimal_cm, cstar_verify, failure_demo
from degenmoser.geometry import (Geometry, Isotropic, structural_check, SuperradiusSpec,
                                 ln_superradius, superradius_growth, monotonicity_check)
from degenmoser.metric import (Grid2D, ball_grid, cc_distance_field, ball_profile_adaptive,
                               halving_decrement)
from degenmoser.sobolev import (failure_probe, divergence_exponent, endpoint_check,
                                family_sweep)
from degenmoser.solver import (CoeffField, RhsPair, assemble_and_solve, max_principle_check,
                               admissible_norm, local_bound_check, moser_chain_check,
                               supnorm_report)
from degenmoser.cli.config import SCHEMA, COMMON, ExperimentConfig
from degenmoser.cli.report import report_emit

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

DEVICE = getattr(__config__, 'solver_device', 'cpu')


def _geometry(p):
    if p.get('isotropic'):
        return Isotropic()
    return Geometry(p['k'], p['sigma'])


class ExperimentDriver(lib.StreamObject):
    '''Runs the handler of one subcommand.  Every handler returns
    (frame, metrics, flags).'''
    _keys = {'config'}

    def __init__(self, config, verbose=None):
        self.config = config
        if verbose is None:
            verbose = config.common['verbose']
        self.verbose = verbose

    def dump_flags(self, verbose=None):
        log = logger.new_logger(self, verbose)
        log.info('******** %s ********', self.__class__)
        log.info('subcommand = %s %s', self.config.group, self.config.action)
        for key, value in sorted(self.config.params.items()):
            log.info('%s = %s', key, value)
        log.info('output_dir = %s  name = %s', self.config.output_dir, self.config.name)
        return self

    def kernel(self):
        cfg = self.config
        log = logger.new_logger(self)
        t0 = log.init_timer()
        self.dump_flags()
        handler = getattr(self, f'_{cfg.group}_{cfg.action}')
        frame, metrics, flags = handler(cfg.params)
        for key, ok in flags.items():
            if not ok:
                log.warn('%s %s: check %s failed', cfg.group, cfg.action, key)
        paths = report_emit(cfg.name, frame, cfg.to_dict(), metrics, flags, cfg.output_dir)
        log.timer(f'{cfg.group} {cfg.action}', *t0)
        log.note('wrote %s and %s', *paths)
        return paths

    def _young_check(self, p):
        phi = make_young(p['m'], p['variant'])
        lna = numpy.linspace(p['lnt_min'], p['lnt_max'], p['points'])
        ln_ratio = ln_submult_ratio(phi, lna, lna)
        below = numpy.nextafter(phi.lnE, -numpy.inf)
        gap_E = abs(float(phi.ln_eval(below) - phi.ln_eval(phi.lnE)))
        gap_F = abs(float(phi.ln_inv(numpy.nextafter(phi.lnF, -numpy.inf)) - phi.ln_inv(phi.lnF)))
        eta, kappa = phi.elasticities(lna)
        frame = pandas.DataFrame({'ln_t': lna, 'ln_phi': phi.ln_eval(lna),
                                  'eta': eta, 'kappa': kappa})
        metrics = {'ln_submult_ratio_max': ln_ratio,
                   'continuity_gap_E': gap_E, 'continuity_gap_F': gap_F,
                   'eta_min': float(eta.min()), 'kappa_min': float(kappa.min())}
        flags = {'submultiplicative': ln_ratio <= 1e-9,
                 'continuous': bool(max(gap_E, gap_F) <= 1e-9 * phi.lnF),
                 'eta_at_least_one': bool(eta.min() >= 1 - 1e-12)}
        if p['variant'] == 'phi':
            ext = float(phi.extension_condition())
            metrics['ln_extension_margin'] = ext
            flags['extension_condition'] = ext > 0
        else:
            metrics['comparison_constant'] = phi.comparison_constant()
        return frame, metrics, flags

    def _young_table(self, p):
        phi = make_young(p['m'], p['variant'])
        lnt = numpy.linspace(p['lnt_min'], p['lnt_max'], p['points'])
        eta, kappa = phi.elasticities(lnt)
        frame = pandas.DataFrame({'ln_t': lnt, 'ln_phi': phi.ln_eval(lnt),
                                  'ln_phi_conj': ln_conjugate(phi, lnt),
                                  'eta': eta, 'kappa': kappa})
        return frame, {'lnE': phi.lnE, 'lnF': phi.lnF}, {}

    def _iterates_ratios(self, p):
        lnt = numpy.linspace(p['lnt_min'], p['lnt_max'], p['points'])
        frame = ratio_envelope(p['m'], p['j'], p['beta'], lnt, p['variant'], verbose=self.verbose)
        metrics = {'cm_max': float(frame['cm'].max()),
                   'ratio2_worst': float((frame['ratio2_max'] - frame['ratio2_bound']).max())}
        flags = {'ratio1_at_least_one': bool((frame['ratio1_min'] >= 1 - 1e-9).all()),
                 'ratio2_bounded': bool((frame['ratio2_max'] <= frame['ratio2_bound'] + 1e-6).all())}
        return frame, metrics, flags

    def _iterates_growth(self, p):
        spec = IterSpec(p['m'], variant=p['variant'])
        growth = li_growth(spec, p['M'], p['M1'], p['j'])
        frame = pandas.DataFrame({'j': p['j'], 'ln_ratio': growth})
        flags = {'increasing': bool(numpy.all(numpy.diff(growth) > 0))}
        return frame, {'ln_ratio_last': float(growth[-1])}, flags

    def _recurrence_run(self, p):
        trace = run_recurrence(p['m'], p['K'], p['gamma'], p['b1_theta'], p['N'],
                               verbose=self.verbose)
        cm = minimal_cm(trace, verbose=self.verbose)
        metrics = {'minimal_C_m': cm, 'excess_max': float(trace.excess.max()),
                   'ln_growth': float(trace.ln_growth)}
        flags = {}
        if trace.m > 2:
            flags['cstar_dominates'] = cstar_verify(trace, max(cm, 1.))
        return trace.to_frame(max(cm, 1.)), metrics, flags

    def _recurrence_fail(self, p):
        vals = failure_demo(p['m'], p['K'], p['N'], p['b1_theta'], verbose=self.verbose)
        n = numpy.arange(1, vals.size + 1)
        start = min(9, vals.size - 1)
        # vals are ln Phi^{-(n-1)}(b_n)
        ln_growth = float(vals[-1] - vals[start])
        frame = pandas.DataFrame({'n': n, 'ln_value': vals})
        return frame, {'ln_growth': ln_growth}, {'unbounded': ln_growth >= numpy.log(10.)}

    def _geometry_check(self, p):
        geom = _geometry(p)
        rep = structural_check(geom, p['r'])
        frame = pandas.DataFrame([{'condition': k, 'pass': v['pass'], 'constant': v['constant']}
                                  for k, v in rep.items()])
        return frame, geom.to_dict(), {'all_pass': bool(frame['pass'].all())}

    def _geometry_superradius(self, p):
        spec = SuperradiusSpec(p['m'], _geometry(p), p['C_m'])
        r = numpy.asarray(p['r'])
        ell = -numpy.log(r)
        passed, worst = monotonicity_check(spec, ell, verbose=self.verbose)
        metrics = {'monotonicity_worst': worst}
        if not isinstance(spec.geometry, Isotropic):
            metrics['growth_constant'] = superradius_growth(spec, ell)
        frame = pandas.DataFrame({'r': r, 'ln_phi': ln_superradius(spec, ell)})
        return frame, metrics, {'increasing': bool(passed)}

    def _metric_profile(self, p):
        geom = _geometry(p)
        prof = ball_profile_adaptive(geom, p['r'], p['n'], p['stencil'],
                                     verbose=self.verbose)
        frame = prof.to_frame()
        ratios = prof.doubling_ratios()
        metrics = {'doubling_ratio_max': float(numpy.max(ratios)) if len(ratios) else numpy.nan}
        frame['model_ratio'], within = prof.volume_model_check(geom, verbose=self.verbose)
        return frame, metrics, {'volume_within_factor': within}

    def _metric_field(self, p):
        geom = _geometry(p)
        field = cc_distance_field(geom, ball_grid(geom, p['r'], p['n']), stencil=p['stencil'],
                                  verbose=self.verbose)
        metrics = {'volume': field.volume(p['r']),
                   'boundary_distance': field.boundary_distance}
        return field.to_frame(), metrics, {'ball_inside': field.boundary_distance >= p['r']}

    def _sobolev_failure(self, p):
        geom = Geometry(p['k'], p['sigma'])
        kwargs = ({'ln_inv_eps': p['ln_inv_eps']} if p['ln_inv_eps']
                  else {'eps_list': p['eps']})
        frame = failure_probe(p['m'], geom, p['rho'], C_m=p['C_m'], verbose=self.verbose,
                              **kwargs)
        lr = frame['ln_ratio'].to_numpy()
        metrics = {'divergence_exponent': divergence_exponent(p['m'], p['sigma']),
                   'ln_ratio_growth': float(lr[-1] - lr[0])}
        return frame, metrics, {'increasing': bool(numpy.all(numpy.diff(lr) > 0))}

    def _sobolev_endpoint(self, p):
        c, frame = endpoint_check(Geometry(p['k'], p['sigma']), p['m'], p['r0'], p['alpha'],
                                  C_m=p['C_m'], verbose=self.verbose)
        return frame, {'ratio_max': c}, {'finite': bool(numpy.isfinite(c))}

    def _sobolev_ratio(self, p):
        geom = _geometry(p)
        field = cc_distance_field(geom, ball_grid(geom, p['rho'], p['n']), verbose=self.verbose)
        frame = family_sweep(field, p['m'], p['rho'], p['eps'], p['amplitude'], p['C_m'],
                             verbose=self.verbose)
        metrics = {'ratio_max': float(frame['ratio'].max())}
        return frame, metrics, {'jensen': bool(frame['jensen'].all())}

    def _coefficients(self, geom, grid, p):
        if p['coeff'] == 'identity':
            return CoeffField.identity(geom, grid)
        if p['coeff'] == 'oscillating':
            return CoeffField.oscillating(geom, grid, p['contrast'])
        if p['coeff'] == 'random':
            rng = numpy.random.default_rng(self.config.common['seed'])
            a1 = rng.uniform(1., p['contrast'], grid.shape)
            a2 = rng.uniform(1., p['contrast'], grid.shape)
            return CoeffField(geom, grid, a1, a2, 1., p['contrast'])
        raise InvalidParameterError(f"Unknown coefficient field {p['coeff']}")

    @staticmethod
    def _boundary(grid, kind):
        xx, yy = grid.mesh()
        if kind == 'linear':
            return 1. + xx
        if kind == 'constant':
            return numpy.ones(grid.shape)
        if kind == 'cosine':
            return 1. + .5 * numpy.cos(numpy.pi * xx / grid.x1) * numpy.cos(numpy.pi * yy / grid.y1)
        raise InvalidParameterError(f'Unknown boundary data {kind}')

    def _solver_run(self, p):
        geom = _geometry(p)
        grid = ball_grid(geom, p['r'], p['n'])
        field = cc_distance_field(geom, grid, verbose=self.verbose)
        coeff = self._coefficients(geom, grid, p)
        rhs = RhsPair.constant(grid, p['phi0'], (p['phi1x'], p['phi1y']))
        report = assemble_and_solve(geom, coeff, rhs, self._boundary(grid, p['bc']), p['tol'],
                                    DEVICE, verbose=self.verbose)
        phistar = admissible_norm(field, p['m'], rhs, verbose=self.verbose)
        mp = max_principle_check(report, phistar)
        # the local bound lives on B(r) inside the grid
        r = .9 * p['r']
        nu = p['nu']
        if nu <= 0:
            nu = .5 * (1. + 1. - halving_decrement(field, r) / r)
        local = local_bound_check(report, field, r, nu, p['beta'], phistar=phistar, m=p['m'],
                                  C_m=p['C_m'], verbose=self.verbose)
        K, chain = moser_chain_check(report, field, p['m'], max(p['beta'], 1.), p['J'], r,
                                     p['chain_nu'], phistar, verbose=self.verbose)
        xx, yy = grid.mesh()
        frame = pandas.DataFrame({'x': xx.ravel(), 'y': yy.ravel(), 'u': report.u.ravel()})
        metrics = {'diagnostics': report.diagnostics, 'phistar': phistar,
                   'max_principle': mp, 'local_bound': local, 'moser_K': K,
                   'moser_chain': chain.to_dict(orient='list'), 'coefficients': coeff.to_dict()}
        return frame, metrics, {'max_principle': mp['holds']}

    def _solver_supnorm(self, p):
        r = p['r']
        grid = Grid2D.centered(1.05 * r, 1.05 * r, p['n'], p['n'])
        xx, yy = grid.mesh()
        rr = numpy.hypot(xx, yy)
        if p['profile'] == 'cosine':
            f = p['M'] * numpy.cos(.5 * numpy.pi * numpy.minimum(rr / r, 1.))
        elif p['profile'] == 'constant':
            f = numpy.where(rr < r, p['M'], 0.)
        else:
            raise InvalidParameterError(f"Unknown profile {p['profile']}")
        sets = [rr < r * (.5 + .5 / j) for j in range(1, p['J'] + 1)]
        frame = supnorm_report(f, sets, p['m'], p['J'], grid.cell_area)
        a = frame['a_j'].to_numpy()
        sup = frame['sup_D_j'].to_numpy()
        metrics = {'a_last': float(a[-1]), 'sup_last': float(sup[-1]),
                   'rel_error': float(abs(a[-1] - sup[-1]) / sup[-1])}
        return frame, metrics, {}


def run(config, verbose=None):
    '''Runs one configuration; returns the exit code'''
    log = logger.new_logger(verbose=config.common['verbose'] if verbose is None else verbose)
    try:
        ExperimentDriver(config, verbose).kernel()
    except ValueError as err:
        log.error('%s %s: %s', config.group, config.action, err)
        return EXIT_PARAM
    except (AssemblyError, NumericalError) as err:
        log.error('%s %s: %s', config.group, config.action, err)
        return EXIT_NUMERICAL
    except OSError as err:
        log.error('%s %s: %s', config.group, config.action, err)
        return EXIT_IO
    return EXIT_OK


def _flag(key):
    return '--' + key.replace('_', '-')

def build_parser():
    parser = argparse.ArgumentParser(prog='degenmoser', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    groups = parser.add_subparsers(dest='group', required=True)
    subs = {}
    for (group, action), schema in SCHEMA.items():
        if group not in subs:
            subs[group] = groups.add_parser(group).add_subparsers(dest='action', required=True)
        sub = subs[group].add_parser(action)
        sub.add_argument('--config', help='JSON file with parameter values')
        for key, default in schema.items():
            # strings are coerced by ExperimentConfig
            sub.add_argument(_flag(key), dest=key, default=None,
                             help=f'default {default}')
        for key in COMMON:
            sub.add_argument(_flag(key), dest=key, default=None)
    return parser

def main(argv=None):
    args = vars(build_parser().parse_args(argv))
    group = args.pop('group')
    action = args.pop('action')
    path = args.pop('config')
    common = {k: args.pop(k) for k in COMMON if args.get(k) is not None}
    for k in COMMON:
        args.pop(k, None)
    overrides = {k: v for k, v in args.items() if v is not None}
    log = logger.new_logger(verbose=logger.NOTE)
    try:
        if path:
            config = ExperimentConfig.from_json(path, group, action, **common)
        else:
            config = ExperimentConfig(group, action, **common)
        config.update(overrides)
    except ValueError as err:
        log.warn('%s', err)
        return EXIT_PARAM
    except OSError as err:
        log.warn('%s', err)
        return EXIT_IO
    return run(config)


if __name__ == '__main__':
    sys.exit(main())

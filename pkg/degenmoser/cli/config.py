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
Experiment configurations: one parameter schema per subcommand, merged
from defaults, a JSON file and command-line flags in that order.
'''

import os
import json
import numpy
from degenmoser import __config__
from degenmoser.lib.exceptions import PreconditionError, InvalidParameterError

C_M = getattr(__config__, 'geometry_C_m', 1.0)
SEED = getattr(__config__, 'seed', 20240101)
OUTPUT_DIR = getattr(__config__, 'output_dir', 'results')
STENCIL = getattr(__config__, 'metric_stencil', 16)
TOL = getattr(__config__, 'solver_tol', 1e-10)

_GEOM = {'k': 1, 'sigma': .5, 'isotropic': False}

SCHEMA = {
    ('young', 'check'): {'m': 2., 'variant': 'phi', 'lnt_min': -10., 'lnt_max': 60.,
                         'points': 100},
    ('young', 'table'): {'m': 2., 'variant': 'phi', 'lnt_min': -5., 'lnt_max': 40.,
                         'points': 200},
    ('iterates', 'ratios'): {'m': [2.5, 3.], 'j': [1, 2, 5, 10, 20],
                             'beta': [-2., -.5, 1., 2.], 'variant': 'phi',
                             'lnt_min': -10., 'lnt_max': 60., 'points': 2001},
    ('iterates', 'growth'): {'m': 3., 'M': 2., 'M1': 1.5, 'j': [1, 2, 5, 10, 20, 50],
                             'variant': 'phi'},
    ('recurrence', 'run'): {'m': 3., 'K': float(numpy.e), 'gamma': 4., 'b1_theta': 2.,
                            'N': 10000},
    ('recurrence', 'fail'): {'m': 2., 'K': float(numpy.e**2), 'b1_theta': 2., 'N': 10000},
    ('geometry', 'check'): dict(_GEOM, r=[1e-8, 1e-6, 1e-4, 1e-3, 1e-2, .05, .1, .2]),
    ('geometry', 'superradius'): dict(_GEOM, m=3., C_m=C_M,
                                      r=[1e-12, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, .1]),
    ('metric', 'profile'): dict(_GEOM, r=[.05, .1, .2, .3], n=200, stencil=STENCIL),
    ('metric', 'field'): dict(_GEOM, r=.2, n=128, stencil=STENCIL),
    ('sobolev', 'failure'): {'m': 3., 'k': 1, 'sigma': 1.5, 'rho': .2,
                             'eps': [.05, .025, .0125, .00625], 'ln_inv_eps': [],
                             'C_m': C_M},
    ('sobolev', 'endpoint'): {'m': 3., 'k': 2, 'sigma': 1., 'r0': .01,
                              'alpha': [1e-6, 1e-3, 1., 1e3], 'C_m': C_M},
    ('sobolev', 'ratio'): dict(_GEOM, m=3., sigma=.4, rho=.2, n=128, eps=[.05, .025],
                               amplitude=[1., 10.], C_m=C_M),
    ('solver', 'run'): dict(_GEOM, m=3., r=.2, n=160, coeff='identity', contrast=1.,
                            phi0=0., phi1x=0., phi1y=0., bc='linear', nu=0., beta=1.,
                            chain_nu=.5, J=2, tol=TOL, C_m=C_M),
    ('solver', 'supnorm'): {'m': 3., 'J': 25, 'r': 8., 'n': 200, 'profile': 'cosine',
                            'M': 2.},
}

COMMON = {'name': '', 'output_dir': OUTPUT_DIR, 'seed': SEED, 'verbose': 0}


def _coerce(key, value, default):
    try:
        if isinstance(default, bool):
            if isinstance(value, str):
                return value.lower() in ('1', 'true', 'yes')
            return bool(value)
        if isinstance(default, list):
            if isinstance(value, str):
                value = [v for v in value.split(',') if v.strip()]
            elem = int if default and isinstance(default[0], int) else float
            return [elem(v) for v in value]
        if isinstance(default, int):
            if int(float(value)) != float(value):
                raise ValueError(value)
            return int(float(value))
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError):
        raise InvalidParameterError(f'{key} = {value!r} does not parse like {default!r}')


class ExperimentConfig:
    '''Subcommand and validated parameters'''
    def __init__(self, group, action, params=None, **common):
        if (group, action) not in SCHEMA:
            raise PreconditionError(f'Unknown subcommand {group} {action}')
        self.group = group
        self.action = action
        schema = SCHEMA[(group, action)]
        self.params = dict(schema)
        self.common = dict(COMMON)
        self.update(params or {})
        self.update(common)
        if not self.common['name']:
            self.common['name'] = f'{group}_{action}'

    def update(self, overrides):
        schema = SCHEMA[(self.group, self.action)]
        unknown = sorted(set(overrides) - set(schema) - set(COMMON))
        if unknown:
            raise PreconditionError(f'Unknown keys for {self.group} {self.action}: {unknown}')
        for key, value in overrides.items():
            if value is None:
                continue
            if key in COMMON:
                self.common[key] = _coerce(key, value, COMMON[key])
            else:
                self.params[key] = _coerce(key, value, schema[key])
        return self

    @classmethod
    def from_json(cls, path, group=None, action=None, **common):
        '''A JSON object with the parameter keys; "subcommand": "group action"
        may replace the group and action arguments.'''
        with open(path, 'r') as f:
            desc = json.load(f)
        if not isinstance(desc, dict):
            raise PreconditionError(f'{path} does not hold a JSON object')
        sub = desc.pop('subcommand', None)
        if sub is not None:
            group, action = sub.split()
        return cls(group, action, desc, **common)

    @property
    def name(self):
        return self.common['name']

    @property
    def output_dir(self):
        return os.environ.get('DEGENMOSER_OUTPUT_DIR', self.common['output_dir'])

    def to_dict(self):
        return {'subcommand': f'{self.group} {self.action}', 'params': dict(self.params),
                'seed': self.common['seed']}

    def __repr__(self):
        return f'ExperimentConfig({self.group} {self.action}, {self.params})'

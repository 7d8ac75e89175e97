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
Package-wide defaults.

Modules read these with ``getattr(__config__, 'name', default)``.  A JSON
file named by the environment variable DEGENMOSER_CONFIG is merged on
import, e.g. ``{"orlicz_luxemburg_tol": 1e-12}``.
'''

import os
import json

verbose = 0

# orlicz
orlicz_luxemburg_tol = 1e-10
orlicz_bridge_tol = 1e-9
orlicz_conjugate_cycles = 200
orlicz_conjugate_lnt_range = (-40., 400.)

# iterates
iterates_junction_rtol = 1e-8

# recurrence
recurrence_horizon = 10000
recurrence_cstar_tol = 1e-12

# geometry
geometry_C_m = 1.0
geometry_iterlog_floor = 1.1
geometry_doubling_bound = 8.

# metric
metric_stencil = 16
metric_delta0_rtol = 1e-3
metric_min_ball_cells = 25
metric_volume_factor = 4.
metric_max_cutoffs = 30

# sobolev
sobolev_min_cells = 64
sobolev_quadrature_nodes = 4000
sobolev_refine_levels = 6

# solver
solver_tol = 1e-10
solver_max_cycle = 20000
solver_certify_tol = 1e-8
solver_negative_eps = 1e-8
solver_device = 'cpu'
solver_method = 'pcg'

# cli
output_dir = os.environ.get('DEGENMOSER_OUTPUT_DIR', 'results')
seed = 20240101

_conf_file = os.environ.get('DEGENMOSER_CONFIG')
if _conf_file and os.path.isfile(_conf_file):
    with open(_conf_file, 'r') as f:
        globals().update(json.load(f))
del _conf_file

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
Discretized Carnot-Caratheodory metric of A = diag(1, f(x)^2)
'''

from degenmoser.metric.grid import Grid2D, ball_grid, ball_height
from degenmoser.metric.ccmetric import (MetricGraph, MetricField, cc_distance_field,
                                        edge_costs, euclidean_radii, probe_upper_bound)
from degenmoser.metric.balls import (BallProfile, ball_profile, ball_profile_adaptive,
                                     doubling_ratio, halving_decrement)
from degenmoser.metric.gradient import grad_A, grad_norm
from degenmoser.metric.cutoff import CutoffSequence, cutoff_radii, cutoff_sequence

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
Degeneracy profiles F_{k,sigma}, their structure conditions, and the
superradius phi(r).
'''

from degenmoser.geometry.profiles import (
    Geometry, Isotropic, from_dict, iterlog, iterlog_ell, structural_check)
from degenmoser.geometry.radius import (
    SuperradiusSpec, ln_superradius, superradius, superradius_growth,
    convexity_ratio, monotonicity_check)

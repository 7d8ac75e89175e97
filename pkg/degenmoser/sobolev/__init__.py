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
Numerical probes of the (Phi, A, phi) Orlicz-Sobolev bump inequality, its
endpoint kernel form and the extremal family that defeats it.
'''

from degenmoser.sobolev.probe import (
    SobolevProbe, sobolev_ratio, test_family, family_sweep, global_sobolev_constant,
    ln_phi_radius)
from degenmoser.sobolev.failure import (
    failure_probe, divergence_exponent, extremal_integrals)
from degenmoser.sobolev.endpoint import (
    kernel_eval, ln_half_width, endpoint_check, ln_endpoint_integral)

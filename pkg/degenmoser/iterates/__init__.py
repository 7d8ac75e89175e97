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
Iterated Young functions Phi^{(j)} and the Moser test functions h_{j,beta}.
'''

from degenmoser.iterates.theta import (
    IterSpec, ThetaRep, phi_iter, phi_iter_inv, ln_phi_iter, ln_phi_iter_inv,
    ln_orbit, li_growth)
from degenmoser.iterates.hfunc import (
    h_eval, ln_h, h_ratios, h_ratios_ln, ln_h_derivative, composite_elasticities,
    near_junction, ratio2_bound, ratio_envelope)

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
Young functions Phi_m, Phi~_m, their conjugates, and the Luxemburg norm and
nonhomogeneous quasi-norm against discrete measures.
'''

from degenmoser.orlicz.young import (
    YoungFn, PhiM, PhiTildeM, TabulatedYoung, make_young, from_dict,
    phi_eval, phi_inv, phi_derivatives, phi_tilde_eval)
from degenmoser.orlicz.conjugate import (
    ConjugateYoung, conjugate_eval, ln_conjugate, conjugate_oracle,
    double_legendre, fenchel_young_gap)
from degenmoser.orlicz.norms import (
    DiscreteMeasure, luxemburg_norm, orlicz_quasinorm, submult_ratio,
    ln_submult_ratio, quasi_triangle_constant, finite_sum_check)

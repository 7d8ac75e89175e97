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
Finite-difference solutions of the frozen-coefficient equation and the
discrete checks built on them
'''

from degenmoser.solver.fdm import (CoeffField, RhsPair, SolveReport, FDSolver,
                                   assemble_and_solve, weak_residual, certify,
                                   m_matrix_check)
from degenmoser.solver.admissible import admissible_norm, dual_pairing
from degenmoser.solver.caccioppoli import (caccioppoli_constant, caccioppoli_envelope,
                                           caccioppoli_sweep)
from degenmoser.solver.bounds import (standard_K, local_bound_check, negative_power_check,
                                      max_principle_check, moser_chain_check)
from degenmoser.solver.supnorm import supnorm_recovery, supnorm_report

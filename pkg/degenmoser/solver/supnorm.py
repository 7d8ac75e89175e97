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
Recovery of ||f||_inf from iterated Orlicz integrals over nested sets

    a_j = Phi^{(-j)}( int_{D_j} Phi^{(j)}(|f|) domega ),

omega the Lebesgue cell measure.
'''

import numpy
import pandas
from scipy.special import logsumexp
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.iterates.theta import IterSpec, ln_phi_iter, ln_phi_iter_inv


def _nested(sets, J):
    sets = [numpy.asarray(s, dtype=bool) for s in sets]
    if not sets:
        raise InvalidParameterError('supnorm recovery needs at least one set')
    for a, b in zip(sets[:-1], sets[1:]):
        if numpy.any(b & ~a):
            raise InvalidParameterError('the sets D_j must be nested, D_{j+1} inside D_j')
    return sets + [sets[-1]] * (J - len(sets))

def supnorm_recovery(f, sets, m, J=25, cell_area=1., variant='phi', verbose=None):
    '''a_1, ..., a_J; sets holds boolean masks D_1 >= D_2 >= ... (the last
    one is repeated up to J)'''
    log = logger.new_logger(verbose=verbose)
    if int(J) != J or J < 1:
        raise InvalidParameterError(f'J must be a positive integer, got {J}')
    f = numpy.abs(numpy.asarray(f, dtype=float))
    sets = _nested(sets, int(J))
    spec = IterSpec(m, j=0, variant=variant)
    with numpy.errstate(divide='ignore'):
        lnf = numpy.log(f)
    ln_area = numpy.log(cell_area)
    out = numpy.empty(int(J))
    for j in range(1, int(J) + 1):
        D = sets[j-1]
        if not D.any():
            raise InvalidParameterError(f'D_{j} is empty')
        ln_int = logsumexp(ln_phi_iter(spec, lnf[D], j)) + ln_area
        out[j-1] = numpy.exp(ln_phi_iter_inv(spec, ln_int, j))
        log.debug1('a_%d = %.10g', j, out[j-1])
    return out

def supnorm_report(f, sets, m, J=25, cell_area=1., variant='phi'):
    '''a_j next to ||f||_inf on D_j and on the last set'''
    a = supnorm_recovery(f, sets, m, J, cell_area, variant)
    f = numpy.abs(numpy.asarray(f, dtype=float))
    full = _nested(sets, int(J))
    sup_j = numpy.array([f[D].max() for D in full])
    return pandas.DataFrame({'j': numpy.arange(1, int(J) + 1), 'a_j': a, 'sup_D_j': sup_j})

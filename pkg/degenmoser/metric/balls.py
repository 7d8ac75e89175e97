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
Metric ball volumes and the doubling increment

delta0(r) is the radius decrement that halves the ball:
|B(0, r - delta0)| = |B(0, r)|/2, and nu0(r) = 1 - delta0(r)/r.
'''

from dataclasses import dataclass
import numpy
import pandas
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, ResolutionError
from degenmoser.metric.grid import ball_grid
from degenmoser.metric.ccmetric import cc_distance_field, STENCIL

DELTA0_RTOL = getattr(__config__, 'metric_delta0_rtol', 1e-3)
MIN_BALL_CELLS = getattr(__config__, 'metric_min_ball_cells', 25)
VOLUME_FACTOR = getattr(__config__, 'metric_volume_factor', 4.)


@dataclass
class BallProfile:
    radii: numpy.ndarray
    volume: numpy.ndarray
    delta0: numpy.ndarray
    nu0: numpy.ndarray

    def doubling_ratios(self):
        '''|B(0, r_{i+1})|/|B(0, r_i)| for consecutive radii'''
        return self.volume[1:] / self.volume[:-1]

    def volume_model_check(self, geom, factor=VOLUME_FACTOR, verbose=None):
        '''(ratios, ok): measured volume over geom.ball_volume_estimate, ok when
        every ratio lies in [1/factor, factor]'''
        ratio = self.volume / geom.ball_volume_estimate(self.radii)
        ok = bool(numpy.all((ratio >= 1. / factor) & (ratio <= factor)))
        if not ok:
            log = logger.new_logger(verbose=verbose)
            log.warn('ball volume model off by more than %g: ratios %s', factor, ratio)
        return ratio, ok

    def to_frame(self):
        return pandas.DataFrame({'r': self.radii, 'vol': self.volume,
                                 'delta0': self.delta0, 'nu0': self.nu0})


def halving_decrement(field, r, rtol=DELTA0_RTOL):
    '''delta with |B(r - delta)| = |B(r)|/2, by bisection to rtol*r'''
    half = .5 * field.cell_count(r)
    lo, hi = 0., r
    while hi - lo > rtol * r:
        mid = .5 * (lo + hi)
        if field.cell_count(r - mid) > half:
            lo = mid
        else:
            hi = mid
    return .5 * (lo + hi)

def ball_profile(field, r_list, rtol=DELTA0_RTOL, min_cells=MIN_BALL_CELLS, verbose=None):
    '''BallProfile of the field's center over r_list (sorted ascending)'''
    log = logger.new_logger(verbose=verbose)
    radii = numpy.sort(numpy.asarray(r_list, dtype=float))
    if radii.size == 0 or radii[0] <= 0:
        raise InvalidParameterError('radii must be positive')
    vol = numpy.empty_like(radii)
    delta = numpy.empty_like(radii)
    for i, r in enumerate(radii):
        field.check_inside(r)
        count = field.cell_count(r)
        if count < min_cells:
            raise ResolutionError(f'B(0, {r:.6g}) holds {count} cells, fewer than {min_cells}')
        vol[i] = count * field.grid.cell_area
        delta[i] = halving_decrement(field, r, rtol)
        log.debug('r = %.6g  |B| = %.6e  delta0/r = %.4f  (%d cells)', r, vol[i], delta[i]/r, count)
    return BallProfile(radii, vol, delta, 1. - delta / radii)

def ball_profile_adaptive(geom, r_list, n=200, stencil=STENCIL, rtol=DELTA0_RTOL, verbose=None):
    '''BallProfile from one grid per radius, each sized to its ball'''
    log = logger.new_logger(verbose=verbose)
    t0 = log.init_timer()
    parts = []
    for r in sorted(float(r) for r in r_list):
        field = cc_distance_field(geom, ball_grid(geom, r, n), stencil=stencil, verbose=verbose)
        parts.append(ball_profile(field, [r], rtol=rtol, verbose=verbose))
    log.timer('ball profile', *t0)
    return BallProfile(*(numpy.concatenate([getattr(p, k) for p in parts])
                         for k in ('radii', 'volume', 'delta0', 'nu0')))

def doubling_ratio(geom, r, n=200, stencil=STENCIL, verbose=None):
    '''|B(0, 2r)|/|B(0, r)|, each ball on its own grid'''
    prof = ball_profile_adaptive(geom, [r, 2 * r], n, stencil, verbose=verbose)
    return float(prof.doubling_ratios()[0])

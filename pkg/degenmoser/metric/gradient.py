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
A-gradient grad_A w = sqrt(A) grad w = (dw/dx, f(x) dw/dy)
'''

import numpy
from degenmoser.lib.exceptions import InvalidParameterError


def grad_A(geom, grid, w):
    '''(gx, gy) on the grid: centered differences inside, one-sided at the edge'''
    w = numpy.asarray(w, dtype=float)
    if w.shape != grid.shape:
        raise InvalidParameterError(f'grid function of shape {w.shape} on a {grid.shape} grid')
    gx, gy = numpy.gradient(w, grid.hx, grid.hy, edge_order=1)
    return gx, gy * geom.f(grid.x)[:, None]

def grad_norm(geom, grid, w):
    gx, gy = grad_A(geom, grid, w)
    return numpy.hypot(gx, gy)

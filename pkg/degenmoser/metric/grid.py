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
Cell-centered rectangular grids

Cell (i, j) has center (x0 + (i+1/2) hx, y0 + (j+1/2) hy).  On a grid
centered at the origin with nx even no cell center sits on x = 0, where the
degeneracy f vanishes.  Grid functions are arrays of shape (nx, ny).
'''

import numpy
from degenmoser.lib.exceptions import InvalidParameterError


class Grid2D:
    def __init__(self, x0, x1, y0, y1, nx, ny):
        if not (x1 > x0 and y1 > y0):
            raise InvalidParameterError(f'empty rectangle [{x0}, {x1}] x [{y0}, {y1}]')
        if int(nx) != nx or int(ny) != ny or nx < 2 or ny < 2:
            raise InvalidParameterError(f'grid needs at least 2 x 2 cells, got {nx} x {ny}')
        self.x0, self.x1 = float(x0), float(x1)
        self.y0, self.y1 = float(y0), float(y1)
        self.nx, self.ny = int(nx), int(ny)
        self.hx = (self.x1 - self.x0) / self.nx
        self.hy = (self.y1 - self.y0) / self.ny

    @classmethod
    def centered(cls, X, Y, nx, ny):
        '''[-X, X] x [-Y, Y]'''
        return cls(-X, X, -Y, Y, nx, ny)

    @property
    def shape(self):
        return (self.nx, self.ny)

    @property
    def size(self):
        return self.nx * self.ny

    @property
    def cell_area(self):
        return self.hx * self.hy

    @property
    def x(self):
        return self.x0 + (numpy.arange(self.nx) + .5) * self.hx

    @property
    def y(self):
        return self.y0 + (numpy.arange(self.ny) + .5) * self.hy

    def mesh(self):
        return numpy.meshgrid(self.x, self.y, indexing='ij')

    def index(self, i, j):
        return numpy.asarray(i) * self.ny + numpy.asarray(j)

    def locate(self, point):
        '''(i, j) of the cell containing point'''
        px, py = point
        i = int(numpy.clip(numpy.floor((px - self.x0) / self.hx), 0, self.nx - 1))
        j = int(numpy.clip(numpy.floor((py - self.y0) / self.hy), 0, self.ny - 1))
        return i, j

    def contains(self, point):
        px, py = point
        return self.x0 <= px <= self.x1 and self.y0 <= py <= self.y1

    def boundary_mask(self, width=1):
        mask = numpy.zeros(self.shape, dtype=bool)
        mask[:width] = mask[-width:] = True
        mask[:, :width] = mask[:, -width:] = True
        return mask

    def refined(self, factor=2):
        return Grid2D(self.x0, self.x1, self.y0, self.y1, self.nx*factor, self.ny*factor)

    def to_dict(self):
        return {'x0': self.x0, 'x1': self.x1, 'y0': self.y0, 'y1': self.y1,
                'nx': self.nx, 'ny': self.ny}

    def __repr__(self):
        return (f'Grid2D([{self.x0:.6g}, {self.x1:.6g}] x [{self.y0:.6g}, {self.y1:.6g}], '
                f'{self.nx} x {self.ny})')


def ball_height(geom, r, samples=2001):
    '''max over 0 <= x <= r of (r - x) f(x), the half height of B(0, r)'''
    x = numpy.linspace(0., r, samples)
    return float(numpy.max((r - x) * geom.f(x)))

def ball_grid(geom, r, n, margin=1.05, y_margin=1.25):
    '''Grid sized to B(0, r): X = margin r, Y = y_margin ball_height(r).

    nx is even and ny odd, so no cell center lies on x = 0 and the row
    y = 0 consists of cell centers.
    '''
    nx = int(n) + int(n) % 2
    ny = int(n) + 1 - int(n) % 2
    return Grid2D.centered(margin * r, y_margin * ball_height(geom, r), nx, ny)

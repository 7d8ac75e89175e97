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
Carnot-Caratheodory distance of A = diag(1, f(x)^2) on a grid

The metric is ds^2 = dx^2 + dy^2/f(x)^2.  Distances are shortest paths on
the stencil graph of cell centers, an edge (dx, dy) costing

    sqrt(dx^2 + (dy/f(x_mid))^2)

with x_mid the abscissa of the edge midpoint.  Edges with f(x_mid) = 0 are
left out.  The 16-point stencil adds the knight moves (2, 1), (1, 2) to the
8 neighbours.
'''

import numpy
import pandas
import scipy.sparse
from scipy.sparse import csgraph
from pyscf import lib
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import (InvalidParameterError, PreconditionError,
                                       ResolutionError)

STENCIL = getattr(__config__, 'metric_stencil', 16)

MOVES = {
    8: [(1, 0), (0, 1), (1, 1), (1, -1)],
    16: [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1), (1, -2)],
}


def edge_costs(geom, grid, stencil=STENCIL):
    '''(rows, cols, costs) of the undirected stencil graph, one entry per edge'''
    if stencil not in MOVES:
        raise InvalidParameterError(f'Unknown stencil {stencil}; use 8 or 16')
    x = grid.x
    nx, ny = grid.shape
    rows, cols, costs = [], [], []
    for di, dj in MOVES[stencil]:
        i = numpy.arange(max(0, -di), nx - max(0, di))
        j = numpy.arange(max(0, -dj), ny - max(0, dj))
        dx = di * grid.hx
        dy = dj * grid.hy
        if dj == 0:
            c = numpy.full(i.size, abs(dx))
        else:
            fm = geom.f(.5 * (x[i] + x[i + di]))
            with numpy.errstate(divide='ignore', over='ignore'):
                c = numpy.hypot(dx, dy / fm)
        ok = numpy.isfinite(c)
        ii, jj = numpy.meshgrid(i[ok], j, indexing='ij')
        rows.append(grid.index(ii, jj).ravel())
        cols.append(grid.index(ii + di, jj + dj).ravel())
        costs.append(numpy.repeat(c[ok], j.size))
    return numpy.concatenate(rows), numpy.concatenate(cols), numpy.concatenate(costs)


class MetricGraph:
    '''Stencil graph of a geometry on a grid; one graph serves many centers.

    Attributes:
        geom : degeneracy profile with ``f``
        grid : :class:`Grid2D`
        stencil : 8 or 16
    '''
    def __init__(self, geom, grid, stencil=STENCIL, verbose=None):
        self.geom = geom
        self.grid = grid
        self.stencil = stencil
        self.verbose = verbose
        r_max = getattr(geom, 'r_max', numpy.inf)
        if numpy.isfinite(r_max) and not grid.hx < r_max / 10:
            raise ResolutionError(f'hx = {grid.hx:.3g} does not resolve f (needs hx < r_max/10 = {r_max/10:.3g})')
        log = logger.new_logger(verbose=verbose)
        t0 = log.init_timer()
        self._rows, self._cols, self._costs = edge_costs(geom, grid, stencil)
        log.debug('metric graph: %d nodes, %d edges, stencil %d',
                  grid.size, self._costs.size, stencil)
        log.timer('metric graph', *t0)

    def _source_links(self, center):
        grid = self.grid
        px, py = center
        if not grid.contains(center):
            raise PreconditionError(f'center {center} outside the grid')
        ic = numpy.nonzero(numpy.abs(grid.x - px) <= grid.hx * (1 + 1e-12))[0]
        jc = numpy.nonzero(numpy.abs(grid.y - py) <= grid.hy * (1 + 1e-12))[0]
        ii, jj = numpy.meshgrid(ic, jc, indexing='ij')
        ii = ii.ravel()
        jj = jj.ravel()
        dx = grid.x[ii] - px
        dy = grid.y[jj] - py
        dy[numpy.abs(dy) <= 1e-12 * grid.hy] = 0.
        fm = self.geom.f(.5 * (grid.x[ii] + px))
        with numpy.errstate(divide='ignore', invalid='ignore', over='ignore'):
            c = numpy.where(dy == 0, numpy.abs(dx), numpy.hypot(dx, dy / fm))
        ok = numpy.isfinite(c)
        return grid.index(ii[ok], jj[ok]), c[ok]

    def distances(self, center):
        '''d_A(center, cell) for every cell as an (nx, ny) array.

        When f vanishes at the center abscissa the center should sit on a
        row of cell centers, otherwise the first step is vertical and costly.
        '''
        N = self.grid.size
        nodes, c = self._source_links(center)
        exact = c == 0
        if exact.any():
            graph = scipy.sparse.coo_matrix((self._costs, (self._rows, self._cols)), shape=(N, N))
            d = csgraph.dijkstra(graph.tocsr(), directed=False, indices=int(nodes[exact][0]))
        else:
            rows = numpy.concatenate([self._rows, numpy.full(nodes.size, N)])
            cols = numpy.concatenate([self._cols, nodes])
            costs = numpy.concatenate([self._costs, c])
            graph = scipy.sparse.coo_matrix((costs, (rows, cols)), shape=(N+1, N+1))
            d = csgraph.dijkstra(graph.tocsr(), directed=False, indices=N)[:N]
        return d.reshape(self.grid.shape)

    def field(self, center=(0., 0.)):
        return MetricField(self.geom, self.grid, center, self.distances(center),
                           self.stencil, self.verbose)


def cc_distance_field(geom, grid, center=(0., 0.), stencil=STENCIL, verbose=None):
    '''MetricField of d_A(center, .) on the grid'''
    return MetricGraph(geom, grid, stencil, verbose).field(center)


class MetricField(lib.StreamObject):
    '''Per-cell CC distance from a center; immutable after construction'''
    def __init__(self, geom, grid, center, dist, stencil=STENCIL, verbose=None):
        self.verbose = getattr(__config__, 'verbose', logger.QUIET) if verbose is None else verbose
        self.geom = geom
        self.grid = grid
        self.center = (float(center[0]), float(center[1]))
        self.dist = dist
        self.stencil = stencil
        self.dist.flags.writeable = False
        self._sorted = numpy.sort(dist.ravel())

    def dump_flags(self, verbose=None):
        log = logger.new_logger(self, verbose)
        log.info('******** %s ********', self.__class__)
        log.info('geometry = %s', self.geom)
        log.info('grid = %s  stencil = %d', self.grid, self.stencil)
        log.info('center = (%g, %g)', *self.center)
        return self

    def ball_mask(self, r):
        return self.dist < r

    def cell_count(self, r):
        return int(numpy.searchsorted(self._sorted, r, side='left'))

    def volume(self, r):
        '''|B(center, r)| = cell count * cell area'''
        return self.cell_count(r) * self.grid.cell_area

    @property
    def boundary_distance(self):
        '''largest r with B(center, r) clear of the outer cell ring'''
        return float(self.dist[self.grid.boundary_mask()].min())

    def check_inside(self, r):
        if r > self.boundary_distance:
            raise PreconditionError(
                f'B(center, {r:.6g}) reaches the grid boundary (clear up to {self.boundary_distance:.6g})')

    def to_frame(self):
        xx, yy = self.grid.mesh()
        return pandas.DataFrame({'x': xx.ravel(), 'y': yy.ravel(), 'dist': self.dist.ravel()})


def euclidean_radii(field, r):
    '''(inradius, outradius) of {dist < r} about the center'''
    xx, yy = field.grid.mesh()
    rho = numpy.hypot(xx - field.center[0], yy - field.center[1])
    inside = field.ball_mask(r)
    if not inside.any():
        raise ResolutionError(f'B(center, {r:.6g}) contains no cell')
    outside = ~inside
    inner = float(rho[outside].min()) if outside.any() else numpy.inf
    return inner, float(rho[inside].max())


def probe_upper_bound(geom, center, point):
    '''Length of the cheaper L-shaped path center -> point
    (horizontal then vertical, or vertical then horizontal)'''
    cx, cy = center
    px, py = point
    dx = abs(px - cx)
    dy = abs(py - cy)
    if dy == 0:
        return dx
    with numpy.errstate(divide='ignore'):
        via_p = dx + dy / float(geom.f(numpy.asarray(px)))
        via_c = dx + dy / float(geom.f(numpy.asarray(cx)))
    return min(via_p, via_c)

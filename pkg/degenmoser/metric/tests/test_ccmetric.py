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

import unittest
import numpy
from degenmoser.lib.exceptions import (InvalidParameterError, PreconditionError,
                                       ResolutionError)
from degenmoser.geometry.profiles import Geometry, Isotropic
from degenmoser.metric.grid import Grid2D
from degenmoser.metric import ccmetric

def setUpModule():
    global iso, iso_grid, iso_field, geom, grid, graph, field
    iso = Isotropic()
    iso_grid = Grid2D.centered(1., 1., 100, 101)
    iso_field = ccmetric.cc_distance_field(iso, iso_grid)
    geom = Geometry(1, .5)
    grid = Grid2D.centered(.3, .02, 120, 81)
    graph = ccmetric.MetricGraph(geom, grid)
    field = graph.field((0., 0.))

def tearDownModule():
    global iso, iso_grid, iso_field, geom, grid, graph, field
    del iso, iso_grid, iso_field, geom, grid, graph, field

class KnownValues(unittest.TestCase):
    def test_isotropic(self):
        xx, yy = iso_grid.mesh()
        rho = numpy.hypot(xx, yy)
        far = rho > .1
        ratio = iso_field.dist[far] / rho[far]
        assert ratio.min() > 1 - 1e-12
        assert ratio.max() < 1.05

    def test_octile_bias(self):
        f8 = ccmetric.cc_distance_field(iso, iso_grid, stencil=8)
        xx, yy = iso_grid.mesh()
        rho = numpy.hypot(xx, yy)
        far = rho > .3
        ratio = f8.dist[far] / rho[far]
        assert 1.06 < ratio.max() < 1.09

    def test_center_cells(self):
        assert abs(iso_field.dist.min() - iso_grid.hx / 2) < 1e-12
        assert abs(field.dist.min() - grid.hx / 2) < 1e-12

    def test_lower_bounds(self):
        xx, yy = grid.mesh()
        assert numpy.all(field.dist >= numpy.abs(xx) - 1e-12)
        # f <= 1: every path is at least as long as in the Euclidean metric
        assert numpy.all(field.dist >= numpy.hypot(xx, yy) * (1 - 1e-12))

    def test_probe_upper_bound(self):
        xx, yy = grid.mesh()
        bound = numpy.array([ccmetric.probe_upper_bound(geom, (0., 0.), p)
                             for p in zip(xx.ravel(), yy.ravel())]).reshape(grid.shape)
        assert numpy.all(field.dist <= bound * (1 + 1e-9))

    def test_degenerate_vertical(self):
        i = numpy.argmin(numpy.abs(grid.x))
        j = numpy.argmin(numpy.abs(grid.y - .01))
        d = field.dist[i, j]
        assert numpy.isfinite(d)
        assert d > 10 * abs(grid.y[j])

    def test_symmetry(self):
        a = (grid.x[20], grid.y[10])
        b = (grid.x[100], grid.y[70])
        c = (grid.x[61], grid.y[40])
        da = graph.distances(a)
        db = graph.distances(b)
        dc = graph.distances(c)
        assert abs(da[100, 70] - db[20, 10]) < 1e-10
        assert abs(da[61, 40] - dc[20, 10]) < 1e-10
        assert abs(db[61, 40] - dc[100, 70]) < 1e-10
        assert dc[61, 40] == 0

    def test_triangle(self):
        # elliptic part x in [0.15, 0.28]
        rng = numpy.random.default_rng(7)
        cols = numpy.nonzero((grid.x > .15) & (grid.x < .28))[0]
        for _ in range(5):
            a, b = rng.choice(cols, 2)
            ja, jb = rng.integers(0, grid.ny, 2)
            da = graph.distances((grid.x[a], grid.y[ja]))
            db = graph.distances((grid.x[b], grid.y[jb]))
            assert numpy.all(da <= da[b, jb] + db + 1e-12)

    def test_refinement(self):
        coarse = ccmetric.cc_distance_field(geom, Grid2D.centered(.3, .02, 120, 81))
        fine = ccmetric.cc_distance_field(geom, Grid2D.centered(.3, .02, 240, 161))
        for p in ((.1, .005), (.2, .005), (.1, .01), (.2, .01), (-.15, -.008)):
            d0 = coarse.dist[coarse.grid.locate(p)]
            d1 = fine.dist[fine.grid.locate(p)]
            assert abs(d1 - d0) < .05 * d1

    def test_containment(self):
        r = .2
        inner, outer = ccmetric.euclidean_radii(field, r)
        assert 0 < inner < outer < r
        inner, outer = ccmetric.euclidean_radii(iso_field, .5)
        assert .5 / 1.03 - iso_grid.hx < inner <= outer < .5

    def test_ball_volume(self):
        assert field.volume(.2) == field.cell_count(.2) * grid.cell_area
        assert field.volume(.1) < field.volume(.2)
        assert field.boundary_distance > .2
        with self.assertRaises(PreconditionError):
            field.check_inside(1.)

    def test_to_frame(self):
        df = iso_field.to_frame()
        assert list(df.columns) == ['x', 'y', 'dist']
        assert len(df) == iso_grid.size

    def test_immutable(self):
        with self.assertRaises(ValueError):
            field.dist[0, 0] = 1.

    def test_errors(self):
        with self.assertRaises(ResolutionError):
            ccmetric.MetricGraph(geom, Grid2D.centered(1., .1, 50, 11))
        with self.assertRaises(PreconditionError):
            graph.field((1., 0.))
        with self.assertRaises(InvalidParameterError):
            ccmetric.cc_distance_field(iso, iso_grid, stencil=12)

if __name__ == "__main__":
    print("Full Tests for the CC distance")
    unittest.main()

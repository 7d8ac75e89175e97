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
from degenmoser.geometry.profiles import Geometry, Isotropic
from degenmoser.metric.grid import Grid2D, ball_grid
from degenmoser.metric.ccmetric import cc_distance_field
from degenmoser.metric.gradient import grad_A, grad_norm

class KnownValues(unittest.TestCase):
    def test_linear(self):
        geom = Geometry(1, .5)
        grid = Grid2D.centered(.3, .05, 60, 41)
        xx, yy = grid.mesh()
        gx, gy = grad_A(geom, grid, xx)
        assert abs(gx - 1).max() < 1e-12
        assert abs(gy).max() < 1e-12
        gx, gy = grad_A(geom, grid, yy)
        assert abs(gx).max() < 1e-12
        assert abs(gy - geom.f(xx)).max() < 1e-10

    def test_shape_mismatch(self):
        grid = Grid2D.centered(1., 1., 10, 11)
        with self.assertRaises(ValueError):
            grad_A(Isotropic(), grid, numpy.zeros((11, 10)))

    def test_subunit_isotropic(self):
        grid = Grid2D.centered(1., 1., 256, 257)
        field = cc_distance_field(Isotropic(), grid)
        xx, yy = grid.mesh()
        away = numpy.hypot(xx, yy) > 3 * grid.hx
        g = grad_norm(field.geom, grid, field.dist)
        assert g[away].max() <= 1.15

    def test_subunit_degenerate(self):
        geom = Geometry(1, .5)
        r = .2
        grid = ball_grid(geom, r, 256)
        field = cc_distance_field(geom, grid)
        g = grad_norm(geom, grid, field.dist)
        xx, _ = grid.mesh()
        inside = field.ball_mask(r) & (numpy.abs(xx) > 3 * grid.hx)
        inside[grid.boundary_mask()] = False
        assert numpy.median(g[inside]) <= 1.05
        assert numpy.percentile(g[inside], 90) <= 1.15

if __name__ == "__main__":
    print("Full Tests for the A-gradient")
    unittest.main()

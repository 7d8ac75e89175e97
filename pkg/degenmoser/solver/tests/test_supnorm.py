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
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.metric.grid import Grid2D
from degenmoser.solver.supnorm import supnorm_recovery, supnorm_report

def _radius(grid):
    xx, yy = grid.mesh()
    return numpy.hypot(xx, yy)

class KnownValues(unittest.TestCase):
    def test_constant(self):
        grid = Grid2D.centered(1., 1., 100, 100)
        d = _radius(grid)
        D = d < .56
        omega = D.sum() * grid.cell_area
        a = supnorm_recovery(2 * numpy.ones(grid.shape), [D], 3., J=25, cell_area=grid.cell_area)
        # Phi is linear up to its first junction
        assert abs(a[0] / (2 * omega) - 1) < 1e-12
        assert abs(a[-1] / 2 - 1) < .01
        assert numpy.all(numpy.diff(abs(a - 2)) <= 1e-12)

    def test_cosine_bump(self):
        r = 8.
        grid = Grid2D.centered(8.4, 8.4, 200, 200)
        d = _radius(grid)
        f = 1 + numpy.cos(numpy.pi * numpy.minimum(d / r, 1.))
        a = supnorm_recovery(f, [d < r], 3., J=25, cell_area=grid.cell_area)
        assert abs(a[-1] / f.max() - 1) < .01

    def test_discontinuous(self):
        grid = Grid2D.centered(1.5, 1.5, 150, 150)
        d = _radius(grid)
        f = numpy.where(d < 1, 1., 3.)
        sets = [d < 1 + .5 / j for j in range(1, 26)]
        df = supnorm_report(f, sets, 3., J=25, cell_area=grid.cell_area)
        a = df['a_j'].values
        # between ||f||_inf on the limit set and the limit of ||f||_inf on D_j
        assert 1 - .01 <= a[-1] <= 3 + .01
        assert a[-1] > 2
        assert numpy.all(df['sup_D_j'] == 3)
        assert list(df.columns) == ['j', 'a_j', 'sup_D_j']

    def test_errors(self):
        grid = Grid2D.centered(1., 1., 20, 20)
        d = _radius(grid)
        with self.assertRaises(InvalidParameterError):
            supnorm_recovery(numpy.ones(grid.shape), [d < .5, d < .8], 3.)
        with self.assertRaises(InvalidParameterError):
            supnorm_recovery(numpy.ones(grid.shape), [d < .5], 3., J=0)

if __name__ == "__main__":
    print("Full Tests for sup-norm recovery")
    unittest.main()

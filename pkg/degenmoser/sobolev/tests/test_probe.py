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
from degenmoser.lib.exceptions import PreconditionError, ResolutionError
from degenmoser.geometry.profiles import Geometry, Isotropic
from degenmoser.metric.grid import Grid2D, ball_grid
from degenmoser.metric.ccmetric import cc_distance_field
from degenmoser.sobolev import probe

def setUpModule():
    global iso_field, geom, coarse, fine, rho
    iso_field = cc_distance_field(Isotropic(), ball_grid(Isotropic(), .5, 200))
    geom = Geometry(1, .4)
    rho = .2
    coarse = cc_distance_field(geom, ball_grid(geom, rho, 128))
    fine = cc_distance_field(geom, ball_grid(geom, rho, 256))

def tearDownModule():
    global iso_field, geom, coarse, fine, rho
    del iso_field, geom, coarse, fine, rho

class KnownValues(unittest.TestCase):
    def test_zero(self):
        p = probe.sobolev_ratio(iso_field, 3., .5, numpy.zeros(iso_field.grid.shape))
        assert p.lhs == 0 and p.ratio == 0
        assert p.jensen_ok

    def test_tent(self):
        w = probe.test_family(iso_field, .5, 'tent')
        p = probe.sobolev_ratio(iso_field, 3., .5, w)
        # w <= 1 lies on the linear branch of Phi: LHS is the ball average
        ball = iso_field.ball_mask(.5)
        assert abs(p.lhs / w[ball].mean() - 1) < 1e-12
        # continuum value: mean of (1 - r/rho) over the disc is 1/3, int |grad w| dmu = 1/rho
        assert abs(p.ratio - 1. / 3) < .08 / 3
        assert abs(p.ln_phi - numpy.log(.5)) < 1e-15

    def test_bump(self):
        w = probe.test_family(iso_field, .5, 'metric_radial_bump')
        assert .99 < w.max() <= 1
        assert numpy.all(w[iso_field.dist >= .5] == 0)
        w = probe.test_family(iso_field, .5, 'tensor_bump')
        assert w.max() > .99
        assert numpy.all(w[iso_field.dist >= .5] == 0)

    def test_extremal(self):
        g = Geometry(1, 1.5)
        field = cc_distance_field(g, ball_grid(g, .2, 128))
        eps = .05
        w = probe.test_family(field, .2, 'extremal', eps)
        assert abs(numpy.log(w.max()) - numpy.log(1 / eps)**2.5) < 1e-9
        assert numpy.all(w[field.dist >= .2] == 0)
        with self.assertRaises(ResolutionError):
            probe.test_family(field, .2, 'extremal', field.grid.hx)

    def test_support(self):
        with self.assertRaises(PreconditionError):
            probe.sobolev_ratio(iso_field, 3., .5, numpy.ones(iso_field.grid.shape))

    def test_resolution(self):
        field = cc_distance_field(Isotropic(), Grid2D.centered(1., 1., 40, 41))
        w = probe.test_family(field, .5, 'tent')
        with self.assertRaises(ResolutionError):
            probe.sobolev_ratio(field, 3., .5, w)

    def test_family_jensen_and_scaling(self):
        df = probe.family_sweep(coarse, 3., rho, eps_list=(rho / 4, rho / 8), amplitudes=(1., 10.))
        assert len(df) == 10
        assert df['jensen'].all()
        assert numpy.all(numpy.isfinite(df['ln_ratio']))

    def test_family_refinement(self):
        kw = dict(eps_list=(rho / 4, rho / 8), amplitudes=(1., 10.))
        c0 = probe.family_sweep(coarse, 3., rho, **kw)['ratio'].max()
        c1 = probe.family_sweep(fine, 3., rho, **kw)['ratio'].max()
        assert numpy.isfinite(c0) and numpy.isfinite(c1)
        assert abs(c1 / c0 - 1) < .2

    def test_global_constant(self):
        c = probe.global_sobolev_constant(iso_field, 3.)
        assert 0 < c < numpy.inf

if __name__ == "__main__":
    print("Full Tests for Sobolev probes")
    unittest.main()

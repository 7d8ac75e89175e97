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
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError
from degenmoser.geometry.profiles import Geometry, Isotropic
from degenmoser.sobolev import endpoint
from degenmoser.orlicz.young import make_young

def setUpModule():
    global geom, geom2
    geom = Geometry(1, .5)
    geom2 = Geometry(2, 1.)

def tearDownModule():
    global geom, geom2
    del geom, geom2

class KnownValues(unittest.TestCase):
    def test_near_regime(self):
        x1, y1 = .1, .1001
        K = endpoint.kernel_eval(geom, (x1, 0.), (y1, 0.))
        ref = 1. / ((y1 - x1) * float(geom.f(x1)))
        assert abs(K / ref - 1) < 1e-9

    def test_far_regime(self):
        K = endpoint.kernel_eval(geom, (.01, 0.), (.2, .001))
        _, Fp, _, f = geom.F_derivatives(.2)
        assert abs(K / (abs(Fp) / f) - 1) < 1e-9

    def test_regime_split(self):
        x1 = .1
        _, Fp, _, f1 = geom.F_derivatives(x1)
        r = 1. / abs(Fp)
        near = 1. / (r * f1)
        _, Fp2, _, f2 = geom.F_derivatives(x1 + r)
        far = abs(Fp2) / f2
        assert 1 <= near / far < 4

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            endpoint.kernel_eval(geom, (.2, 0.), (.1, 0.))
        with self.assertRaises(PreconditionError):
            endpoint.kernel_eval(geom, (0., 0.), (.1, 0.))
        with self.assertRaises(InvalidParameterError):
            endpoint.endpoint_check(Isotropic(), 3., .1, [1.])
        with self.assertRaises(InvalidParameterError):
            endpoint.endpoint_check(geom, 3., .1, [0.])

    def test_small_alpha(self):
        _, df = endpoint.endpoint_check(geom2, 3., .01, [1e-6, 1e-8, 1e-10])
        ratio = numpy.exp(df['ln_ratio'])
        assert numpy.all(numpy.isfinite(ratio))
        assert abs(ratio.max() / ratio.min() - 1) < 1e-6

    def test_refinement(self):
        alphas = [1e-3, 1., 1e3]
        c0, _ = endpoint.endpoint_check(geom2, 3., .01, alphas, nodes=2000)
        c1, df = endpoint.endpoint_check(geom2, 3., .01, alphas, nodes=4000)
        assert 0 < c1 < numpy.inf
        assert abs(c1 / c0 - 1) < .05
        assert list(df.columns) == ['alpha', 'y1_argmax', 'ln_lhs', 'ln_rhs', 'ln_ratio']

    def test_large_m(self):
        # the integrand peak sits far out in ln(1/r) and needs local refinement
        phi = make_young(8.)
        ln_vol = float(geom.ln_ball_volume(numpy.log(10.)))
        vals = [endpoint.ln_endpoint_integral(geom, phi, .05, 0., ln_vol, nodes=n)
                for n in (2000, 4000)]
        assert numpy.all(numpy.isfinite(vals))
        assert vals[1] > 1e6
        assert abs(vals[0] - vals[1]) < 1e-6 * vals[1]
        v3 = [endpoint.ln_endpoint_integral(geom, make_young(3.), .05, 0., ln_vol, nodes=n)
              for n in (2000, 4000)]
        assert abs(v3[0] - v3[1]) < 1e-3

if __name__ == "__main__":
    print("Full Tests for the endpoint kernel")
    unittest.main()

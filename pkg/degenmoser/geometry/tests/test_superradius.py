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
from degenmoser.geometry.profiles import Geometry, Isotropic
from degenmoser.geometry import radius as sr
from degenmoser.geometry.radius import SuperradiusSpec

class KnownValues(unittest.TestCase):
    def test_convexity_ratio(self):
        ell = numpy.linspace(1.2, 1e4, 500)
        q = sr.convexity_ratio(Geometry(1, .5), ell)
        assert q.min() >= 1 - 1e-12 and q.max() <= 1.5
        q = sr.convexity_ratio(Geometry(2, 1.), numpy.linspace(4., 1e4, 500))
        assert q.min() >= .5 and q.max() <= 2

    def test_phi_above_r(self):
        for geom, m in ((Geometry(1, .4), 3.), (Geometry(2, 1.), 3.), (Geometry(1, .5), 2.5)):
            ell = numpy.linspace(geom.ell_min, geom.ell_min + 2000, 1000)
            assert numpy.all(sr.ln_superradius(SuperradiusSpec(m, geom), ell) + ell >= 0)

    def test_monotone(self):
        ok, worst = sr.monotonicity_check(SuperradiusSpec(3., Geometry(1, .4)),
                                          numpy.linspace(40, 2000, 1000))
        assert ok and worst < 0
        ok, _ = sr.monotonicity_check(SuperradiusSpec(3., Geometry(2, 1.)),
                                      numpy.linspace(20, 500, 1000))
        assert ok

    def test_monotone_negative_control(self):
        # sigma (m-1) = 2 > 1
        ok, worst = sr.monotonicity_check(SuperradiusSpec(3., Geometry(1, 1.)),
                                          numpy.linspace(40, 2000, 1000))
        assert not ok and worst > 0

    def test_growth(self):
        spec = SuperradiusSpec(3., Geometry(1, .4))
        ell = numpy.linspace(40, 2000, 1000)
        c = sr.superradius_growth(spec, ell)
        assert 1 < c < 3
        # phi(r) <= r^{1 - c/(ln 1/r)^{1 - sigma(m-1)}}
        bound = -ell + c * ell**.8
        assert numpy.all(sr.ln_superradius(spec, ell) <= bound + 1e-9 * ell)

    def test_isotropic(self):
        spec = SuperradiusSpec(3., Isotropic())
        assert abs(sr.superradius(spec, .25) - .25) < 1e-15

    def test_spec(self):
        with self.assertRaises(InvalidParameterError):
            SuperradiusSpec(2., Geometry(1, .5))
        with self.assertRaises(InvalidParameterError):
            SuperradiusSpec(3., Geometry(1, .5), C_m=0.)

    def test_package_exports(self):
        import degenmoser.geometry as g
        assert g.superradius is sr.superradius
        assert g.ln_superradius is sr.ln_superradius
        assert abs(g.superradius(SuperradiusSpec(3., Isotropic()), .25) - .25) < 1e-15


if __name__ == "__main__":
    print("Full Tests for the superradius")
    unittest.main()

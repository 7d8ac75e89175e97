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
from hypothesis import given, settings, strategies as st
from degenmoser.lib.logval import LogVal
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.orlicz.young import PhiM, PhiTildeM
from degenmoser.iterates import theta
from degenmoser.iterates.theta import IterSpec, ThetaRep

def setUpModule():
    global rng
    rng = numpy.random.default_rng(20240101)

def tearDownModule():
    global rng
    del rng

class KnownValues(unittest.TestCase):
    def test_phi_iter(self):
        spec = IterSpec(2., 3)
        assert abs(theta.phi_iter(spec, LogVal(4.)).log_value - 25.) < 1e-12
        phi = PhiM(2.)
        ref = phi.ln_eval(phi.ln_eval(phi.ln_eval(4.)))
        assert abs(theta.ln_phi_iter(spec, 4.) - ref) < 1e-12
        assert abs(theta.phi_iter(IterSpec(2., 5), LogVal(-20.)).log_value - 5.) < 1e-12
        assert theta.phi_iter(spec, 0.).is_zero
        t = LogVal(-3.7)
        assert theta.phi_iter(IterSpec(3., 0), t).log_value == t.log_value

    def test_phi_iter_inv(self):
        assert abs(theta.phi_iter_inv(IterSpec(2., 3), LogVal(25.)).log_value - 4.) < 1e-12
        assert abs(theta.phi_iter_inv(IterSpec(2., 1), LogVal(5.)).log_value) < 1e-12
        assert theta.phi_iter_inv(IterSpec(2., 0), LogVal(1.5)).log_value == 1.5
        assert theta.phi_iter_inv(IterSpec(2., 4), 0.).is_zero

    def test_theta_rep(self):
        lnt = numpy.array([-20., 0., 4., 7.5, 300.])
        rep = ThetaRep.from_log(2., lnt)
        assert numpy.all(rep.depth == [5, 1, 0, 0, 0])
        assert numpy.all(rep.theta[:2] >= 2.) and numpy.all(rep.theta[:2] < 3.)
        assert numpy.abs(rep.to_log() - lnt).max() < 1e-12 * 300
        assert numpy.abs(rep.shift(7).unshift(7).to_log() - lnt).max() < 1e-12 * 300

    def test_composition(self):
        lnt = rng.uniform(-50, 50, 1000)
        for m in (1.5, 2., 3.):
            spec = IterSpec(m, 1)
            for j1, j2 in ((1, 1), (2, 5), (7, 3)):
                direct = theta.ln_phi_iter(spec, lnt, j1 + j2)
                composed = theta.ln_phi_iter(spec, theta.ln_phi_iter(spec, lnt, j2), j1)
                scale = numpy.maximum(1., numpy.abs(direct))
                assert (numpy.abs(direct - composed) / scale).max() < 1e-12

    def test_round_trip(self):
        lnt = rng.uniform(-50, 50, 1000)
        for m in (2., 3.):
            spec = IterSpec(m, 6)
            back = theta.ln_phi_iter_inv(spec, theta.ln_phi_iter(spec, lnt))
            assert numpy.abs(back - lnt).max() < 1e-12 * 50

    def test_phi_tilde_iter(self):
        spec = IterSpec(2.5, 1, variant='phi_tilde')
        lnt = numpy.linspace(-20, 20, 81)
        assert numpy.abs(theta.ln_phi_iter(spec, lnt) - PhiTildeM(2.5).ln_eval(lnt)).max() < 1e-12
        spec = spec.replace(j=4)
        back = theta.ln_phi_iter_inv(spec, theta.ln_phi_iter(spec, lnt))
        assert numpy.abs(back - lnt).max() < 1e-9
        # identical to Phi_m once above E
        ref = theta.ln_phi_iter(IterSpec(2.5, 4), 10.)
        assert abs(theta.ln_phi_iter(spec, 10.) - ref) < 1e-12

    def test_iter_spec(self):
        for beta in (0., .5):
            with self.assertRaises(InvalidParameterError):
                IterSpec(2., 1, beta)
        with self.assertRaises(InvalidParameterError):
            IterSpec(1., 1)
        with self.assertRaises(InvalidParameterError):
            IterSpec(2., -1)
        with self.assertRaises(InvalidParameterError):
            IterSpec(2., 1, variant='psi')
        assert IterSpec(2., 1, -.5).beta == -.5

    def test_li_growth(self):
        g = theta.li_growth(IterSpec(2.), LogVal(5.), LogVal(4.5), [0, 1, 10, 100, 1000])
        assert abs(g[0] - .5) < 1e-12
        assert numpy.all(numpy.diff(g) > 0)
        assert g[-1] > 100
        g = theta.li_growth(IterSpec(3.), 2., 1., [1, 10, 100])
        assert numpy.all(numpy.diff(g) > 0)
        with self.assertRaises(InvalidParameterError):
            theta.li_growth(IterSpec(2.), 1., 2., [1])

    @settings(max_examples=100, deadline=None)
    @given(st.floats(-50, 50), st.integers(1, 20), st.sampled_from([1.5, 2., 3.]))
    def test_iterate_inverse(self, lnt, j, m):
        spec = IterSpec(m, j)
        back = theta.ln_phi_iter_inv(spec, theta.ln_phi_iter(spec, lnt))
        assert abs(back - lnt) < 1e-8 * max(1., abs(lnt))


if __name__ == "__main__":
    print("Full Tests for iterated Young functions")
    unittest.main()

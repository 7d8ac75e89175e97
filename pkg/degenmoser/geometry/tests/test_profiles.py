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
from degenmoser.lib.exceptions import DomainError, InvalidParameterError
from degenmoser.geometry import profiles
from degenmoser.geometry.profiles import Geometry, Isotropic

class _SteepProfile:
    '''|F'| = exp(ell^2)/r, far from doubling'''
    r_max = .5

    def chain(self, ell):
        a1 = numpy.exp(numpy.asarray(ell, dtype=float)**2)
        return ell * a1, a1, a1

class KnownValues(unittest.TestCase):
    def test_iterlog(self):
        assert abs(profiles.iterlog(1, numpy.exp(-4.)) - 4.) < 1e-14
        assert abs(profiles.iterlog(2, numpy.exp(-numpy.exp(3.))) - 3.) < 1e-14
        with self.assertRaises(DomainError) as ctx:
            profiles.iterlog(2, .9)
        assert ctx.exception.level == 2
        with self.assertRaises(DomainError):
            profiles.iterlog(1, 1.5)

    def test_r_max(self):
        assert abs(Geometry(1, .5).r_max - numpy.exp(-1.1)) < 1e-15
        assert abs(Geometry(2, 1.).r_max - numpy.exp(-numpy.exp(1.1))) < 1e-15
        with self.assertRaises(InvalidParameterError):
            Geometry(0, .5)
        with self.assertRaises(InvalidParameterError):
            Geometry(1, -.5)

    def test_derivatives_k1(self):
        F, dF, d2F, f = Geometry(1, .5).F_derivatives(numpy.exp(-4.))
        assert abs(F - 8.) < 1e-13
        assert abs(f - numpy.exp(-8.)) < 1e-18
        assert abs(dF / (-3 * numpy.exp(4.)) - 1) < 1e-13
        # r^2 F'' = (1+sigma) ell^sigma (1 + sigma/ell)
        assert abs(d2F * numpy.exp(-8.) - 3. * (1 + .125)) < 1e-12

    def test_finite_difference(self):
        h = 1e-5
        for k, sigma in ((1, .5), (1, 0.), (2, 1.), (3, .5)):
            geom = Geometry(k, sigma)
            r = numpy.exp(-numpy.linspace(geom.ell_min + numpy.log(2.), geom.ell_min + 30, 50))
            F, dF, d2F, _ = geom.F_derivatives(r)
            Fp = geom.F_derivatives(r * (1 + h))
            Fm = geom.F_derivatives(r * (1 - h))
            fd1 = (Fp[0] - Fm[0]) / (2 * h * r)
            fd2 = (Fp[1] - Fm[1]) / (2 * h * r)
            assert numpy.abs(fd1 / dF - 1).max() < 1e-6
            assert numpy.abs(fd2 / d2F - 1).max() < 1e-6

    def test_log_derivative_estimate(self):
        for sigma in (.5, 1.):
            geom = Geometry(2, sigma)
            r = numpy.exp(-numpy.linspace(geom.ell_min + numpy.log(2.), 500, 200))
            F, dF, _, _ = geom.F_derivatives(r)
            q = -dF * r * numpy.log(1 / r) / F
            assert q.min() >= .5 and q.max() <= 2

    def test_profile_extension(self):
        geom = Geometry(1, .5)
        f = geom.f(numpy.array([0., .5, geom.r_max, -.5]))
        assert f[0] == 0
        assert abs(f[1] - f[2]) < 1e-15 and f[3] == f[1]
        assert abs(geom.ln_f(numpy.exp(-4.)) + 8.) < 1e-13
        with self.assertRaises(DomainError):
            geom.F_derivatives(.5)
        # far below the float range in ell
        F, a1, a2 = geom.chain(1e6)
        assert numpy.isfinite(F) and a1 > 0 and a2 > 0

    def test_structural(self):
        r = numpy.logspace(-6, -1, 200)
        for geom in (Geometry(1, .5), Geometry(1, 1.)):
            report = profiles.structural_check(geom, r)
            assert all(c['pass'] for c in report.values())
            assert all(numpy.isfinite(c['constant']) for c in report.values())
        report = profiles.structural_check(Geometry(1, 0.), r)
        assert all(c['pass'] for c in report.values())
        assert abs(report['inverse_rF_prime']['constant'] - 1.) < 1e-15
        assert abs(report['F_prime_doubling']['constant'] - 2.) < 1e-12
        report = profiles.structural_check(Geometry(2, 1.), numpy.logspace(-12, -2, 100))
        assert all(c['pass'] for c in report.values())

    def test_structural_doubling_violation(self):
        r = numpy.logspace(-3, -1, 20)
        report = profiles.structural_check(_SteepProfile(), r)
        c3 = report['F_prime_doubling']
        self.assertFalse(c3['pass'])
        # |F'(r/2)|/|F'(r)| = 2 exp(2 ell ln2 + ln2^2) at the smallest r
        ell = numpy.log(1e3)
        ref = 2 * numpy.exp(2 * ell * numpy.log(2.) + numpy.log(2.)**2)
        assert abs(c3['constant'] / ref - 1) < 1e-9
        assert report['F_monotone_convex']['pass']
        report = profiles.structural_check(Geometry(1, 1.), r, doubling_bound=2.)
        self.assertFalse(report['F_prime_doubling']['pass'])
        report = profiles.structural_check(Geometry(1, 1.), r)
        assert 2 < report['F_prime_doubling']['constant'] < 4

    def test_ball_volume(self):
        geom = Geometry(1, .5)
        v = geom.ball_volume_estimate(numpy.exp(-4.))
        assert abs(numpy.log(v) - (-16. - numpy.log(9.))) < 1e-12
        ell = numpy.linspace(3., 10., 50)
        h = 1e-5
        vp = numpy.exp(geom.ln_ball_volume(ell - h))
        vm = numpy.exp(geom.ln_ball_volume(ell + h))
        r = numpy.exp(-ell)
        fd = (vp - vm) / (r * (numpy.exp(h) - numpy.exp(-h)))
        assert numpy.abs(fd / numpy.exp(geom.ln_ball_volume_derivative(ell)) - 1).max() < 1e-6

    def test_isotropic(self):
        iso = Isotropic()
        assert numpy.all(iso.f(numpy.array([0., .3])) == 1)
        assert abs(iso.ball_volume_estimate(.5) - numpy.pi / 4) < 1e-15

    def test_descriptor(self):
        geom = profiles.from_dict({'k': 2, 'sigma': 1.})
        assert geom.to_dict() == {'kind': 'fk', 'k': 2, 'sigma': 1.}
        assert isinstance(profiles.from_dict({'kind': 'isotropic'}), Isotropic)
        with self.assertRaises(InvalidParameterError):
            profiles.from_dict({'kind': 'cone'})

if __name__ == "__main__":
    print("Full Tests for degeneracy profiles")
    unittest.main()

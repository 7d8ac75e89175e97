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

import dataclasses
import unittest
import numpy
from degenmoser.lib.exceptions import PreconditionError
from degenmoser.geometry.profiles import Isotropic
from degenmoser.metric.grid import Grid2D
from degenmoser.metric.ccmetric import cc_distance_field
from degenmoser.iterates.theta import IterSpec
from degenmoser.solver import fdm
from degenmoser.solver.caccioppoli import (caccioppoli_constant, caccioppoli_envelope,
                                           caccioppoli_sweep)

def _layered(c):
    '''a = 1/c on x < 0 and 1 on x > 0; u = 5 + c x on the left, 5 + x on the right'''
    coeff = fdm.CoeffField.layered(iso, grid, 1. / c, 1.)
    xx, yy = grid.mesh()
    bc = numpy.where(xx < 0, 5 + c * xx, 5 + xx)
    return coeff, fdm.assemble_and_solve(iso, coeff, fdm.RhsPair.zeros(grid), bc)

def setUpModule():
    global iso, grid, psis, reports
    iso = Isotropic()
    grid = Grid2D.centered(1., 1., 60, 60)
    dist = cc_distance_field(iso, grid).dist
    psis = [numpy.clip((.4 - dist) / .2, 0., 1.),
            numpy.clip(1. - dist / .4, 0., None)**2,
            numpy.clip((.25 - dist) / .1, 0., 1.)]
    reports = {c: _layered(c) for c in (4., 2., 1.)}

def tearDownModule():
    global iso, grid, psis, reports
    del iso, grid, psis, reports

class KnownValues(unittest.TestCase):
    def test_layered_solution(self):
        coeff, report = reports[4.]
        xx, yy = grid.mesh()
        exact = numpy.where(xx < 0, 5 + 4 * xx, 5 + xx)
        assert abs(report.u - exact).max() < 1e-6
        assert fdm.certify(report, 'both')
        assert caccioppoli_envelope(coeff) == 64.

    def test_linear_h(self):
        prev = numpy.inf
        for c in (4., 2., 1.):
            coeff, report = reports[c]
            C = caccioppoli_sweep(report, psis)
            assert 0 < C <= caccioppoli_envelope(coeff)
            assert C <= prev
            prev = C

    def test_iterated_h(self):
        spec = IterSpec(3., j=1, beta=1.)
        prev = numpy.inf
        for c in (4., 2., 1.):
            coeff, report = reports[c]
            C = caccioppoli_sweep(report, psis, spec)
            assert 0 < C < numpy.inf
            assert C <= prev * (1 + 1e-9)
            prev = C

    def test_negative_power(self):
        prev = numpy.inf
        for c in (4., 2., 1.):
            coeff, report = reports[c]
            C = caccioppoli_sweep(report, psis, IterSpec(3., j=1, beta=-.5), kind='super')
            assert 0 < C <= prev
            prev = C
        C = caccioppoli_constant(reports[1.][1], psis[0],
                                 IterSpec(3., j=1, beta=-.5, variant='phi_tilde'), kind='super')
        assert 0 < C < numpy.inf

    def test_supersolution(self):
        coeff = fdm.CoeffField.identity(iso, grid)
        xx, yy = grid.mesh()
        report = fdm.assemble_and_solve(iso, coeff, fdm.RhsPair.zeros(grid), -(2 + xx))
        C = caccioppoli_constant(report, psis[0], kind='super')
        assert 0 < C < caccioppoli_envelope(coeff)

    def test_preconditions(self):
        coeff = fdm.CoeffField.identity(iso, grid)
        report = fdm.assemble_and_solve(iso, coeff, fdm.RhsPair.constant(grid, 1.),
                                        numpy.zeros(grid.shape))
        wrong = dataclasses.replace(report, rhs=fdm.RhsPair.zeros(grid))
        with self.assertRaises(PreconditionError):
            caccioppoli_constant(wrong, psis[0])
        with self.assertRaises(PreconditionError):
            caccioppoli_constant(reports[1.][1], numpy.ones(grid.shape))
        # u + phi* must stay positive for negative powers
        with self.assertRaises(PreconditionError):
            caccioppoli_constant(report, psis[0], IterSpec(3., j=0, beta=-1.), kind='super')

if __name__ == "__main__":
    print("Full Tests for Caccioppoli constants")
    unittest.main()

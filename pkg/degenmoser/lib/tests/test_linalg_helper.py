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
import scipy.sparse as sp
from degenmoser.lib.linalg_helper import pcg, jacobi_diagonal
from degenmoser.lib.exceptions import NumericalError

def setUpModule():
    global mat, b
    n = 40
    rng = numpy.random.default_rng(3)
    main = 2. + rng.random(n)
    off = -numpy.ones(n - 1)
    mat = sp.diags([off, main, off], [-1, 0, 1], format='csr')
    b = rng.random(n)

def tearDownModule():
    global mat, b
    del mat, b

class KnownValues(unittest.TestCase):
    def test_pcg_matrix(self):
        x, cycles, rnorm = pcg(mat, b, precond=jacobi_diagonal(mat), tol=1e-12)
        ref = numpy.linalg.solve(mat.toarray(), b)
        assert numpy.abs(x - ref).max() < 1e-9
        assert rnorm <= 1e-12
        assert cycles <= 40

    def test_pcg_operator(self):
        x = pcg(lambda v: mat @ v, b, tol=1e-12)[0]
        assert numpy.linalg.norm(mat @ x - b) < 1e-10 * numpy.linalg.norm(b)

    def test_zero_rhs(self):
        x, cycles, rnorm = pcg(mat, numpy.zeros(40))
        assert cycles == 0
        assert not x.any()

    def test_indefinite(self):
        with self.assertRaises(NumericalError):
            pcg(-mat, b)

if __name__ == "__main__":
    print("Full Tests for linalg helper")
    unittest.main()

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

'''
Iterative solvers shared by the finite-difference code
'''

import sys
import numpy
from degenmoser.lib import logger
from degenmoser.lib.utils import get_array_module
from degenmoser.lib.exceptions import NumericalError


def pcg(aop, b, x0=None, precond=None, tol=1e-10, max_cycle=None,
        callback=None, verbose=logger.WARN):
    r'''Preconditioned conjugate gradient for a symmetric positive definite
    operator.

    Args:
        aop : function(x) => array_like_x, or a matrix supporting ``@``
            aop(x) to mimic the matrix vector multiplication.
            The argument is a 1D array.  The returned value is a 1D array.
        b : 1D array

    Kwargs:
        x0 : 1D array
            Initial guess
        precond : function(r) => array_like_r, or 1D array
            A 1D array is taken as the diagonal of the operator (Jacobi).
        tol : float
            Terminate when ||r|| <= tol * ||b||.
        max_cycle : int
            max number of iterations.  Default 10 * len(b).
        callback : function(envs_dict) => None
            called once per iteration with :func:`locals`.

    Returns:
        x : 1D array like b
        cycles : int
        rnorm : float
            relative residual of the returned x
    '''
    if isinstance(verbose, logger.Logger):
        log = verbose
    else:
        log = logger.Logger(sys.stdout, verbose)

    xp = get_array_module(b)
    if not callable(aop):
        mat = aop
        aop = lambda x: mat @ x
    if precond is None:
        precond = lambda r: r
    elif not callable(precond):
        diag = precond
        if xp.any(diag <= 0):
            raise NumericalError('Jacobi preconditioner requires a positive diagonal')
        inv_diag = 1. / diag
        precond = lambda r: inv_diag * r
    if max_cycle is None:
        max_cycle = 10 * b.size

    bnorm = float(xp.linalg.norm(b))
    if bnorm == 0:
        return xp.zeros_like(b), 0, 0.

    if x0 is None:
        x = xp.zeros_like(b)
        r = b.copy()
    else:
        x = x0.copy()
        r = b - aop(x)
    z = precond(r)
    d = z.copy()
    rz = float(xp.dot(r, z))
    rnorm = float(xp.linalg.norm(r)) / bnorm

    cycle = 0
    while rnorm > tol and cycle < max_cycle:
        ad = aop(d)
        dad = float(xp.dot(d, ad))
        if dad <= 0:
            raise NumericalError(f'PCG breakdown at cycle {cycle}: operator not positive definite')
        alpha = rz / dad
        x += alpha * d
        r -= alpha * ad
        z = precond(r)
        rz, rz_old = float(xp.dot(r, z)), rz
        d = z + (rz / rz_old) * d
        rnorm = float(xp.linalg.norm(r)) / bnorm
        cycle += 1
        log.debug1('PCG cycle %d  |r|/|b| = %.6g', cycle, rnorm)
        if callable(callback):
            callback(locals())

    if rnorm > tol:
        raise NumericalError(f'PCG not converged in {max_cycle} cycles, |r|/|b| = {rnorm:.3g}')
    log.debug('PCG converged in %d cycles, |r|/|b| = %.3g', cycle, rnorm)
    return x, cycle, rnorm


def jacobi_diagonal(mat):
    '''Diagonal of a scipy (or cupyx) sparse matrix as a dense array'''
    diag = mat.diagonal()
    return numpy.asarray(diag) if get_array_module(diag) is numpy else diag

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
Cell-centered finite differences for

    -div(A grad u) = phi0 - div_A phi1,   A = diag(a1, a2),

with a2 = s f(x)^2 and Dirichlet data on the outer ring of cells.  Face
coefficients are harmonic means, so the assembled matrix is a symmetric
M-matrix.  The first-order forcing is the adjoint of the face gradient.
'''

from dataclasses import dataclass, field as dc_field
import numpy
import scipy.sparse
import scipy.sparse.linalg
from pyscf import lib
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.utils import resolve_device, to_gpu, to_cpu
from degenmoser.lib.linalg_helper import pcg, jacobi_diagonal
from degenmoser.lib.exceptions import (InvalidParameterError, PreconditionError,
                                       AssemblyError)

TOL = getattr(__config__, 'solver_tol', 1e-10)
MAX_CYCLE = getattr(__config__, 'solver_max_cycle', 20000)
CERTIFY_TOL = getattr(__config__, 'solver_certify_tol', 1e-8)
METHOD = getattr(__config__, 'solver_method', 'pcg')
METHODS = ('pcg', 'direct')


def _hmean(a, b):
    s = a + b
    out = numpy.zeros_like(s)
    numpy.divide(2. * a * b, s, out=out, where=s > 0)
    return out


class CoeffField:
    '''a1 and a2 = a2_scale * f(x)^2 per cell, with the ellipticity bounds

        lam <= a1 <= Lam,   lam f^2 <= a2 <= Lam f^2
    '''
    def __init__(self, geom, grid, a1, a2_scale=None, lam=None, Lam=None):
        a1 = numpy.asarray(a1, dtype=float)
        a2_scale = a1 if a2_scale is None else numpy.asarray(a2_scale, dtype=float)
        if a1.shape != grid.shape or a2_scale.shape != grid.shape:
            raise InvalidParameterError(f'coefficients must have the grid shape {grid.shape}')
        if not (numpy.all(numpy.isfinite(a1)) and numpy.all(numpy.isfinite(a2_scale))):
            raise AssemblyError('non-finite coefficient')
        if a1.min() <= 0 or a2_scale.min() <= 0:
            raise AssemblyError('coefficients must be positive')
        self.geom = geom
        self.grid = grid
        self.a1 = a1
        self.a2_scale = a2_scale
        self.a2 = a2_scale * geom.f(grid.x)[:, None]**2
        lo = min(a1.min(), a2_scale.min())
        hi = max(a1.max(), a2_scale.max())
        self.lam = float(lo) if lam is None else float(lam)
        self.Lam = float(hi) if Lam is None else float(Lam)
        if not 0 < self.lam <= self.Lam:
            raise InvalidParameterError(f'need 0 < lam <= Lam, got {self.lam}, {self.Lam}')
        slack = 1e-12 * self.Lam
        if lo < self.lam - slack or hi > self.Lam + slack:
            raise AssemblyError(f'coefficients in [{lo:.6g}, {hi:.6g}] break the bounds '
                                f'[{self.lam:.6g}, {self.Lam:.6g}]')

    @property
    def contrast(self):
        return self.Lam / self.lam

    @classmethod
    def identity(cls, geom, grid):
        return cls(geom, grid, numpy.ones(grid.shape))

    @classmethod
    def layered(cls, geom, grid, left, right, x_split=0.):
        '''a1 = a2_scale = left for x < x_split, right beyond'''
        a = numpy.where(grid.x < x_split, float(left), float(right))
        return cls(geom, grid, numpy.repeat(a[:, None], grid.ny, axis=1))

    @classmethod
    def oscillating(cls, geom, grid, contrast, periods=3):
        '''Smooth coefficients with values in [1, contrast]'''
        xx, yy = grid.mesh()
        Lx = grid.x1 - grid.x0
        Ly = grid.y1 - grid.y0
        wave = numpy.sin(2 * numpy.pi * periods * xx / Lx) * numpy.cos(2 * numpy.pi * periods * yy / Ly)
        a1 = 1. + (contrast - 1.) * .5 * (1. + wave)
        a2 = 1. + (contrast - 1.) * .5 * (1. - wave)
        return cls(geom, grid, a1, a2, 1., float(contrast))

    def to_dict(self):
        return {'lam': self.lam, 'Lam': self.Lam}


@dataclass
class RhsPair:
    '''phi0 and the vector phi1 = (phi1x, phi1y) per cell'''
    phi0: numpy.ndarray
    phi1x: numpy.ndarray
    phi1y: numpy.ndarray

    @classmethod
    def zeros(cls, grid):
        return cls(numpy.zeros(grid.shape), numpy.zeros(grid.shape), numpy.zeros(grid.shape))

    @classmethod
    def constant(cls, grid, phi0=0., phi1=(0., 0.)):
        ones = numpy.ones(grid.shape)
        return cls(phi0 * ones, phi1[0] * ones, phi1[1] * ones)

    def check(self, grid):
        for name in ('phi0', 'phi1x', 'phi1y'):
            a = numpy.asarray(getattr(self, name), dtype=float)
            if a.shape != grid.shape:
                raise InvalidParameterError(f'{name} of shape {a.shape} on a {grid.shape} grid')
            setattr(self, name, a)
        return self

    @property
    def is_zero(self):
        return not (numpy.any(self.phi0) or numpy.any(self.phi1x) or numpy.any(self.phi1y))

    @property
    def phi1_sup(self):
        return float(numpy.hypot(self.phi1x, self.phi1y).max())


@dataclass
class SolveReport:
    u: numpy.ndarray
    residual: float
    cycles: int
    diagnostics: dict = dc_field(default_factory=dict)
    solver: object = dc_field(default=None, repr=False)
    rhs: RhsPair = dc_field(default=None, repr=False)

    @property
    def grid(self):
        return self.solver.grid


class FDSolver(lib.StreamObject):
    '''Five-point solver for one geometry, grid and coefficient field'''
    _keys = {'geom', 'grid', 'coeff', 'tol', 'max_cycle', 'device', 'method'}

    def __init__(self, geom, grid, coeff, tol=TOL, max_cycle=MAX_CYCLE, device='cpu',
                 method=METHOD, verbose=None):
        self.verbose = getattr(__config__, 'verbose', logger.QUIET) if verbose is None else verbose
        if coeff.grid is not grid and coeff.grid.to_dict() != grid.to_dict():
            raise InvalidParameterError('coefficient field lives on another grid')
        if hasattr(geom, 'chain') and numpy.any(numpy.abs(grid.x) < 1e-12 * grid.hx):
            raise PreconditionError('cell centers on the degenerate line x = 0; '
                                    'use an even number of cells across x = 0')
        if min(grid.nx, grid.ny) < 3:
            raise InvalidParameterError(f'grid {grid} has no interior cells')
        self.geom = geom
        self.grid = grid
        self.coeff = coeff
        self.tol = tol
        self.max_cycle = max_cycle
        self.device = resolve_device(device)
        if method not in METHODS:
            raise InvalidParameterError(f'Unknown solver method {method}; use one of {METHODS}')
        if method == 'direct' and self.device == 'gpu':
            raise InvalidParameterError('the direct solver runs on cpu only')
        self.method = method
        self.interior = ~grid.boundary_mask(1)
        self._mat = None

    def dump_flags(self, verbose=None):
        log = logger.new_logger(self, verbose)
        log.info('******** %s ********', self.__class__)
        log.info('geometry = %s', self.geom)
        log.info('grid = %s', self.grid)
        log.info('lam = %g  Lam = %g', self.coeff.lam, self.coeff.Lam)
        log.info('tol = %g  max_cycle = %d  device = %s', self.tol, self.max_cycle, self.device)
        log.info('method = %s', self.method)
        return self

    @property
    def face_coefficients(self):
        '''(tx, ty): x faces (nx-1, ny) and y faces (nx, ny-1), divided by h^2'''
        c = self.coeff
        tx = _hmean(c.a1[:-1], c.a1[1:]) / self.grid.hx**2
        ty = _hmean(c.a2[:, :-1], c.a2[:, 1:]) / self.grid.hy**2
        return tx, ty

    def apply(self, u):
        '''sum over faces of t (u_i - u_nb) for every cell'''
        tx, ty = self.face_coefficients
        out = numpy.zeros(self.grid.shape)
        dx = tx * (u[1:] - u[:-1])
        dy = ty * (u[:, 1:] - u[:, :-1])
        out[:-1] -= dx
        out[1:] += dx
        out[:, :-1] -= dy
        out[:, 1:] += dy
        return out

    def forcing(self, rhs):
        '''phi0 - div_A phi1 per cell.  phi1 is paired with the face differences
        of the test function, so |cell| sum_i v_i b_i = int phi0 v + int phi1 . grad_A v.'''
        rhs.check(self.grid)
        grid = self.grid
        b = rhs.phi0.copy()
        fx = .5 * (rhs.phi1x[1:] + rhs.phi1x[:-1]) / grid.hx
        b[:-1] -= fx
        b[1:] += fx
        fy = .5 * (rhs.phi1y[:, 1:] + rhs.phi1y[:, :-1]) / grid.hy
        fy *= self.geom.f(grid.x)[:, None]
        b[:, :-1] -= fy
        b[:, 1:] += fy
        return b

    def build(self):
        t0 = logger.init_timer(self)
        nx, ny = self.grid.shape
        inner = self.interior
        n = int(inner.sum())
        idx = numpy.full((nx, ny), -1)
        idx[inner] = numpy.arange(n)
        tx, ty = self.face_coefficients
        diag = numpy.zeros((nx, ny))
        diag[:-1] += tx
        diag[1:] += tx
        diag[:, :-1] += ty
        diag[:, 1:] += ty
        rows = [idx[inner]]
        cols = [idx[inner]]
        vals = [diag[inner]]
        for t, a, b in ((tx, idx[:-1], idx[1:]), (ty, idx[:, :-1], idx[:, 1:])):
            both = (a >= 0) & (b >= 0)
            rows += [a[both], b[both]]
            cols += [b[both], a[both]]
            vals += [-t[both], -t[both]]
        mat = scipy.sparse.coo_matrix((numpy.concatenate(vals),
                                       (numpy.concatenate(rows), numpy.concatenate(cols))),
                                      shape=(n, n)).tocsr()
        if numpy.any(mat.diagonal() <= 0):
            raise AssemblyError('cell without coupling: the system is singular')
        self._mat = mat
        logger.timer(self, 'assembly', *t0)
        return self

    @property
    def matrix(self):
        if self._mat is None:
            self.build()
        return self._mat

    def solve(self, rhs, bc, tol=None):
        log = logger.new_logger(self)
        t0 = log.init_timer()
        tol = self.tol if tol is None else tol
        if not 1e-12 < tol < 1e-4:
            raise InvalidParameterError(f'solver tolerance {tol} outside (1e-12, 1e-4)')
        bc = numpy.asarray(bc, dtype=float)
        if bc.shape != self.grid.shape:
            raise InvalidParameterError(f'boundary data of shape {bc.shape} on a {self.grid.shape} grid')
        inner = self.interior
        ubc = numpy.where(inner, 0., bc)
        b = (self.forcing(rhs) - self.apply(ubc))[inner]
        mat = self.matrix
        if self.method == 'direct':
            x = scipy.sparse.linalg.spsolve(mat.tocsc(), b)
            cycles = 0
            rnorm = float(numpy.linalg.norm(mat @ x - b) / (numpy.linalg.norm(b) or 1.))
            log.debug('direct solve |r|/|b| = %g', rnorm)
        else:
            diag = jacobi_diagonal(mat)
            if self.device == 'gpu':
                mat, b, diag = to_gpu(mat), to_gpu(b), to_gpu(diag)
            x, cycles, rnorm = pcg(mat, b, precond=diag, tol=tol, max_cycle=self.max_cycle,
                                   verbose=log)
        u = ubc.copy()
        u[inner] = to_cpu(x)
        log.timer('solve', *t0)
        report = SolveReport(u, rnorm, cycles, solver=self, rhs=rhs)
        report.diagnostics = {'cycles': cycles, 'residual': rnorm,
                              'max_u': float(u.max()), 'min_u': float(u.min())}
        return report

    def weak_residual(self, u, rhs):
        '''a(u, e_i) - F(e_i) per unit cell area at interior cells, 0 on the ring'''
        res = self.apply(u) - self.forcing(rhs)
        res[~self.interior] = 0.
        return res

    def residual_scale(self, u, rhs):
        '''bound on the 2-norm of the right-hand side the PCG tolerance is relative to'''
        tx, ty = self.face_coefficients
        tmax = max(tx.max(), ty.max())
        return max(1., 8 * tmax * float(numpy.linalg.norm(u)),
                   float(numpy.linalg.norm(self.forcing(rhs))))

    def energy(self, u, rhs):
        '''(a(u, u), F(u)) over interior cells, for homogeneous boundary data'''
        inner = self.interior
        area = self.grid.cell_area
        a = float((u * self.apply(u))[inner].sum() * area)
        F = float((u * self.forcing(rhs))[inner].sum() * area)
        return a, F


def assemble_and_solve(geom, coeff, rhs, bc, tol=TOL, device='cpu', method=METHOD, verbose=None):
    '''Solve -div(A grad u) = phi0 - div_A phi1 on coeff.grid with u = bc on the ring'''
    solver = FDSolver(geom, coeff.grid, coeff, tol=tol, device=device, method=method,
                      verbose=verbose)
    if solver.verbose >= logger.DEBUG:
        solver.dump_flags()
    return solver.solve(rhs, bc)

def weak_residual(report):
    return report.solver.weak_residual(report.u, report.rhs)

def certify(report, kind='sub', tol=CERTIFY_TOL):
    '''Sign of the weak residual against nonnegative cell tests.

    sub: a(u, w) <= F(w), super: a(u, w) >= F(w), both: either way.
    '''
    if kind not in ('sub', 'super', 'both'):
        raise InvalidParameterError(f'Unknown certificate {kind}')
    res = weak_residual(report)
    slack = tol * report.solver.residual_scale(report.u, report.rhs)
    if kind == 'sub':
        return bool(res.max() <= slack)
    if kind == 'super':
        return bool(res.min() >= -slack)
    return bool(numpy.abs(res).max() <= slack)

def m_matrix_check(mat):
    '''nonpositive off-diagonals and weak diagonal dominance'''
    mat = scipy.sparse.csr_matrix(mat)
    diag = mat.diagonal()
    off = mat - scipy.sparse.diags(diag)
    if off.nnz and off.data.max() > 0:
        return False
    row_off = numpy.asarray(abs(off).sum(axis=1)).ravel()
    return bool(numpy.all(diag >= row_off * (1 - 1e-14)))

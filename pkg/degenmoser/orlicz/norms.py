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
Orlicz functionals against discrete measures

    Luxemburg norm     ||f||_{L^Phi}  = inf{t > 0 : int Phi(|f|/t) dmu <= 1}
    quasi-norm         ||f||_{D^Phi}  = Phi^{-1}(int Phi(|f|) dmu)
'''

import numpy
from scipy.special import logsumexp
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.logval import LogVal
from degenmoser.lib.exceptions import InvalidMeasureError, NumericalError

LUXEMBURG_TOL = getattr(__config__, 'orlicz_luxemburg_tol', 1e-10)


class DiscreteMeasure:
    '''Nonnegative weights on sample points (grid cells).

    Args:
        weights : array
            cell weights, >= 0
    Kwargs:
        normalize : bool
            divide by the total mass so the measure is a probability measure
    '''
    def __init__(self, weights, normalize=False):
        w = numpy.asarray(weights, dtype=float).ravel()
        if not numpy.all(numpy.isfinite(w)) or numpy.any(w < 0):
            raise InvalidMeasureError('measure weights must be finite and nonnegative')
        mass = w.sum()
        if normalize:
            if mass <= 0:
                raise InvalidMeasureError('cannot normalize a measure of zero mass')
            w = w / mass
            mass = 1.
        self.weights = w
        self.mass = float(mass)
        self.normalized = bool(normalize)

    @classmethod
    def restricted(cls, weights, mask, normalize=True):
        '''Weights restricted to a mask, e.g. cell areas over a ball'''
        w = numpy.where(numpy.asarray(mask).ravel(), numpy.asarray(weights, dtype=float).ravel(), 0.)
        return cls(w, normalize=normalize)

    @property
    def size(self):
        return self.weights.size

    @property
    def ln_weights(self):
        with numpy.errstate(divide='ignore'):
            return numpy.log(self.weights)

    def check_mass(self):
        if not self.mass > 0:
            raise InvalidMeasureError('measure has zero total mass')
        return self

    def ln_integral(self, lnf):
        '''ln int exp(lnf) dmu for an array of logs on the sample points'''
        lnf = numpy.asarray(lnf, dtype=float).ravel()
        terms = lnf + self.ln_weights
        if terms.size == 0 or numpy.all(numpy.isneginf(terms)):
            return -numpy.inf
        return float(logsumexp(terms))

    def integral(self, f):
        return float(numpy.dot(numpy.asarray(f, dtype=float).ravel(), self.weights))

    def __repr__(self):
        return f'DiscreteMeasure(size={self.size}, mass={self.mass:.6g}, normalized={self.normalized})'


def _ln_abs(f):
    a = numpy.abs(numpy.asarray(f, dtype=float)).ravel()
    with numpy.errstate(divide='ignore'):
        return numpy.log(a)

def ln_modular(lnf, mu, phi):
    '''ln int Phi(f) dmu, with lnf = ln|f| on the sample points'''
    return mu.ln_integral(phi.ln_eval(lnf))


def luxemburg_norm(f, mu, phi, tol=LUXEMBURG_TOL, verbose=None):
    '''Luxemburg norm by bisection on ln t.

    Args:
        f : array of samples (any shape matching the measure)
        mu : :class:`DiscreteMeasure`
        phi : Young function

    Returns:
        float, relative accuracy ``tol``
    '''
    log = logger.new_logger(verbose=verbose)
    mu.check_mass()
    lnf = _ln_abs(f)
    keep = (mu.weights > 0) & ~numpy.isneginf(lnf)
    if not keep.any():
        return 0.
    lnf = lnf[keep]
    sub = DiscreteMeasure(mu.weights[keep])

    def feasible(lnt):
        return sub.ln_integral(phi.ln_eval(lnf - lnt)) <= 0.

    lnsup = lnf.max()
    # Phi(sup/t) = 1/mu(supp f) makes the modular at most 1
    hi = lnsup - phi.ln_inv(-numpy.log(sub.mass))
    for _ in range(200):
        if feasible(hi):
            break
        hi += 1.
    else:
        raise NumericalError('Luxemburg bracket could not be found')
    lo = hi - 1.
    for _ in range(2000):
        if not feasible(lo):
            break
        lo -= 1.
    else:
        raise NumericalError('Luxemburg norm lower bracket not found')

    cycle = 0
    while hi - lo > tol:
        mid = .5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
        cycle += 1
        if cycle > 400:
            raise NumericalError('Luxemburg bisection did not converge')
    log.debug1('Luxemburg norm converged in %d cycles', cycle)
    return float(numpy.exp(hi))


def orlicz_quasinorm(f, mu, phi):
    '''Phi^{-1}(int Phi(|f|) dmu) as LogVal'''
    mu.check_mass()
    return LogVal(phi.ln_inv(ln_modular(_ln_abs(f), mu, phi)))


def ln_submult_ratio(phi, ln_a, ln_b):
    '''max over the outer grid of ln Phi(ab) - ln Phi(a) - ln Phi(b)'''
    ln_a = numpy.asarray(ln_a, dtype=float).ravel()
    ln_b = numpy.asarray(ln_b, dtype=float).ravel()
    lnab = ln_a[:, None] + ln_b[None, :]
    r = phi.ln_eval(lnab.ravel()).reshape(lnab.shape)
    r -= phi.ln_eval(ln_a)[:, None] + phi.ln_eval(ln_b)[None, :]
    return float(r.max())

def submult_ratio(phi, ln_a, ln_b=None):
    '''max Phi(ab)/(Phi(a)Phi(b)) over the grid of (ln a, ln b) pairs'''
    if ln_b is None:
        ln_b = ln_a
    return float(numpy.exp(ln_submult_ratio(phi, ln_a, ln_b)))


def quasi_triangle_constant(phi, N=2, K=1.):
    '''C_{Phi,N} = N K Phi(N) of the N-term quasi-triangle inequality'''
    return LogVal(numpy.log(N) + numpy.log(K) + phi.ln_eval(numpy.log(N)))

def finite_sum_check(fs, mu, phi, K=1.):
    '''(ln ||sum f_j||_D, ln C_{Phi,N} sum ||f_j||_D) for samples f_j'''
    fs = [numpy.asarray(f, dtype=float) for f in fs]
    lhs = orlicz_quasinorm(sum(fs), mu, phi)
    parts = [orlicz_quasinorm(f, mu, phi).log_value for f in fs]
    rhs = quasi_triangle_constant(phi, len(fs), K).log_value + logsumexp(parts)
    return lhs.log_value, float(rhs)

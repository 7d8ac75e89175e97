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
Iterated compositions Phi^{(j)} = Phi o ... o Phi (j times)

On the analytic branch of Phi_m one composition is the shift
theta -> theta + 1 of theta = (ln t)^{1/m}; below E each composition is a
multiplication by F/E.  ``ThetaRep`` stores both pieces so that compositions
and their inverses never leave the theta domain.
'''

import dataclasses
import numpy
from degenmoser.lib.logval import LogVal, as_logval
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.orlicz.young import make_young, _as_array, _ret


@dataclasses.dataclass(frozen=True)
class IterSpec:
    '''Parameters of Phi^{(j)} and of the test function h_{j,beta}.

    beta is only used by :mod:`degenmoser.iterates.hfunc`.
    '''
    m: float
    j: int = 1
    beta: float = 1.
    variant: str = 'phi'

    def __post_init__(self):
        if not self.m > 1:
            raise InvalidParameterError(f'iterates require m > 1, got m = {self.m}')
        if int(self.j) != self.j or self.j < 0:
            raise InvalidParameterError(f'iteration depth must be a nonnegative integer, got {self.j}')
        if not (self.beta < 0 or self.beta >= 1):
            raise InvalidParameterError(f'beta must satisfy beta < 0 or beta >= 1, got {self.beta}')
        if self.variant not in ('phi', 'phi_tilde'):
            raise InvalidParameterError(f'Unknown Young function variant: {self.variant}')
        object.__setattr__(self, 'm', float(self.m))
        object.__setattr__(self, 'j', int(self.j))
        object.__setattr__(self, 'beta', float(self.beta))

    @property
    def phi(self):
        return make_young(self.m, self.variant)

    def replace(self, **kwargs):
        return dataclasses.replace(self, **kwargs)


class ThetaRep:
    '''t = exp(theta^m - depth * ln(F/E)), t = 0 where ``zero``.

    depth > 0 only for t < E, and then theta is in [2, 3).
    '''
    __slots__ = ('m', 'ln_slope', 'theta', 'depth', 'zero')

    def __init__(self, m, theta, depth, zero):
        self.m = m
        self.ln_slope = 3.**m - 2.**m
        self.theta = numpy.asarray(theta, dtype=float)
        self.depth = numpy.asarray(depth, dtype=numpy.int64)
        self.zero = numpy.asarray(zero, dtype=bool)

    @classmethod
    def from_log(cls, m, lnt):
        lnt = numpy.asarray(lnt, dtype=float)
        lnE = 2.**m
        zero = numpy.isneginf(lnt)
        slope = 3.**m - lnE
        low = (lnt < lnE) & ~zero
        gap = numpy.where(low, lnE - lnt, 0.)
        depth = numpy.ceil(gap / slope).astype(numpy.int64)
        lnu = numpy.where(zero, lnE, lnt + depth * slope)
        # rounding may leave lnu a few ulp below E
        theta = numpy.maximum(lnu, 0.)**(1./m)
        return cls(m, theta, depth, zero)

    @classmethod
    def from_logval(cls, m, t):
        return cls.from_log(m, as_logval(t).log_value)

    def to_log(self):
        lnt = self.theta**self.m - self.depth * self.ln_slope
        return numpy.where(self.zero, -numpy.inf, lnt)

    def to_logval(self):
        return LogVal(float(self.to_log()))

    def shift(self, j):
        '''representation of Phi^{(j)}(t)'''
        j = int(j)
        used = numpy.minimum(j, self.depth)
        return ThetaRep(self.m, self.theta + (j - used), self.depth - used, self.zero)

    def unshift(self, j):
        '''representation of Phi^{(-j)}(t)'''
        j = int(j)
        analytic = self.depth == 0
        k = numpy.where(analytic,
                        numpy.clip(numpy.floor(self.theta - 2.), 0, j), 0).astype(numpy.int64)
        return ThetaRep(self.m, self.theta - k, self.depth + (j - k), self.zero)

    def __repr__(self):
        return f'ThetaRep(m={self.m}, theta={self.theta}, depth={self.depth})'


def _ln_iter_generic(phi, lnt, j):
    lnt = lnt.copy()
    rem = numpy.full(lnt.shape, j, dtype=numpy.int64)
    live = numpy.isfinite(lnt)
    lnE = getattr(phi, 'lnE', numpy.inf)
    for _ in range(j):
        act = (rem > 0) & live & (lnt < lnE)
        if not act.any():
            break
        lnt[act] = phi.ln_eval(lnt[act])
        rem[act] -= 1
    up = (rem > 0) & live
    if up.any():
        m = phi.m
        lnt[up] = (lnt[up]**(1./m) + rem[up])**m
    return lnt

def _ln_iter_inv_generic(phi, lns, j):
    lns = lns.copy()
    rem = numpy.full(lns.shape, j, dtype=numpy.int64)
    live = numpy.isfinite(lns)
    lnF = getattr(phi, 'lnF', numpy.inf)
    while True:
        act = (rem > 0) & live
        if not act.any():
            break
        up = act & (lns >= lnF)
        if up.any():
            m = phi.m
            theta = lns[up]**(1./m)
            k = numpy.minimum(rem[up], numpy.floor(theta - 3.).astype(numpy.int64) + 1)
            lns[up] = (theta - k)**m
            rem[up] -= k
        low = act & ~up
        if low.any():
            lns[low] = phi.ln_inv(lns[low])
            rem[low] -= 1
    return lns


def ln_phi_iter(spec, lnt, j=None):
    '''ln Phi^{(j)}(t) for an array of ln t; j defaults to spec.j'''
    j = spec.j if j is None else int(j)
    lnt, scalar = _as_array(lnt)
    if j == 0:
        return _ret(lnt, scalar)
    if spec.variant == 'phi':
        out = ThetaRep.from_log(spec.m, lnt).shift(j).to_log()
    else:
        out = _ln_iter_generic(spec.phi, lnt, j)
    return _ret(out, scalar)

def ln_phi_iter_inv(spec, lns, j=None):
    j = spec.j if j is None else int(j)
    lns, scalar = _as_array(lns)
    if j == 0:
        return _ret(lns, scalar)
    if spec.variant == 'phi':
        out = ThetaRep.from_log(spec.m, lns).unshift(j).to_log()
    else:
        out = _ln_iter_inv_generic(spec.phi, lns, j)
    return _ret(out, scalar)

def phi_iter(spec, t):
    '''Phi^{(j)}(t) as LogVal'''
    return LogVal(ln_phi_iter(spec, as_logval(t).log_value))

def phi_iter_inv(spec, s):
    '''Phi^{(-j)}(s) as LogVal'''
    return LogVal(ln_phi_iter_inv(spec, as_logval(s).log_value))


def ln_orbit(phi, lnt, j):
    '''[ln t, ln Phi(t), ..., ln Phi^{(j)}(t)] by single compositions'''
    lnt = numpy.asarray(lnt, dtype=float)
    orbit = [lnt]
    for _ in range(j):
        orbit.append(phi.ln_eval(orbit[-1]))
    return orbit


def li_growth(spec, M, M1, j_list):
    '''ln Phi^{(j)}(M) - ln Phi^{(j)}(M1) for each j in j_list.

    Unbounded in j for M > M1 > 0, the growth hypothesis of the
    sup-norm recovery.
    '''
    lnM = as_logval(M).log_value
    lnM1 = as_logval(M1).log_value
    if not lnM > lnM1 or numpy.isneginf(lnM1):
        raise InvalidParameterError('li_growth requires M > M1 > 0')
    return numpy.array([ln_phi_iter(spec, lnM, j) - ln_phi_iter(spec, lnM1, j)
                        for j in j_list])

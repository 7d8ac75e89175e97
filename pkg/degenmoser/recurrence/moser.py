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
The Moser-iteration recurrence b_{n+1} = Phi_m(K n^gamma b_n), b_1 >= E_m

In theta = (ln b)^{1/m} this reads

    beta_{n+1} = (beta_n^m + ln(K n^gamma))^{1/m} + 1,    beta_1 = theta1

and C* = exp((theta1 + C_m (gamma + ln K))^m) dominates the sequence,
Phi^{(n-1)}(C*) >= b_n, as soon as C_m (gamma + ln K) bounds the excess
beta_n - theta1 - (n-1).  The excess stays bounded for m > 2 and grows
like ln n for m <= 2.
'''

import dataclasses
import numpy
import pandas
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.logval import LogVal
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError
from degenmoser.orlicz.young import PhiM

HORIZON = getattr(__config__, 'recurrence_horizon', 10000)
CSTAR_TOL = getattr(__config__, 'recurrence_cstar_tol', 1e-12)


@dataclasses.dataclass
class RecurrenceTrace:
    '''beta_n for n = 1..N together with the excess over theta1 + (n-1)'''
    m: float
    K: float
    gamma: float
    theta1: float
    excess: numpy.ndarray

    @property
    def N(self):
        return self.excess.size

    @property
    def n(self):
        return numpy.arange(1, self.N + 1)

    @property
    def betas(self):
        return self.theta1 + (self.n - 1) + self.excess

    @property
    def ln_growth(self):
        '''gamma + ln K'''
        return self.gamma + numpy.log(self.K)

    def cstar_theta(self, C_m):
        '''(ln C*)^{1/m} = theta1 + C_m (gamma + ln K)'''
        return self.theta1 + C_m * self.ln_growth

    def alphas(self, C_m):
        '''theta of Phi^{(n-1)}(C*)'''
        return self.cstar_theta(C_m) + (self.n - 1)

    def to_frame(self, C_m=None):
        df = pandas.DataFrame({'n': self.n, 'beta': self.betas, 'excess': self.excess})
        if C_m is not None:
            df['alpha'] = self.alphas(C_m)
        return df


def _check_params(m, K, gamma, theta1, N):
    if not m > 1:
        raise InvalidParameterError(f'recurrence requires m > 1, got m = {m}')
    if K < 1 or gamma < 0:
        raise InvalidParameterError(f'recurrence requires K >= 1 and gamma >= 0, got K = {K}, gamma = {gamma}')
    if theta1 < 2:
        raise PreconditionError(f'b_1 >= E_m is required: theta1 = {theta1} < 2')
    if int(N) != N or N < 1:
        raise InvalidParameterError(f'horizon N must be a positive integer, got {N}')


def run_recurrence(m, K, gamma, theta1, N=HORIZON, verbose=None):
    '''Trace of the recurrence in the theta domain.

    Args:
        m : float, > 1
        K : float, >= 1
        gamma : float, >= 0
        theta1 : float
            (ln b_1)^{1/m}, at least 2
        N : int
            number of terms

    Returns:
        :class:`RecurrenceTrace`
    '''
    _check_params(m, K, gamma, theta1, N)
    log = logger.new_logger(verbose=verbose)
    t0 = log.init_timer()
    m = float(m)
    lnK = numpy.log(K)
    excess = numpy.zeros(int(N))
    beta = float(theta1)
    e = 0.
    for n in range(1, int(N)):
        c = lnK + gamma * numpy.log(n)
        # (beta^m + c)^{1/m} - beta without cancellation
        inc = beta * numpy.expm1(numpy.log1p(c * beta**-m) / m)
        e += inc
        excess[n] = e
        beta = theta1 + n + e
    log.debug('recurrence m=%g K=%g gamma=%g: excess at N=%d is %.12g', m, K, gamma, N, e)
    log.timer('recurrence', *t0)
    return RecurrenceTrace(m, float(K), float(gamma), float(theta1), excess)


def direct_trace(m, K, gamma, theta1, N=30):
    '''ln b_n from LogVal iteration of b_{n+1} = Phi_m(K n^gamma b_n).

    Used to cross-check the theta-domain trace while the logs stay moderate.
    '''
    _check_params(m, K, gamma, theta1, N)
    phi = PhiM(m)
    b = LogVal(float(theta1)**m)
    out = [b.log_value]
    for n in range(1, int(N)):
        b = phi.eval(LogVal(numpy.log(K) + gamma * numpy.log(n)) * b)
        out.append(b.log_value)
    return numpy.array(out)


def cstar_verify(trace, C_m, tol=CSTAR_TOL):
    '''True iff Phi^{(n-1)}(C*) >= b_n for every n of the trace'''
    if trace.m <= 2:
        raise PreconditionError(f'C* domination is only established for m > 2, got m = {trace.m}')
    return bool(numpy.all(C_m * trace.ln_growth >= trace.excess - tol))


def minimal_cm(trace, verbose=None):
    '''Smallest C_m that passes :func:`cstar_verify` over the trace horizon'''
    log = logger.new_logger(verbose=verbose)
    if trace.m <= 2:
        log.warn('m = %g <= 2: the excess is unbounded and C_m depends on the horizon', trace.m)
    g = trace.ln_growth
    if g == 0:
        return 0.
    return float(trace.excess.max() / g)


def failure_demo(m, K, N=HORIZON, theta1=2., verbose=None):
    '''ln Phi^{(-(n-1))}(b_n) = (beta_n - (n-1))^m for gamma = 0.

    For m <= 2 and K > e this is unbounded; n = 1 gives ln b_1.
    '''
    log = logger.new_logger(verbose=verbose)
    if m > 2:
        log.note('m = %g > 2: the sequence is expected to stay bounded', m)
    if not K > numpy.e:
        raise PreconditionError(f'the failure mechanism requires K > e, got K = {K}')
    trace = run_recurrence(m, K, 0., theta1, N, verbose=log)
    return (trace.theta1 + trace.excess)**trace.m

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
Nonnegative reals carried by their natural logarithm.

Vectorized code in this package works directly on arrays of logarithms,
where -inf stands for exact zero.  :class:`LogVal` is the scalar form used
at API boundaries.
'''

import math
import numpy
from degenmoser.lib.exceptions import InvalidParameterError

def log(value):
    '''ln(value) with ln(0) = -inf'''
    if value < 0:
        raise InvalidParameterError(f'LogVal cannot hold negative value {value}')
    if value == 0:
        return -math.inf
    return math.log(value)

def log_add(log_a, log_b):
    '''ln(exp(log_a) + exp(log_b)), elementwise'''
    return numpy.logaddexp(log_a, log_b)

def log_subtract(log_a, log_b):
    '''ln(exp(log_a) - exp(log_b)) for log_a >= log_b, elementwise'''
    log_a = numpy.asarray(log_a, dtype=float)
    log_b = numpy.asarray(log_b, dtype=float)
    if numpy.any(log_b > log_a):
        raise InvalidParameterError('log_subtract requires log_a >= log_b')
    with numpy.errstate(divide='ignore', invalid='ignore'):
        quotient = numpy.exp(log_b - log_a)
        out = log_a + numpy.log1p(-quotient)
    out = numpy.where(quotient >= 1, -numpy.inf, out)
    out = numpy.where(numpy.isneginf(log_b), log_a, out)
    if out.ndim == 0:
        return float(out)
    return out


class LogVal:
    '''
    A nonnegative real number stored as its natural logarithm.

    Attributes:
        log_value : float
            ln of the represented number; -inf when is_zero is set
        is_zero : bool
            the value is exactly 0
    '''
    __slots__ = ('log_value', 'is_zero')

    def __init__(self, log_value, is_zero=False):
        log_value = float(log_value)
        if math.isnan(log_value):
            raise InvalidParameterError('LogVal log_value is NaN')
        if is_zero or log_value == -math.inf:
            self.is_zero = True
            self.log_value = -math.inf
        else:
            self.is_zero = False
            self.log_value = log_value

    @classmethod
    def from_value(cls, value):
        return cls(log(value))

    @classmethod
    def zero(cls):
        return cls(-math.inf, True)

    @classmethod
    def one(cls):
        return cls(0.)

    @property
    def value(self):
        '''The represented number as a float (may overflow to inf)'''
        if self.is_zero:
            return 0.
        if self.log_value > 709.7:
            return math.inf
        return math.exp(self.log_value)

    def __float__(self):
        return self.value

    def __repr__(self):
        if self.is_zero:
            return 'LogVal(0)'
        return f'LogVal(exp({self.log_value!r}))'

    def __hash__(self):
        return hash(self.log_value)

    def __eq__(self, other):
        return self.log_value == as_logval(other).log_value

    def __lt__(self, other):
        return self.log_value < as_logval(other).log_value

    def __le__(self, other):
        return self.log_value <= as_logval(other).log_value

    def __gt__(self, other):
        return self.log_value > as_logval(other).log_value

    def __ge__(self, other):
        return self.log_value >= as_logval(other).log_value

    def __add__(self, other):
        other = as_logval(other)
        return LogVal(numpy.logaddexp(self.log_value, other.log_value))
    __radd__ = __add__

    def __sub__(self, other):
        other = as_logval(other)
        if other.log_value > self.log_value:
            raise InvalidParameterError('LogVal difference would be negative')
        return LogVal(log_subtract(self.log_value, other.log_value))

    def __mul__(self, other):
        other = as_logval(other)
        if self.is_zero or other.is_zero:
            return LogVal.zero()
        return LogVal(self.log_value + other.log_value)
    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_logval(other)
        if other.is_zero:
            raise ZeroDivisionError('LogVal division by zero')
        if self.is_zero:
            return LogVal.zero()
        return LogVal(self.log_value - other.log_value)

    def __pow__(self, power):
        if power == 0:
            return LogVal.one()
        if self.is_zero:
            if power < 0:
                raise ZeroDivisionError('0 cannot be raised to a negative power')
            return LogVal.zero()
        return LogVal(self.log_value * power)

    def isclose(self, other, atol=1e-12):
        '''Log-domain comparison |ln a - ln b| <= atol; zeros compare equal'''
        other = as_logval(other)
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return abs(self.log_value - other.log_value) <= atol


def as_logval(x):
    '''Coerce floats (plain values) and LogVal to LogVal'''
    if isinstance(x, LogVal):
        return x
    return LogVal.from_value(float(x))

def to_log(x):
    '''ln of x for LogVal, float or array input; arrays are treated as values'''
    if isinstance(x, LogVal):
        return x.log_value
    x = numpy.asarray(x, dtype=float)
    if numpy.any(x < 0):
        raise InvalidParameterError('negative value where a nonnegative one is required')
    with numpy.errstate(divide='ignore'):
        out = numpy.log(x)
    if out.ndim == 0:
        return float(out)
    return out

def from_log(lnx):
    '''LogVal for a scalar log, or the array passed through'''
    if numpy.ndim(lnx) == 0:
        return LogVal(float(lnx))
    return numpy.asarray(lnx, dtype=float)

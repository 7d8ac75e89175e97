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

import numpy
import scipy.sparse
from degenmoser.lib.exceptions import InvalidParameterError

try:
    import cupy
    import cupyx.scipy.sparse
except ImportError:
    cupy = None

def gpu_available():
    if cupy is None:
        return False
    try:
        return cupy.cuda.runtime.getDeviceCount() > 0
    except Exception:
        return False

def get_array_module(a):
    if cupy is not None:
        return cupy.get_array_module(a)
    return numpy

def to_cpu(a):
    '''Move an array or sparse matrix to host memory'''
    if cupy is not None:
        if isinstance(a, cupy.ndarray):
            return cupy.asnumpy(a)
        if cupyx.scipy.sparse.issparse(a):
            return a.get()
    return a

def to_gpu(a):
    '''Move an array or CSR matrix to the device; no-op without cupy'''
    if not gpu_available():
        return a
    if scipy.sparse.issparse(a):
        return cupyx.scipy.sparse.csr_matrix(a.tocsr())
    return cupy.asarray(a)

def resolve_device(device):
    '''Map 'auto'/'cpu'/'gpu' to the device actually used'''
    if device == 'auto':
        return 'gpu' if gpu_available() else 'cpu'
    if device == 'gpu' and not gpu_available():
        return 'cpu'
    if device not in ('cpu', 'gpu'):
        raise InvalidParameterError(f'Unknown device {device}')
    return device


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
Orlicz-function machinery, Moser-iteration recurrences, degenerate
Carnot-Caratheodory geometries and Orlicz-Sobolev/boundedness diagnostics
for infinitely degenerate elliptic equations in the plane.
'''

__version__ = '0.3.0'

from . import lib, orlicz, iterates, recurrence, geometry, metric, sobolev, solver
from degenmoser.lib.logval import LogVal

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
Exception hierarchy.  The ValueError branch maps to CLI exit code 2, the
RuntimeError branch to exit code 3.
'''

class DegenMoserError(Exception):
    pass

class InvalidParameterError(DegenMoserError, ValueError):
    pass

class InvalidMeasureError(InvalidParameterError):
    pass

class DomainError(InvalidParameterError):
    def __init__(self, msg, level=None):
        super().__init__(msg)
        self.level = level

class PreconditionError(InvalidParameterError):
    pass

class ResolutionError(PreconditionError):
    pass

class AssemblyError(DegenMoserError, RuntimeError):
    pass

class NumericalError(DegenMoserError, RuntimeError):
    pass

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

'''Verbosity levels and CPU/wall timers on top of pyscf.lib.logger'''

import sys
import time
from pyscf import lib
from degenmoser import __config__

NOTE = lib.logger.NOTE
WARN = lib.logger.WARN
DEBUG = lib.logger.DEBUG
TIMER_LEVEL = lib.logger.TIMER_LEVEL
QUIET = lib.logger.QUIET


def init_timer(rec):
    '''(cpu,) marks, or (cpu, wall) when rec logs at DEBUG'''
    if rec.verbose >= DEBUG:
        return time.process_time(), time.perf_counter()
    return time.process_time(),

def timer(rec, msg, cpu0=None, wall0=None):
    '''Log the time since the marks at TIMER_LEVEL and return fresh marks'''
    if cpu0 is None:
        cpu0 = rec._t0
    rec._t0 = time.process_time()
    line = '    CPU time for %50s %9.2f sec' % (msg, rec._t0 - cpu0)
    if not wall0:
        if rec.verbose >= TIMER_LEVEL:
            lib.logger.flush(rec, line)
        return rec._t0,
    rec._w0 = time.perf_counter()
    if rec.verbose >= TIMER_LEVEL:
        lib.logger.flush(rec, line + ', wall time %9.2f sec' % (rec._w0 - wall0))
    return rec._t0, rec._w0

class Logger(lib.logger.Logger):
    def __init__(self, stdout=sys.stdout, verbose=NOTE):
        super().__init__(stdout=stdout, verbose=verbose)
    timer = timer
    init_timer = init_timer

def new_logger(rec=None, verbose=None):
    '''Logger for rec (anything with stdout and verbose).

    verbose may be a Logger, returned as is, or an int overriding rec.verbose.
    Without either, the level is __config__.verbose.
    '''
    if isinstance(verbose, Logger):
        return verbose
    stdout = getattr(rec, 'stdout', None) or sys.stdout
    if isinstance(verbose, int):
        return Logger(stdout, verbose)
    if rec is not None:
        return Logger(stdout, rec.verbose)
    return Logger(sys.stdout, getattr(__config__, 'verbose', QUIET))

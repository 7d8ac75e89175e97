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

import io
import unittest
from types import SimpleNamespace
from degenmoser import __config__
from degenmoser.lib import logger

class KnownValues(unittest.TestCase):
    def test_timer_output(self):
        rec = SimpleNamespace(stdout=io.StringIO(), verbose=logger.DEBUG)
        log = logger.new_logger(rec)
        self.assertIsInstance(log, logger.Logger)
        t0 = log.init_timer()
        self.assertEqual(len(t0), 2)
        t1 = log.timer('assembly', *t0)
        self.assertEqual(len(t1), 2)
        assert 'CPU time for' in rec.stdout.getvalue()
        assert 'assembly' in rec.stdout.getvalue()

    def test_quiet(self):
        rec = SimpleNamespace(stdout=io.StringIO(), verbose=logger.QUIET)
        t0 = logger.init_timer(rec)
        self.assertEqual(len(t0), 1)
        logger.timer(rec, 'solve', *t0)
        self.assertEqual(rec.stdout.getvalue(), '')

    def test_new_logger(self):
        log = logger.new_logger(verbose=logger.NOTE)
        self.assertIs(logger.new_logger(verbose=log), log)
        self.assertEqual(log.verbose, logger.NOTE)
        self.assertEqual(logger.new_logger().verbose,
                         getattr(__config__, 'verbose', logger.QUIET))

    def test_module_surface(self):
        for name in ('timer_debug1', '_timer_debug1', 'debug1', 'debug2', 'INFO', 'DEBUG1'):
            self.assertFalse(hasattr(logger, name), name)

if __name__ == "__main__":
    print("Full Tests for logger")
    unittest.main()

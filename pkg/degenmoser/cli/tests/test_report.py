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

import os
import json
import tempfile
import unittest
import numpy
import pandas
from degenmoser.cli.report import report_emit, emit_csv, _plain

class KnownValues(unittest.TestCase):
    def test_plain(self):
        out = _plain({'a': numpy.float64(1.5), 'b': numpy.int64(3), 'c': numpy.bool_(True),
                      'd': numpy.arange(2), 'e': float('inf')})
        self.assertEqual(out, {'a': 1.5, 'b': 3, 'c': True, 'd': [0, 1], 'e': 'inf'})

    def test_empty_frame(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = emit_csv(pandas.DataFrame(columns=['j', 'a_j']), os.path.join(tmp, 'e.csv'))
            with open(path) as f:
                self.assertEqual(f.read().strip(), 'j,a_j')

    def test_emit(self):
        frame = pandas.DataFrame({'n': [1, 2], 'beta': [2., 3.5]})
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, 'nested')
            csv1, json1 = report_emit('run', frame, {'m': 3.}, {'C': numpy.float64(.25)},
                                      {'ok': numpy.bool_(True)}, out)
            with open(json1) as f:
                summary = json.load(f)
            self.assertEqual(sorted(summary), ['flags', 'metrics', 'params'])
            self.assertEqual(summary['metrics']['C'], .25)
            self.assertTrue(summary['flags']['ok'])
            back = pandas.read_csv(csv1)
            assert abs(back['beta'] - frame['beta']).max() < 1e-15
            with open(csv1) as f:
                first = f.read()
            report_emit('run', frame, {'m': 3.}, {'C': .25}, {'ok': True}, out)
            with open(csv1) as f:
                self.assertEqual(f.read(), first)


if __name__ == "__main__":
    print("Full Tests for experiment reports")
    unittest.main()

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
from degenmoser.lib.exceptions import PreconditionError, InvalidParameterError
from degenmoser.cli.config import ExperimentConfig, SCHEMA, _coerce

class KnownValues(unittest.TestCase):
    def test_defaults(self):
        for (group, action), schema in SCHEMA.items():
            cfg = ExperimentConfig(group, action)
            self.assertEqual(cfg.params, schema)
            self.assertEqual(cfg.name, f'{group}_{action}')

    def test_coerce(self):
        self.assertEqual(_coerce('N', '200', 10), 200)
        self.assertEqual(_coerce('m', '2.5', 2.), 2.5)
        self.assertEqual(_coerce('j', '1,2,5', [1, 2]), [1, 2, 5])
        self.assertEqual(_coerce('eps', '.1, .05', [.2]), [.1, .05])
        self.assertEqual(_coerce('ln_inv_eps', '', []), [])
        self.assertTrue(_coerce('isotropic', 'true', False))
        self.assertEqual(_coerce('variant', 'phi_tilde', 'phi'), 'phi_tilde')
        with self.assertRaises(InvalidParameterError):
            _coerce('N', '2.5', 10)
        with self.assertRaises(InvalidParameterError):
            _coerce('m', 'three', 2.)

    def test_unknown(self):
        with self.assertRaises(PreconditionError):
            ExperimentConfig('young', 'plot')
        with self.assertRaises(PreconditionError):
            ExperimentConfig('young', 'check', {'gamma': 4.})
        cfg = ExperimentConfig('recurrence', 'run', {'N': '50'}, name='short')
        self.assertEqual(cfg.params['N'], 50)
        self.assertEqual(cfg.name, 'short')

    def test_json(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'run.json')
            with open(path, 'w') as f:
                json.dump({'subcommand': 'recurrence fail', 'N': 500, 'K': 9.}, f)
            cfg = ExperimentConfig.from_json(path, output_dir=tmp)
            self.assertEqual((cfg.group, cfg.action), ('recurrence', 'fail'))
            self.assertEqual(cfg.params['N'], 500)
            self.assertEqual(cfg.params['K'], 9.)
            self.assertEqual(cfg.to_dict()['subcommand'], 'recurrence fail')
            with open(path, 'w') as f:
                json.dump([1, 2], f)
            with self.assertRaises(PreconditionError):
                ExperimentConfig.from_json(path, 'recurrence', 'fail')


if __name__ == "__main__":
    print("Full Tests for experiment configurations")
    unittest.main()

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
CSV and JSON reports.  Output depends only on the results, so two runs of
one configuration write identical files.
'''

import os
import json
import numpy
import pandas


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, numpy.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (numpy.bool_, bool)):
        return bool(obj)
    if isinstance(obj, numpy.integer):
        return int(obj)
    if isinstance(obj, (numpy.floating, float)):
        x = float(obj)
        # JSON has no inf/nan
        return x if numpy.isfinite(x) else str(x)
    return obj

def emit_csv(frame, path):
    frame = pandas.DataFrame(frame)
    frame.to_csv(path, index=False)
    return path

def emit_json(summary, path):
    with open(path, 'w') as f:
        json.dump(_plain(summary), f, sort_keys=True, indent=2)
        f.write('\n')
    return path

def report_emit(name, frame, params, metrics, flags, output_dir):
    '''<output_dir>/<name>.csv and <output_dir>/<name>.json ({params, metrics, flags})'''
    os.makedirs(output_dir, exist_ok=True)
    csv_path = emit_csv(frame, os.path.join(output_dir, f'{name}.csv'))
    json_path = emit_json({'params': params, 'metrics': metrics, 'flags': flags},
                          os.path.join(output_dir, f'{name}.json'))
    return csv_path, json_path

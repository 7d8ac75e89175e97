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
Command-line experiment runner and its CSV/JSON reports
'''

from degenmoser.cli.config import ExperimentConfig, SCHEMA
from degenmoser.cli.report import report_emit, emit_csv, emit_json
from degenmoser.cli.driver import ExperimentDriver, run, main

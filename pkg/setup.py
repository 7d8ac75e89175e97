#!/usr/bin/env python

# degenmoser: Orlicz-Moser iteration diagnostics for infinitely degenerate
# elliptic equations
#
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

from setuptools import setup, find_packages

NAME = 'degenmoser'
AUTHOR = 'The degenmoser Authors'
AUTHOR_EMAIL = None
DESCRIPTION = 'Orlicz-Moser iteration diagnostics for infinitely degenerate elliptic equations'
LICENSE = 'GPLv3'
URL = None
DOWNLOAD_URL = None
CLASSIFIERS = None
PLATFORMS = None

def get_version():
    topdir = os.path.abspath(os.path.join(__file__, '..'))
    module_path = os.path.join(topdir, 'degenmoser')
    for version_file in ['__init__.py', '_version.py']:
        version_file = os.path.join(module_path, version_file)
        if os.path.exists(version_file):
            with open(version_file, 'r') as f:
                for line in f.readlines():
                    if line.startswith('__version__'):
                        delim = '"' if '"' in line else "'"
                        return line.split(delim)[1]
    raise ValueError("Version string not found")


VERSION = get_version()

setup(
    name=NAME,
    version=VERSION,
    description=DESCRIPTION,
    license=LICENSE,
    author=AUTHOR,
    author_email=AUTHOR_EMAIL,
    package_dir={'degenmoser': 'degenmoser'},
    include_package_data=True,
    packages=find_packages(exclude=['*test*', '*examples*']),
    python_requires='>=3.8',
    tests_require=[
        "pytest>=7.2.0",
        "hypothesis>=6.0",
    ],
    install_requires=[
        'numpy>=1.21',
        'scipy>=1.7',
        'pandas>=1.3',
        'pyscf>=2.1.1',
    ],
    extras_require={
        'gpu': ['cupy>=10.0'],
        'tests': ['pytest>=7.2.0', 'hypothesis>=6.0'],
    },
    entry_points={
        'console_scripts': ['degenmoser=degenmoser.cli.driver:main'],
    },
)

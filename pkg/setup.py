#!/usr/bin/env python
# Licensed under a 3-clause BSD style license - see LICENSE.rst
#
# All package metadata lives in setup.cfg.
#
from setuptools import setup

setup()

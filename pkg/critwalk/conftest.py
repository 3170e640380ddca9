# This file is used to configure the behavior of pytest when using the Astropy
# test infrastructure.
import os

try:
    from pytest_astropy_header.display import PYTEST_HEADER_MODULES, TESTED_VERSIONS
except ImportError:
    PYTEST_HEADER_MODULES = {}
    TESTED_VERSIONS = {}

#
# Display the versions of the packages critwalk computes with.
#
PYTEST_HEADER_MODULES['Astropy'] = 'astropy'
PYTEST_HEADER_MODULES['critwalk'] = 'critwalk'
for _module in ('h5py', 'Pandas', 'Matplotlib'):
    PYTEST_HEADER_MODULES.pop(_module, None)

try:
    from . import __version__ as version
except ImportError:
    version = 'dev'

packagename = os.path.basename(os.path.dirname(__file__))
TESTED_VERSIONS[packagename] = version

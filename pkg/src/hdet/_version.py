"""
Library version number.

"""

# SPDX-License-Identifier: BSD-3-Clause

# Kept in its own module because setuptools reads it during the build, before numpy
# is installed; importing hdet itself would pull numpy in through _bound.
LIBRARY_VERSION = "1.0"

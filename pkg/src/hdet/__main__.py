"""
Allow ``python -m hdet``.

"""

# SPDX-License-Identifier: BSD-3-Clause

from ._cli import main

if __name__ == "__main__":
    main()

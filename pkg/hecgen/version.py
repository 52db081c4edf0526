# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Version information for hecgen.

This file is imported by ``hecgen.__init__`` and parsed by ``setup.py``.
"""

from __future__ import absolute_import, print_function

__version__ = "0.1.0"

# -*- coding: utf-8 -*-
#
# This file is part of hecgen.
# Copyright (C) 2026 hecgen contributors.
#
# hecgen is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""hecgen - Frobenius endomorphism generators on genus-2 Jacobians."""

from __future__ import absolute_import, print_function

from .version import __version__

__all__ = ("__version__",)

# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
This submodule provides prebuilt data shipped with the package, currently the reduced beta corrections of the quartic
and sextic integral bases, which cannot be derived from the shape invariants alone.
"""

from . import beta_fixtures
from .beta_fixtures import *

__all__ = beta_fixtures.__all__

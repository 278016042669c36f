# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Exact integer arithmetic and the lattice hull algorithm leveraged for the pureshape package."""

from . import arith
from .arith import *
from .hull import lower_hull, lower_hull_vertices

__all__ = arith.__all__ + ['lower_hull', 'lower_hull_vertices']

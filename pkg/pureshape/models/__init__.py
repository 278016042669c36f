# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Custom data types/classes used in the pureshape package."""

from . import integers, shapes, polygons, tables, reports
from .integers import *
from .shapes import *
from .polygons import *
from .tables import *
from .reports import *

__all__ = list(integers.__all__)
__all__ += shapes.__all__
__all__ += polygons.__all__
__all__ += tables.__all__
__all__ += reports.__all__

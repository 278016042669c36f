# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Exact lower convex hulls of integer point sets, the geometric core of the Newton polygon oracle."""

from __future__ import annotations

from pureshape.exceptions import DomainError
from pureshape.models.polygons import HullSide

__all__ = ['lower_hull', 'lower_hull_vertices']


def _cross(o: tuple[int, int], a: tuple[int, int], b: tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull_vertices(points) -> list[tuple[int, int]]:
    """
    Andrew's monotone chain restricted to the lower boundary, with integer cross products only.

    Parameters
    ----------
    points: iterable of (int, int)
        The finite-ordinate points; for repeated abscissae only the lowest ordinate matters

    Returns
    -------
    list of (int, int)
        Hull vertices from left to right; collinear interior points are dropped so slopes strictly increase
    """
    lowest = {}
    for x, y in points:
        if x not in lowest or y < lowest[x]:
            lowest[x] = y
    if len(lowest) < 2:
        raise DomainError(f'A hull needs at least 2 distinct abscissae, got {sorted(lowest.items())}.')

    chain = []
    for pt in sorted(lowest.items()):
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], pt) <= 0:
            chain.pop()
        chain.append(pt)
    return chain


def lower_hull(points) -> list[HullSide]:
    """The principal (negative slope) sides of the lower hull, left to right."""
    chain = lower_hull_vertices(points)
    sides = [HullSide(a, b) for a, b in zip(chain, chain[1:])]
    return [s for s in sides if s.height > 0]

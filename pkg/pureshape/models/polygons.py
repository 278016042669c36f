# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Data types for order-1 Newton polygon analysis of x^n - a at a prime p."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

__all__ = [
    'HullSide',
    'PhiExpansion',
    'NewtonPolygon',
    'RegularityVerdict',
    'KummerLatticeReport',
    'OneMoreDigitReport',
]

Point = tuple[int, int]


@dataclass(frozen=True)
class HullSide:
    """
    A side of a lower convex hull between two lattice points

    Attributes
    ----------
    start: tuple of int
        Left endpoint (abscissa, ordinate)
    end: tuple of int
        Right endpoint (abscissa, ordinate)
    """

    start: Point
    end: Point

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.end[1] - self.start[1], self.length)

    @property
    def degree(self) -> int:
        """Number of lattice segments on the side, the degree of its residual polynomial."""
        return gcd(self.length, self.height)

    @property
    def ramification(self) -> int:
        return self.length // self.degree

    def lattice_points(self) -> list[Point]:
        e, h = self.ramification, self.height // self.degree
        return [(self.start[0] + j * e, self.start[1] - j * h) for j in range(self.degree + 1)]

    def ordinate_at(self, x: int) -> Fraction:
        return self.start[1] - Fraction((x - self.start[0]) * self.height, self.length)

    def to_dict(self) -> dict:
        return {
            'start': list(self.start),
            'end': list(self.end),
            'slope': [self.slope.numerator, self.slope.denominator],
            'height': self.height,
            'degree': self.degree,
        }


@dataclass(frozen=True)
class PhiExpansion:
    """
    The phi-adic expansion of x^n - a for a linear key polynomial phi

    Attributes
    ----------
    n: int
        Degree of the pure polynomial
    p: int
        The prime the expansion is analysed at
    branch: str
        'unit' when phi = x - u for an n-th root u of a mod p, 'ramified' when p | a and phi = x
    u: int or None
        The root used on the unit branch
    coefficients: tuple of int
        The exact integer coefficients a_{1,i} for i = 0..n, zero where a coefficient is absent
    """

    n: int
    p: int
    branch: str
    u: int | None
    coefficients: tuple[int, ...]

    def coeff_valuations(self) -> list[tuple[int, int]]:
        """(i, v_p(a_{1,i})) over the nonzero coefficients; zero coefficients have infinite ordinate."""
        # pureshape.math imports the hull, which needs this module
        from pureshape.math.arith import vp

        return [(i, vp(c, self.p)) for i, c in enumerate(self.coefficients) if c != 0]


@dataclass(frozen=True)
class NewtonPolygon:
    """
    The principal order-1 Newton polygon together with its residual polynomials

    Attributes
    ----------
    expansion: PhiExpansion
        The expansion whose coefficient valuations form the point cloud
    points: tuple of (int, int)
        The finite-ordinate points (i, v_p(a_{1,i}))
    sides: tuple of HullSide
        The negative-slope sides of the lower hull, left to right
    residuals: tuple of tuple of int
        Per side, the residual coefficients (c_0, ..., c_d) over F_p, lowest degree first
    """

    expansion: PhiExpansion
    points: tuple[Point, ...]
    sides: tuple[HullSide, ...]
    residuals: tuple[tuple[int, ...], ...]

    def on_boundary(self, point: Point) -> bool:
        x, y = point
        return any(s.start[0] <= x <= s.end[0] and s.ordinate_at(x) == y for s in self.sides)

    def lattice_defect(self) -> int:
        """Lattice points (x, y) with x, y >= 1 lying on or below the principal polygon."""
        count = 0
        for side in self.sides:
            for x in range(max(side.start[0], 1), side.end[0]):
                # Each abscissa is counted once, on the side where it is not the right endpoint
                count += max(0, int(side.ordinate_at(x)))
        return count

    def to_dict(self) -> dict:
        return {
            'branch': self.expansion.branch,
            'u': self.expansion.u,
            'points': [list(pt) for pt in self.points],
            'sides': [s.to_dict() | {'residual': list(r)} for s, r in zip(self.sides, self.residuals)],
        }


@dataclass(frozen=True)
class RegularityVerdict:
    """
    Outcome of the order-1 regularity test

    Attributes
    ----------
    branch: str
        'unit' or 'ramified'
    separable: bool
        Whether every principal-side residual polynomial is separable over F_p
    lattice_defect: int
        Lattice points on or below the principal polygon, only ever tested against zero
    non_separable: tuple
        Certificate: (side, residual) pairs whose residual is not separable
    """

    branch: str
    separable: bool
    lattice_defect: int
    non_separable: tuple = ()

    @property
    def regular(self) -> bool:
        if self.branch == 'ramified':
            return self.separable
        return self.separable and self.lattice_defect == 0

    def __bool__(self) -> bool:
        return self.regular

    def to_dict(self) -> dict:
        return {
            'branch': self.branch,
            'regular': self.regular,
            'separable': self.separable,
            'lattice_defect': self.lattice_defect,
            'non_separable': [{'side': side, 'residual': list(res)} for side, res in self.non_separable],
        }


@dataclass
class KummerLatticeReport:
    """
    Result of checking that the points (p^k, e - k) form the principal polygon of the binomial coefficients

    Attributes
    ----------
    n, p, e: int
        The degree, prime, and exponent with p^e || n
    vacuous: bool
        True when p does not divide n, in which case nothing is checked
    classes_checked: int
        Unit classes mod p^(e+2) admitting a root that were examined
    valuation_failures: list
        Indices i where v_p(binomial(n, i)) broke the bound e - v_p(i) or its equality at p^k
    lattice_failures: list
        Classes whose coefficient polygon did not have exactly the Kummer sides of height 1
    shadowed: list
        Classes whose constant-term point cuts below the first Kummer side
    """

    n: int
    p: int
    e: int = 0
    vacuous: bool = False
    classes_checked: int = 0
    valuation_failures: list = field(default_factory=list)
    lattice_failures: list = field(default_factory=list)
    shadowed: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.valuation_failures and not self.lattice_failures


@dataclass
class OneMoreDigitReport:
    """
    Result of checking that height-one residual polynomials read only the expected number of digits of a

    Attributes
    ----------
    n, p: int
        Degree and prime
    digits: int
        Pairs are congruent modulo p^(digits + 1)
    pairs_checked: int
        Number of (a, a') pairs compared
    mismatches: list
        (a, a', side start, side end) tuples where residuals differed or a constant-term side appeared in only one
    """

    n: int
    p: int
    digits: int = 1
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Tests for the Newton polygon data types"""

from fractions import Fraction

from pureshape.models.polygons import *


def test_hull_side():
    side = HullSide((0, 3), (6, 1))
    assert side.length == 6 and side.height == 2
    assert side.slope == Fraction(-1, 3)
    assert side.degree == 2
    assert side.ramification == 3
    assert side.lattice_points() == [(0, 3), (3, 2), (6, 1)]
    assert side.ordinate_at(4) == Fraction(5, 3)
    assert side.to_dict() == {'start': [0, 3], 'end': [6, 1], 'slope': [-1, 3], 'height': 2, 'degree': 2}


def test_phi_expansion_valuations():
    # x^4 - 17 around u = 1 at p = 2: constant 1 - 17 = -16, then binomials 4, 6, 4, 1
    exp = PhiExpansion(4, 2, 'unit', 1, (-16, 4, 6, 4, 1))
    assert exp.coeff_valuations() == [(0, 4), (1, 2), (2, 1), (3, 2), (4, 0)]
    # Zero coefficients are skipped
    exp = PhiExpansion(4, 2, 'unit', 1, (0, 4, 6, 4, 1))
    assert exp.coeff_valuations()[0] == (1, 2)


def test_newton_polygon_defect():
    exp = PhiExpansion(4, 2, 'unit', 1, (-16, 4, 6, 4, 1))
    sides = (HullSide((0, 4), (1, 2)), HullSide((1, 2), (2, 1)), HullSide((2, 1), (4, 0)))
    poly = NewtonPolygon(exp, tuple(exp.coeff_valuations()), sides, ((1, 1), (1, 1), (1, 1)))
    assert poly.on_boundary((2, 1))
    assert not poly.on_boundary((3, 2))
    # Lattice points with x, y >= 1 on or below the polygon: (1, 1), (1, 2), (2, 1)
    assert poly.lattice_defect() == 3
    assert poly.to_dict()['sides'][0]['residual'] == [1, 1]


def test_verdicts_and_reports():
    assert RegularityVerdict('unit', True, 0)
    assert not RegularityVerdict('unit', True, 2)
    assert RegularityVerdict('ramified', True, 5)
    assert not RegularityVerdict('ramified', False, 0, (({'start': [0, 2]}, (0, 0, 1)),))
    assert RegularityVerdict('unit', False, 0).to_dict()['regular'] is False

    kummer = KummerLatticeReport(4, 2, 2)
    assert kummer.passed
    kummer.lattice_failures.append(5)
    assert not kummer.passed
    digits = OneMoreDigitReport(6, 3)
    assert digits.passed and digits.digits == 1

# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Order-1 Newton polygon oracle for f(x) = x^n - a at a prime p. A linear key polynomial is used (x - u for a root u of
a mod p, or x itself when p divides a); the lower hull of the coefficient valuations is computed exactly, each
principal side gets its residual polynomial over F_p, and regularity is read off from those residuals. Two structural
checks ride on top: the Kummer lattice of binomial valuations and the digit dependence of height-one residuals.
"""

from __future__ import annotations

from math import comb

from sympy import isprime
from sympy.ntheory.residue_ntheory import nthroot_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_sqf_p, gf_strip

from pureshape.exceptions import DomainError, InternalConsistencyError, NotYetSupportedError
from pureshape.helpers import logger
from pureshape.math.arith import kummer_binomial_valuation, vp
from pureshape.math.hull import lower_hull
from pureshape.models.polygons import (
    HullSide,
    KummerLatticeReport,
    NewtonPolygon,
    OneMoreDigitReport,
    PhiExpansion,
    RegularityVerdict,
)

__all__ = [
    'nth_root_mod_p',
    'phi_expansion',
    'residual_polynomial',
    'newton_polygon',
    'is_separable_mod_p',
    'is_p_regular_order1',
    'verify_kummer_lattice',
    'verify_one_more_digit',
]


def _require_prime(p: int):
    if not isprime(p):
        raise DomainError(f'Expected a prime, got p={p}.')


def nth_root_mod_p(a: int, n: int, p: int) -> int | None:
    """The smallest u in [1, p) with u^n = a mod p, or None when a is not an n-th power residue."""
    _require_prime(p)
    if a % p == 0:
        raise DomainError(f'p={p} divides a={a}; the unit branch needs a root of a unit.')
    root = nthroot_mod(a % p, n, p)
    return None if root is None else int(root)


def phi_expansion(a: int, n: int, p: int) -> PhiExpansion:
    """
    Expand x^n - a in powers of the linear key polynomial at p.

    Parameters
    ----------
    a: int
        Nonzero radicand
    n: int
        The degree
    p: int
        A prime

    Returns
    -------
    PhiExpansion
        Unit branch with a_{1,0} = u^n - a and a_{1,i} = binomial(n, i) u^(n-i), or ramified branch with a_{1,0} = -a
        and a_{1,n} = 1
    """
    _require_prime(p)
    if a == 0:
        raise DomainError('a = 0 has no Newton polygon.')
    if a % p == 0:
        coeffs = [0] * (n + 1)
        coeffs[0], coeffs[n] = -a, 1
        return PhiExpansion(n, p, 'ramified', None, tuple(coeffs))
    u = nth_root_mod_p(a, n, p)
    if u is None:
        raise NotYetSupportedError(
            f'x^{n} - {a} has no linear factor mod {p}; higher degree key polynomials are not implemented.'
        )
    coeffs = [u**n - a] + [comb(n, i) * u ** (n - i) for i in range(1, n + 1)]
    return PhiExpansion(n, p, 'unit', u, tuple(coeffs))


def residual_polynomial(side: HullSide, expansion: PhiExpansion, p: int) -> tuple[int, ...]:
    """
    Residual coefficients c_j = (a_{1, s + j e} / p^(u_s - j h)) mod p attached to the lattice points of a side.

    Returns
    -------
    tuple of int
        (c_0, ..., c_d) in [0, p), lowest degree first
    """
    coeffs = []
    for x, y in side.lattice_points():
        if not 0 <= x <= expansion.n:
            msg = f'Lattice point ({x}, {y}) lies outside the expansion of degree {expansion.n}.'
            raise InternalConsistencyError(msg)
        c = expansion.coefficients[x]
        if c == 0:
            coeffs.append(0)
            continue
        if y < 0 or vp(c, p) < y:
            raise InternalConsistencyError(f'Coefficient {c} at abscissa {x} lies below the side {side}.')
        coeffs.append((c // p**y) % p)
    return tuple(coeffs)


def newton_polygon(a: int, n: int, p: int) -> NewtonPolygon:
    expansion = phi_expansion(a, n, p)
    points = tuple(expansion.coeff_valuations())
    sides = tuple(lower_hull(points))
    residuals = tuple(residual_polynomial(s, expansion, p) for s in sides)
    return NewtonPolygon(expansion, points, sides, residuals)


def is_separable_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """Whether the polynomial with low-to-high coefficients coeffs is squarefree (equivalently separable) over F_p."""
    poly = gf_strip([ZZ(c % p) for c in reversed(coeffs)])
    return bool(gf_sqf_p(poly, p, ZZ))


def is_p_regular_order1(a: int, n: int, p: int) -> RegularityVerdict:
    """
    Order-1 regularity of x^n - a at p.

    The verdict requires every principal residual polynomial to be separable. On the unit branch it additionally
    requires the polygon to enclose no lattice points, so that the order-1 analysis closes without an index
    contribution at p; for p || n and p not dividing a this happens exactly when a^(p-1) is not 1 mod p^2.

    Returns
    -------
    RegularityVerdict
        Truthy when regular; carries the non-separable residuals and the lattice defect as certificate
    """
    poly = newton_polygon(a, n, p)
    bad = tuple(
        (side.to_dict(), residual)
        for side, residual in zip(poly.sides, poly.residuals)
        if not is_separable_mod_p(residual, p)
    )
    return RegularityVerdict(poly.expansion.branch, not bad, poly.lattice_defect(), bad)


def verify_kummer_lattice(n: int, p: int) -> KummerLatticeReport:
    """
    Check that with p^e || n the binomial points (i, v_p(binomial(n, i) u^(n-i))) have the principal polygon joining
    (p^k, e - k) for k = 0..e by sides of height one, over every unit class a mod p^(e+2) with a root mod p.

    Classes whose constant-term point (0, v_p(u^n - a)) cuts below the first Kummer side are recorded as shadowed;
    whenever v_p(u^n - a) >= e + 1 the full polygon must still pass through every Kummer point.
    """
    _require_prime(p)
    if n % p:
        return KummerLatticeReport(n, p, vacuous=True)
    e = vp(n, p)
    report = KummerLatticeReport(n, p, e)
    kummer_points = [(p**k, e - k) for k in range(e + 1)]
    expected_sides = [HullSide(kummer_points[k], kummer_points[k + 1]) for k in range(e)]

    for i in range(1, n + 1):
        val = kummer_binomial_valuation(n, i, p)
        bound = e - vp(i, p)
        is_kummer_abscissa = i in {pt[0] for pt in kummer_points}
        if val < bound or (is_kummer_abscissa and val != bound):
            report.valuation_failures.append(i)

    for a in range(1, p ** (e + 2)):
        if a % p == 0 or nth_root_mod_p(a, n, p) is None:
            continue
        report.classes_checked += 1
        expansion = phi_expansion(a, n, p)
        tail = [(i, v) for i, v in expansion.coeff_valuations() if i >= 1]
        tail_sides = lower_hull(tail)
        if tail_sides != expected_sides or any(s.height != 1 for s in tail_sides):
            report.lattice_failures.append(a)
            continue
        full = newton_polygon(a, n, p)
        on_full = all(full.on_boundary(pt) for pt in kummer_points)
        const = expansion.coefficients[0]
        deep_constant = const == 0 or vp(const, p) >= e + 1
        if deep_constant and not on_full:
            report.lattice_failures.append(a)
        elif not on_full:
            report.shadowed.append(a)

    if report.passed:
        logger.info(f'Kummer lattice holds for n={n}, p={p} over {report.classes_checked} unit classes.')
    else:
        logger.warning(f'Kummer lattice check failed for n={n}, p={p}: {report.lattice_failures[:10]}')
    return report


def _height_one_residuals(poly: NewtonPolygon, digits: int) -> dict:
    """Height-one sides that read at most `digits` p-adic digits of a through the constant term."""
    readable = {}
    for side, residual in zip(poly.sides, poly.residuals):
        if side.height != 1:
            continue
        if side.start[0] == 0 and side.start[1] > digits:
            continue
        readable[(side.start, side.end)] = residual
    return readable


def verify_one_more_digit(n: int, p: int, digits: int = 1) -> OneMoreDigitReport:
    """
    Check that height-one residual polynomials only depend on a mod p^(digits + 1).

    Every unit class a mod p^(digits + 1) admitting a root is paired with its lifts a' = a + j p^(digits + 1),
    j = 1..p. For each pair, every height-one side present in both polygons must carry the same residual, and a
    height-one side through the constant-term point at ordinate at most `digits` must appear in both or neither.
    """
    _require_prime(p)
    if digits < 1:
        raise DomainError(f'digits must be at least 1, got {digits}.')
    report = OneMoreDigitReport(n, p, digits)
    step = p ** (digits + 1)
    for a in range(1, step):
        if a % p == 0 or nth_root_mod_p(a, n, p) is None:
            continue
        base = _height_one_residuals(newton_polygon(a, n, p), digits)
        for j in range(1, p + 1):
            a_lift = a + j * step
            lifted = _height_one_residuals(newton_polygon(a_lift, n, p), digits)
            report.pairs_checked += 1
            for key in base.keys() & lifted.keys():
                if base[key] != lifted[key]:
                    report.mismatches.append((a, a_lift, key[0], key[1]))
            for key in base.keys() ^ lifted.keys():
                if key[0][0] == 0:
                    report.mismatches.append((a, a_lift, key[0], key[1]))
    logger.info(f'Compared {report.pairs_checked} pairs for n={n}, p={p}; {len(report.mismatches)} mismatches.')
    return report

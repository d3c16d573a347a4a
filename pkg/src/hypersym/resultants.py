"""Exact resultants of homogeneous systems in two and three variables.

Characteristic polynomials are recovered by evaluating the resultant of the
eigenvalue forms at exact rational nodes and interpolating, so the heavy
lifting here is exact determinant work: fraction-free Bareiss elimination on
integerized matrices, the classical Sylvester matrix for binary forms, and
the classical three-variable Macaulay quotient det(M) / det(M').
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Monomial = tuple[int, ...]
Form = dict[Monomial, Fraction]


def bareiss_det_int(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[size - 1][size - 1]


def det_fractions(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix (rows integerized first)."""
    size = len(matrix)
    if size == 0:
        return Fraction(1)
    scale = 1
    int_rows = []
    for row in matrix:
        denom = lcm(*(f.denominator for f in row)) if row else 1
        scale *= denom
        int_rows.append([int(f * denom) for f in row])
    return Fraction(bareiss_det_int(int_rows), scale)


# ---------------------------------------------------------------------------
# binary forms: Sylvester
# ---------------------------------------------------------------------------

def sylvester_resultant(f_desc: Sequence[Fraction], g_desc: Sequence[Fraction]) -> Fraction:
    """Resultant of two binary forms given by full descending coefficient lists.

    ``f_desc`` has formal degree len(f_desc) - 1; leading zeros are
    meaningful (they encode roots at infinity of the dehomogenized pair).
    """
    df = len(f_desc) - 1
    dg = len(g_desc) - 1
    if df < 1 or dg < 1:
        raise ValueError("both forms must have formal degree >= 1")
    size = df + dg
    m = [[Fraction(0)] * size for _ in range(size)]
    for i in range(dg):
        for j, c in enumerate(f_desc):
            m[i][i + j] = Fraction(c)
    for i in range(df):
        for j, c in enumerate(g_desc):
            m[dg + i][i + j] = Fraction(c)
    return det_fractions(m)


# ---------------------------------------------------------------------------
# three variables: classical Macaulay quotient
# ---------------------------------------------------------------------------

def _monomials_of_degree(total: int) -> list[Monomial]:
    out = []
    for a in range(total, -1, -1):
        for b in range(total - a, -1, -1):
            out.append((a, b, total - a - b))
    return out


class DegenerateNode(Exception):
    """det(M') vanished at this evaluation node; pick another node."""


def macaulay_resultant_3(forms: Sequence[Form], d: int) -> Fraction:
    """Resultant of three degree-d ternary forms via det(M) / det(M').

    Rows of M are (monomial / x_i^d) * f_i for each degree-D monomial
    (D = 3d - 2), with i the first variable whose d-th power divides the
    monomial; M' keeps the rows and columns of monomials divisible by at
    least two such powers.  Raises DegenerateNode when det(M') = 0.
    """
    if len(forms) != 3:
        raise ValueError("exactly three forms required")
    if d < 1:
        raise ValueError(f"form degree must be >= 1, got {d}")
    big_d = 3 * d - 2
    mons = _monomials_of_degree(big_d)
    col_of = {mon: i for i, mon in enumerate(mons)}
    size = len(mons)

    rows: list[list[Fraction]] = []
    non_reduced_idx: list[int] = []
    for mi, mon in enumerate(mons):
        divisible = [mon[i] >= d for i in range(3)]
        cls = divisible.index(True)  # D = 3d-2 guarantees at least one
        if sum(divisible) >= 2:
            non_reduced_idx.append(mi)
        quotient = tuple(mon[i] - (d if i == cls else 0) for i in range(3))
        row = [Fraction(0)] * size
        for fmon, coeff in forms[cls].items():
            shifted = (quotient[0] + fmon[0], quotient[1] + fmon[1],
                       quotient[2] + fmon[2])
            row[col_of[shifted]] += coeff
        rows.append(row)

    det_m = det_fractions(rows)
    sub = [[rows[i][j] for j in non_reduced_idx] for i in non_reduced_idx]
    det_sub = det_fractions(sub)
    if det_sub == 0:
        raise DegenerateNode(
            "denominator minor vanished at this evaluation node")
    return det_m / det_sub


# ---------------------------------------------------------------------------
# exact interpolation (Newton form)
# ---------------------------------------------------------------------------

def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Ascending coefficients of the polynomial through the given points."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    divided = [Fraction(y) for _, y in points]
    k = len(points)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form: p <- p * (x - x_i) + d_i, ascending coeffs
    coeffs = [divided[k - 1]]
    for i in range(k - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        coeffs = [shifted[j] - xs[i] * (coeffs[j] if j < len(coeffs) else Fraction(0))
                  for j in range(len(shifted))]
        coeffs[0] += divided[i]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs

"""Exact characteristic polynomials of small tensors and their symmetry tests.

The characteristic polynomial of an order-n tensor with r indices is the
resultant of the n eigenvalue forms lam * x_k^(r-1) - F_k(x); it is monic of
degree n * (r-1)^(n-1).  It is computed here by evaluating the resultant at
exact rational nodes (Sylvester for n = 2, Macaulay quotient for n = 3,
skipping nodes where the denominator minor vanishes) and interpolating.
A polynomial has a symmetric root multiset iff p(-x) == (-1)^deg p(x).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .hypergraph import Hypergraph, adjacency_tensor
from .resultants import (DegenerateNode, det_fractions, interpolate,
                         macaulay_resultant_3, sylvester_resultant)
from .tensor import CubicalTensor, components, is_symmetric, is_weakly_irreducible

__all__ = [
    "UniPoly", "charpoly_2matrix", "charpoly_tensor",
    "is_spectrum_symmetric_poly", "ProductReport", "verify_component_product",
    "MultiplicityReport", "isolated_vertex_multiplicity_check",
]


class UniPoly:
    """Univariate polynomial with exact rational coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int | str]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def __pow__(self, e: int) -> "UniPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = UniPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def compose_neg(self) -> "UniPoly":
        """p(-x)."""
        return UniPoly([c if i % 2 == 0 else -c
                        for i, c in enumerate(self.coeffs)])

    def derivative(self) -> "UniPoly":
        if self.degree == 0:
            return UniPoly([0])
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.coeffs == (Fraction(0),):
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([0]), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return UniPoly(quot), UniPoly(rem)

    __divmod__ = divmod

    def roots(self) -> list[complex]:
        """Numerical roots with multiplicity (floats).

        Repeated roots are located once per squarefree factor and then
        replicated, which conditions them far better than rooting the
        full polynomial directly.
        """
        if self.degree == 0:
            return []
        out: list[complex] = []
        for mult, factor in squarefree_decomposition(self):
            desc = [float(c) for c in reversed(factor.coeffs)]
            for z in np.roots(desc):
                out.extend([complex(z)] * mult)
        return out

    def to_json_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "UniPoly":
        p = cls([Fraction(c) for c in data["coeffs"]])
        if "degree" in data and data["degree"] != p.degree:
            raise ValueError(
                f"declared degree {data['degree']} != actual degree {p.degree}")
        return p

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor over the rationals."""
    while b.coeffs != (Fraction(0),):
        _, rem = a.divmod(b)
        a, b = b, rem
    if a.coeffs == (Fraction(0),):
        return a
    lead = a.coeffs[-1]
    return UniPoly([c / lead for c in a.coeffs])


def squarefree_decomposition(p: UniPoly) -> list[tuple[int, UniPoly]]:
    """Yun's decomposition: [(multiplicity, monic squarefree factor), ...]."""
    if p.degree == 0:
        return []
    lead = p.coeffs[-1]
    p = UniPoly([c / lead for c in p.coeffs])
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b, _ = p.divmod(a)
    c, _ = dp.divmod(a)
    d = UniPoly([x - y for x, y in
                 _pad(c.coeffs, b.derivative().coeffs)])
    out = []
    i = 1
    while b.degree > 0:
        a_i = poly_gcd(b, d)
        if a_i.degree > 0:
            out.append((i, a_i))
        b, _ = b.divmod(a_i)
        c, _ = d.divmod(a_i)
        d = UniPoly([x - y for x, y in _pad(c.coeffs, b.derivative().coeffs)])
        i += 1
    return out


def _pad(xs: Sequence[Fraction], ys: Sequence[Fraction]):
    length = max(len(xs), len(ys))
    for i in range(length):
        yield (xs[i] if i < len(xs) else Fraction(0),
               ys[i] if i < len(ys) else Fraction(0))


def root_multiplicity(p: UniPoly, root: Fraction) -> int:
    """Largest k with (x - root)^k dividing p."""
    factor = UniPoly([-Fraction(root), 1])
    count = 0
    while True:
        q, rem = p.divmod(factor)
        if rem.coeffs != (Fraction(0),):
            return count
        p = q
        count += 1


# ---------------------------------------------------------------------------
# characteristic polynomials
# ---------------------------------------------------------------------------

def _require_real_rational(a: CubicalTensor, what: str) -> None:
    if not a.is_real():
        raise ValueError(f"{what} requires real rational entries")


def _nodes() -> Iterator[Fraction]:
    yield Fraction(0)
    t = 1
    while True:
        yield Fraction(t)
        yield Fraction(-t)
        t += 1


def charpoly_2matrix(a: CubicalTensor) -> UniPoly:
    """Exact det(xI - A) for an r = 2 matrix of any order."""
    if a.r != 2:
        raise ValueError(f"matrix characteristic polynomial needs r=2, got r={a.r}")
    _require_real_rational(a, "charpoly_2matrix")
    n = a.n
    node_iter = _nodes()
    points = []
    for _ in range(n + 1):
        lam = next(node_iter)
        m = [[(lam if i == j else Fraction(0)) - a.entry((i, j)).re
              for j in range(1, n + 1)] for i in range(1, n + 1)]
        points.append((lam, det_fractions(m)))
    coeffs = interpolate(points)
    p = UniPoly(coeffs)
    if p.degree != n or not p.is_monic():
        raise RuntimeError("internal error: matrix charpoly is not monic of degree n")
    return p


def _eigen_form_coeffs_n2(a: CubicalTensor, lam: Fraction) -> tuple[list[Fraction], list[Fraction]]:
    """Descending coefficient lists (in x1) of the two eigenvalue forms."""
    d = a.r - 1
    f = [Fraction(0)] * (d + 1)  # index m: coeff of x1^(d-m) x2^m
    g = [Fraction(0)] * (d + 1)
    for idx, v in a.entries.items():
        ones = sum(1 for j in idx[1:] if j == 1)
        m = d - ones
        if idx[0] == 1:
            f[m] -= v.re
        else:
            g[m] -= v.re
    f[0] += lam
    g[d] += lam
    return f, g


def _eigen_forms_n3(a: CubicalTensor, lam: Fraction) -> list[dict]:
    d = a.r - 1
    forms: list[dict] = [dict(), dict(), dict()]
    for idx, v in a.entries.items():
        expo = [0, 0, 0]
        for j in idx[1:]:
            expo[j - 1] += 1
        key = tuple(expo)
        form = forms[idx[0] - 1]
        form[key] = form.get(key, Fraction(0)) - v.re
    for k in range(3):
        lead = [0, 0, 0]
        lead[k] = d
        key = tuple(lead)
        forms[k][key] = forms[k].get(key, Fraction(0)) + lam
    return forms


def charpoly_tensor(a: CubicalTensor, max_node_attempts: int | None = None) -> UniPoly:
    """Exact characteristic polynomial for n <= 3 and r in {2, 3, 4, 5}.

    Monic of degree n * (r-1)^(n-1).  For n = 3, evaluation nodes where the
    Macaulay denominator minor vanishes are skipped and replaced from the
    node stream; a bounded number of attempts guards degenerate inputs.
    """
    if a.n > 3:
        raise ValueError(
            f"exact tensor characteristic polynomials are limited to n <= 3, "
            f"got n={a.n}")
    if a.r not in (2, 3, 4, 5):
        raise ValueError(f"supported index counts are r in {{2,3,4,5}}, got r={a.r}")
    _require_real_rational(a, "charpoly_tensor")
    n, r = a.n, a.r
    degree = n * (r - 1) ** (n - 1)
    if n == 1:
        return UniPoly([-a.entry((1,) * r).re, 1])
    needed = degree + 1
    if max_node_attempts is None:
        max_node_attempts = 4 * needed + 32
    points: list[tuple[Fraction, Fraction]] = []
    attempts = 0
    for lam in _nodes():
        if len(points) == needed:
            break
        if attempts >= max_node_attempts:
            raise RuntimeError(
                f"could not find {needed} usable evaluation nodes in "
                f"{max_node_attempts} attempts; system is degenerate")
        attempts += 1
        if n == 2:
            f, g = _eigen_form_coeffs_n2(a, lam)
            points.append((lam, sylvester_resultant(f, g)))
        else:
            try:
                value = macaulay_resultant_3(_eigen_forms_n3(a, lam), r - 1)
            except DegenerateNode:
                continue
            points.append((lam, value))
    coeffs = interpolate(points)
    p = UniPoly(coeffs)
    if p.degree != degree:
        raise RuntimeError(
            f"internal error: interpolated degree {p.degree} != expected {degree}")
    lead = p.coeffs[-1]
    if lead == -1:
        p = UniPoly([-c for c in p.coeffs])
    elif lead != 1:
        raise RuntimeError(
            f"internal error: resultant leading coefficient {lead} is not +-1")
    return p


def is_spectrum_symmetric_poly(p: UniPoly) -> bool:
    """True iff the root multiset of a monic p is closed under negation."""
    if not p.is_monic():
        raise ValueError("spectrum symmetry test expects a monic polynomial")
    deg = p.degree
    return all(c == 0 for i, c in enumerate(p.coeffs) if (deg - i) % 2 == 1)


# ---------------------------------------------------------------------------
# component product
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductReport:
    """Whole-tensor charpoly vs the product over components."""
    equal: bool
    lhs: UniPoly
    rhs: UniPoly
    factors: tuple[tuple[tuple[int, ...], UniPoly, int], ...]  # (part, poly, exponent)

    def to_json_dict(self) -> dict:
        return {
            "equal": self.equal,
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
            "factors": [{"component": list(part), "poly": poly.to_json_dict(),
                         "exponent": expo}
                        for part, poly, expo in self.factors],
        }


def verify_component_product(a: CubicalTensor) -> ProductReport:
    """Check charpoly(A) == prod_i charpoly(A_i)^((r-1)^(n-n_i)) exactly.

    Requires a symmetric, weakly reducible tensor.  For r = 2 the matrix
    route covers any order; otherwise the n <= 3 resultant contract applies.
    """
    if not is_symmetric(a):
        raise ValueError("component product is defined for symmetric tensors")
    if is_weakly_irreducible(a):
        raise ValueError("tensor is weakly irreducible: nothing to verify")
    if a.r != 2 and a.n > 3:
        raise ValueError(
            f"component product check needs n <= 3 for r >= 3, got n={a.n}")
    chi = charpoly_2matrix if a.r == 2 else charpoly_tensor
    lhs = chi(a)
    rhs = UniPoly([1])
    factors = []
    for vertices, sub in components(a).parts:
        poly = chi(sub)
        expo = (a.r - 1) ** (a.n - len(vertices))
        factors.append((vertices, poly, expo))
        rhs = rhs * poly ** expo
    return ProductReport(equal=lhs == rhs, lhs=lhs, rhs=rhs,
                         factors=tuple(factors))


# ---------------------------------------------------------------------------
# isolated-vertex multiplicity transformation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiplicityReport:
    """How eigenvalue multiplicities change when an isolated vertex is added.

    ``product_prediction`` (per-factor multiplicities scaled by r-1, zero
    gains (r-1)^n) and ``power_prediction`` (multiplicities raised to the
    r-1 power) are both compared against the actual polynomial; the two
    claims disagree in general and the empirical answer is reported as-is.
    """
    base: UniPoly
    actual: UniPoly
    product_prediction: UniPoly
    power_prediction: UniPoly
    product_matches: bool
    power_matches: bool
    zero_multiplicity_base: int
    zero_multiplicity_actual: int
    base_squarefree: tuple[tuple[int, UniPoly], ...]
    actual_squarefree: tuple[tuple[int, UniPoly], ...]

    def to_json_dict(self) -> dict:
        return {
            "base": self.base.to_json_dict(),
            "actual": self.actual.to_json_dict(),
            "product_prediction": self.product_prediction.to_json_dict(),
            "power_prediction": self.power_prediction.to_json_dict(),
            "product_matches": self.product_matches,
            "power_matches": self.power_matches,
            "zero_multiplicity_base": self.zero_multiplicity_base,
            "zero_multiplicity_actual": self.zero_multiplicity_actual,
        }


def isolated_vertex_multiplicity_check(obj) -> MultiplicityReport:
    """Adjoin one isolated vertex (r = 3, base n <= 2) and compare predictions.

    Accepts a 3-uniform hypergraph or a symmetric r = 3 tensor of order
    n <= 2 so the enlarged tensor stays within the exact n <= 3 contract.
    """
    if isinstance(obj, Hypergraph):
        if obj.r != 3:
            raise ValueError(f"isolated-vertex check is fixed at r=3, got r={obj.r}")
        base_tensor = adjacency_tensor(obj)
    elif isinstance(obj, CubicalTensor):
        if obj.r != 3:
            raise ValueError(f"isolated-vertex check is fixed at r=3, got r={obj.r}")
        if not is_symmetric(obj):
            raise ValueError("isolated-vertex check requires a symmetric tensor")
        base_tensor = obj
    else:
        raise TypeError(f"expected Hypergraph or CubicalTensor, got {type(obj).__name__}")
    n, r = base_tensor.n, base_tensor.r
    if n > 2:
        raise ValueError(
            f"base order must be n <= 2 so the enlarged tensor stays at "
            f"n <= 3, got n={n}")
    enlarged = CubicalTensor(r, n + 1, list(base_tensor.entries.items()))
    base = charpoly_tensor(base_tensor)
    actual = charpoly_tensor(enlarged)

    scale = r - 1
    gain = scale ** n
    product_prediction = base ** scale * UniPoly([0, 1]) ** gain

    m0 = root_multiplicity(base, Fraction(0))
    x_part = UniPoly([0, 1]) ** m0
    rest, _ = base.divmod(x_part)
    power_prediction = UniPoly([0, 1]) ** (m0 ** scale + gain)
    for mult, factor in squarefree_decomposition(rest):
        power_prediction = power_prediction * factor ** (mult ** scale)

    return MultiplicityReport(
        base=base,
        actual=actual,
        product_prediction=product_prediction,
        power_prediction=power_prediction,
        product_matches=actual == product_prediction,
        power_matches=actual == power_prediction,
        zero_multiplicity_base=m0,
        zero_multiplicity_actual=root_multiplicity(actual, Fraction(0)),
        base_squarefree=tuple(squarefree_decomposition(base)),
        actual_squarefree=tuple(squarefree_decomposition(actual)),
    )

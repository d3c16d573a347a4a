"""Sparse cubical hypermatrices with exact entries, and their structural maps.

A cubical hypermatrix of order ``n`` with ``r`` indices is a map
``(j_1, ..., j_r) -> a_{j_1 ... j_r}`` on ``[n]^r``.  Entries are stored
sparsely by index tuple and kept as exact complex rationals, so symmetry
checks, diagonal similarities and polynomial work are exact; values degrade
to floating point only inside iterative numerics.

Eigenpairs follow the homogeneous eigenvalue equation

    lam * x_k^(r-1) = sum_{j_2..j_r} a_{k j_2 ... j_r} x_{j_2} * ... * x_{j_r}
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, float, complex, Fraction, str, "ExactComplex"]


class ExactComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("ExactComplex is immutable")

    @classmethod
    def coerce(cls, value: Scalar) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        # int, float, Fraction, "p/q" string
        return cls(Fraction(value))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    def __sub__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __mul__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    def __truediv__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero ExactComplex")
        return ExactComplex((self.re * o.re + self.im * o.im) / norm,
                            (self.im * o.re - self.re * o.im) / norm)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __pow__(self, exponent: int) -> "ExactComplex":
        if not isinstance(exponent, int):
            raise TypeError("ExactComplex only supports integer powers")
        if exponent < 0:
            return ExactComplex(1) / self.__pow__(-exponent)
        out = ExactComplex(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- predicates -------------------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            o = ExactComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if self.im == 0:
            return f"ExactComplex({str(self.re)!r})"
        return f"ExactComplex({str(self.re)!r}, {str(self.im)!r})"


def _encode_component(f: Fraction) -> int | float | str:
    if f.denominator == 1:
        return int(f)
    if Fraction(float(f)) == f:
        return float(f)
    return str(f)


def encode_value(v: ExactComplex) -> str | list:
    """JSON form of an entry value: "p/q" when real, else a [re, im] pair."""
    if v.im == 0:
        return str(v.re)
    return [_encode_component(v.re), _encode_component(v.im)]


def parse_value(obj) -> ExactComplex:
    """Parse an entry value: a number, a "p/q" string, or a [re, im] pair."""
    if isinstance(obj, (list, tuple)):
        if len(obj) != 2:
            raise ValueError(f"complex value must be a [re, im] pair, got {obj!r}")
        return ExactComplex(Fraction(obj[0]), Fraction(obj[1]))
    if isinstance(obj, bool):
        raise ValueError("boolean is not a tensor value")
    if isinstance(obj, (int, float, str)):
        return ExactComplex(Fraction(obj))
    raise ValueError(f"cannot parse tensor value {obj!r}")


Index = tuple[int, ...]


class CubicalTensor:
    """Order-``n`` hypermatrix with ``r`` indices, stored sparsely.

    ``entries`` maps 1-based index tuples of length ``r`` to nonzero
    ExactComplex values.  Duplicate tuples given at construction are summed;
    exact zeros are pruned.  Instances are immutable.
    """

    __slots__ = ("r", "n", "_entries")

    def __init__(self, r: int, n: int,
                 entries: Mapping[Sequence[int], Scalar] | Iterable[tuple[Sequence[int], Scalar]] = ()):
        if not isinstance(r, int) or r < 2:
            raise ValueError(f"index count r must be an integer >= 2, got {r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"order n must be an integer >= 1, got {n}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Index, ExactComplex] = {}
        for idx, value in items:
            key = tuple(idx)
            if len(key) != r:
                raise ValueError(f"index tuple {key} does not have length r={r}")
            for j in key:
                if not isinstance(j, int) or not 1 <= j <= n:
                    raise ValueError(f"index {j} out of range 1..{n} in {key}")
            v = ExactComplex.coerce(value)
            if key in acc:
                acc[key] = acc[key] + v
            else:
                acc[key] = v
        clean = {k: acc[k] for k in sorted(acc) if acc[k]}
        object.__setattr__(self, "_entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CubicalTensor is immutable")

    @property
    def entries(self) -> Mapping[Index, ExactComplex]:
        return MappingProxyType(self._entries)

    def entry(self, idx: Sequence[int]) -> ExactComplex:
        return self._entries.get(tuple(idx), ExactComplex(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubicalTensor):
            return NotImplemented
        return (self.r, self.n, self._entries) == (other.r, other.n, other._entries)

    def __hash__(self) -> int:
        return hash((self.r, self.n, tuple(self._entries.items())))

    def __neg__(self) -> "CubicalTensor":
        return CubicalTensor(self.r, self.n,
                             [(idx, -v) for idx, v in self._entries.items()])

    def __repr__(self) -> str:
        return f"CubicalTensor(r={self.r}, n={self.n}, nnz={len(self._entries)})"

    # -- convenience constructors ----------------------------------------
    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Scalar]]) -> "CubicalTensor":
        """Build the r=2 tensor from a dense square matrix (list of rows)."""
        n = len(rows)
        items = []
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError("matrix rows must all have length n")
            for j, v in enumerate(row, start=1):
                items.append(((i, j), v))
        return cls(2, n, items)

    def is_real(self) -> bool:
        return all(v.is_real for v in self._entries.values())

    def is_nonnegative(self) -> bool:
        return all(v.is_real and v.re >= 0 for v in self._entries.values())

    def diagonal(self) -> list[ExactComplex]:
        """The r-fold diagonal [a_{11...1}, ..., a_{nn...n}]."""
        return [self.entry((k,) * self.r) for k in range(1, self.n + 1)]

    def principal_submatrix(self, vertices: Sequence[int]) -> "CubicalTensor":
        """Restrict to index tuples inside ``vertices``, reindexed to 1..len."""
        vs = sorted(vertices)
        if not vs:
            raise ValueError("vertex set must be nonempty")
        if len(set(vs)) != len(vs):
            raise ValueError("vertex set must not contain duplicates")
        for v in vs:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
        pos = {v: i for i, v in enumerate(vs, start=1)}
        keep = set(vs)
        items = [(tuple(pos[j] for j in idx), v)
                 for idx, v in self._entries.items() if keep.issuperset(idx)]
        return CubicalTensor(self.r, len(vs), items)

    # -- JSON -------------------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "entries": [{"i": list(idx), "v": encode_value(v)}
                        for idx, v in self._entries.items()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CubicalTensor":
        try:
            r, n, raw = data["r"], data["n"], data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"tensor JSON must have keys r, n, entries: {exc}") from exc
        if not isinstance(raw, list):
            raise ValueError("tensor JSON 'entries' must be a list")
        items = []
        for rec in raw:
            if not isinstance(rec, dict) or "i" not in rec or "v" not in rec:
                raise ValueError(f"tensor entry must be {{'i':..., 'v':...}}, got {rec!r}")
            items.append((tuple(rec["i"]), parse_value(rec["v"])))
        return cls(r, n, items)


# ---------------------------------------------------------------------------
# structural maps
# ---------------------------------------------------------------------------

def _multiset_permutation_count(key: Index) -> int:
    count = factorial(len(key))
    mult: dict[int, int] = {}
    for j in key:
        mult[j] = mult.get(j, 0) + 1
    for m in mult.values():
        count //= factorial(m)
    return count


def is_symmetric(a: CubicalTensor) -> bool:
    """True iff every permutation of every index tuple carries the same value."""
    groups: dict[Index, list[ExactComplex]] = {}
    for idx, v in a.entries.items():
        groups.setdefault(tuple(sorted(idx)), []).append(v)
    for key, vals in groups.items():
        first = vals[0]
        if any(v != first for v in vals[1:]):
            return False
        if len(vals) != _multiset_permutation_count(key):
            return False
    return True


def apply(a: CubicalTensor, x: Sequence[complex]) -> list[complex]:
    """The map F(x)_k = sum a_{k j_2 ... j_r} x_{j_2} ... x_{j_r} in floats."""
    if len(x) != a.n:
        raise ValueError(f"vector length {len(x)} != order n={a.n}")
    xs = [complex(v) for v in x]
    out = [0j] * a.n
    for idx, val in a.entries.items():
        p = complex(val)
        for j in idx[1:]:
            p *= xs[j - 1]
        out[idx[0] - 1] += p
    return out


def eigen_residual(a: CubicalTensor, lam: complex, x: Sequence[complex]) -> float:
    """Scaled worst-equation defect of (lam, x) under the eigenvalue equation.

    Returns max_k |lam x_k^(r-1) - F(x)_k| / max(1, |lam| ||x||_inf^(r-1),
    ||x||_inf^(r-1)).
    """
    xs = [complex(v) for v in x]
    if len(xs) != a.n:
        raise ValueError(f"vector length {len(xs)} != order n={a.n}")
    if all(v == 0 for v in xs):
        raise ValueError("eigenvector must be nonzero")
    lam = complex(lam)
    f = apply(a, xs)
    p = a.r - 1
    num = max(abs(lam * xs[k] ** p - f[k]) for k in range(a.n))
    xinf = max(abs(v) for v in xs) ** p
    den = max(1.0, abs(lam) * xinf, xinf)
    return num / den


def polynomial_form(a: CubicalTensor, x: Sequence[float]) -> float:
    """The homogeneous form sum a_{j_1...j_r} x_{j_1} ... x_{j_r} (real input)."""
    if not a.is_real():
        raise ValueError("polynomial form is defined for real tensors only")
    if len(x) != a.n:
        raise ValueError(f"vector length {len(x)} != order n={a.n}")
    xs = [float(v) for v in x]
    total = 0.0
    for idx, val in a.entries.items():
        p = float(val.re)
        for j in idx:
            p *= xs[j - 1]
        total += p
    return total


def digraph(a: CubicalTensor) -> dict[int, set[int]]:
    """Successor map of the associated digraph on [n].

    There is an arc k -> j iff some stored entry a_{k j_2 ... j_r} != 0 has
    j among its trailing indices.
    """
    succ: dict[int, set[int]] = {k: set() for k in range(1, a.n + 1)}
    for idx in a.entries:
        succ[idx[0]].update(idx[1:])
    return succ


def _reachable(succ: Mapping[int, set[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def is_weakly_irreducible(a: CubicalTensor) -> bool:
    """True iff the associated digraph is strongly connected."""
    if a.n == 1:
        return True
    succ = digraph(a)
    pred: dict[int, set[int]] = {k: set() for k in succ}
    for u, vs in succ.items():
        for v in vs:
            pred[v].add(u)
    full = set(range(1, a.n + 1))
    return _reachable(succ, 1) == full and _reachable(pred, 1) == full


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected pieces of a symmetric tensor.

    ``parts`` lists (vertex tuple, principal submatrix) pairs whose vertex
    sets partition [n]; ``isolated`` lists the single-vertex parts with no
    diagonal loop entry.
    """
    parts: tuple[tuple[tuple[int, ...], CubicalTensor], ...]
    isolated: tuple[int, ...]


def components(a: CubicalTensor) -> ComponentDecomposition:
    """Decompose a symmetric tensor into its connected components."""
    if not is_symmetric(a):
        raise ValueError("components are defined for symmetric tensors only")
    succ = digraph(a)
    adj: dict[int, set[int]] = {k: set() for k in succ}
    for u, vs in succ.items():
        for v in vs:
            if v != u:
                adj[u].add(v)
                adj[v].add(u)
    unseen = set(range(1, a.n + 1))
    parts = []
    isolated = []
    while unseen:
        start = min(unseen)
        comp = sorted(_reachable(adj, start))
        unseen.difference_update(comp)
        sub = a.principal_submatrix(comp)
        parts.append((tuple(comp), sub))
        if len(comp) == 1 and not a.entry((comp[0],) * a.r):
            isolated.append(comp[0])
    return ComponentDecomposition(parts=tuple(parts), isolated=tuple(isolated))


def diagonal_similarity(a: CubicalTensor, z: Sequence[Scalar]) -> CubicalTensor:
    """Spectrum-preserving rescale b_{j_1..j_r} = z_{j_1}^{-r} a z_{j_1}...z_{j_r}.

    If (lam, x) is an eigenpair of the input, (lam, x / z) is an eigenpair of
    the output.  All z_k must be nonzero; exact values stay exact.
    """
    if len(z) != a.n:
        raise ValueError(f"scale vector length {len(z)} != order n={a.n}")
    zs = [ExactComplex.coerce(v) for v in z]
    if any(not v for v in zs):
        raise ValueError("diagonal similarity requires all z_k nonzero")
    inv_r = [v ** (-a.r) for v in zs]
    items = []
    for idx, val in a.entries.items():
        b = inv_r[idx[0] - 1] * val
        for j in idx:
            b = b * zs[j - 1]
        items.append((idx, b))
    return CubicalTensor(a.r, a.n, items)


def is_bipartite_2matrix(a: CubicalTensor) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-block partition (U, W) of an r=2 matrix with zero diagonal blocks.

    Returns None when no such partition exists (including any nonzero
    diagonal entry).  Isolated vertices land in U.
    """
    if a.r != 2:
        raise ValueError("bipartition test is defined for r=2 matrices only")
    adj: dict[int, set[int]] = {k: set() for k in range(1, a.n + 1)}
    for (i, j), _ in a.entries.items():
        if i == j:
            return None  # diagonal entry: no zero-block partition
        adj[i].add(j)
        adj[j].add(i)
    color: dict[int, int] = {}
    for start in range(1, a.n + 1):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    u_side = tuple(k for k in range(1, a.n + 1) if color[k] == 0)
    w_side = tuple(k for k in range(1, a.n + 1) if color[k] == 1)
    return u_side, w_side

"""Parity certificates for spectrum negation: odd colorings and odd transversals.

An odd coloring (r even) assigns each vertex a residue phi(k) in Z_r such
that every stored support tuple (j_1, ..., j_r) satisfies

    phi(j_1) + ... + phi(j_r) == r/2  (mod r).

An odd transversal is a vertex set X meeting every support tuple in an odd
number of positions (counted with multiplicity).  Both reduce to linear
systems over residue rings: one equation per distinct support multiset.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .tensor import CubicalTensor

__all__ = [
    "OddColoringUndefinedError", "OddColoring", "OddTransversal",
    "ColoringInfeasible", "TransversalInfeasible", "support_patterns",
    "odd_coloring", "odd_transversal", "transversal_to_coloring",
    "coloring_to_transversal", "verify_certificate",
]


class OddColoringUndefinedError(ValueError):
    """Raised when an odd-coloring question is posed for odd r."""


@dataclass(frozen=True)
class OddColoring:
    """Residue assignment phi: vertex k -> phi[k-1] in Z_r, r even."""
    r: int
    phi: tuple[int, ...]

    def __post_init__(self):
        if self.r < 2 or self.r % 2:
            raise OddColoringUndefinedError(
                f"odd colorings need even r >= 2, got r={self.r}")
        object.__setattr__(self, "phi", tuple(self.phi))
        for v in self.phi:
            if not isinstance(v, int) or not 0 <= v < self.r:
                raise ValueError(f"residue {v} out of range 0..{self.r - 1}")

    @property
    def n(self) -> int:
        return len(self.phi)

    def to_json_dict(self) -> dict:
        return {"kind": "odd-coloring", "r": self.r, "phi": list(self.phi)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "OddColoring":
        if data.get("kind") != "odd-coloring":
            raise ValueError(f"expected kind 'odd-coloring', got {data.get('kind')!r}")
        return cls(r=data["r"], phi=tuple(data["phi"]))


@dataclass(frozen=True)
class OddTransversal:
    """Vertex set X (1-based, sorted) on a ground set of size n."""
    n: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        if len(set(vs)) != len(vs):
            raise ValueError("transversal vertices must be distinct")
        object.__setattr__(self, "vertices", vs)
        for v in vs:
            if not isinstance(v, int) or not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def __contains__(self, vertex: int) -> bool:
        return vertex in set(self.vertices)

    def to_json_dict(self) -> dict:
        return {"kind": "odd-transversal", "X": list(self.vertices)}

    @classmethod
    def from_json_dict(cls, data: dict, n: int) -> "OddTransversal":
        if data.get("kind") != "odd-transversal":
            raise ValueError(f"expected kind 'odd-transversal', got {data.get('kind')!r}")
        return cls(n=n, vertices=tuple(data["X"]))


@dataclass(frozen=True)
class ColoringInfeasible:
    """Witness that the residue system has no solution modulo ``modulus``."""
    r: int
    modulus: int
    detail: str


@dataclass(frozen=True)
class TransversalInfeasible:
    """Inconsistent GF(2) row: the listed support patterns sum to 0 == 1."""
    n: int
    pattern_indices: tuple[int, ...]
    patterns: tuple[tuple[int, ...], ...] = field(repr=False)


# ---------------------------------------------------------------------------
# support patterns
# ---------------------------------------------------------------------------

def support_patterns(obj) -> list[tuple[int, ...]]:
    """Distinct support multisets (sorted tuples) of a tensor or hypergraph.

    The parity congruences are permutation-invariant, so one row per
    distinct multiset suffices; hypergraph edges are already such multisets.
    """
    if isinstance(obj, CubicalTensor):
        return sorted({tuple(sorted(idx)) for idx in obj.entries})
    edges = getattr(obj, "edges", None)
    if edges is not None:
        return list(edges)
    raise TypeError(f"expected CubicalTensor or Hypergraph, got {type(obj).__name__}")


def _arity(obj) -> tuple[int, int]:
    return obj.r, obj.n


# ---------------------------------------------------------------------------
# GF(2) elimination with row-provenance tracking
# ---------------------------------------------------------------------------

def _solve_gf2(rows: list[int], rhs: list[int], n: int):
    """Solve the GF(2) system given rows as bitmasks.

    Returns ("sat", solution_mask) or ("unsat", history_mask) where the
    history names the original rows whose XOR is the inconsistent 0 == 1 row.
    """
    reduced: list[tuple[int, int, int, int]] = []  # (mask, rhs, history, pivot_col)
    for ri, (mask, b) in enumerate(zip(rows, rhs)):
        hist = 1 << ri
        for pmask, pb, phist, pcol in reduced:
            if (mask >> pcol) & 1:
                mask ^= pmask
                b ^= pb
                hist ^= phist
        if mask == 0:
            if b:
                return "unsat", hist
            continue
        pcol = (mask & -mask).bit_length() - 1
        reduced.append((mask, b, hist, pcol))
    x = 0
    for mask, b, _hist, pcol in reversed(reduced):
        val = b ^ ((mask & x & ~(1 << pcol)).bit_count() & 1)
        if val:
            x |= 1 << pcol
    return "sat", x


# ---------------------------------------------------------------------------
# linear solve over Z_m via prime powers + CRT
# ---------------------------------------------------------------------------

def _prime_power_factors(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


def _valuation(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def _solve_mod_prime_power(rows: list[list[int]], rhs: list[int], ncols: int,
                           p: int, e: int):
    """Particular solution of rows * x == rhs over Z_{p^e}, or an unsat witness.

    Elimination pivots on a minimum-p-valuation entry of the remaining
    submatrix, so every non-pivot coefficient in a pivot row has valuation at
    least the pivot's; feasibility then depends only on the reduced right
    sides, and setting free variables to zero is lossless.
    """
    mod = p ** e
    m = [[v % mod for v in row] for row in rows]
    b = [v % mod for v in rhs]
    nrows = len(m)
    pivots: list[tuple[int, int, int, int]] = []  # (row, col, p^v, unit)
    used_cols: set[int] = set()
    top = 0
    while top < nrows:
        best = None
        for i in range(top, nrows):
            for j in range(ncols):
                if j in used_cols:
                    continue
                a = m[i][j]
                if a == 0:
                    continue
                v = _valuation(a, p)
                if best is None or v < best[0]:
                    best = (v, i, j)
                    if v == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, pi, pj = best
        m[top], m[pi] = m[pi], m[top]
        b[top], b[pi] = b[pi], b[top]
        pv = p ** v
        unit = (m[top][pj] // pv) % mod
        inv_unit = pow(unit, -1, mod)
        for i in range(top + 1, nrows):
            a = m[i][pj]
            if a:
                t = ((a // pv) * inv_unit) % mod
                if t:
                    m[i] = [(m[i][j] - t * m[top][j]) % mod for j in range(ncols)]
                    b[i] = (b[i] - t * b[top]) % mod
        pivots.append((top, pj, pv, unit))
        used_cols.add(pj)
        top += 1
    for i in range(top, nrows):
        if b[i] % mod:
            return "unsat", f"0 == {b[i]} (mod {mod}) after elimination"
    x = [0] * ncols
    for row, col, pv, unit in reversed(pivots):
        s = b[row]
        for j in range(ncols):
            if j != col and m[row][j]:
                s -= m[row][j] * x[j]
        s %= mod
        if s % pv:
            return "unsat", (f"pivot equation needs {s} divisible by {pv} "
                             f"(mod {mod})")
        x[col] = ((s // pv) * pow(unit, -1, mod)) % (mod // pv)
    return "sat", x


def _crt_pair(a1: int, m1: int, a2: int, m2: int) -> tuple[int, int]:
    t = ((a2 - a1) * pow(m1, -1, m2)) % m2
    return a1 + m1 * t, m1 * m2


# ---------------------------------------------------------------------------
# public solvers
# ---------------------------------------------------------------------------

def odd_coloring(obj) -> OddColoring | ColoringInfeasible:
    """Find an odd coloring of a tensor or hypergraph, or show none exists."""
    r, n = _arity(obj)
    if r % 2:
        raise OddColoringUndefinedError(
            f"odd colorings are defined for even r only, got r={r}")
    patterns = support_patterns(obj)
    rows = []
    for pat in patterns:
        row = [0] * n
        for j in pat:
            row[j - 1] += 1
        rows.append(row)
    target = r // 2
    rhs = [target] * len(rows)
    residues = [(0, 1)] * n  # (value, modulus) accumulated by CRT
    for p, e in _prime_power_factors(r):
        status, result = _solve_mod_prime_power(rows, rhs, n, p, e)
        if status == "unsat":
            return ColoringInfeasible(r=r, modulus=p ** e, detail=result)
        q = p ** e
        residues = [_crt_pair(a, m, result[j], q) for j, (a, m) in enumerate(residues)]
    phi = OddColoring(r=r, phi=tuple(a % r for a, _m in residues))
    if not verify_certificate(obj, phi):
        raise RuntimeError("internal error: solver produced a non-verifying coloring")
    return phi


def odd_transversal(obj) -> OddTransversal | TransversalInfeasible:
    """Find an odd transversal of a tensor or hypergraph, or show none exists."""
    _r, n = _arity(obj)
    patterns = support_patterns(obj)
    masks = []
    for pat in patterns:
        mask = 0
        for j in pat:
            mask ^= 1 << (j - 1)  # multiplicity mod 2
        masks.append(mask)
    status, result = _solve_gf2(masks, [1] * len(masks), n)
    if status == "unsat":
        idxs = tuple(i for i in range(len(patterns)) if (result >> i) & 1)
        return TransversalInfeasible(
            n=n, pattern_indices=idxs,
            patterns=tuple(patterns[i] for i in idxs))
    vertices = tuple(j + 1 for j in range(n) if (result >> j) & 1)
    x = OddTransversal(n=n, vertices=vertices)
    if not verify_certificate(obj, x):
        raise RuntimeError("internal error: solver produced a non-verifying transversal")
    return x


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------

def transversal_to_coloring(x: OddTransversal, r: int) -> OddColoring:
    """phi = (r/2) * indicator(X): valid for any even r when X is valid."""
    if r < 2 or r % 2:
        raise OddColoringUndefinedError(
            f"conversion to a coloring needs even r, got r={r}")
    half = r // 2
    members = set(x.vertices)
    return OddColoring(r=r, phi=tuple(half if v in members else 0
                                      for v in range(1, x.n + 1)))


def coloring_to_transversal(phi: OddColoring) -> OddTransversal:
    """X = vertices with odd residue: valid exactly when r == 2 (mod 4)."""
    if phi.r % 4 != 2:
        raise ValueError(
            f"odd-residue extraction needs r == 2 (mod 4), got r={phi.r}")
    vertices = tuple(v for v in range(1, phi.n + 1) if phi.phi[v - 1] % 2)
    return OddTransversal(n=phi.n, vertices=vertices)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_certificate(obj, cert: OddColoring | OddTransversal) -> bool:
    """Check a certificate against every support pattern of a tensor/graph."""
    r, n = _arity(obj)
    patterns = support_patterns(obj)
    if isinstance(cert, OddColoring):
        if r % 2:
            raise OddColoringUndefinedError(
                f"coloring certificate against odd r={r} is undefined")
        if cert.r != r or cert.n != n:
            raise ValueError(
                f"certificate shape (r={cert.r}, n={cert.n}) does not match "
                f"target (r={r}, n={n})")
        target = r // 2
        return all(sum(cert.phi[j - 1] for j in pat) % r == target
                   for pat in patterns)
    if isinstance(cert, OddTransversal):
        if cert.n != n:
            raise ValueError(f"certificate n={cert.n} does not match target n={n}")
        members = set(cert.vertices)
        return all(sum(1 for j in pat if j in members) % 2 == 1
                   for pat in patterns)
    raise TypeError(f"unknown certificate type {type(cert).__name__}")

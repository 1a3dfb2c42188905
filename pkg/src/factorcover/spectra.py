"""Dense symmetric eigencomputation and equitable-partition quotients.

Matrices handled: adjacency A(G), signless Laplacian Q(G) = D(G) + A(G),
and more generally alpha*D(G) + A(G) for alpha in {0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

import numpy as np

from .graphs import Graph, is_connected

__all__ = [
    "RESIDUAL_TOL",
    "SpectralResult",
    "QuotientMatrix",
    "adjacency",
    "degree_diagonal",
    "signless_laplacian",
    "alpha_matrix",
    "symmetric_eigenvalues",
    "jacobi_eigenvalues",
    "spectral_radius",
    "q_radius",
    "lambda_alpha",
    "quotient",
    "largest_root_cubic",
]

# Residual contract: ||Mx - lam*x||_2 <= RESIDUAL_TOL * (1 + ||M||_inf).
RESIDUAL_TOL = 1e-9

Kind = Literal["A", "Q"]


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: tuple[float, ...]
    residual: float
    method: str


@dataclass(frozen=True)
class QuotientMatrix:
    parts: tuple[frozenset[int], ...]
    b: tuple[tuple[float, ...], ...]
    equitable: bool
    # exact integer row sums when equitable, else None
    b_exact: tuple[tuple[int, ...], ...] | None
    offending_block: tuple[int, int] | None


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("spectral operations require at least one vertex")


def adjacency(g: Graph) -> np.ndarray:
    _require_vertices(g)
    m = np.zeros((g.n, g.n))
    for u, v in g.edges():
        m[u, v] = m[v, u] = 1.0
    return m


def degree_diagonal(g: Graph) -> np.ndarray:
    _require_vertices(g)
    return np.diag([float(d) for d in g.degrees()])


def signless_laplacian(g: Graph) -> np.ndarray:
    return adjacency(g) + degree_diagonal(g)


def alpha_matrix(g: Graph, alpha: int) -> np.ndarray:
    if alpha not in (0, 1):
        raise ValueError("alpha must be 0 or 1")
    m = adjacency(g)
    if alpha:
        m += degree_diagonal(g)
    return m


def _check_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    if not np.allclose(m, m.T, atol=1e-12, rtol=0.0):
        raise ValueError("matrix must be symmetric")
    return m


def symmetric_eigenvalues(m: np.ndarray) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending."""
    m = _check_symmetric(m)
    return [float(x) for x in np.linalg.eigvalsh(m)]


def jacobi_eigenvalues(m: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """Cyclic Jacobi rotations; independent cross-check of the LAPACK path.

    Converges when the off-diagonal Frobenius mass drops below tol relative
    to the matrix Frobenius norm.
    """
    a = _check_symmetric(m).copy()
    n = a.shape[0]
    scale = max(np.linalg.norm(a, "fro"), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(a**2) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            return sorted(float(x) for x in np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol * scale / max(n, 1) ** 2:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    raise RuntimeError("Jacobi iteration did not converge within the sweep budget")


def _top_eigenpair(m: np.ndarray) -> tuple[float, np.ndarray, float]:
    vals, vecs = np.linalg.eigh(m)
    value = float(vals[-1])
    vec = vecs[:, -1]
    # fix global sign: largest-magnitude entry positive
    i = int(np.argmax(np.abs(vec)))
    if vec[i] < 0:
        vec = -vec
    residual = float(np.linalg.norm(m @ vec - value * vec))
    norm_inf = float(np.max(np.sum(np.abs(m), axis=1))) if m.size else 0.0
    if residual > RESIDUAL_TOL * (1.0 + norm_inf):
        raise RuntimeError("eigensolver residual contract violated")
    return value, vec, residual


def _largest(g: Graph, m: np.ndarray) -> SpectralResult:
    value, vec, residual = _top_eigenpair(m)
    if is_connected(g):
        if np.any(vec <= 1e-12):
            raise RuntimeError("Perron vector of a connected graph must be positive")
    return SpectralResult(value=value, vector=tuple(float(x) for x in vec), residual=residual, method="full-eig")


def spectral_radius(g: Graph) -> SpectralResult:
    return _largest(g, adjacency(g))


def q_radius(g: Graph) -> SpectralResult:
    return _largest(g, signless_laplacian(g))


def lambda_alpha(g: Graph, alpha: int) -> SpectralResult:
    return _largest(g, alpha_matrix(g, alpha))


# ---------------------------------------------------------------------------
# equitable quotients


def quotient(g: Graph, parts: Sequence[Iterable[int]], kind: Kind) -> QuotientMatrix:
    """Quotient matrix of A(G) or Q(G) w.r.t. a vertex partition.

    Row sums are computed exactly over the adjacency bitsets; equitability is
    a combinatorial property, not a floating-point one.
    """
    if kind not in ("A", "Q"):
        raise ValueError("kind must be 'A' or 'Q'")
    _require_vertices(g)
    psets = [frozenset(p) for p in parts]
    cover: set[int] = set()
    total = 0
    for p in psets:
        if not p:
            raise ValueError("partition parts must be nonempty")
        cover |= p
        total += len(p)
    if cover != set(range(g.n)) or total != g.n:
        raise ValueError("parts must partition the vertex set")
    masks = [sum(1 << v for v in p) for p in psets]
    t = len(psets)
    b_exact: list[list[int]] = [[0] * t for _ in range(t)]
    equitable = True
    offending: tuple[int, int] | None = None
    for i in range(t):
        for j in range(t):
            sums = []
            for v in psets[i]:
                s = (g.adj[v] & masks[j]).bit_count()
                if kind == "Q" and i == j:
                    s += g.degree(v)
                sums.append(s)
            if len(set(sums)) != 1:
                if equitable:
                    offending = (i, j)
                equitable = False
                b_exact[i][j] = -1
            else:
                b_exact[i][j] = sums[0]
    if equitable:
        b = tuple(tuple(float(x) for x in row) for row in b_exact)
        exact: tuple[tuple[int, ...], ...] | None = tuple(tuple(row) for row in b_exact)
    else:
        b_avg = [[0.0] * t for _ in range(t)]
        for i in range(t):
            for j in range(t):
                acc = 0
                for v in psets[i]:
                    s = (g.adj[v] & masks[j]).bit_count()
                    if kind == "Q" and i == j:
                        s += g.degree(v)
                    acc += s
                b_avg[i][j] = acc / len(psets[i])
        b = tuple(tuple(row) for row in b_avg)
        exact = None
    return QuotientMatrix(parts=tuple(psets), b=b, equitable=equitable, b_exact=exact, offending_block=offending)


# ---------------------------------------------------------------------------
# cubic roots


def largest_root_cubic(c3: float, c2: float, c1: float, c0: float) -> float:
    """Largest real root of c3*x^3 + c2*x^2 + c1*x + c0.

    Brackets via critical points and the Cauchy bound, then bisects.  The
    sign test is evaluated in exact rational arithmetic (floats convert
    exactly), so bisection stays accurate even at multiple roots, where a
    floating-point sign would be noise.
    """
    if c3 == 0:
        raise ValueError("leading coefficient must be nonzero")
    if c3 < 0:
        c3, c2, c1, c0 = -c3, -c2, -c1, -c0
    e3, e2, e1, e0 = Fraction(c3), Fraction(c2), Fraction(c1), Fraction(c0)

    def f(x: float) -> Fraction:
        q = Fraction(x)
        return ((e3 * q + e2) * q + e1) * q + e0

    bound = 1.0 + max(abs(c2), abs(c1), abs(c0)) / c3
    # critical points of the (now leading-positive) cubic
    disc = (2.0 * c2) ** 2 - 4.0 * (3.0 * c3) * c1
    lo = -bound
    if disc > 0:
        x2 = (-2.0 * c2 + np.sqrt(disc)) / (2.0 * 3.0 * c3)  # right critical point
        if f(x2) <= 0.0:
            lo = x2  # largest root sits on the increasing tail
        else:
            x1 = (-2.0 * c2 - np.sqrt(disc)) / (2.0 * 3.0 * c3)
            hi = x1
            # single real root left of the local max
            a, b = -bound, hi
            for _ in range(200):
                mid = 0.5 * (a + b)
                if f(mid) <= 0.0:
                    a = mid
                else:
                    b = mid
            return float(0.5 * (a + b))
    a, b = lo, bound
    for _ in range(200):
        mid = 0.5 * (a + b)
        if f(mid) <= 0.0:
            a = mid
        else:
            b = mid
    return float(0.5 * (a + b))

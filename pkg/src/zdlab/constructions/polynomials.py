"""Bounded polynomial, truncated power series and Laurent checks over a finite semiring.

Polynomial products are computed exactly (full convolution into ``2d + 1``
coefficients); power series are handled through their truncations
``S[X]/(X^k)``, where a genuine zero product always truncates to a zero
product.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from ..errors import InputError, ResourceError
from ..structures import SEMIRING, FiniteStructure, from_elements

# largest number of (f, g) pairs scanned exhaustively
MAX_PAIRS = 1 << 22


def _need_semiring(S: FiniteStructure):
    if S.kind != SEMIRING:
        raise InputError(f"polynomial constructions need a semiring, not {S.kind}")


def poly_mul(S: FiniteStructure, f: Sequence[int], g: Sequence[int], length: int | None = None) -> tuple:
    """Coefficients of ``f g``; ``length`` truncates (mod X^length)."""
    full = len(f) + len(g) - 1
    length = full if length is None else length
    out = []
    for k in range(length):
        c = 0
        for i in range(max(0, k - len(g) + 1), min(k, len(f) - 1) + 1):
            c = int(S.add[c, S.mul[f[i], g[k - i]]])
        out.append(c)
    return tuple(out)


def _coefficient_vectors(n: int, length: int) -> np.ndarray:
    return np.array(list(itertools.product(range(n), repeat=length)), dtype=np.int64).reshape(-1, length)


def _conv_zero(S: FiniteStructure, F: np.ndarray, G: np.ndarray, length: int | None = None) -> np.ndarray:
    """Boolean matrix [p, q]: the (truncated) product F[p] * G[q] vanishes."""
    df, dg = F.shape[1], G.shape[1]
    full = df + dg - 1
    length = full if length is None else length
    zero = np.ones((F.shape[0], G.shape[0]), dtype=bool)
    for k in range(length):
        c = np.zeros((F.shape[0], G.shape[0]), dtype=np.int64)
        for i in range(max(0, k - dg + 1), min(k, df - 1) + 1):
            c = S.add[c, S.mul[F[:, i][:, None], G[:, k - i][None, :]]]
        zero &= c == 0
    return zero


def zero_product_pairs(S: FiniteStructure, degree: int, samples: int | None = None, seed: int = 0,
                       truncate: int | None = None) -> Iterator[tuple[tuple, tuple]]:
    """All ``(f, g)`` of degree <= ``degree`` with ``f g = 0``, in lexicographic order.

    With ``truncate = k`` the product is taken mod ``X^k`` instead.  When the
    pair space exceeds :data:`MAX_PAIRS` a ``samples`` count is required and
    that many random pairs (fixed by ``seed``) are examined instead.
    """
    _need_semiring(S)
    if degree < 0:
        raise InputError("degree must be non-negative")
    length = degree + 1
    count = S.order ** length
    if count * count <= MAX_PAIRS:
        V = _coefficient_vectors(S.order, length)
        step = max(1, MAX_PAIRS // (16 * count))
        for start in range(0, count, step):
            F = V[start:start + step]
            Z = _conv_zero(S, F, V, truncate)
            for p, q in np.argwhere(Z):
                yield tuple(F[p].tolist()), tuple(V[q].tolist())
        return
    if samples is None:
        raise ResourceError(f"{count * count} polynomial pairs over an order-{S.order} semiring; "
                            "pass a sample count")
    rng = np.random.default_rng(seed)
    F = rng.integers(0, S.order, size=(samples, length))
    G = rng.integers(0, S.order, size=(samples, length))
    # always include f = 0 partners so the sample is never empty of zero products
    G[: max(1, samples // 10)] = 0
    Z = np.diagonal(_conv_zero(S, F, G, truncate)) if samples <= 4096 else np.array(
        [all(c == 0 for c in poly_mul(S, f, g, truncate)) for f, g in zip(F.tolist(), G.tolist())])
    pairs = sorted((tuple(F[i].tolist()), tuple(G[i].tolist())) for i in np.flatnonzero(Z))
    yield from pairs


def poly_zero_product_pairs(S: FiniteStructure, degree: int, **kw) -> Iterator[tuple[tuple, tuple]]:
    return zero_product_pairs(S, degree, **kw)


def poly_reversible_bounded(S: FiniteStructure, degree: int = 2, samples: int | None = None):
    """``S[X]`` reversibility restricted to degree <= ``degree``.  Witness: ``(*f, *g)``."""
    from ..properties import PropertyReport, Verdict

    for f, g in zero_product_pairs(S, degree, samples=samples):
        if any(poly_mul(S, g, f)):
            return PropertyReport("poly_reversible", Verdict.FAILS, f + g, degree)
    return PropertyReport("poly_reversible", Verdict.HOLDS, None, degree,
                          f"holds up to degree {degree}")


def power_series_truncated(S: FiniteStructure, k: int, check: bool = True) -> FiniteStructure:
    """``S[[X]]/(X^k)``: length-``k`` coefficient vectors, truncated convolution."""
    _need_semiring(S)
    if k < 1:
        raise InputError("truncation length must be at least 1")
    if S.order ** k > 4096:
        raise ResourceError(f"S[[X]]/(X^{k}) has {S.order ** k} elements")
    elems = list(itertools.product(range(S.order), repeat=k))
    zero = (0,) * k
    one = (1,) + (0,) * (k - 1)
    return from_elements(
        SEMIRING, elems,
        mul=lambda f, g: poly_mul(S, f, g, k),
        add=lambda f, g: tuple(int(S.add[a, b]) for a, b in zip(f, g)),
        zero=zero, one=one, check=check,
    )


def series_reversible_truncated(S: FiniteStructure, k: int = 3):
    """Reversibility of ``S[[X]]/(X^k)``.  Witness: ``(*f, *g)`` coefficient vectors."""
    from ..properties import PropertyReport, Verdict

    _need_semiring(S)
    V = _coefficient_vectors(S.order, k)
    Z = _conv_zero(S, V, V, k)
    bad = np.argwhere(Z & ~Z.T)
    if len(bad):
        p, q = bad[0]
        return PropertyReport("series_reversible", Verdict.FAILS,
                              tuple(V[p].tolist()) + tuple(V[q].tolist()), k)
    return PropertyReport("series_reversible", Verdict.HOLDS, None, k,
                          f"holds modulo X^{k}")


# Laurent polynomials are stored as (shift, coefficients) meaning X^-shift * f(X).

def laurent_mul(S: FiniteStructure, p: tuple[int, tuple], q: tuple[int, tuple]) -> dict[int, int]:
    """Product as a map exponent -> nonzero coefficient (integer exponents, possibly negative)."""
    (n, f), (m, g) = p, q
    out: dict[int, int] = {}
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            e = i - n + j - m
            out[e] = int(S.add[out.get(e, 0), S.mul[a, b]])
    return {e: c for e, c in out.items() if c != 0}


def laurent_is_zero(p: tuple[int, tuple]) -> bool:
    return all(c == 0 for c in p[1])


def laurent_zero_product_check(S: FiniteStructure, degree: int = 2, shifts: int = 2,
                               samples: int | None = None, seed: int = 0):
    """Reversibility of ``S[X; X^-1]`` on elements ``X^-n f`` with ``n < shifts``, ``deg f <= degree``.

    Products are formed directly with signed exponents.  Witness:
    ``(n, *f, m, *g)`` with ``(n, f)(m, g) = 0`` but not the reverse.
    """
    from ..properties import PropertyReport, Verdict

    _need_semiring(S)
    name = "laurent_reversible"
    polys = [tuple(v) for v in _coefficient_vectors(S.order, degree + 1).tolist()]
    elems = [(n, f) for n in range(shifts) for f in polys]
    if len(elems) ** 2 > MAX_PAIRS:
        if samples is None:
            raise ResourceError(f"{len(elems) ** 2} Laurent pairs; pass a sample count")
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, len(elems), size=(samples, 2))
        pairs = sorted({(int(a), int(b)) for a, b in idx})
    else:
        pairs = itertools.product(range(len(elems)), repeat=2)
    for a, b in pairs:
        p, q = elems[a], elems[b]
        if not laurent_mul(S, p, q) and laurent_mul(S, q, p):
            return PropertyReport(name, Verdict.FAILS, (p[0], *p[1], q[0], *q[1]), degree)
    return PropertyReport(name, Verdict.HOLDS, None, degree, f"holds up to degree {degree}")

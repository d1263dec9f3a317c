"""Recursive adjacency and Laplacian spectra of recursive corona graphs.

Each generation maps every eigenvalue of the previous generation to two
children via a fixed quadratic, and adds one structural eigenvalue (-1 for
the adjacency matrix, q+1 for the Laplacian) with a known multiplicity.
Eigenvalues are stored as floats with exact integer multiplicities; the
exact big-integer quantities (spanning trees, Kirchhoff index) come from
separate integer recursions, never from the float spectrum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistencyError, ResourceLimitError
from .formulas import DEFAULT_DIGIT_LIMIT, BigCount
from .graphs import RcgParams

DEFAULT_EIGENVALUE_BUDGET = 10**6

MERGE_TOL = 1e-10


@dataclass(frozen=True)
class EigenPair:
    """Parent eigenvalue and its two children at the next generation."""

    parent: float
    plus_child: float
    minus_child: float
    kind: str


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalue/multiplicity pairs, sorted descending by value."""

    kind: str
    entries: tuple[tuple[float, int], ...]
    params: RcgParams

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def moment(self, power: int) -> float:
        return sum(v**power * m for v, m in self.entries)

    def multiplicity_of(self, value: float, tol: float = MERGE_TOL) -> int:
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def to_json_list(self) -> list[dict]:
        return [{"value": v, "multiplicity": m} for v, m in self.entries]


def child_pair(parent: float, q: int, kind: str) -> EigenPair:
    """Two next-generation eigenvalues spawned by `parent`."""
    if kind == "adjacency":
        disc = (q - 1 - parent) ** 2 + 4 * q
    elif kind == "laplacian":
        if parent < 0:
            raise ValueError("laplacian eigenvalues are nonnegative")
        disc = (parent + q + 1) ** 2 - 4 * parent
    else:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    root = math.sqrt(disc)
    mid = parent + q - 1 if kind == "adjacency" else parent + q + 1
    return EigenPair(
        parent=parent,
        plus_child=(mid + root) / 2,
        minus_child=(mid - root) / 2,
        kind=kind,
    )


def _merge(entries: list[tuple[float, int]]) -> tuple[tuple[float, int], ...]:
    """Coalesce equal eigenvalues (within MERGE_TOL), sorted descending."""
    entries.sort(key=lambda e: -e[0])
    merged: list[tuple[float, int]] = []
    for value, mult in entries:
        if merged and abs(merged[-1][0] - value) <= MERGE_TOL:
            prev_value, prev_mult = merged[-1]
            merged[-1] = (prev_value, prev_mult + mult)
        else:
            merged.append((value, mult))
    return tuple(merged)


def _recursive_spectrum(params, kind, budget):
    limit = DEFAULT_EIGENVALUE_BUDGET if budget is None else budget
    if params.vertex_count > limit:
        raise ResourceLimitError(
            f"spectrum of (q={params.q}, g={params.g}) has {params.vertex_count} "
            f"eigenvalues, budget is {limit}"
        )
    q = params.q
    if kind == "adjacency":
        entries = [(float(q - 1), 1), (-1.0, q - 1)]
        extra_value = -1.0
    else:
        entries = [(float(q), q - 1), (0.0, 1)]
        extra_value = float(q + 1)
    for step in range(1, params.g + 1):
        children = []
        for value, mult in entries:
            pair = child_pair(value, q, kind)
            children.append((pair.plus_child, mult))
            children.append((pair.minus_child, mult))
        children.append((extra_value, (q - 1) * q * (q + 1) ** (step - 1)))
        entries = list(_merge(children))
    return SpectrumMultiset(kind=kind, entries=_merge(entries), params=params)


def adjacency_spectrum(params: RcgParams, budget: int | None = None) -> SpectrumMultiset:
    return _recursive_spectrum(params, "adjacency", budget)


def laplacian_spectrum(params: RcgParams, budget: int | None = None) -> SpectrumMultiset:
    return _recursive_spectrum(params, "laplacian", budget)


def _upsilon_log10(q: int, g: int) -> float:
    return (q - 1) * math.log10(q) + ((q - 1) * ((q + 1) ** g - 1) + g) * math.log10(q + 1)


def nonzero_product(
    params: RcgParams, digit_limit: int = DEFAULT_DIGIT_LIMIT
) -> BigCount:
    """Product of the nonzero Laplacian eigenvalues.

    Recursion: each generation multiplies by (q+1)^{m+1} with
    m = (q-1)q(q+1)^{g-1}: the m structural q+1 eigenvalues, plus the q+1
    child of the zero eigenvalue; every other parent's child pair multiplies
    to the parent itself.  (No additional factor of q appears anywhere: on
    the 6-vertex instance (q=2, g=1) the product of nonzero eigenvalues is
    3*3*3*2 = 54, and an extra q would give 108, contradicting both the
    closed form and the matrix-tree count.)
    """
    q, g = params.q, params.g
    log10 = _upsilon_log10(q, g)
    if log10 >= digit_limit:
        return BigCount(None, log10)
    recursive = q ** (q - 1)
    for step in range(1, g + 1):
        m = (q - 1) * q * (q + 1) ** (step - 1)
        recursive *= (q + 1) ** (m + 1)
    closed = q ** (q - 1) * (q + 1) ** ((q - 1) * ((q + 1) ** g - 1) + g)
    if recursive != closed:
        raise InternalInconsistencyError("nonzero-product recursion != closed form")
    return BigCount.from_int(closed)


def spanning_trees_spectral(
    params: RcgParams, digit_limit: int = DEFAULT_DIGIT_LIMIT
) -> BigCount:
    """Spanning-tree count as (product of nonzero Laplacian eigenvalues)/N."""
    upsilon = nonzero_product(params, digit_limit)
    n = params.vertex_count
    if not upsilon.exact:
        return BigCount(None, upsilon.log10 - math.log10(n))
    quotient, remainder = divmod(upsilon.value, n)
    if remainder != 0:
        raise InternalInconsistencyError(
            "nonzero eigenvalue product is not divisible by N"
        )
    return BigCount.from_int(quotient)


def spectral_sum(params: RcgParams, digit_limit: int = DEFAULT_DIGIT_LIMIT) -> BigCount:
    """Sum over j of the product of all nonzero Laplacian eigenvalues but the j-th.

    Built by splitting each generation's spectrum into the child pairs of the
    previous generation and the structural q+1 block, and combining the
    partial sums/products of the two blocks.
    """
    q, g = params.q, params.g
    qp = q + 1
    log10 = _spectral_sum_log10(q, g)
    if log10 >= digit_limit:
        return BigCount(None, log10)
    s = (q - 1) * q ** (q - 2)
    upsilon = q ** (q - 1)
    for step in range(1, g + 1):
        m = (q - 1) * q * qp ** (step - 1)
        s_child = (1 + qp * (q * qp ** (step - 1) - 1)) * upsilon + qp * qp * s
        upsilon_block = qp**m
        s_block = m * qp ** (m - 1)
        upsilon_child = qp * upsilon
        s = s_child * upsilon_block + s_block * upsilon_child
        upsilon *= qp ** (m + 1)
    if g >= 1:
        exponent = (q - 1) * qp**g + g - q - 1
        closed = (
            q ** (q - 2)
            * qp**exponent
            * (((2 * g + 1) * q**3 - 2 * q - 1) * qp**g + q * qp)
        )
        if s != closed:
            raise InternalInconsistencyError("spectral sum recursion != closed form")
    return BigCount.from_int(s)


def _spectral_sum_log10(q: int, g: int) -> float:
    if g == 0:
        return math.log10((q - 1) * q ** (q - 2)) if (q - 1) * q ** (q - 2) > 0 else float("-inf")
    qp = q + 1
    exponent = (q - 1) * qp**g + g - q - 1
    tail = ((2 * g + 1) * q**3 - 2 * q - 1) * qp**g + q * qp
    return (q - 2) * math.log10(q) + exponent * math.log10(qp) + math.log10(tail)


def kirchhoff_spectral(
    params: RcgParams, digit_limit: int = DEFAULT_DIGIT_LIMIT
) -> Fraction:
    """Kirchhoff index as N * (sum of reciprocals of nonzero eigenvalues)."""
    s = spectral_sum(params, digit_limit)
    upsilon = nonzero_product(params, digit_limit)
    if not (s.exact and upsilon.exact):
        raise ResourceLimitError("exact Kirchhoff index exceeds the digit limit")
    return Fraction(params.vertex_count * s.value, upsilon.value)

"""Density matrices, partial trace/transpose and negativity-based tangles.

Basis indices are big-endian over ``mode_order``: the first mode is the
most significant bit, so for ``(A_I, B_I, C_I)`` index 1 is ``|001>`` and
index 4 is ``|100>``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import hermitian
from .errors import EmptyKeep, UnknownMode
from .fock import ModeLabel, Party, PureState, Wedge
from .rindler import RindlerParameter, apply_rindler, region_one_modes

TRACE_TOL = 1e-12
PSD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    mode_order: tuple[ModeLabel, ...]
    matrix: np.ndarray

    def __post_init__(self):
        m = hermitian.as_square_matrix(self.matrix)
        if m.shape[0] != 2 ** len(self.mode_order):
            raise ValueError(
                f"{m.shape[0]}x{m.shape[0]} matrix does not match {len(self.mode_order)} modes"
            )
        if not hermitian.is_hermitian(m):
            raise hermitian.NotHermitian("density matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {np.trace(m).real!r} != 1")
        m = np.array(m, dtype=np.complex128)
        m.setflags(write=False)
        object.__setattr__(self, "mode_order", tuple(self.mode_order))
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def min_eigenvalue(self) -> float:
        return float(hermitian.eigenvalues_hermitian(self.matrix).eigenvalues[0])

    def is_psd(self, tol: float = PSD_TOL) -> bool:
        return self.min_eigenvalue() >= -tol

    def modes_of(self, party) -> tuple[ModeLabel, ...]:
        party = _party(party)
        return tuple(m for m in self.mode_order if m.party == party)


def _party(p) -> Party:
    return Party[p] if isinstance(p, str) else Party(p)


def _index(d: DensityMatrix, mode) -> int:
    mode = ModeLabel(Party(mode[0]), Wedge(mode[1]))
    try:
        return d.mode_order.index(mode)
    except ValueError:
        raise UnknownMode(f"{mode} not in {[str(m) for m in d.mode_order]}") from None


def density_from_pure(s: PureState) -> DensityMatrix:
    """``|s><s|`` over ``s.mode_order``."""
    v = s.to_vector()
    return DensityMatrix(s.mode_order, np.outer(v, v.conj()))


def partial_trace(d: DensityMatrix, keep) -> DensityMatrix:
    """Trace out every mode not in ``keep``; output modes in canonical order."""
    keep = [ModeLabel(Party(m[0]), Wedge(m[1])) for m in keep]
    if not keep:
        raise EmptyKeep("partial trace must keep at least one mode")
    keep_idx = sorted({_index(d, m) for m in keep}, key=lambda i: d.mode_order[i])
    n = len(d.mode_order)
    t = d.matrix.reshape([2] * (2 * n))
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    row = list(letters[:n])
    col = list(letters[n:2 * n])
    for i in range(n):
        if i not in keep_idx:
            col[i] = row[i]
    out = "".join(row[i] for i in keep_idx) + "".join(col[i] for i in keep_idx)
    reduced = np.einsum("".join(row) + "".join(col) + "->" + out, t)
    k = len(keep_idx)
    reduced = reduced.reshape(2**k, 2**k)
    return DensityMatrix(tuple(d.mode_order[i] for i in keep_idx), reduced)


def partial_transpose(d: DensityMatrix, party_modes) -> np.ndarray:
    """Transpose the row/column indices of ``party_modes``.

    ``party_modes`` may list mode labels or parties; a party stands for all
    of its modes in ``d``.
    """
    idx = set()
    for m in party_modes:
        if isinstance(m, (Party, str, int)) and not isinstance(m, tuple):
            modes = d.modes_of(m)
            if not modes:
                raise UnknownMode(f"party {_party(m).name} has no modes in this state")
            idx.update(_index(d, x) for x in modes)
        else:
            idx.add(_index(d, m))
    n = len(d.mode_order)
    t = d.matrix.reshape([2] * (2 * n))
    axes = list(range(2 * n))
    for i in idx:
        axes[i], axes[i + n] = axes[i + n], axes[i]
    return np.ascontiguousarray(t.transpose(axes).reshape(d.dim, d.dim))


def _three_parties(d: DensityMatrix) -> tuple[Party, ...]:
    parties = tuple(sorted({m.party for m in d.mode_order}))
    if len(parties) != 3:
        raise ValueError(f"expected a 3-party state, got parties {[p.name for p in parties]}")
    return parties


def one_tangle(d: DensityMatrix, focus) -> float:
    """Negativity of ``focus`` against the other two parties."""
    _three_parties(d)
    return hermitian.negativity(partial_transpose(d, [_party(focus)]))


def reduced_pair(d: DensityMatrix, pair) -> DensityMatrix:
    a, b = (_party(p) for p in pair)
    if a == b:
        raise ValueError("two-tangle needs two distinct parties")
    return partial_trace(d, d.modes_of(a) + d.modes_of(b))


def two_tangle(d: DensityMatrix, pair) -> float:
    """Negativity of the two-party reduced state, transposed on ``pair[0]``."""
    _three_parties(d)
    rho = reduced_pair(d, pair)
    return hermitian.negativity(partial_transpose(rho, [_party(pair[0])]))


PAIRS = ((Party.A, Party.B), (Party.A, Party.C), (Party.B, Party.C))


@dataclass(frozen=True)
class TangleReport:
    r_values: Mapping[Party, float]
    one_tangles: Mapping[Party, float]
    two_tangles: Mapping[frozenset, float]
    residuals: Mapping[Party, float]
    pi_tangle: float
    density: DensityMatrix | None = field(default=None, repr=False, compare=False)

    def two(self, a, b) -> float:
        return self.two_tangles[frozenset((_party(a), _party(b)))]

    def as_row(self) -> dict[str, float]:
        row = {f"N_{p.name}": self.one_tangles[p] for p in Party}
        row.update({f"N_{a.name}{b.name}": self.two(a, b) for a, b in PAIRS})
        row.update({f"pi_{p.name}": self.residuals[p] for p in Party})
        row["pi_tangle"] = self.pi_tangle
        return row


def residual(one: float, two_1: float, two_2: float) -> float:
    return one**2 - two_1**2 - two_2**2


def report_from_density(d: DensityMatrix, r_values=None) -> TangleReport:
    """All tangles of a 3-party density matrix."""
    _three_parties(d)
    ones = {p: one_tangle(d, p) for p in Party}
    twos = {frozenset(pair): two_tangle(d, pair) for pair in PAIRS}
    res = {}
    for p in Party:
        others = [q for q in Party if q != p]
        res[p] = residual(ones[p], *(twos[frozenset((p, q))] for q in others))
    pi = (res[Party.A] + res[Party.B] + res[Party.C]) / 3.0
    return TangleReport(dict(r_values or {}), ones, twos, res, pi, density=d)


def region_one_density(s: PureState, params: Mapping) -> DensityMatrix:
    """Accelerate ``s`` and trace out every region-II mode."""
    rs = apply_rindler(s, params)
    return partial_trace(density_from_pure(rs), region_one_modes(s.parties()))


def full_report(s: PureState, params: Mapping) -> TangleReport:
    """Rindler transform, region-II trace, then every tangle and the pi-tangle.

    Residuals are reported unclamped.
    """
    d = region_one_density(s, params)
    r_values = {(_party(k)): RindlerParameter(v) for k, v in params.items()}
    return report_from_density(d, r_values)


def scenario_params(r_a: float, r: float) -> dict[Party, float]:
    """Alice at ``r_a``; Bob and Charlie share ``r``."""
    return {Party.A: r_a, Party.B: r, Party.C: r}


def equal_params(r: float) -> dict[Party, float]:
    return {p: r for p in Party}


def all_pair_transposes(d: DensityMatrix) -> dict[tuple[Party, Party], np.ndarray]:
    """``rho_{ab}^{T_a}`` for all six ordered pairs, each in ``(a, b)`` basis order."""
    out = {}
    for a, b in itertools.permutations(Party, 2):
        rho = reduced_pair(d, (a, b))
        pt = partial_transpose(rho, [a])
        if a > b:
            # reduced state is stored in canonical (b, a) order; swap to (a, b)
            pt = pt.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
        out[(a, b)] = pt
    return out

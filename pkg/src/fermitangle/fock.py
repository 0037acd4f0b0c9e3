"""Occupation-number kets and sparse pure states over labelled fermionic modes.

A ket is a tuple of bits, one per mode in the state's ``mode_order``; the
leftmost bit belongs to the first mode. Mode reorderings permute bits only:
no fermionic exchange signs are tracked, so kets behave as plain tensor
products with the coefficients as written.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, NamedTuple

import numpy as np

from .errors import AllZeroAmplitudes, NotAPermutation, StateFormatError

NORM_TOL = 1e-12
PRUNE_TOL = 1e-15


class Party(enum.IntEnum):
    A = 0
    B = 1
    C = 2

    @property
    def long_name(self) -> str:
        return ("Alice", "Bob", "Charlie")[self]


class Wedge(enum.IntEnum):
    M = 0  # Minkowski (inertial)
    I = 1  # Rindler region I
    II = 2  # Rindler region II


class ModeLabel(NamedTuple):
    party: Party
    wedge: Wedge

    def __str__(self):
        return f"{self.party.name}_{self.wedge.name}"


def minkowski_modes(parties=tuple(Party)):
    return tuple(ModeLabel(Party(p), Wedge.M) for p in parties)


def rindler_modes(parties=tuple(Party)):
    """Canonical order ``A_I, A_II, B_I, B_II, C_I, C_II`` restricted to ``parties``."""
    return tuple(
        ModeLabel(Party(p), w) for p in sorted(Party(p) for p in parties) for w in (Wedge.I, Wedge.II)
    )


def _ket(bits) -> tuple[int, ...]:
    if isinstance(bits, str):
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {bits!r}")
        return tuple(int(b) for b in bits)
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"occupations must be 0 or 1, got {bits!r}")
    return out


def ket_str(bits) -> str:
    return "".join(str(b) for b in bits)


@dataclass(frozen=True)
class PureState:
    """Sparse pure state: ``amplitudes`` maps ket tuples to complex amplitudes.

    Construction prunes amplitudes with modulus below ``PRUNE_TOL``. The
    ``renormalized`` flag records whether a builder had to rescale its input
    and does not take part in equality.
    """

    mode_order: tuple[ModeLabel, ...]
    amplitudes: Mapping[tuple[int, ...], complex]
    renormalized: bool = field(default=False, compare=False)

    def __post_init__(self):
        modes = tuple(ModeLabel(Party(m[0]), Wedge(m[1])) for m in self.mode_order)
        if len(set(modes)) != len(modes):
            raise ValueError(f"duplicate modes in {modes}")
        n = len(modes)
        amps = {}
        for k, v in self.amplitudes.items():
            k = _ket(k)
            if len(k) != n:
                raise ValueError(f"ket {ket_str(k)} has {len(k)} bits, expected {n}")
            v = complex(v)
            if abs(v) >= PRUNE_TOL:
                amps[k] = v
        object.__setattr__(self, "mode_order", modes)
        object.__setattr__(self, "amplitudes", dict(sorted(amps.items())))

    @property
    def n_modes(self) -> int:
        return len(self.mode_order)

    def amplitude(self, ket) -> complex:
        return self.amplitudes.get(_ket(ket), 0j)

    def norm(self) -> float:
        return math.sqrt(sum(abs(v) ** 2 for v in self.amplitudes.values()))

    def isclose(self, other: "PureState", tol: float = NORM_TOL) -> bool:
        if self.mode_order != other.mode_order:
            return False
        keys = set(self.amplitudes) | set(other.amplitudes)
        return all(abs(self.amplitude(k) - other.amplitude(k)) <= tol for k in keys)

    def parties(self) -> tuple[Party, ...]:
        return tuple(sorted({m.party for m in self.mode_order}))

    def to_vector(self) -> np.ndarray:
        """Dense vector, big-endian over ``mode_order``."""
        n = self.n_modes
        vec = np.zeros(2**n, dtype=np.complex128)
        for ket, amp in self.amplitudes.items():
            idx = 0
            for b in ket:
                idx = (idx << 1) | b
            vec[idx] = amp
        return vec

    def __str__(self):
        terms = " + ".join(f"({v:.6g})|{ket_str(k)}>" for k, v in self.amplitudes.items())
        return f"[{', '.join(map(str, self.mode_order))}] {terms}"


def _normalized(mode_order, amps) -> PureState:
    norm = math.sqrt(sum(abs(complex(v)) ** 2 for v in amps.values()))
    if norm < PRUNE_TOL:
        raise AllZeroAmplitudes("state has no nonzero amplitude")
    renorm = abs(norm - 1.0) > NORM_TOL
    return PureState(mode_order, {k: complex(v) / norm for k, v in amps.items()}, renormalized=renorm)


def make_w_state() -> PureState:
    """``(|001> + |010> + |100>) / sqrt(3)`` over Minkowski modes A, B, C."""
    a = 1.0 / math.sqrt(3.0)
    return PureState(minkowski_modes(), {(0, 0, 1): a, (0, 1, 0): a, (1, 0, 0): a})


def make_ghz_state() -> PureState:
    """``(|000> + |111>) / sqrt(2)`` over Minkowski modes A, B, C."""
    a = 1.0 / math.sqrt(2.0)
    return PureState(minkowski_modes(), {(0, 0, 0): a, (1, 1, 1): a})


def make_custom_state(amps: Mapping) -> PureState:
    """Three-qubit Minkowski state from a ket -> amplitude mapping.

    Keys are 3-bit strings (``"011"``) or bit tuples. The result is always
    normalized; ``state.renormalized`` tells whether the input was off.
    """
    parsed = {}
    for k, v in amps.items():
        ket = _ket(k)
        if len(ket) != 3:
            raise ValueError(f"custom kets must have 3 bits, got {ket_str(ket)!r}")
        parsed[ket] = parsed.get(ket, 0j) + complex(v)
    return _normalized(minkowski_modes(), parsed)


def tensor_reorder(s: PureState, new_order) -> PureState:
    """Relabel ``s`` over ``new_order`` (a permutation of its modes).

    Bits move with their modes; no exchange signs are applied.
    """
    new_order = tuple(ModeLabel(Party(m[0]), Wedge(m[1])) for m in new_order)
    if sorted(new_order) != sorted(s.mode_order) or len(set(new_order)) != len(new_order):
        raise NotAPermutation(f"{[str(m) for m in new_order]} is not a permutation of "
                              f"{[str(m) for m in s.mode_order]}")
    perm = [s.mode_order.index(m) for m in new_order]
    amps = {tuple(k[i] for i in perm): v for k, v in s.amplitudes.items()}
    return PureState(new_order, amps, renormalized=s.renormalized)


def parse_state_text(text: str) -> PureState:
    """Parse the ``bitstring = re [im]`` custom-state format.

    Blank lines and ``#`` comments are ignored. Repeated kets accumulate.
    """
    amps = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise StateFormatError("expected 'bitstring = re [im]'", lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if len(key) != 3 or set(key) - {"0", "1"}:
            raise StateFormatError(f"bitstring must be 3 bits of 0/1, got {key!r}", lineno)
        parts = value.split()
        if len(parts) not in (1, 2):
            raise StateFormatError("amplitude must be 're' or 're im'", lineno)
        try:
            nums = [float(p) for p in parts]
        except ValueError:
            raise StateFormatError(f"bad number in {value.strip()!r}", lineno) from None
        if not all(math.isfinite(x) for x in nums):
            raise StateFormatError("amplitude must be finite", lineno)
        amp = complex(nums[0], nums[1] if len(nums) == 2 else 0.0)
        amps[key] = amps.get(key, 0j) + amp
    if not amps:
        raise AllZeroAmplitudes("state file lists no amplitudes")
    return make_custom_state(amps)


def load_state(path) -> PureState:
    return parse_state_text(Path(path).read_text(encoding="utf-8"))


def format_state_text(s: PureState) -> str:
    lines = []
    for k, v in s.amplitudes.items():
        if v.imag == 0.0:
            lines.append(f"{ket_str(k)} = {v.real!r}")
        else:
            lines.append(f"{ket_str(k)} = {v.real!r} {v.imag!r}")
    return "\n".join(lines) + "\n"

"""Minkowski to Rindler single-mode transformation for fermionic qubits.

Each accelerated party's Minkowski mode splits into a region-I and a
region-II Rindler mode::

    |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>_M -> |1>_I |0>_II

with ``cos r = (exp(-2 pi omega c / a) + 1) ** -0.5``, so ``r`` runs over
``[0, pi/4]`` as the proper acceleration ``a`` runs over ``[0, inf)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidSpec, MissingParty, NotMinkowski, OutOfRange
from .fock import ModeLabel, Party, PureState, Wedge, rindler_modes

R_MAX = math.pi / 4


class RindlerParameter(float):
    """Acceleration parameter ``r`` in radians, ``0 <= r <= pi/4``."""

    def __new__(cls, r):
        r = float(r)
        if not (0.0 <= r <= R_MAX):
            raise OutOfRange(f"acceleration parameter r={r!r} outside [0, pi/4]")
        return super().__new__(cls, r)

    def __repr__(self):
        return f"RindlerParameter({float(self)!r})"


@dataclass(frozen=True)
class AccelerationSpec:
    omega: float
    c: float
    a: float

    def __post_init__(self):
        if not (self.omega > 0 and math.isfinite(self.omega)):
            raise InvalidSpec(f"omega must be positive and finite, got {self.omega!r}")
        if not (self.c > 0 and math.isfinite(self.c)):
            raise InvalidSpec(f"c must be positive and finite, got {self.c!r}")
        if not self.a >= 0:
            raise InvalidSpec(f"acceleration must be non-negative, got {self.a!r}")


def acceleration_to_r(spec: AccelerationSpec) -> RindlerParameter:
    """Map physical ``(omega, c, a)`` to ``r``.

    Uses ``tan r = exp(-pi omega c / a)``, which is equivalent to the cosine
    form but keeps full precision for small ``a``. ``a = 0`` gives ``r = 0``
    and ``a = inf`` gives ``pi/4``.
    """
    if not isinstance(spec, AccelerationSpec):
        spec = AccelerationSpec(*spec)
    if spec.a == 0:
        return RindlerParameter(0.0)
    half_exponent = -math.pi * spec.omega * spec.c / spec.a
    return RindlerParameter(min(math.atan(math.exp(half_exponent)), R_MAX))


def _as_params(params: Mapping) -> dict[Party, RindlerParameter]:
    out = {}
    for k, v in params.items():
        party = Party[k] if isinstance(k, str) else Party(k)
        out[party] = v if isinstance(v, RindlerParameter) else RindlerParameter(v)
    return out


def apply_rindler(s: PureState, params: Mapping) -> PureState:
    """Replace every Minkowski mode of ``s`` by its ``(I, II)`` Rindler pair.

    ``params`` maps each party of ``s`` (``Party`` or ``"A"``/``"B"``/``"C"``)
    to its acceleration parameter. Output modes are in canonical order
    ``A_I, A_II, B_I, B_II, C_I, C_II``.
    """
    if any(m.wedge is not Wedge.M for m in s.mode_order):
        raise NotMinkowski("state already contains Rindler modes")
    params = _as_params(params)
    missing = [p.name for p in s.parties() if p not in params]
    if missing:
        raise MissingParty(f"no acceleration parameter for parties {missing}")

    out_modes = rindler_modes(s.parties())
    slot = {m.party: 2 * i for i, m in enumerate(out_modes[::2])}
    # per-party branch table: bit -> [((bit_I, bit_II), coefficient)]
    branches = {}
    for p in s.parties():
        r = params[p]
        branches[p] = {
            0: [((0, 0), math.cos(r)), ((1, 1), math.sin(r))],
            1: [((1, 0), 1.0)],
        }

    amps: dict[tuple[int, ...], complex] = {}
    for ket, amp in s.amplitudes.items():
        partial = [([0] * len(out_modes), amp)]
        for mode, bit in zip(s.mode_order, ket):
            i = slot[mode.party]
            grown = []
            for bits, coeff in partial:
                for (b1, b2), c in branches[mode.party][bit]:
                    if c == 0.0:
                        continue
                    nb = bits.copy()
                    nb[i], nb[i + 1] = b1, b2
                    grown.append((nb, coeff * c))
            partial = grown
        for bits, coeff in partial:
            key = tuple(bits)
            amps[key] = amps.get(key, 0j) + coeff
    return PureState(out_modes, amps, renormalized=s.renormalized)


def region_one_modes(parties=tuple(Party)) -> tuple[ModeLabel, ...]:
    return tuple(ModeLabel(Party(p), Wedge.I) for p in sorted(Party(p) for p in parties))

"""Winding-adjustment moves acting trivially on relative homology.

These are the constructive certificates that two framings with equal
invariants differ by a relative Torelli element: connect-sums shift one
basis winding by 2, pants twists flip the half-integer parity class of two
odd-signature arcs at once, boundary twists flip one even-signature arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    ArfMismatch,
    MissingArcData,
    MoveError,
    QVectorMismatch,
    SpecMismatch,
)
from .framing import Framing, arf, q_vector


@dataclass(frozen=True)
class ConnectSum:
    """Shift the winding of one basis element by 2*sign via a handle sum.

    kind is "x", "y" (curves, index 1..g) or "a" (arcs, index 2..n); helper
    is the handle the connect-sum travels through.
    """

    kind: str
    index: int
    helper: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("x", "y", "a"):
            raise MoveError(f"unknown connect-sum target kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise MoveError("connect-sum sign must be +1 or -1")


@dataclass(frozen=True)
class ArcParityTwist:
    """Pants twist flipping the parity classes of two odd-kappa arcs."""

    j1: int
    j2: int

    def __post_init__(self) -> None:
        if self.j1 == self.j2:
            raise MoveError("pants twist needs two distinct arcs")


@dataclass(frozen=True)
class BoundaryTwist:
    """Twist about one puncture loop, flipping that arc's parity class."""

    j: int


Move = Union[ConnectSum, ArcParityTwist, BoundaryTwist]


def _check_arc_index(f: Framing, j: int) -> None:
    if not 2 <= j <= f.spec.n:
        raise MoveError(f"arc index {j} out of range 2..{f.spec.n}")
    if not f.has_arc_data:
        raise MissingArcData("move touches arc windings but the framing has none")


def apply_move(f: Framing, m: Move) -> Framing:
    """New framing after the move; relative homology classes are untouched."""
    spec = f.spec
    if isinstance(m, ConnectSum):
        if not 1 <= m.helper <= spec.g:
            raise MoveError(f"helper handle {m.helper} out of range 1..{spec.g}")
        if m.kind in ("x", "y"):
            if not 1 <= m.index <= spec.g:
                raise MoveError(f"curve index {m.index} out of range 1..{spec.g}")
            if m.helper == m.index:
                raise MoveError("connect-sum helper must be a different handle")
            if m.kind == "x":
                wind = list(f.wind_x)
                wind[m.index - 1] += 2 * m.sign
                return Framing(spec, tuple(wind), f.wind_y, f.arc2)
            wind = list(f.wind_y)
            wind[m.index - 1] += 2 * m.sign
            return Framing(spec, f.wind_x, tuple(wind), f.arc2)
        _check_arc_index(f, m.index)
        arc2 = list(f.arc2)
        arc2[m.index - 2] += 4 * m.sign  # winding moves by 2, stored doubled
        return Framing(spec, f.wind_x, f.wind_y, tuple(arc2))

    if isinstance(m, ArcParityTwist):
        _check_arc_index(f, m.j1)
        _check_arc_index(f, m.j2)
        k1 = spec.kappa[m.j1 - 1]
        k2 = spec.kappa[m.j2 - 1]
        if k1 % 2 == 0 or k2 % 2 == 0:
            raise MoveError("pants twist needs both kappa entries odd")
        wd = k1 + k2 + 1  # pants curve winding, odd by homological coherence
        arc2 = list(f.arc2)
        arc2[m.j1 - 2] += 2 * wd
        arc2[m.j2 - 2] += 2 * wd
        return Framing(spec, f.wind_x, f.wind_y, tuple(arc2))

    _check_arc_index(f, m.j)
    kj = spec.kappa[m.j - 1]
    if kj % 2 != 0:
        raise MoveError("boundary twist needs an even kappa entry (odd signature)")
    arc2 = list(f.arc2)
    arc2[m.j - 2] += 2 * (-1 - kj)
    return Framing(spec, f.wind_x, f.wind_y, tuple(arc2))


def match_framings(f: Framing, h: Framing) -> list[Move]:
    """Move sequence carrying f exactly onto h.

    Requires equal surfaces, equal Arf invariants and equal basis winding
    parities; with those hypotheses the gap is closed by connect-sums on the
    curves, paired pants twists and individual boundary twists on the arcs,
    then connect-sums on the arcs.
    """
    if f.spec != h.spec:
        raise SpecMismatch("framings live over different surfaces")
    spec = f.spec
    if spec.n >= 2 and (not f.has_arc_data or not h.has_arc_data):
        raise MissingArcData("matching needs arc windings on both framings")
    if q_vector(f) != q_vector(h):
        raise QVectorMismatch("basis winding parities differ")
    if arf(f) != arf(h):
        raise ArfMismatch("Arf invariants differ")

    moves: list[Move] = []
    cur = f

    def helper_for(i: int) -> int:
        return 1 if i != 1 else 2

    for kind, have, want in (("x", cur.wind_x, h.wind_x), ("y", cur.wind_y, h.wind_y)):
        for i in range(1, spec.g + 1):
            diff = want[i - 1] - have[i - 1]
            sign = 1 if diff > 0 else -1
            for _ in range(abs(diff) // 2):
                moves.append(ConnectSum(kind, i, helper_for(i), sign))

    if spec.n >= 2:
        # parity-class repairs: odd-kappa arcs in pairs, even-kappa arcs singly
        odd_mismatch = []
        for j in range(2, spec.n + 1):
            if (h.arc2[j - 2] - cur.arc2[j - 2]) % 4 != 0:
                if spec.kappa[j - 1] % 2:
                    odd_mismatch.append(j)
                else:
                    moves.append(BoundaryTwist(j))
        if len(odd_mismatch) % 2:
            raise AssertionError("equal Arf forces evenly many odd-kappa mismatches")
        for j1, j2 in zip(odd_mismatch[0::2], odd_mismatch[1::2]):
            moves.append(ArcParityTwist(j1, j2))

        trial = f
        for m in moves:
            trial = apply_move(trial, m)
        for j in range(2, spec.n + 1):
            diff = h.arc2[j - 2] - trial.arc2[j - 2]
            if diff % 4 != 0:
                raise AssertionError("parity repair failed to align arc classes")
            sign = 1 if diff > 0 else -1
            for _ in range(abs(diff) // 4):
                moves.append(ConnectSum("a", j, 1, sign))

    final = f
    for m in moves:
        final = apply_move(final, m)
    if final != h:
        raise AssertionError("move synthesis did not reach the target framing")
    return moves

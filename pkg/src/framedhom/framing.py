"""Winding-number functions on the distinguished basis, Arf data and parity forms.

A framing is stored by its winding numbers on the basis curves (integers) and,
when the surface has several marked points, on the basis arcs.  Arc windings
are half-integers; they are kept doubled so that every stored value is an
exact integer (the doubled value is always odd).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InvalidSurface,
    MissingArcData,
    SomeKappaOdd,
    SpecMismatch,
)
from .lattice import AbsVec, SurfaceSpec


@dataclass(frozen=True)
class Framing:
    """Winding numbers of a framing on the distinguished geometric basis.

    arc2 holds 2*phi(a_i) for i = 2..n; None means the relative data is
    absent (only legal when it is never consulted, or when n = 1).
    """

    spec: SurfaceSpec
    wind_x: tuple[int, ...]
    wind_y: tuple[int, ...]
    arc2: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "wind_x", tuple(int(v) for v in self.wind_x))
        object.__setattr__(self, "wind_y", tuple(int(v) for v in self.wind_y))
        g = self.spec.g
        if len(self.wind_x) != g or len(self.wind_y) != g:
            raise DimensionMismatch(f"need {g} x- and y-windings")
        if self.arc2 is None and self.spec.n == 1:
            object.__setattr__(self, "arc2", ())
        if self.arc2 is not None:
            arc2 = tuple(int(v) for v in self.arc2)
            if len(arc2) != self.spec.n - 1:
                raise DimensionMismatch(f"need {self.spec.n - 1} doubled arc windings")
            for v in arc2:
                if v % 2 == 0:
                    raise InvalidSurface(
                        f"arc windings are half-integral: doubled value {v} must be odd"
                    )
            object.__setattr__(self, "arc2", arc2)

    @classmethod
    def zeros(cls, spec: SurfaceSpec) -> "Framing":
        """Preset with all curve windings 0 and every arc winding -1/2."""
        g = spec.g
        return cls(spec, (0,) * g, (0,) * g, (-1,) * (spec.n - 1))

    @property
    def has_arc_data(self) -> bool:
        return self.arc2 is not None

    def delta_winding(self, i: int) -> int:
        return self.spec.delta_winding(i)

    def curve_windings(self) -> tuple[int, ...]:
        """Windings on the absolute basis in order x_1, y_1, ..., x_g, y_g."""
        out = []
        for wx, wy in zip(self.wind_x, self.wind_y):
            out.append(wx)
            out.append(wy)
        return tuple(out)


@dataclass(frozen=True)
class QVector:
    """Basis winding parities, in order (x_1, y_1, ..., x_g, y_g)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(int(b) & 1 for b in self.bits))
        if len(self.bits) % 2 != 0:
            raise DimensionMismatch("q-vector needs 2g bits")


@dataclass(frozen=True)
class QForm:
    """Quadratic refinement of the mod-2 intersection form, by basis values."""

    qx: tuple[int, ...]
    qy: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "qx", tuple(int(b) & 1 for b in self.qx))
        object.__setattr__(self, "qy", tuple(int(b) & 1 for b in self.qy))
        if len(self.qx) != len(self.qy):
            raise DimensionMismatch("qx and qy must have length g")

    @property
    def g(self) -> int:
        return len(self.qx)

    def basis_bits(self) -> tuple[int, ...]:
        out = []
        for a, b in zip(self.qx, self.qy):
            out.append(a)
            out.append(b)
        return tuple(out)

    def evaluate(self, v: AbsVec | Sequence[int]) -> int:
        coords = v.coords if isinstance(v, AbsVec) else v
        return quad_eval(self.basis_bits(), coords)


def quad_eval(basis_bits: Sequence[int], coords: Sequence[int]) -> int:
    """Evaluate the quadratic extension of given basis values on a class.

    q(sum c_j b_j) = sum c_j q(b_j) + sum_{i<j} c_i c_j <b_i, b_j>; in the
    fixed basis the pairing term reduces to one product per handle.
    """
    if len(coords) != len(basis_bits):
        raise DimensionMismatch("class and form have different rank")
    total = 0
    for c, q in zip(coords, basis_bits):
        total ^= (c & 1) & q
    for i in range(0, len(coords), 2):
        total ^= (coords[i] & 1) & (coords[i + 1] & 1)
    return total


def arf(f: Framing) -> int:
    """Arf invariant of a (relative) framing.

    Handle terms (phi(x_i)+1)(phi(y_i)+1) plus, for each arc,
    (phi(a_i)+1/2)(phi(Delta_i)+1) -- an exact integer since arc windings are
    half-integral and the product clears the denominator.
    """
    total = 0
    for wx, wy in zip(f.wind_x, f.wind_y):
        total += (wx + 1) * (wy + 1)
    if f.spec.n >= 2:
        if f.arc2 is None:
            raise MissingArcData("Arf invariant needs arc windings when n >= 2")
        for j, a2 in enumerate(f.arc2):
            # (phi(a)+1/2)(phi(Delta)+1) = ((arc2+1)/2) * (-kappa)
            total += ((a2 + 1) // 2) * (-f.spec.kappa[j + 1])
    return total & 1


def q_vector(f: Framing) -> QVector:
    """Mod-2 reduction of the basis curve windings."""
    return QVector(tuple(w & 1 for w in f.curve_windings()))


def spin_form(f: Framing) -> QForm:
    """Classical spin structure q(b) = phi(b) + 1 induced by an even framing."""
    if any(k % 2 for k in f.spec.kappa):
        raise SomeKappaOdd(
            "no classical spin structure: kappa has odd entries "
            f"{tuple(f.spec.kappa)}"
        )
    return QForm(
        tuple((w + 1) & 1 for w in f.wind_x),
        tuple((w + 1) & 1 for w in f.wind_y),
    )


def arf_of_form(q: QForm) -> int:
    """Classical Arf invariant sum q(x_i) q(y_i) of a quadratic form."""
    return sum(a & b for a, b in zip(q.qx, q.qy)) & 1


def winding_parity(f: Framing, v: AbsVec) -> int:
    """Mod-2 winding number of a puncture- and arc-disjoint curve in class v.

    Defined as q(v) + 1 for the quadratic extension q with basis values
    phi(b) + 1; on basis classes this is the basis winding parity, and it
    packages both the crossing rule and the pants rule for sums.
    """
    if v.spec != f.spec:
        raise SpecMismatch("class and framing live over different surfaces")
    qbits = tuple((w + 1) & 1 for w in f.curve_windings())
    return quad_eval(qbits, v.coords) ^ 1

"""Coordinate model of the homology lattices of a marked surface.

Everything lives over fixed ordered bases:

* absolute classes      (x_1, y_1, ..., x_g, y_g)              rank 2g
* relative classes      (x_1, ..., y_g, a_2, ..., a_n)         rank 2g+n-1
* punctured classes     (x_1, ..., y_g, d_2, ..., d_n)         rank 2g+n-1
* reduced point classes (e_2, ..., e_n), e_i = [p_i] - [p_1]   rank n-1

with <x_i, y_i> = 1 and <a_i, d_i> = 1.  All arithmetic is exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidSurface, SpecMismatch


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus, marked points and their signature partition."""

    g: int
    kappa: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        if self.g < 2:
            raise InvalidSurface(f"genus must be >= 2, got {self.g}")
        if len(self.kappa) < 1:
            raise InvalidSurface("need at least one marked point")
        if sum(self.kappa) != 2 * self.g - 2:
            raise InvalidSurface(
                f"kappa sum must equal 2g-2 = {2 * self.g - 2}, got {sum(self.kappa)}"
            )

    @property
    def n(self) -> int:
        return len(self.kappa)

    @property
    def abs_rank(self) -> int:
        return 2 * self.g

    @property
    def rel_rank(self) -> int:
        return 2 * self.g + self.n - 1

    @property
    def zero_rank(self) -> int:
        return self.n - 1

    def delta_winding(self, i: int) -> int:
        """Winding number of the loop around marked point i (1-based): -1 - kappa_i."""
        if not 1 <= i <= self.n:
            raise InvalidSurface(f"marked point index {i} out of range 1..{self.n}")
        return -1 - self.kappa[i - 1]


def _as_coords(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


class _VecOps:
    """Shared exact-integer vector arithmetic; subclasses fix the expected rank."""

    spec: SurfaceSpec
    coords: tuple[int, ...]

    def _check_len(self, rank: int) -> None:
        if len(self.coords) != rank:
            raise DimensionMismatch(
                f"{type(self).__name__} over g={self.spec.g}, n={self.spec.n} "
                f"needs {rank} coordinates, got {len(self.coords)}"
            )

    def _same_spec(self, other: "_VecOps") -> None:
        if self.spec != other.spec:
            raise SpecMismatch("vectors live over different surfaces")

    def __add__(self, other):
        self._same_spec(other)
        if type(other) is not type(self):
            raise SpecMismatch(f"cannot add {type(other).__name__} to {type(self).__name__}")
        return type(self)(self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.spec, tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return type(self)(self.spec, tuple(int(k) * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_primitive(self) -> bool:
        return gcd(*self.coords) == 1 if any(self.coords) else False

    def mod2(self) -> tuple[int, ...]:
        return tuple(a & 1 for a in self.coords)


@dataclass(frozen=True)
class AbsVec(_VecOps):
    """Class in the absolute first homology of the closed surface."""

    spec: SurfaceSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords))
        self._check_len(self.spec.abs_rank)


@dataclass(frozen=True)
class RelVec(_VecOps):
    """Class in the homology of the surface relative to its marked points."""

    spec: SurfaceSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords))
        self._check_len(self.spec.rel_rank)


@dataclass(frozen=True)
class PunctVec(_VecOps):
    """Class in the first homology of the surface minus its marked points."""

    spec: SurfaceSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords))
        self._check_len(self.spec.rel_rank)


@dataclass(frozen=True)
class ZeroChain(_VecOps):
    """Reduced zero-homology of the marked point set, basis e_i = [p_i] - [p_1]."""

    spec: SurfaceSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords))
        self._check_len(self.spec.zero_rank)


# ---------------------------------------------------------------------------
# basis vectors


def _unit(rank: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i == j else 0 for i in range(rank))


def x_curve(spec: SurfaceSpec, i: int) -> AbsVec:
    """Basis curve x_i, 1 <= i <= g."""
    if not 1 <= i <= spec.g:
        raise DimensionMismatch(f"handle index {i} out of range 1..{spec.g}")
    return AbsVec(spec, _unit(spec.abs_rank, 2 * (i - 1)))


def y_curve(spec: SurfaceSpec, i: int) -> AbsVec:
    """Basis curve y_i, 1 <= i <= g."""
    if not 1 <= i <= spec.g:
        raise DimensionMismatch(f"handle index {i} out of range 1..{spec.g}")
    return AbsVec(spec, _unit(spec.abs_rank, 2 * (i - 1) + 1))


def abs_basis(spec: SurfaceSpec) -> list[AbsVec]:
    """The 2g absolute basis classes in order x_1, y_1, ..., x_g, y_g."""
    return [AbsVec(spec, _unit(spec.abs_rank, j)) for j in range(spec.abs_rank)]


def arc_class(spec: SurfaceSpec, i: int) -> RelVec:
    """Relative class of the arc a_i, 2 <= i <= n."""
    if not 2 <= i <= spec.n:
        raise DimensionMismatch(f"arc index {i} out of range 2..{spec.n}")
    return RelVec(spec, _unit(spec.rel_rank, spec.abs_rank + i - 2))


def point_loop(spec: SurfaceSpec, i: int) -> PunctVec:
    """Punctured class of the counterclockwise loop around marked point i.

    For i >= 2 this is the basis vector d_i; the loop around p_1 is
    -(d_2 + ... + d_n), the zero class when n = 1.
    """
    if not 1 <= i <= spec.n:
        raise DimensionMismatch(f"marked point index {i} out of range 1..{spec.n}")
    if i >= 2:
        return PunctVec(spec, _unit(spec.rel_rank, spec.abs_rank + i - 2))
    coords = [0] * spec.rel_rank
    for j in range(spec.abs_rank, spec.rel_rank):
        coords[j] = -1
    return PunctVec(spec, tuple(coords))


def point_class(spec: SurfaceSpec, i: int) -> ZeroChain:
    """Reduced point class e_i = [p_i] - [p_1], 2 <= i <= n."""
    if not 2 <= i <= spec.n:
        raise DimensionMismatch(f"point index {i} out of range 2..{spec.n}")
    return ZeroChain(spec, _unit(spec.zero_rank, i - 2))


# ---------------------------------------------------------------------------
# maps between the lattices


def as_rel(v: AbsVec) -> RelVec:
    """Embed an absolute class into the relative lattice."""
    return RelVec(v.spec, v.coords + (0,) * v.spec.zero_rank)


def as_punct(v: AbsVec) -> PunctVec:
    """Embed an absolute class into the punctured lattice (no d components)."""
    return PunctVec(v.spec, v.coords + (0,) * v.spec.zero_rank)


def project_punct(c: PunctVec) -> AbsVec:
    """Kill the d components: the map induced by filling the punctures."""
    return AbsVec(c.spec, c.coords[: c.spec.abs_rank])


def boundary(x: RelVec) -> ZeroChain:
    """Connecting map to reduced zero-homology: sends a_i to e_i, curves to 0."""
    return ZeroChain(x.spec, x.coords[x.spec.abs_rank :])


# ---------------------------------------------------------------------------
# pairings


def symplectic_pairing(u: AbsVec, v: AbsVec) -> int:
    """Algebraic intersection number in the fixed basis, <x_i, y_i> = 1."""
    u._same_spec(v)
    return sympl(u.coords, v.coords)


def sympl(u: Sequence[int], v: Sequence[int]) -> int:
    """Raw symplectic form on interleaved coordinates (x_1, y_1, ...)."""
    if len(u) != len(v):
        raise DimensionMismatch("symplectic pairing of different lengths")
    total = 0
    for i in range(0, len(u) - 1, 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def rel_punct_pairing(x: RelVec, c: PunctVec) -> int:
    """Perfect pairing of relative against punctured classes.

    Restricts to the intersection form on the symplectic block, and
    <a_i, d_j> = delta_ij on the arc/loop block.
    """
    if x.spec != c.spec:
        raise SpecMismatch("pairing of vectors over different surfaces")
    r = x.spec.abs_rank
    total = sympl(x.coords[:r], c.coords[:r])
    for i in range(r, x.spec.rel_rank):
        total += x.coords[i] * c.coords[i]
    return total


def gram_matrix(spec: SurfaceSpec) -> tuple[tuple[int, ...], ...]:
    """Matrix of rel_punct_pairing in the fixed bases (block J + identity)."""
    r = spec.rel_rank
    rows = []
    for i in range(r):
        row = [0] * r
        if i < spec.abs_rank:
            if i % 2 == 0:
                row[i + 1] = 1
            else:
                row[i - 1] = -1
        else:
            row[i] = 1
        rows.append(tuple(row))
    return tuple(rows)


def dual_bits(coords: Sequence[int]) -> tuple[int, ...]:
    """Mod-2 evaluation table of the functional <v, .> on the absolute basis.

    Expects the 2g symplectic coordinates of v; the table swaps each (x, y)
    pair, since <v, x_i> = -v_{y_i} and <v, y_i> = v_{x_i}.
    """
    if len(coords) % 2 != 0:
        raise DimensionMismatch("dual_bits expects the 2g symplectic coordinates")
    out = []
    for i in range(0, len(coords), 2):
        out.append(coords[i + 1] & 1)
        out.append(coords[i] & 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# mod-2 cohomology classes


@dataclass(frozen=True)
class CohomClass:
    """Element of H^1 of the closed surface with Z/2 coefficients.

    Stored as its evaluation table against the mod-2 absolute basis; the value
    on a class with mod-2 coordinates c is sum(bits * c) mod 2.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) & 1 for b in self.bits)
        if len(bits) % 2 != 0:
            raise DimensionMismatch("cohomology class needs 2g bits")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zero(cls, g: int) -> "CohomClass":
        return cls((0,) * (2 * g))

    @classmethod
    def pairing_with(cls, v: AbsVec) -> "CohomClass":
        """The functional <v, .> mod 2."""
        return cls(dual_bits(v.coords[: v.spec.abs_rank]))

    @property
    def g(self) -> int:
        return len(self.bits) // 2

    def __add__(self, other: "CohomClass") -> "CohomClass":
        if len(self.bits) != len(other.bits):
            raise DimensionMismatch("cohomology classes of different genus")
        return CohomClass(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def evaluate(self, v: AbsVec | Sequence[int]) -> int:
        coords = v.coords if isinstance(v, AbsVec) else v
        if len(coords) != len(self.bits):
            raise DimensionMismatch("evaluation on a class of the wrong rank")
        return sum(b * (c & 1) for b, c in zip(self.bits, coords)) & 1

    def is_zero(self) -> bool:
        return not any(self.bits)

"""Pure automorphisms of the relative homology lattice as validated block matrices.

An element acts on relative coordinates by [[S, M], [0, I]]: S is an integer
symplectic 2g x 2g matrix, M a 2g x (n-1) integer matrix recording how point
classes are transvected into absolute homology.  The trailing identity block
is the purity constraint and is never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, NotPrimitive, NotSymplectic, SpecMismatch
from .lattice import AbsVec, CohomClass, RelVec, SurfaceSpec, sympl

Mat = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# small exact matrix helpers (row-major tuples)


def freeze(rows: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity_mat(k: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def zero_mat(rows: int, cols: int) -> Mat:
    return tuple((0,) * cols for _ in range(rows))


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and len(a[0]) != len(b):
        raise DimensionMismatch("matrix product shape mismatch")
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Sequence[int]) -> tuple[int, ...]:
    if a and len(a[0]) != len(v):
        raise DimensionMismatch("matrix/vector shape mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()

def mat_mod2(a: Mat) -> Mat:
    return tuple(tuple(v & 1 for v in row) for row in a)


def sympl_gram(g: int) -> Mat:
    """Gram matrix J of the symplectic form in the interleaved basis."""
    rows = []
    for i in range(2 * g):
        row = [0] * (2 * g)
        if i % 2 == 0:
            row[i + 1] = 1
        else:
            row[i - 1] = -1
        rows.append(tuple(row))
    return tuple(rows)


def is_symplectic(s: Mat, g: int, mod2: bool = False) -> bool:
    """Check S^T J S = J, exactly or mod 2."""
    if len(s) != 2 * g or any(len(row) != 2 * g for row in s):
        return False
    j = sympl_gram(g)
    lhs = mat_mul(mat_mul(transpose(s), j), s)
    if mod2:
        return mat_mod2(lhs) == mat_mod2(j)
    return lhs == j


def sp_inverse(s: Mat, g: int) -> Mat:
    """Inverse of a symplectic matrix: -J S^T J (exact over the integers)."""
    j = sympl_gram(g)
    inv = mat_mul(mat_mul(j, transpose(s)), j)
    return tuple(tuple(-v for v in row) for row in inv)


# ---------------------------------------------------------------------------
# the group


@dataclass(frozen=True)
class PAutElem:
    """Block automorphism of the relative lattice of a genus-g, n-point surface."""

    g: int
    n: int
    S: Mat
    M: Mat

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", freeze(self.S))
        object.__setattr__(self, "M", freeze(self.M))
        k = 2 * self.g
        if len(self.S) != k or any(len(row) != k for row in self.S):
            raise DimensionMismatch(f"S must be {k}x{k}")
        if len(self.M) != k or any(len(row) != self.n - 1 for row in self.M):
            raise DimensionMismatch(f"M must be {k}x{self.n - 1}")
        if not is_symplectic(self.S, self.g):
            raise NotSymplectic("S does not preserve the intersection pairing")

    @classmethod
    def identity(cls, g: int, n: int) -> "PAutElem":
        return cls(g, n, identity_mat(2 * g), zero_mat(2 * g, n - 1))

    @classmethod
    def from_blocks(cls, spec: SurfaceSpec, s: Mat, m: Mat | None = None) -> "PAutElem":
        if m is None:
            m = zero_mat(spec.abs_rank, spec.zero_rank)
        return cls(spec.g, spec.n, s, m)

    def matches(self, spec: SurfaceSpec) -> bool:
        return self.g == spec.g and self.n == spec.n

    def is_identity(self) -> bool:
        return self.S == identity_mat(2 * self.g) and all(
            all(v == 0 for v in row) for row in self.M
        )

    def sbar(self) -> Mat:
        return mat_mod2(self.S)

    def act(self, x: RelVec) -> RelVec:
        """Apply the block matrix to a relative class."""
        if x.spec.g != self.g or x.spec.n != self.n:
            raise SpecMismatch("automorphism and class live over different surfaces")
        absx = x.coords[: 2 * self.g]
        arcs = x.coords[2 * self.g :]
        out = list(mat_vec(self.S, absx))
        for i, row in enumerate(self.M):
            out[i] += sum(a * b for a, b in zip(row, arcs))
        return RelVec(x.spec, tuple(out) + arcs)


def compose(a: PAutElem, b: PAutElem) -> PAutElem:
    """Block product: (S_a S_b, S_a M_b + M_a)."""
    if (a.g, a.n) != (b.g, b.n):
        raise SpecMismatch("composing automorphisms of different surfaces")
    s = mat_mul(a.S, b.S)
    sm = mat_mul(a.S, b.M) if a.n > 1 else b.M
    m = tuple(
        tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(sm, a.M)
    )
    return PAutElem(a.g, a.n, s, m)


def invert(a: PAutElem) -> PAutElem:
    """Block inverse: (S^{-1}, -S^{-1} M)."""
    sinv = sp_inverse(a.S, a.g)
    m = mat_mul(sinv, a.M)
    return PAutElem(a.g, a.n, sinv, tuple(tuple(-v for v in row) for row in m))


def decompose(a: PAutElem) -> tuple[PAutElem, PAutElem]:
    """Split A = R * S~ with R = (I, M) point-transvection part, S~ = (S, 0)."""
    r = PAutElem(a.g, a.n, identity_mat(2 * a.g), a.M)
    st = PAutElem(a.g, a.n, a.S, zero_mat(2 * a.g, a.n - 1))
    return r, st


# ---------------------------------------------------------------------------
# transvections and their factorization


def transvection(v: AbsVec, k: int = 1) -> Mat:
    """Matrix of x -> x + k <x, v> v in the absolute basis."""
    return _transvection_coords(v.coords, k)


def _transvection_coords(v: Sequence[int], k: int) -> Mat:
    m = len(v)
    jv = []
    for i in range(0, m, 2):
        jv.append(v[i + 1])
        jv.append(-v[i])
    # <x, v> = sum_j jv[j] x_j with jv = (v_y, -v_x) per handle
    return tuple(
        tuple((1 if i == j else 0) + k * v[i] * jv[j] for j in range(m))
        for i in range(m)
    )


def pullback_h1(sbar: Mat, theta: CohomClass) -> CohomClass:
    """Precompose a cohomology class with the mod-2 action: bits -> S^T bits."""
    if len(sbar) != len(theta.bits):
        raise DimensionMismatch("pullback matrix has the wrong size")
    bits = tuple(
        sum(sbar[i][j] * theta.bits[i] for i in range(len(sbar))) & 1
        for j in range(len(sbar))
    )
    return CohomClass(bits)


def factor_sp(s: Mat) -> list[tuple[tuple[int, ...], int]]:
    """Factor an integer symplectic matrix into transvections.

    Returns pairs (v, k), each a primitive vector with its power, whose
    ordered product T_{v_1}^{k_1} ... T_{v_m}^{k_m} equals S exactly.  The
    reduction is symplectic Gaussian elimination: bring each basis column
    pair to (e_{2h}, e_{2h+1}) with transvections supported on the remaining
    handles, then recurse.
    """
    m = len(s)
    if m % 2 != 0 or any(len(row) != m for row in s):
        raise DimensionMismatch("factor_sp needs a 2g x 2g matrix")
    g = m // 2
    if not is_symplectic(s, g):
        raise NotSymplectic("factor_sp input must be symplectic over the integers")

    w = [list(row) for row in s]
    applied: list[tuple[tuple[int, ...], int]] = []

    def col(j: int) -> list[int]:
        return [w[i][j] for i in range(m)]

    def apply_t(v: Sequence[int], k: int) -> None:
        # left-multiply W by T_v^k, column by column
        if k == 0:
            return
        for j in range(m):
            c = sympl(col(j), v)
            if c:
                kc = k * c
                for i in range(m):
                    w[i][j] += kc * v[i]
        applied.append((tuple(v), k))

    def unit(j: int) -> list[int]:
        e = [0] * m
        e[j] = 1
        return e

    def basis_x(i: int) -> list[int]:
        return unit(2 * i)

    def basis_y(i: int) -> list[int]:
        return unit(2 * i + 1)

    def euclid_handle(j: int, i: int) -> None:
        # zero the y_i coordinate of column j, gcd collects in the x_i slot
        while w[2 * i + 1][j] != 0:
            a, b = w[2 * i][j], w[2 * i + 1][j]
            if a == 0:
                apply_t(basis_x(i), -1)  # a += b
            elif abs(a) > abs(b):
                apply_t(basis_x(i), a // b)  # a -> a mod b
            else:
                apply_t(basis_y(i), -(b // a))  # b -> b mod a

    def reduce_first(h: int) -> None:
        j = 2 * h
        for i in range(h, g):
            euclid_handle(j, i)
        # absorb the remaining x_i coefficients into the x_h slot
        for i in range(h + 1, g):
            while w[2 * i][j] != 0:
                ah, ai = w[2 * h][j], w[2 * i][j]
                if ah == 0:
                    apply_t([c + d for c, d in zip(basis_x(h), basis_y(i))], 1)
                    apply_t(basis_y(i), -1)  # a_h += a_i
                    apply_t([c + d for c, d in zip(basis_x(i), basis_y(h))], -1)
                    apply_t(basis_y(h), 1)  # a_i -= a_h
                elif abs(ai) >= abs(ah):
                    k = -(ai // ah)
                    apply_t([c + d for c, d in zip(basis_x(i), basis_y(h))], k)
                    apply_t(basis_y(h), -k)  # a_i -> a_i mod a_h
                else:
                    k = -(ah // ai)
                    apply_t([c + d for c, d in zip(basis_x(h), basis_y(i))], k)
                    apply_t(basis_y(i), -k)  # a_h -> a_h mod a_i
        if w[2 * h][j] == -1:
            apply_t(basis_y(h), 1)
            apply_t(basis_x(h), 2)
            apply_t(basis_y(h), 1)
        if col(j) != unit(2 * h):
            raise AssertionError("column reduction failed; input not symplectic?")

    def reduce_second(h: int) -> None:
        # all moves here fix x_h (no y_h component in any transvection class)
        j = 2 * h + 1
        for i in range(h + 1, g):
            euclid_handle(j, i)
        for i in range(h + 1, g):
            ai = w[2 * i][j]
            if ai:
                # <u, x_h + x_i> = -1 here, so power ai clears the x_i slot
                apply_t([c + d for c, d in zip(basis_x(h), basis_x(i))], ai)
        apply_t(basis_x(h), w[2 * h][j])
        if col(j) != unit(2 * h + 1):
            raise AssertionError("column reduction failed; input not symplectic?")

    for h in range(g):
        reduce_first(h)
        reduce_second(h)

    # applied transvections satisfy T_m ... T_1 S = I, so
    # S = T_1^{-1} T_2^{-1} ... T_m^{-1} in application order
    factors = [(v, -k) for v, k in applied]
    for v, _ in factors:
        if gcd(*v) != 1:
            raise NotPrimitive("internal error: emitted non-primitive class")
    return factors

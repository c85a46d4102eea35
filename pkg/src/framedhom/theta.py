"""Evaluation of the change-of-winding crossed homomorphism on lattice automorphisms.

The value on an automorphism A is assembled from its two blocks:

* the point-transvection part contributes the pairing functional against the
  image of the mod-2 signature vector (kappa_2, ..., kappa_n), and
* the symplectic part is factored into transvections, each contributing
  k <., v> times the winding parity of v, accumulated with the cocycle rule.

The result is independent of the chosen factorization; the dedicated
verification suites exercise this rather than assuming it.
"""

from __future__ import annotations

from .errors import NotSymplectic, SpecMismatch
from .framing import Framing, QForm, winding_parity
from .lattice import AbsVec, CohomClass, SurfaceSpec, dual_bits
from .paut import (
    Mat,
    PAutElem,
    factor_sp,
    is_symplectic,
    mat_vec,
    pullback_h1,
)


def v_kappa_star(m: Mat, spec: SurfaceSpec) -> CohomClass:
    """Pairing functional against the pushed signature vector, x -> <M v, x>.

    v is the reduced mod-2 signature vector (kappa_2, ..., kappa_n); the
    result is identically zero when every kappa entry is even or when n = 1.
    """
    if spec.n == 1:
        return CohomClass.zero(spec.g)
    if len(m) != spec.abs_rank or any(len(row) != spec.zero_rank for row in m):
        raise SpecMismatch(f"M must be {spec.abs_rank}x{spec.zero_rank}")
    vbar = tuple(k & 1 for k in spec.kappa[1:])
    w = mat_vec(m, vbar)
    return CohomClass(dual_bits(w))


def q_hat(q: QForm, sbar: Mat) -> CohomClass:
    """Change of a quadratic form under a mod-2 symplectic matrix, x -> q(Sx) - q(x)."""
    k = 2 * q.g
    if len(sbar) != k or any(len(row) != k for row in sbar):
        raise SpecMismatch(f"matrix must be {k}x{k}")
    if not is_symplectic(sbar, q.g, mod2=True):
        raise NotSymplectic("q_hat needs a mod-2 symplectic matrix")
    bits = []
    for j in range(k):
        basis = tuple(1 if i == j else 0 for i in range(k))
        image = tuple(row[j] & 1 for row in sbar)
        bits.append(q.evaluate(image) ^ q.evaluate(basis))
    return CohomClass(tuple(bits))


def theta(a: PAutElem, f: Framing) -> CohomClass:
    """Value of the crossed homomorphism on an automorphism, for this framing.

    Split A = R * S~; the R block evaluates through v_kappa_star, the S~ block
    through a transvection factorization with letter values k <., v> P(v),
    combined as value(A) = pullback(S~) value(R) + value(S~).
    """
    spec = f.spec
    if not a.matches(spec):
        raise SpecMismatch(
            f"automorphism is for g={a.g}, n={a.n}; framing for g={spec.g}, n={spec.n}"
        )
    th_rel = v_kappa_star(a.M, spec)
    th_sym = CohomClass.zero(spec.g)
    for coords, k in factor_sp(a.S):
        if k & 1 == 0:
            continue  # even powers contribute nothing and pull back trivially
        # pullback along T_v is the rank-one update theta + theta(v) <., v>
        dual = CohomClass(dual_bits(coords))
        if th_sym.evaluate(coords):
            th_sym = th_sym + dual
        if winding_parity(f, AbsVec(spec, coords)):
            th_sym = th_sym + dual
    return pullback_h1(a.sbar(), th_rel) + th_sym

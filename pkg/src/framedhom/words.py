"""Words in twist and point-push generators, with exact lattice and framing actions.

A word is an ordered tuple of letters, leftmost acting last (so a word reads
like a composition).  Twist letters carry the class of the twisting curve in
the punctured lattice together with the declared winding number of the chosen
simple representative; point-push letters carry the pushed point and the
primitive absolute class of the pushing loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    DimensionMismatch,
    NotPrimitive,
    PointPushOnArcs,
    SpecMismatch,
)
from .framing import Framing
from .lattice import (
    AbsVec,
    CohomClass,
    PunctVec,
    RelVec,
    SurfaceSpec,
    arc_class,
    as_punct,
    as_rel,
    dual_bits,
    point_loop,
    project_punct,
    rel_punct_pairing,
    sympl,
    x_curve,
    y_curve,
)
from .paut import (
    PAutElem,
    _transvection_coords,
    compose,
    identity_mat,
    mat_mod2,
    pullback_h1,
)


@dataclass(frozen=True)
class Twist:
    """Dehn twist about a curve with a caller-declared winding number."""

    curve: PunctVec
    power: int = 1
    winding: int = 0

    def __post_init__(self) -> None:
        if self.power == 0:
            raise DimensionMismatch("twist power must be nonzero")
        if not self.curve.is_primitive():
            raise NotPrimitive("twist curve class must be primitive")

    @property
    def spec(self) -> SurfaceSpec:
        return self.curve.spec

    def inverse(self) -> "Twist":
        return Twist(self.curve, -self.power, self.winding)


@dataclass(frozen=True)
class PointPush:
    """Push of marked point `point` (1-based) around a primitive loop."""

    point: int
    loop: AbsVec

    def __post_init__(self) -> None:
        if not 1 <= self.point <= self.loop.spec.n:
            raise DimensionMismatch(
                f"marked point {self.point} out of range 1..{self.loop.spec.n}"
            )
        if not self.loop.is_primitive():
            raise NotPrimitive("point-push loop class must be primitive")

    @property
    def spec(self) -> SurfaceSpec:
        return self.loop.spec

    def inverse(self) -> "PointPush":
        return PointPush(self.point, -self.loop)


Letter = Union[Twist, PointPush]


@dataclass(frozen=True)
class Word:
    """Composable sequence of letters over one surface; leftmost acts last."""

    spec: SurfaceSpec
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.spec != self.spec:
                raise SpecMismatch("all letters of a word must share one surface")

    def __add__(self, other: "Word") -> "Word":
        if self.spec != other.spec:
            raise SpecMismatch("concatenating words over different surfaces")
        return Word(self.spec, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "Word":
        return Word(self.spec, tuple(l.inverse() for l in reversed(self.letters)))

    def has_pushes(self) -> bool:
        return any(isinstance(l, PointPush) for l in self.letters)


# ---------------------------------------------------------------------------
# lattice action


def _push_multiplicity(letter: PointPush, coords: tuple[int, ...]) -> int:
    """Coefficient with which the pushed point appears in the boundary."""
    spec = letter.spec
    arcs = coords[spec.abs_rank :]
    if letter.point >= 2:
        return arcs[letter.point - 2]
    return -sum(arcs)


def _act_letter_coords(letter: Letter, coords: tuple[int, ...]) -> tuple[int, ...]:
    spec = letter.spec
    if isinstance(letter, Twist):
        c = rel_punct_pairing(RelVec(spec, coords), letter.curve)
        if not c:
            return coords
        kc = letter.power * c
        image = project_punct(letter.curve).coords
        out = list(coords)
        for i, v in enumerate(image):
            out[i] += kc * v
        return tuple(out)
    m = _push_multiplicity(letter, coords)
    if not m:
        return coords
    out = list(coords)
    for i, v in enumerate(letter.loop.coords):
        out[i] += m * v
    return tuple(out)


def act_rel(word: Word, x: RelVec) -> RelVec:
    """Apply the word to a relative class (rightmost letter first)."""
    if x.spec != word.spec:
        raise SpecMismatch("word and class live over different surfaces")
    coords = x.coords
    for letter in reversed(word.letters):
        coords = _act_letter_coords(letter, coords)
    return RelVec(x.spec, coords)


def letter_paut(letter: Letter) -> PAutElem:
    """Block matrix of a single letter."""
    spec = letter.spec
    k = spec.abs_rank
    if isinstance(letter, Twist):
        image = project_punct(letter.curve).coords
        s = _transvection_coords(image, letter.power)
        dpart = letter.curve.coords[k:]
        m = tuple(
            tuple(letter.power * image[i] * d for d in dpart) for i in range(k)
        )
        return PAutElem(spec.g, spec.n, s, m)
    cols = spec.zero_rank
    if letter.point >= 2:
        m = tuple(
            tuple(letter.loop.coords[i] if j == letter.point - 2 else 0 for j in range(cols))
            for i in range(k)
        )
    else:
        m = tuple(tuple(-letter.loop.coords[i] for _ in range(cols)) for i in range(k))
    return PAutElem(spec.g, spec.n, identity_mat(k), m)


def word_to_paut(word: Word) -> PAutElem:
    """Matrix of the word's action on the relative lattice."""
    out = PAutElem.identity(word.spec.g, word.spec.n)
    for letter in word.letters:
        out = compose(out, letter_paut(letter))
    return out


# ---------------------------------------------------------------------------
# framing action via chained twist-linearity


def track_curve(
    word: Word, start: RelVec, winding2: int
) -> tuple[RelVec, int]:
    """Push a curve (class + doubled winding) through the word's letters.

    Twist letters update the winding by twist-linearity with the letter's
    declared winding; point-push letters use the mod-2-pinned increment
    kappa_i * <loop, class> (exact by the fixed convention).  Doubled values
    keep arc half-integers integral.
    """
    if start.spec != word.spec:
        raise SpecMismatch("word and curve live over different surfaces")
    spec = word.spec
    coords = start.coords
    w2 = winding2
    for letter in reversed(word.letters):
        if isinstance(letter, Twist):
            c = rel_punct_pairing(RelVec(spec, coords), letter.curve)
            w2 += 2 * letter.power * c * letter.winding
        else:
            absc = coords[: spec.abs_rank]
            w2 += 2 * spec.kappa[letter.point - 1] * sympl(letter.loop.coords, absc)
        coords = _act_letter_coords(letter, coords)
    return RelVec(spec, coords), w2


def act_framing(word: Word, f: Framing) -> Framing:
    """Transport a framing: (w . phi)(b) = phi(w^{-1}(b)) on every basis element."""
    if f.spec != word.spec:
        raise SpecMismatch("word and framing live over different surfaces")
    spec = f.spec
    if f.has_arc_data and spec.n >= 2 and word.has_pushes():
        raise PointPushOnArcs(
            "point-push letters do not act on framings carrying arc data"
        )
    winv = word.inverse()
    wind_x = []
    wind_y = []
    for i in range(1, spec.g + 1):
        _, w2 = track_curve(winv, as_rel(x_curve(spec, i)), 2 * f.wind_x[i - 1])
        wind_x.append(w2 // 2)
        _, w2 = track_curve(winv, as_rel(y_curve(spec, i)), 2 * f.wind_y[i - 1])
        wind_y.append(w2 // 2)
    arc2 = None
    if f.has_arc_data:
        arc2 = []
        for j in range(2, spec.n + 1):
            _, w2 = track_curve(winv, arc_class(spec, j), f.arc2[j - 2])
            arc2.append(w2)
        arc2 = tuple(arc2)
    return Framing(spec, tuple(wind_x), tuple(wind_y), arc2)


# ---------------------------------------------------------------------------
# the mod-2 winding defect of a word


def _letter_value(letter: Letter, spec: SurfaceSpec) -> CohomClass:
    """Change of mod-2 winding the letter inflicts on absolute classes."""
    if isinstance(letter, Twist):
        scale = (letter.power * letter.winding) & 1
        image = project_punct(letter.curve).coords
    else:
        scale = spec.kappa[letter.point - 1] & 1
        image = letter.loop.coords
    if not scale:
        return CohomClass.zero(spec.g)
    return CohomClass(dual_bits(image))


def _letter_sbar(letter: Letter, spec: SurfaceSpec):
    if isinstance(letter, Twist):
        image = project_punct(letter.curve).coords
        return mat_mod2(_transvection_coords(image, letter.power))
    return identity_mat(spec.abs_rank)


def delta_word(word: Word, f: Framing) -> CohomClass:
    """Accumulated change of mod-2 winding numbers along the word.

    Processes letters with the crossed-homomorphism rule
    value(fg) = pullback(g) value(f) + value(g), rightmost letter acting
    first; twist letters contribute k <., c> w(c), point-pushes kappa_i <u, .>.
    """
    if f.spec != word.spec:
        raise SpecMismatch("word and framing live over different surfaces")
    spec = word.spec
    out = CohomClass.zero(spec.g)
    for letter in word.letters:
        out = pullback_h1(_letter_sbar(letter, spec), out) + _letter_value(letter, spec)
    return out


# ---------------------------------------------------------------------------
# standard alphabet


def standard_alphabet(f: Framing) -> dict[str, Letter]:
    """Power-one letters consistent with the framing.

    Basis twists Tx_i / Ty_i carry the framing's windings; puncture twists
    Td_i carry the signature winding -1-kappa_i (Td1 exists only for n >= 2,
    where the loop class is nonzero).
    """
    spec = f.spec
    out: dict[str, Letter] = {}
    for i in range(1, spec.g + 1):
        out[f"Tx{i}"] = Twist(as_punct(x_curve(spec, i)), 1, f.wind_x[i - 1])
        out[f"Ty{i}"] = Twist(as_punct(y_curve(spec, i)), 1, f.wind_y[i - 1])
    for i in range(1, spec.n + 1):
        loop = point_loop(spec, i)
        if loop.is_zero():
            continue
        out[f"Td{i}"] = Twist(loop, 1, spec.delta_winding(i))
    return out


def with_power(letter: Letter, k: int) -> Letter:
    """Replace a letter's power (twists only; pushes have no power)."""
    if isinstance(letter, Twist):
        return Twist(letter.curve, k, letter.winding)
    raise DimensionMismatch("only twist letters take powers")

"""Named verification suites: seeded, deterministic, scriptable.

Each suite returns a SuiteResult with one Check per verified property; the
CLI prints a pass/fail line per check and exits nonzero on any failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from random import Random

from . import bruteforce
from .errors import NoLiftExists
from .framing import Framing, arf, spin_form, winding_parity
from .kernel import kernel_test, lift_transvection
from .lattice import SurfaceSpec, as_rel, x_curve, y_curve
from .moves import ArcParityTwist, BoundaryTwist, ConnectSum, apply_move, match_framings
from .paut import PAutElem, identity_mat, mat_mod2, pullback_h1, transvection
from .sampling import (
    random_exotic_word,
    random_framing,
    random_parity_zero_word,
    random_paut,
    random_primitive_abs,
    random_relaut_block,
    random_spec,
    random_standard_word,
)
from .theta import q_hat, theta, v_kappa_star
from .words import Twist, Word, act_framing, delta_word, standard_alphabet, track_curve, word_to_paut


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


def _specs_for(rng: Random, genera, ns, even_only=False):
    g = rng.choice(genera)
    n = rng.choice(ns)
    return random_spec(rng, g, n, even_only)


def suite_cocycle(g: int | None = None, trials: int = 1000, seed: int = 0) -> SuiteResult:
    """delta(w1 ++ w2) = pullback(w2) delta(w1) + delta(w2), exactly."""
    rng = Random(seed)
    res = SuiteResult("cocycle")
    genera = [g] if g else [2, 3]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        w1 = random_exotic_word(rng, spec, rng.randint(0, 5))
        w2 = random_exotic_word(rng, spec, rng.randint(0, 5))
        lhs = delta_word(w1 + w2, f)
        rhs = pullback_h1(word_to_paut(w2).sbar(), delta_word(w1, f)) + delta_word(w2, f)
        if lhs != rhs:
            bad += 1
    res.add("cocycle-identity", bad == 0, f"{trials - bad}/{trials} word pairs")
    return res


def suite_well_defined(g: int | None = None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """Algebraic evaluation agrees with the word-level defect; relators map to 0."""
    from .sampling import refactored_word

    rng = Random(seed)
    res = SuiteResult("well-defined")
    genera = [g] if g else [2, 3]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        w = random_standard_word(rng, f, rng.randint(0, 6))
        if theta(word_to_paut(w), f) != delta_word(w, f):
            bad += 1
    res.add("theta-equals-delta", bad == 0, f"{trials - bad}/{trials} words")

    id_trials = max(1, trials * 2 // 5)
    bad = 0
    for _ in range(id_trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        w = random_standard_word(rng, f, rng.randint(0, 5))
        relator = w + refactored_word(f, word_to_paut(w)).inverse()
        if not word_to_paut(relator).is_identity():
            bad += 1
        elif not delta_word(relator, f).is_zero():
            bad += 1
    res.add("relators-vanish", bad == 0, f"{id_trials - bad}/{id_trials} identity words")
    return res


def suite_stabilizer(g: int | None = None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """Words fixing the framing land in the kernel."""
    rng = Random(seed)
    res = SuiteResult("stabilizer")
    genera = [g] if g else [2, 3]
    bad_fix = bad_ker = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        w = random_parity_zero_word(rng, f, rng.randint(1, 5))
        if act_framing(w, f) != f:
            bad_fix += 1
        if not kernel_test(word_to_paut(w), f):
            bad_ker += 1
    res.add("stabilizing-words-fix", bad_fix == 0, f"{trials - bad_fix}/{trials}")
    res.add("stabilizer-in-kernel", bad_ker == 0, f"{trials - bad_ker}/{trials}")
    return res


def suite_lift(g: int | None = None, trials: int = 200, seed: int = 0) -> SuiteResult:
    """Every primitive transvection lifts to the kernel, or provably cannot."""
    rng = Random(seed)
    res = SuiteResult("lift")
    genera = [g] if g else [2, 3, 4]
    bad = 0
    lifted = refused = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3], even_only=rng.random() < 0.5)
        f = random_framing(rng, spec)
        v = random_primitive_abs(rng, spec)
        try:
            a = lift_transvection(v, f)
        except NoLiftExists:
            refused += 1
            even = all(k % 2 == 0 for k in spec.kappa)
            obstructed = not q_hat(spin_form(f), mat_mod2(transvection(v, 1))).is_zero() if even else False
            if not (even and winding_parity(f, v) == 1 and obstructed):
                bad += 1
            continue
        lifted += 1
        if not kernel_test(a, f) or a.S != transvection(v, 1):
            bad += 1
    res.add(
        "lift-transvections",
        bad == 0,
        f"{lifted} lifted, {refused} provably obstructed, {bad} wrong",
    )
    return res


def suite_census(g: int | None = 2, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Group order, quadratic form counts, stabilizers, crossed identity."""
    rng = Random(seed)
    g = g or 2
    res = SuiteResult("census")
    if g in (2, 3):
        group = bruteforce.enumerate_sp2(g)
        res.add(
            "group-order",
            len(group) == bruteforce.sp2_order(g),
            f"|Sp({2*g},2)| = {len(group)}",
        )
        res.add("contains-identity", group.matrix(0) == tuple(
            tuple(1 if i == j else 0 for j in range(2 * g)) for i in range(2 * g)
        ))
        closed = all(
            group.mul_gen(group.keys[rng.randrange(len(group))], rng.randrange(len(group.gens)))
            in group.index
            for _ in range(200)
        )
        res.add("closure-sample", closed, "200 sampled products")
    census = bruteforce.qform_census(g)
    expected = (2 ** (g - 1) * (2**g + 1), 2 ** (g - 1) * (2**g - 1))
    res.add(
        "form-counts",
        (census.even_count, census.odd_count) == expected,
        f"({census.even_count}, {census.odd_count})",
    )
    if g == 2:
        res.add(
            "stabilizer-orders",
            census.stabilizer_orders == {0: 72, 1: 120},
            str(census.stabilizer_orders),
        )
        res.add("qhat-crossed-all-pairs", bruteforce.verify_qhat_crossed(2), "720^2 pairs, both Arf classes")
    return res


def suite_kernel_order(g: int | None = 2, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Exact mod-2 kernel orders, each computed two independent ways."""
    res = SuiteResult("kernel-order")
    cases = [
        ("kappa=(2,0) winds 0", Framing.zeros(SurfaceSpec(2, (2, 0))), 1152),
        ("kappa=(1,1) winds 0", Framing.zeros(SurfaceSpec(2, (1, 1))), 720),
        ("kappa=(2) n=1 winds 0", Framing.zeros(SurfaceSpec(2, (2,))), 72),
        ("kappa=(2) n=1 odd form", Framing(SurfaceSpec(2, (2,)), (1, 0), (1, 0)), 120),
    ]
    for name, f, expected in cases:
        enum = bruteforce.kernel_order_mod2(f, "enumerate")
        struct = bruteforce.kernel_order_mod2(f, "structure")
        res.add(name, enum == struct == expected, f"enumerate={enum}, structure={struct}")
    group = bruteforce.enumerate_sp2(2)
    edges_ok = all(
        bruteforce.check_theta_edges(group, f) for _, f, _ in cases
    )
    res.add("mod2-well-defined", edges_ok, "cocycle holds on every Cayley edge")
    return res


def suite_even_form(g: int | None = None, trials: int = 1000, seed: int = 0) -> SuiteResult:
    """With every kappa even the evaluation is the spin-form defect of the Sp part."""
    rng = Random(seed)
    res = SuiteResult("even-form")
    genera = [g] if g else [2, 3]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3], even_only=True)
        f = random_framing(rng, spec)
        a = random_paut(rng, spec)
        if theta(a, f) != q_hat(spin_form(f), a.sbar()):
            bad += 1
    res.add("theta-is-spin-defect", bad == 0, f"{trials - bad}/{trials} automorphisms")
    return res


def suite_relaut(g: int | None = None, trials: int = 1000, seed: int = 0) -> SuiteResult:
    """On the point-transvection block the evaluation is the signature functional."""
    rng = Random(seed)
    res = SuiteResult("relaut")
    genera = [g] if g else [2, 3, 4]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3, 4])
        f = random_framing(rng, spec)
        m = random_relaut_block(rng, spec)
        a = PAutElem(spec.g, spec.n, identity_mat(spec.abs_rank), m)
        if theta(a, f) != v_kappa_star(m, spec):
            bad += 1
    res.add("relaut-restriction", bad == 0, f"{trials - bad}/{trials} blocks")
    return res


def _random_move(rng: Random, f: Framing):
    spec = f.spec
    kinds = ["cs"]
    evens = [j for j in range(2, spec.n + 1) if spec.kappa[j - 1] % 2 == 0]
    odds = [j for j in range(2, spec.n + 1) if spec.kappa[j - 1] % 2]
    if spec.n >= 2:
        kinds.append("csa")
    if evens:
        kinds.append("bt")
    if len(odds) >= 2:
        kinds.append("apt")
    kind = rng.choice(kinds)
    if kind == "cs":
        i = rng.randint(1, spec.g)
        helper = rng.choice([j for j in range(1, spec.g + 1) if j != i])
        return ConnectSum(rng.choice("xy"), i, helper, rng.choice([1, -1]))
    if kind == "csa":
        return ConnectSum("a", rng.randint(2, spec.n), 1, rng.choice([1, -1]))
    if kind == "bt":
        return BoundaryTwist(rng.choice(evens))
    j1, j2 = sorted(rng.sample(odds, 2))
    return ArcParityTwist(j1, j2)


def suite_moves(g: int | None = None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """Move synthesis reproduces matched framings; every move preserves Arf."""
    rng = Random(seed)
    res = SuiteResult("moves")
    genera = [g] if g else [2, 3, 4]
    bad_arf = bad_match = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3, 4])
        f = random_framing(rng, spec)
        h = f
        for _ in range(rng.randint(0, 8)):
            h2 = apply_move(h, _random_move(rng, h))
            if arf(h2) != arf(h):
                bad_arf += 1
            h = h2
        moves = match_framings(f, h)
        cur = f
        for m in moves:
            cur = apply_move(cur, m)
        if cur != h:
            bad_match += 1
    res.add("moves-preserve-arf", bad_arf == 0, f"{bad_arf} violations")
    res.add("match-roundtrip", bad_match == 0, f"{trials - bad_match}/{trials} pairs")
    return res


def suite_parity(g: int | None = None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """Chained twist-linearity windings reduce mod 2 to the parity form."""
    rng = Random(seed)
    res = SuiteResult("parity")
    genera = [g] if g else [2, 3]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        alphabet = [
            letter
            for name, letter in standard_alphabet(f).items()
            if name.startswith(("Tx", "Ty"))
        ]
        letters = tuple(
            Twist(l.curve, rng.choice([-2, -1, 1, 2]), l.winding)
            for l in (rng.choice(alphabet) for _ in range(rng.randint(1, 8)))
        )
        w = Word(spec, letters)
        i = rng.randint(1, spec.g)
        if rng.random() < 0.5:
            start, w0 = as_rel(x_curve(spec, i)), f.wind_x[i - 1]
        else:
            start, w0 = as_rel(y_curve(spec, i)), f.wind_y[i - 1]
        cls, w2 = track_curve(w, start, 2 * w0)
        from .lattice import AbsVec

        v = AbsVec(spec, cls.coords[: spec.abs_rank])
        if (w2 // 2) % 2 != winding_parity(f, v):
            bad += 1
    res.add("parity-oracle", bad == 0, f"{trials - bad}/{trials} tracked curves")
    return res


def suite_arf_action(g: int | None = None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """Arf invariance under the word action on framings."""
    rng = Random(seed)
    res = SuiteResult("arf-action")
    genera = [g] if g else [2, 3]
    bad = 0
    for _ in range(trials):
        spec = _specs_for(rng, genera, [1, 2, 3])
        f = random_framing(rng, spec)
        pushes = spec.n == 1
        w = random_standard_word(rng, f, rng.randint(1, 6), pushes=pushes)
        if arf(act_framing(w, f)) != arf(f):
            bad += 1
    res.add("arf-invariance", bad == 0, f"{trials - bad}/{trials} words")
    return res


SUITES = {
    "cocycle": suite_cocycle,
    "well-defined": suite_well_defined,
    "stabilizer": suite_stabilizer,
    "lift": suite_lift,
    "census": suite_census,
    "kernel-order": suite_kernel_order,
    "even-form": suite_even_form,
    "relaut": suite_relaut,
    "moves": suite_moves,
    "parity": suite_parity,
    "arf-action": suite_arf_action,
}


def run_suite(name: str, g: int | None = None, trials: int | None = None, seed: int = 0) -> SuiteResult:
    fn = SUITES[name]
    kwargs = {"g": g, "seed": seed}
    if trials is not None:
        kwargs["trials"] = trials
    start = time.perf_counter()
    result = fn(**kwargs)
    result.elapsed = time.perf_counter() - start
    return result


def run_all(g: int | None = None, trials: int | None = None, seed: int = 0) -> list[SuiteResult]:
    return [run_suite(name, g=g, trials=trials, seed=seed) for name in SUITES]

"""Command-line front end: JSON file formats, the word grammar, and verify suites.

Exit codes: 0 success, 1 property failure, 2 input validation, 3 cross-input
mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any

from .errors import (
    ArfMismatch,
    FileFormatError,
    FramedHomError,
    NoLiftExists,
    QVectorMismatch,
    SpecMismatch,
    WordSyntaxError,
)
from .framing import Framing, arf
from .kernel import StructureReport, kernel_test, lift_transvection, structure_report
from .lattice import AbsVec, PunctVec, SurfaceSpec
from .moves import ArcParityTwist, BoundaryTwist, ConnectSum, match_framings
from .paut import PAutElem, factor_sp
from .theta import theta
from .verify import SUITES, run_suite
from .words import PointPush, Twist, Word, act_framing, standard_alphabet, word_to_paut


# ---------------------------------------------------------------------------
# file formats


def framing_to_dict(f: Framing) -> dict[str, Any]:
    out: dict[str, Any] = {
        "g": f.spec.g,
        "kappa": list(f.spec.kappa),
        "wind_x": list(f.wind_x),
        "wind_y": list(f.wind_y),
    }
    if f.arc2 is not None and f.spec.n >= 2:
        out["arc2"] = list(f.arc2)
    return out


def framing_from_dict(data: Any) -> Framing:
    if not isinstance(data, dict):
        raise FileFormatError("framing file must hold one JSON object")
    allowed = {"g", "kappa", "wind_x", "wind_y", "arc2"}
    unknown = set(data) - allowed
    if unknown:
        raise FileFormatError(f"unknown framing keys: {sorted(unknown)}")
    for key in ("g", "kappa", "wind_x", "wind_y"):
        if key not in data:
            raise FileFormatError(f"framing file is missing {key!r}")
    spec = SurfaceSpec(data["g"], tuple(data["kappa"]))
    arc2 = tuple(data["arc2"]) if "arc2" in data else None
    return Framing(spec, tuple(data["wind_x"]), tuple(data["wind_y"]), arc2)


def paut_to_dict(a: PAutElem) -> dict[str, Any]:
    return {
        "g": a.g,
        "n": a.n,
        "S": [list(row) for row in a.S],
        "M": [list(row) for row in a.M],
    }


def paut_from_dict(data: Any) -> PAutElem:
    if not isinstance(data, dict):
        raise FileFormatError("automorphism file must hold one JSON object")
    allowed = {"g", "n", "S", "M"}
    unknown = set(data) - allowed
    if unknown:
        raise FileFormatError(f"unknown automorphism keys: {sorted(unknown)}")
    for key in ("g", "n", "S"):
        if key not in data:
            raise FileFormatError(f"automorphism file is missing {key!r}")
    g, n = int(data["g"]), int(data["n"])
    m = data.get("M", [])
    if m == []:
        m = [[] for _ in range(2 * g)]
    return PAutElem(g, n, tuple(tuple(r) for r in data["S"]), tuple(tuple(r) for r in m))


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def load_framing(path: str) -> Framing:
    return framing_from_dict(_load_json(path))


def load_paut(path: str) -> PAutElem:
    return paut_from_dict(_load_json(path))


# ---------------------------------------------------------------------------
# word grammar


_TERM_RE = re.compile(r"([+-]?)(\d*)\*?([xyd])(\d+)")
_SHORT_RE = re.compile(r"^T([xyd])(\d+)(?:\^(-?\d+))?$")
_TWIST_RE = re.compile(r"^T\(([^;]+);w=(-?\d+)\)(?:\^(-?\d+))?$")
_PUSH_RE = re.compile(r"^P\((\d+);([^;)]+)\)$")


def parse_vector(expr: str, spec: SurfaceSpec, punctured: bool):
    """Parse a linear combination like 'x1+2y2-d3' into a lattice vector."""
    expr = expr.replace(" ", "")
    coords = [0] * (spec.rel_rank if punctured else spec.abs_rank)
    pos = 0
    matched = False
    while pos < len(expr):
        m = _TERM_RE.match(expr, pos)
        if not m:
            raise WordSyntaxError(f"cannot parse vector term at {expr[pos:]!r}")
        sign, mag, sym, idx = m.groups()
        coef = int(mag) if mag else 1
        if sign == "-":
            coef = -coef
        i = int(idx)
        if sym == "x" or sym == "y":
            if not 1 <= i <= spec.g:
                raise WordSyntaxError(f"handle index {i} out of range 1..{spec.g}")
            coords[2 * (i - 1) + (0 if sym == "x" else 1)] += coef
        else:
            if not punctured:
                raise WordSyntaxError("d symbols are only legal in twist classes")
            if not 2 <= i <= spec.n:
                raise WordSyntaxError(f"loop index {i} out of range 2..{spec.n}")
            coords[spec.abs_rank + i - 2] += coef
        pos = m.end()
        matched = True
    if not matched:
        raise WordSyntaxError(f"empty vector expression {expr!r}")
    if punctured:
        return PunctVec(spec, tuple(coords))
    return AbsVec(spec, tuple(coords))


def parse_word(text: str, f: Framing) -> Word:
    """Parse the whitespace-separated word grammar against a framing.

    Letters: shorthands Tx1 / Ty2 / Td2 (windings resolved from the framing),
    explicit twists T(<vec>;w=<int>), point-pushes P(<i>;<vec>); any twist
    takes an optional ^<power>.
    """
    spec = f.spec
    alphabet = standard_alphabet(f)
    letters = []
    for token in text.split():
        m = _SHORT_RE.match(token)
        if m:
            name = f"T{m.group(1)}{m.group(2)}"
            if name not in alphabet:
                raise WordSyntaxError(f"unknown alphabet letter {name}")
            base = alphabet[name]
            power = int(m.group(3)) if m.group(3) else 1
            if power == 0:
                raise WordSyntaxError("twist power must be nonzero")
            letters.append(Twist(base.curve, power, base.winding))
            continue
        m = _TWIST_RE.match(token)
        if m:
            curve = parse_vector(m.group(1), spec, punctured=True)
            power = int(m.group(3)) if m.group(3) else 1
            if power == 0:
                raise WordSyntaxError("twist power must be nonzero")
            letters.append(Twist(curve, power, int(m.group(2))))
            continue
        m = _PUSH_RE.match(token)
        if m:
            loop = parse_vector(m.group(2), spec, punctured=False)
            letters.append(PointPush(int(m.group(1)), loop))
            continue
        raise WordSyntaxError(f"cannot parse letter {token!r}")
    return Word(spec, tuple(letters))


# ---------------------------------------------------------------------------
# reports


def report_to_dict(report: StructureReport) -> dict[str, Any]:
    out: dict[str, Any] = {"regime": report.regime}
    if report.q is not None:
        out["q"] = {"qx": list(report.q.qx), "qy": list(report.q.qy)}
    if report.arf is not None:
        out["arf"] = report.arf
    if report.v_bar is not None:
        out["v_bar"] = list(report.v_bar)
    if report.mod2_kernel_order is not None:
        out["mod2_kernel_order"] = report.mod2_kernel_order
    return out


def move_to_dict(m) -> dict[str, Any]:
    if isinstance(m, ConnectSum):
        return {"move": "connect-sum", "kind": m.kind, "index": m.index,
                "helper": m.helper, "sign": m.sign}
    if isinstance(m, ArcParityTwist):
        return {"move": "arc-parity-twist", "j1": m.j1, "j2": m.j2}
    if isinstance(m, BoundaryTwist):
        return {"move": "boundary-twist", "j": m.j}
    raise FramedHomError(f"unknown move {m!r}")


def _emit(obj: Any) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _check_match(a: PAutElem, f: Framing) -> None:
    if not a.matches(f.spec):
        raise SpecMismatch(
            f"automorphism is for g={a.g}, n={a.n}; framing for g={f.spec.g}, n={f.spec.n}"
        )


# ---------------------------------------------------------------------------
# commands


def cmd_arf(args) -> int:
    f = load_framing(args.framing)
    _emit({"arf": arf(f)})
    return 0


def cmd_theta(args) -> int:
    a = load_paut(args.paut)
    f = load_framing(args.framing)
    _check_match(a, f)
    _emit({"theta": list(theta(a, f).bits)})
    return 0


def cmd_kernel_test(args) -> int:
    a = load_paut(args.paut)
    f = load_framing(args.framing)
    _check_match(a, f)
    _emit({"in_kernel": kernel_test(a, f)})
    return 0


def cmd_lift(args) -> int:
    f = load_framing(args.framing)
    v = parse_vector(args.vector, f.spec, punctured=False)
    try:
        a = lift_transvection(v, f)
    except NoLiftExists as exc:
        _emit({"error": "NoLiftExists", "message": str(exc)})
        return 1
    _emit(paut_to_dict(a))
    return 0


def cmd_factor_sp(args) -> int:
    a = load_paut(args.paut)
    factors = factor_sp(a.S)
    _emit({"factors": [{"v": list(v), "k": k} for v, k in factors],
           "length": len(factors)})
    return 0


def cmd_act(args) -> int:
    f = load_framing(args.framing)
    w = parse_word(args.word, f)
    g = act_framing(w, f)
    _emit({"framing": framing_to_dict(g), "paut": paut_to_dict(word_to_paut(w))})
    return 0


def cmd_match(args) -> int:
    f = load_framing(args.framing_file)
    h = load_framing(args.target_file)
    moves = match_framings(f, h)
    _emit({"moves": [move_to_dict(m) for m in moves], "count": len(moves)})
    return 0


def cmd_stratum(args) -> int:
    try:
        parts = tuple(int(p) for p in args.partition.split(","))
    except ValueError as exc:
        raise FileFormatError(f"cannot parse partition {args.partition!r}") from exc
    if not parts or any(k < 1 for k in parts):
        raise FileFormatError("stratum partitions need every entry >= 1")
    total = sum(parts)
    if total % 2 != 0 or total < 2:
        raise FileFormatError(f"partition sum {total} is not 2g-2 for any g >= 2")
    spec = SurfaceSpec((total + 2) // 2, parts)
    f = Framing.zeros(spec)
    _emit({"framing": framing_to_dict(f), "report": report_to_dict(structure_report(f))})
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, g=args.g, trials=args.trials, seed=args.seed) for n in names]
    if args.json:
        _emit(
            {
                "suites": [
                    {
                        "suite": r.suite,
                        "ok": r.ok,
                        "elapsed_s": round(r.elapsed, 3),
                        "checks": [
                            {"name": c.name, "ok": c.ok, "detail": c.detail}
                            for c in r.checks
                        ],
                    }
                    for r in results
                ],
                "ok": all(r.ok for r in results),
            }
        )
    else:
        for r in results:
            for c in r.checks:
                mark = "PASS" if c.ok else "FAIL"
                detail = f"  ({c.detail})" if c.detail else ""
                print(f"{mark} {r.suite}/{c.name}{detail}")
            print(f"{'ok' if r.ok else 'FAILED'} suite {r.suite} in {r.elapsed:.2f}s")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framedhom",
        description="Exact winding-number crossed homomorphism and stratum monodromy kernels",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arf", help="Arf invariant of a framing file")
    p.add_argument("--framing", required=True)
    p.set_defaults(fn=cmd_arf)

    p = sub.add_parser("theta", help="crossed-homomorphism value of an automorphism")
    p.add_argument("--paut", required=True)
    p.add_argument("--framing", required=True)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("kernel-test", help="membership in the kernel")
    p.add_argument("--paut", required=True)
    p.add_argument("--framing", required=True)
    p.set_defaults(fn=cmd_kernel_test)

    p = sub.add_parser("lift", help="kernel element over a prescribed transvection")
    p.add_argument("--framing", required=True)
    p.add_argument("vector", help="primitive absolute class, e.g. 'x1+2y2'")
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("factor-sp", help="transvection factorization of the S block")
    p.add_argument("--paut", required=True)
    p.set_defaults(fn=cmd_factor_sp)

    p = sub.add_parser("act", help="act on a framing by a word")
    p.add_argument("--framing", required=True)
    p.add_argument("--word", required=True, help="e.g. 'Tx1 Ty2^-1 P(2;x1)'")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("match", help="move sequence carrying one framing to another")
    p.add_argument("framing_file")
    p.add_argument("target_file")
    p.set_defaults(fn=cmd_match)

    p = sub.add_parser("stratum", help="framing preset and structure report for a partition")
    p.add_argument("partition", help="comma-separated positive zero orders, e.g. '1,1'")
    p.set_defaults(fn=cmd_stratum)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SpecMismatch, ArfMismatch, QVectorMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FramedHomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

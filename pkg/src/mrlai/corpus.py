"""Registry of the published worked examples as executable cases.

Every numbered example and closed-form characterisation from the source
material is encoded with its expected values, provenance, integration
convention, tolerance and, where the printed value is internally
inconsistent, a dispute flag.  Disputed checks carry the independently
derived oracle value as the expected result and the printed value as an
annotation; they pass when the computation matches the oracle.

Four cases are disputed:

* ex2.3  -- the printed uniform ageing intensity b - t is dimensionally
            inconsistent (L is a ratio); the oracle gives 2(b-t)/(2b-t).
* ex2.6  -- the printed hazard-based ageing intensity equals the hazard
            itself; applying the definition to r(t) = 4t/(1+2t) gives
            4t^2/((1+2t)(2t - ln(1+2t))).
* ex3.3  -- the printed order-statistic L carries a factor-8100 constant
            error; the true values are the printed ones times 8100.
* ex3.5  -- the uniform order-statistic L is claimed non-monotone, but
            both the printed formula and the numeric pipeline give a
            strictly decreasing function.
"""

from __future__ import annotations

import fnmatch
import math
from dataclasses import dataclass, field

from . import orders
from .ageing import (
    Convention,
    hazard,
    hazard_ai,
    mrl,
    mrl_average,
    mrlai,
)
from .classify import (
    Grid,
    Kind,
    classify_hazard_ai,
    classify_mrl,
    classify_mrla,
    classify_mrlai,
)
from .distributions import (
    Convolution,
    Erlang,
    Exponential,
    MrlExponential,
    MrlLinear,
    MrlPiecewise,
    MrlReciprocalLinear,
    Mixture,
    OrderStatistic,
    Pareto,
    PieceExpAffine,
    PieceLinear,
    PieceSqrtAffine,
    Uniform,
    build,
    spec_to_dict,
)
from .errors import UnknownCase
from .quadrature import DEFAULT_CONFIG, QuadConfig

__all__ = [
    "Check",
    "CorpusCase",
    "CheckResult",
    "CaseReport",
    "CORPUS_VERSION",
    "all_cases",
    "list_cases",
    "run_case",
    "run_all",
    "corpus_to_dict",
    "report_to_dict",
]

CORPUS_VERSION = 1

E = math.e


@dataclass(frozen=True)
class Check:
    """One assertion inside a case.

    ``quantity`` selects the computation; ``target`` names the spec it
    applies to.  For verdict checks ``expected`` is the verdict string.
    Disputed checks keep the printed value in ``source_value``.
    """

    quantity: str
    expected: object
    at: float | None = None
    target: str = "X"
    tol: float = 1e-6
    provenance: str = ""
    disputed: bool = False
    source_value: object = None
    note: str = ""
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CorpusCase:
    id: str
    title: str
    convention: Convention
    specs: dict
    checks: tuple
    notes: str = ""


@dataclass(frozen=True)
class CheckResult:
    label: str
    computed: object
    expected: object
    delta: float | None
    status: str  # "match" | "disputed-as-expected" | "MISMATCH"
    provenance: str
    note: str = ""


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    title: str
    results: tuple

    @property
    def mismatches(self) -> int:
        return sum(1 for r in self.results if r.status == "MISMATCH")

    @property
    def disputed(self) -> int:
        return sum(1 for r in self.results if r.status == "disputed-as-expected")


# ---------------------------------------------------------------------------
# evaluation engine
# ---------------------------------------------------------------------------


def _grid_from_params(p):
    t_min, t_max, n, spacing = p
    return Grid(t_min, t_max, n, spacing)


_ORDER_FUNCS = {
    "mrlai": lambda X, Y, g, conv, cfg: orders.mrlai_order(X, Y, g, conv, cfg=cfg),
    "ratio": lambda X, Y, g, conv, cfg: orders.ratio_test(X, Y, g, conv, cfg=cfg),
    "lr": lambda X, Y, g, conv, cfg: orders.lr_order(X, Y, g),
    "icx": lambda X, Y, g, conv, cfg: orders.icx_order(X, Y, g, conv, cfg=cfg),
    "vrl": lambda X, Y, g, conv, cfg: orders.vrl_order(X, Y, g, conv, cfg=cfg),
    "mrl": lambda X, Y, g, conv, cfg: orders.mrl_order(X, Y, g, conv, cfg=cfg),
}

_CLASSIFIERS = {
    "mrl": lambda d, g, conv, cfg: classify_mrl(d, g, cfg=cfg),
    "mrla": lambda d, g, conv, cfg: classify_mrla(d, g, conv, cfg=cfg),
    "mrlai": lambda d, g, conv, cfg: classify_mrlai(d, g, conv, cfg=cfg),
    "hazard_ai": lambda d, g, conv, cfg: classify_hazard_ai(d, g),
}


def _evaluate_check(check: Check, dists: dict, conv: Convention, cfg: QuadConfig):
    q = check.quantity
    d = dists.get(check.target)
    t = check.at
    if q == "mrl":
        return f"mrl[{check.target}]({t:g})", mrl(d, t, cfg)
    if q == "mrlai":
        return f"L[{check.target}]({t:g})", mrlai(d, t, conv, cfg)
    if q == "mrl_average":
        return f"mrl_avg[{check.target}]({t:g})", mrl_average(d, t, conv, cfg)
    if q == "hazard":
        return f"hazard[{check.target}]({t:g})", hazard(d, t)
    if q == "hazard_ai":
        return f"hazard_ai[{check.target}]({t:g})", hazard_ai(d, t)
    if q == "survival":
        return f"survival[{check.target}]({t:g})", d.survival(t)
    if q == "density":
        return f"density[{check.target}]({t:g})", d.density(t)
    if q == "tail":
        if conv is Convention.FORMAL and d.formal is not None:
            return f"tail[{check.target}]({t:g})", d.formal.tail(t)
        return f"tail[{check.target}]({t:g})", d.tail(t, cfg)
    if q == "mean":
        return f"mean[{check.target}]", d.mean
    if q == "ratio":
        x, y = dists[check.params["x"]], dists[check.params["y"]]
        kind = check.params["kind"]
        if kind == "mrl_integral":
            num = mrl_average(x, t, conv, cfg) * t
            den = mrl_average(y, t, conv, cfg) * t
        elif kind == "double_tail":
            num = orders._double_tail(x, t, conv, cfg)
            den = orders._double_tail(y, t, conv, cfg)
        else:
            raise ValueError(f"unknown ratio kind {kind!r}")
        return f"ratio[{check.params['x']}/{check.params['y']}]({t:g})", num / den
    if q == "class_verdict":
        grid = _grid_from_params(check.params["grid"])
        verdict = _CLASSIFIERS[check.params["of"]](d, grid, conv, cfg)
        label = f"class_{check.params['of']}[{check.target}]"
        window = check.params.get("witness_mid_between")
        if window is not None and verdict.witness is not None:
            mid_t = verdict.witness[1][0]
            if not (window[0] <= mid_t <= window[1]):
                return label, f"{verdict.kind.value}(witness at {mid_t:g})"
        level = check.params.get("level")
        if level is not None and verdict.kind is Kind.CONSTANT:
            if abs(verdict.level - level) > 1e-6:
                return label, f"constant(level {verdict.level!r})"
        return label, verdict.kind.value
    if q == "order_verdict":
        name = check.params["order"]
        if name == "linear_mrl":
            verdict = orders.linear_mrl_order(*check.params["coeffs"])
            return f"order_linear_mrl{tuple(check.params['coeffs'])}", verdict.relation.value
        x, y = dists[check.params["x"]], dists[check.params["y"]]
        label = f"order_{name}[{check.params['x']}<={check.params['y']}]"
        grid = _grid_from_params(check.params["grid"]).points()
        verdict = _ORDER_FUNCS[name](x, y, grid, conv, cfg)
        return label, verdict.relation.value
    raise ValueError(f"unknown check quantity {check.quantity!r}")


def _check_status(check: Check, computed, tol_scale: float):
    expected = check.expected
    if isinstance(expected, str):
        ok = computed == expected
        delta = None
    else:
        tol = check.tol * tol_scale
        delta = abs(computed - expected)
        if abs(expected) > 1e-3:
            ok = delta <= tol * abs(expected)
        else:
            ok = delta <= tol
    if not ok:
        return None, "MISMATCH"
    return delta, "disputed-as-expected" if check.disputed else "match"


_DIST_CACHE = {}


def _case_dists(case):
    # Dist objects are immutable, so replays can share them (and their
    # internal tail caches) without affecting determinism
    hit = _DIST_CACHE.get(case.id)
    if hit is None:
        hit = {name: build(spec) for name, spec in case.specs.items()}
        _DIST_CACHE[case.id] = hit
    return hit


def run_case(
    case_id: str, tol_scale: float = 1.0, cfg: QuadConfig = DEFAULT_CONFIG
) -> CaseReport:
    """Execute one case and compare every check against its expectation."""
    case = _CASE_INDEX.get(case_id)
    if case is None:
        raise UnknownCase(f"no corpus case with id {case_id!r}")
    dists = _case_dists(case)
    results = []
    for check in case.checks:
        label, computed = _evaluate_check(check, dists, case.convention, cfg)
        delta, status = _check_status(check, computed, tol_scale)
        note = check.note
        if check.disputed and check.source_value is not None:
            note = (note + " " if note else "") + f"[printed value: {check.source_value!r}]"
        results.append(
            CheckResult(label, computed, check.expected, delta, status, check.provenance, note)
        )
    return CaseReport(case.id, case.title, tuple(results))


def list_cases(pattern: str | None = None):
    """Case ids in deterministic (sorted) order, optionally fnmatch-filtered."""
    ids = sorted(c.id for c in _CASES)
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatch(i, pattern)]
    return ids


def all_cases():
    return list(_CASES)


def run_all(pattern: str | None = None, tol_scale: float = 1.0, cfg=DEFAULT_CONFIG):
    return [run_case(i, tol_scale, cfg) for i in list_cases(pattern)]


def corpus_to_dict() -> dict:
    """Serialisable form of the whole corpus (specs in the JSON grammar)."""
    out = {"version": CORPUS_VERSION, "cases": []}
    for case in _CASES:
        out["cases"].append(
            {
                "id": case.id,
                "title": case.title,
                "convention": case.convention.value,
                "specs": {k: spec_to_dict(v) for k, v in sorted(case.specs.items())},
                "checks": [
                    {
                        "quantity": c.quantity,
                        "at": c.at,
                        "target": c.target,
                        "expected": c.expected,
                        "tol": c.tol,
                        "provenance": c.provenance,
                        "disputed": c.disputed,
                        "source_value": c.source_value,
                        "note": c.note,
                        "params": {
                            k: (list(v) if isinstance(v, tuple) else v)
                            for k, v in sorted(c.params.items())
                        },
                    }
                    for c in case.checks
                ],
                "notes": case.notes,
            }
        )
    return out


def report_to_dict(reports) -> dict:
    return {
        "version": CORPUS_VERSION,
        "cases": [
            {
                "id": r.case_id,
                "title": r.title,
                "mismatches": r.mismatches,
                "checks": [
                    {
                        "label": c.label,
                        "computed": c.computed,
                        "expected": c.expected,
                        "delta": c.delta,
                        "status": c.status,
                        "provenance": c.provenance,
                        "note": c.note,
                    }
                    for c in r.results
                ],
            }
            for r in reports
        ],
    }


# ---------------------------------------------------------------------------
# the cases
# ---------------------------------------------------------------------------

# Derived expected values are frozen from closed-form oracles worked out by
# hand before the build (stated in each note) and cross-checked against an
# independent QUADPACK integration; printed source values keep their quoted
# digits.


def _ex21_pieces():
    # mu = 1 - 0.4 e^{t-1} on [0,1), 0.6 t on [1,2), 1.2 afterwards
    return MrlPiecewise(
        (1.0, 2.0),
        (PieceExpAffine(1.0, -0.4 / E, 1.0), PieceLinear(0.0, 0.6), PieceLinear(1.2, 0.0)),
    )


def _ex21_L(t):
    # derived piecewise closed form; the middle and last pieces agree with
    # the printed ones, the first printed piece is missing a factor of t
    if t < 1.0:
        return t * (5 * E - 2 * math.exp(t)) / (5 * E * t - 2 * math.exp(t) + 2)
    if t < 2.0:
        return 6 * E * t * t / (3 * E * (t * t + 1) + 4)
    return 12 * E * t / (3 * E * (4 * t - 3) + 4)


def _ex25_L(t):
    # mu = 0.5 then t - 0.5: L = 1 on [0,1], t(2t-1)/(t^2-t+1) afterwards
    return 1.0 if t <= 1.0 else t * (2 * t - 1) / (t * t - t + 1)


def _ex26_ai(t):
    # definition applied to r(t) = 4t/(1+2t); int_0^t r = 2t - ln(1+2t)
    return 4 * t * t / ((1 + 2 * t) * (2 * t - math.log1p(2 * t)))


def _ex33_L(t):
    # derived: 18 t (1+t)(5t^2+10t+3) / ((3t^2+6t+1)(15t(t+2) + 4 ln(3t^2+6t+1)))
    return (
        18 * t * (1 + t) * (5 * t * t + 10 * t + 3)
        / ((3 * t * t + 6 * t + 1) * (15 * t * (t + 2) + 4 * math.log(3 * t * t + 6 * t + 1)))
    )


def _ex35_L(t):
    # derived for the 2nd of 3 uniforms on [0,1]:
    # 8t(1-t^2) / ((2t+1)(2t - 2t^2 + 3 ln(2t+1)))
    return 8 * t * (1 - t * t) / ((2 * t + 1) * (2 * t - 2 * t * t + 3 * math.log1p(2 * t)))


def _unif_L(t, b):
    # true uniform-on-[0,b] ageing intensity 2(b-t)/(2b-t)
    return 2 * (b - t) / (2 * b - t)


_CASES = (
    CorpusCase(
        id="ex2.1",
        title="piecewise MRL whose intensity dips below 1 while the MRL is non-monotone",
        convention=Convention.ZERO,
        specs={"X": _ex21_pieces()},
        checks=(
            Check(
                "class_verdict",
                "non_monotone",
                target="X",
                provenance="worked example 2.1",
                params={"of": "mrl", "grid": (0.05, 6.0, 160, "linear")},
            ),
            Check(
                "mrlai",
                _ex21_L(0.5),
                at=0.5,
                tol=1e-8,
                provenance="worked example 2.1 (derived piecewise closed form)",
                note="printed first-piece formula lacks a factor of t; derived form used",
            ),
            Check(
                "mrlai",
                _ex21_L(1.5),
                at=1.5,
                tol=1e-8,
                provenance="worked example 2.1 (printed middle piece, verified)",
            ),
            Check(
                "mrlai",
                _ex21_L(3.0),
                at=3.0,
                tol=1e-8,
                provenance="worked example 2.1 (printed last piece, verified)",
            ),
        ),
        notes="The printed claim that L stays below 1 holds only up to "
        "t ~ 1.22; the asserted content is the non-monotone MRL.",
    ),
    CorpusCase(
        id="ex2.2",
        title="Erlang(2, 2): decreasing MRL with non-monotone intensity",
        convention=Convention.ZERO,
        specs={"X": Erlang(2, 2.0)},
        checks=(
            Check("mrl", 2.0 / 3.0, at=1.0, tol=1e-10, provenance="worked example 2.2"),
            Check(
                "density",
                4 * math.exp(-2),
                at=1.0,
                tol=1e-12,
                provenance="worked example 2.2, f(t) = 4 t e^{-2t}",
            ),
            Check("mrlai", 0.885924163724462, at=0.5, tol=1e-9, provenance="worked example 2.2"),
            Check("mrlai", 0.855700709220817, at=2.0, tol=1e-9, provenance="worked example 2.2"),
            Check("mrlai", 0.875905814337691, at=4.5, tol=1e-9, provenance="worked example 2.2"),
            Check(
                "class_verdict",
                "decreasing",
                provenance="worked example 2.2",
                params={"of": "mrl", "grid": (0.1, 10.0, 120, "linear")},
            ),
            Check(
                "class_verdict",
                "non_monotone",
                provenance="worked example 2.2",
                params={"of": "mrlai", "grid": (0.1, 10.0, 120, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex2.3",
        title="uniform lifetime: intensity decreases, printed formula is dimensionally off",
        convention=Convention.ZERO,
        specs={"X": Uniform(0.0, 2.0)},
        checks=(
            Check(
                "mrlai",
                _unif_L(0.5, 2.0),
                at=0.5,
                tol=1e-9,
                disputed=True,
                source_value=1.5,
                provenance="worked example 2.3",
                note="printed L = b - t is not a ratio; oracle gives 2(b-t)/(2b-t)",
            ),
            Check(
                "mrlai",
                _unif_L(1.0, 2.0),
                at=1.0,
                tol=1e-9,
                disputed=True,
                source_value=1.0,
                provenance="worked example 2.3",
            ),
            Check(
                "class_verdict",
                "decreasing",
                provenance="worked example 2.3 (qualitative claim, confirmed)",
                params={"of": "mrlai", "grid": (0.02, 1.98, 128, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex2.4",
        title="gamma shape 3: decreasing MRL, non-monotone intensity",
        convention=Convention.ZERO,
        specs={"X": Erlang(3, 1.0)},
        checks=(
            Check(
                "survival",
                2.5 * math.exp(-1),
                at=1.0,
                tol=1e-12,
                provenance="worked example 2.4, (t^2+2t+2) e^{-t} / 2",
            ),
            Check("mrlai", 0.7767024, at=2.5, tol=1e-5, provenance="worked example 2.4"),
            Check("mrlai", 0.7525321, at=5.0, tol=1e-5, provenance="worked example 2.4"),
            Check("mrlai", 0.7720608, at=10.0, tol=1e-5, provenance="worked example 2.4"),
            Check(
                "class_verdict",
                "non_monotone",
                provenance="worked example 2.4",
                params={"of": "mrlai", "grid": (0.1, 12.0, 120, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex2.5",
        title="flat-then-linear MRL: intensity constant, then rises, then falls",
        convention=Convention.ZERO,
        specs={
            "X": MrlPiecewise((1.0,), (PieceLinear(0.5, 0.0), PieceLinear(-0.5, 1.0)))
        },
        checks=(
            Check(
                "mrlai",
                1.0,
                at=0.5,
                tol=1e-10,
                provenance="worked example 2.5 (constant piece)",
            ),
            Check(
                "mrlai",
                _ex25_L(1.5),
                at=1.5,
                tol=1e-9,
                provenance="worked example 2.5 (derived: t(2t-1)/(t^2-t+1))",
                note="printed (2t-1)/(t-1) is missing a factor t/(...); derived form used",
            ),
            Check(
                "mrlai",
                _ex25_L(10.0),
                at=10.0,
                tol=1e-9,
                provenance="worked example 2.5 (derived)",
            ),
            Check(
                "class_verdict",
                "non_monotone",
                provenance="worked example 2.5 (claim: non-monotone, confirmed)",
                params={"of": "mrlai", "grid": (0.05, 12.0, 160, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex2.6",
        title="hazard-based intensity of Erlang(2, 2) versus the printed formula",
        convention=Convention.ZERO,
        specs={"X": Erlang(2, 2.0)},
        checks=(
            Check(
                "hazard",
                4.0 / 3.0,
                at=1.0,
                tol=1e-10,
                provenance="worked example 2.6, r(t) = 4t/(1+2t)",
            ),
            Check(
                "hazard_ai",
                _ex26_ai(1.0),
                at=1.0,
                tol=1e-9,
                disputed=True,
                source_value=4.0 / 3.0,
                provenance="worked example 2.6",
                note="printed ageing intensity repeats r(t); the definition gives "
                "4t^2/((1+2t)(2t-ln(1+2t)))",
            ),
            Check(
                "class_verdict",
                "decreasing",
                provenance="worked example 2.6 (qualitative claim, confirmed for the oracle)",
                params={"of": "hazard_ai", "grid": (0.05, 10.0, 120, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex3.1",
        title="mixture of two increasing-intensity linear-MRL lifetimes is non-monotone",
        convention=Convention.ZERO,
        specs={
            "M": Mixture((0.2, 0.8), (MrlLinear(1.0, 8.0), MrlLinear(1.0, 0.1))),
            "X1": MrlLinear(1.0, 8.0),
            "X2": MrlLinear(1.0, 0.1),
        },
        checks=(
            Check(
                "survival",
                (1.0 / 9.0) ** (9.0 / 8.0),
                at=1.0,
                target="X1",
                tol=1e-12,
                provenance="worked example 3.1, (1/(8t+1))^{9/8}",
            ),
            Check("mrlai", 3.18404390537899, at=6.0, target="M", tol=1e-6, provenance="worked example 3.1"),
            Check("mrlai", 3.44726388676388, at=8.0, target="M", tol=1e-6, provenance="worked example 3.1"),
            Check("mrlai", 2.37496470241032, at=20.0, target="M", tol=1e-6, provenance="worked example 3.1"),
            Check(
                "class_verdict",
                "increasing",
                target="X2",
                provenance="worked example 3.1 with theorem 2.9",
                params={"of": "mrlai", "grid": (0.1, 40.0, 120, "linear")},
            ),
            Check(
                "class_verdict",
                "non_monotone",
                target="M",
                provenance="worked example 3.1",
                params={"of": "mrlai", "grid": (0.5, 40.0, 140, "linear")},
            ),
            Check(
                "order_verdict",
                "holds",
                provenance="theorem 4.4 on the mixture components",
                params={"order": "linear_mrl", "coeffs": (1.0, 0.1, 1.0, 8.0)},
                note="determinant 1*8 - 0.1*1 >= 0",
            ),
        ),
    ),
    CorpusCase(
        id="ex3.2",
        title="sum of two unit exponentials: constant intensities convolve to non-monotone",
        convention=Convention.ZERO,
        specs={
            "C": Convolution((Exponential(1.0), Exponential(1.0))),
            "X1": Exponential(1.0),
        },
        checks=(
            Check(
                "survival",
                2 * math.exp(-1),
                at=1.0,
                target="C",
                tol=1e-12,
                provenance="worked example 3.2, (t+1) e^{-t}",
            ),
            Check("mrl", 4.0 / 3.0, at=2.0, target="C", tol=1e-10, provenance="worked example 3.2"),
            Check("mrlai", 1.0, at=1.0, target="X1", tol=1e-10, provenance="worked example 3.2"),
            Check("mrlai", 0.9590531, at=0.2, target="C", tol=1e-5, provenance="worked example 3.2"),
            Check("mrlai", 0.8549358, at=3.0, target="C", tol=1e-5, provenance="worked example 3.2"),
            Check("mrlai", 0.8799147, at=10.0, target="C", tol=1e-5, provenance="worked example 3.2"),
            Check(
                "class_verdict",
                "non_monotone",
                target="C",
                provenance="worked example 3.2",
                params={"of": "mrlai", "grid": (0.05, 20.0, 140, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex3.3",
        title="2nd order statistic of 3 linear-MRL lifetimes: printed constant is off by 8100",
        convention=Convention.ZERO,
        specs={
            "OS": OrderStatistic(MrlLinear(1.0, 1.0), 2, 3),
            "X": MrlLinear(1.0, 1.0),
        },
        checks=(
            Check(
                "survival",
                (3 * 0.25 + 3 + 1) / 1.5**6,
                at=0.5,
                target="OS",
                tol=1e-8,
                provenance="worked example 3.3, (3t^2+6t+1)/(t+1)^6",
            ),
            Check(
                "density",
                12 * 0.5 * 2.5 / 1.5**7,
                at=0.5,
                target="OS",
                tol=1e-8,
                provenance="worked example 3.3, 12t(t+2)/(t+1)^7",
            ),
            Check(
                "mrl",
                1.5 * (5 * 0.25 + 5 + 3) / (5 * (3 * 0.25 + 3 + 1)),
                at=0.5,
                target="OS",
                tol=1e-8,
                provenance="worked example 3.3, (t+1)(5t^2+10t+3)/(5(3t^2+6t+1))",
            ),
            Check(
                "class_verdict",
                "increasing",
                target="X",
                provenance="worked example 3.3 (base lifetime is increasing in intensity)",
                params={"of": "mrlai", "grid": (0.1, 20.0, 100, "linear")},
            ),
            Check(
                "mrlai",
                _ex33_L(0.11),
                at=0.11,
                target="OS",
                tol=1e-4,
                disputed=True,
                source_value=0.0001189386,
                provenance="worked example 3.3",
                note="printed values are the true ones divided by 8100",
            ),
            Check(
                "mrlai",
                _ex33_L(0.12),
                at=0.12,
                target="OS",
                tol=1e-4,
                disputed=True,
                source_value=0.0001189296,
                provenance="worked example 3.3",
            ),
            Check(
                "mrlai",
                _ex33_L(0.13),
                at=0.13,
                target="OS",
                tol=1e-4,
                disputed=True,
                source_value=0.0001189584,
                provenance="worked example 3.3",
            ),
            Check(
                "class_verdict",
                "non_monotone",
                target="OS",
                provenance="worked example 3.3",
                params={
                    "of": "mrlai",
                    "grid": (0.01, 1.0, 100, "linear"),
                    "witness_mid_between": (0.09, 0.16),
                },
            ),
        ),
    ),
    CorpusCase(
        id="ex3.4",
        title="mixture of two decreasing-intensity reciprocal-linear MRL lifetimes",
        convention=Convention.ZERO,
        specs={
            "M": Mixture(
                (0.2, 0.8), (MrlReciprocalLinear(1.0, 1.0), MrlReciprocalLinear(1.0, 2.0))
            ),
            "X1": MrlReciprocalLinear(1.0, 1.0),
            "X2": MrlReciprocalLinear(1.0, 2.0),
        },
        checks=(
            Check(
                "mrl",
                (E + 4 * math.sqrt(E)) / (2 * E + 12 * math.sqrt(E)),
                at=1.0,
                target="M",
                tol=1e-9,
                provenance="worked example 3.4, printed mu formula at t = 1",
            ),
            Check("mrlai", 0.8129797, at=0.3, target="M", tol=1e-5, provenance="worked example 3.4"),
            Check("mrlai", 0.6127436, at=2.0, target="M", tol=1e-5, provenance="worked example 3.4"),
            Check("mrlai", 0.6381471, at=3.0, target="M", tol=1e-5, provenance="worked example 3.4"),
            Check(
                "class_verdict",
                "decreasing",
                target="X2",
                provenance="worked example 3.4 (components decreasing in intensity)",
                params={"of": "mrlai", "grid": (0.05, 6.0, 120, "linear")},
            ),
            Check(
                "class_verdict",
                "non_monotone",
                target="M",
                provenance="worked example 3.4",
                params={"of": "mrlai", "grid": (0.05, 6.0, 140, "linear")},
            ),
        ),
        notes="The second component's MRL has slope below -1 near 0, so its "
        "reconstructed survival is a quasi-survival; the mixture is "
        "evaluated exactly as the formulas dictate.",
    ),
    CorpusCase(
        id="ex3.5",
        title="2nd order statistic of 3 uniforms: claimed non-monotone, actually decreasing",
        convention=Convention.ZERO,
        specs={"OS": OrderStatistic(Uniform(0.0, 1.0), 2, 3)},
        checks=(
            Check(
                "mrl",
                0.1875,
                at=0.5,
                target="OS",
                tol=1e-9,
                provenance="worked example 3.5, (b-t)(t+b-2a)/(2(2t+b-3a))",
            ),
            Check(
                "mrlai",
                _ex35_L(0.25),
                at=0.25,
                target="OS",
                tol=1e-7,
                provenance="worked example 3.5 (printed h/k at a=0, b=1, verified)",
            ),
            Check(
                "mrlai",
                _ex35_L(0.5),
                at=0.5,
                target="OS",
                tol=1e-7,
                provenance="worked example 3.5 (printed h/k at a=0, b=1, verified)",
            ),
            Check(
                "mrlai",
                _ex35_L(0.75),
                at=0.75,
                target="OS",
                tol=1e-7,
                provenance="worked example 3.5 (printed h/k at a=0, b=1, verified)",
            ),
            Check(
                "class_verdict",
                "decreasing",
                target="OS",
                disputed=True,
                source_value="non_monotone",
                provenance="worked example 3.5",
                note="the printed formula itself is strictly decreasing on (0, 1); "
                "the non-monotonicity claim does not verify",
                params={"of": "mrlai", "grid": (0.02, 0.98, 120, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex4.1",
        title="intensity order does not imply increasing-convex order",
        convention=Convention.FORMAL,
        specs={"X": Exponential(0.5), "Y": Pareto(2.0, 1.0)},
        checks=(
            Check("mrlai", 1.0, at=2.0, target="X", tol=1e-10, provenance="worked example 4.1"),
            Check("mrlai", 2.0, at=2.0, target="Y", tol=1e-10, provenance="worked example 4.1"),
            Check(
                "tail",
                0.9447331,
                at=1.5,
                target="X",
                tol=1e-5,
                provenance="worked example 4.1, g(1.5) = 2 e^{-0.75}",
            ),
            Check(
                "tail",
                2.0 / 3.0,
                at=1.5,
                target="Y",
                tol=1e-5,
                provenance="worked example 4.1, h(1.5) = 1/t",
            ),
            Check(
                "order_verdict",
                "holds",
                provenance="worked example 4.1",
                params={"order": "mrlai", "x": "X", "y": "Y", "grid": (0.1, 30.0, 100, "linear")},
            ),
            Check(
                "order_verdict",
                "fails",
                provenance="worked example 4.1",
                params={"order": "icx", "x": "X", "y": "Y", "grid": (0.1, 30.0, 100, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex4.2",
        title="intensity order does not imply variance-residual-life order",
        convention=Convention.FORMAL,
        specs={"X": Exponential(2.0), "Y": Pareto(3.0, 1.0)},
        checks=(
            Check(
                "ratio",
                0.067032,
                at=0.2,
                tol=1e-5,
                provenance="worked example 4.2, b(t) = t e^{-2t} / 2",
                params={"kind": "double_tail", "x": "X", "y": "Y"},
            ),
            Check(
                "ratio",
                0.09035826,
                at=0.6,
                tol=1e-5,
                provenance="worked example 4.2",
                params={"kind": "double_tail", "x": "X", "y": "Y"},
            ),
            Check(
                "ratio",
                0.06766764,
                at=1.0,
                tol=1e-5,
                provenance="worked example 4.2",
                params={"kind": "double_tail", "x": "X", "y": "Y"},
            ),
            Check(
                "order_verdict",
                "holds",
                provenance="worked example 4.2",
                params={"order": "mrlai", "x": "X", "y": "Y", "grid": (0.1, 20.0, 100, "linear")},
            ),
            Check(
                "order_verdict",
                "fails",
                provenance="worked example 4.2",
                params={"order": "vrl", "x": "X", "y": "Y", "grid": (0.05, 5.0, 64, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex4.3",
        title="likelihood-ratio order does not imply the intensity order",
        convention=Convention.ZERO,
        specs={"X": Erlang(2, 3.0), "Y": Erlang(2, 2.0)},
        checks=(
            Check(
                "ratio",
                0.6537420,
                at=0.1,
                tol=1e-5,
                provenance="worked example 4.3, g(t) of the running MRL integrals",
                params={"kind": "mrl_integral", "x": "X", "y": "Y"},
            ),
            Check(
                "ratio",
                0.6287006,
                at=1.5,
                tol=1e-5,
                provenance="worked example 4.3",
                params={"kind": "mrl_integral", "x": "X", "y": "Y"},
            ),
            Check(
                "ratio",
                0.6371185,
                at=5.0,
                tol=1e-5,
                provenance="worked example 4.3",
                params={"kind": "mrl_integral", "x": "X", "y": "Y"},
            ),
            Check(
                "order_verdict",
                "holds",
                provenance="worked example 4.3 (density ratio decreases)",
                params={"order": "lr", "x": "X", "y": "Y", "grid": (0.05, 20.0, 100, "linear")},
            ),
            Check(
                "order_verdict",
                "fails",
                provenance="worked example 4.3",
                params={"order": "mrlai", "x": "X", "y": "Y", "grid": (0.05, 8.0, 100, "linear")},
            ),
            Check(
                "order_verdict",
                "fails",
                provenance="worked example 4.3 via the ratio criterion",
                params={"order": "ratio", "x": "X", "y": "Y", "grid": (0.05, 8.0, 100, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex4.4",
        title="the order can hold although neither side is decreasing in MRL average",
        convention=Convention.FORMAL,
        specs={
            "X": MrlPiecewise((), (PieceSqrtAffine(2.0, 2.0),)),
            "Y": Pareto(2.0, 1.0),
        },
        checks=(
            Check(
                "mrl_average",
                10.0 / 3.0,
                at=1.0,
                target="X",
                tol=1e-9,
                provenance="worked example 4.4, (4 sqrt(t) + 6)/3",
            ),
            Check(
                "mrlai",
                1.2,
                at=1.0,
                target="X",
                tol=1e-9,
                provenance="worked example 4.4, 3(sqrt(t)+1)/(2 sqrt(t)+3)",
            ),
            Check("mrlai", 2.0, at=3.0, target="Y", tol=1e-10, provenance="worked example 4.4"),
            Check(
                "class_verdict",
                "increasing",
                target="X",
                provenance="worked example 4.4 (X increasing in MRL average)",
                params={"of": "mrla", "grid": (0.1, 50.0, 100, "linear")},
            ),
            Check(
                "class_verdict",
                "increasing",
                target="Y",
                provenance="worked example 4.4 (Y increasing in MRL average)",
                params={"of": "mrla", "grid": (0.1, 50.0, 100, "linear")},
            ),
            Check(
                "order_verdict",
                "holds",
                provenance="worked example 4.4",
                params={"order": "mrlai", "x": "X", "y": "Y", "grid": (0.1, 50.0, 120, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="ex4.5",
        title="the order is not closed under the formation of parallel systems",
        convention=Convention.ZERO,
        specs={
            "X1": Erlang(2, 1.0),
            "Y1": Exponential(2.0),
            "XP": OrderStatistic(Erlang(2, 1.0), 2, 2),
            "YP": OrderStatistic(Exponential(2.0), 2, 2),
        },
        checks=(
            Check(
                "order_verdict",
                "holds",
                provenance="worked example 4.5 (component-wise order)",
                params={"order": "mrlai", "x": "X1", "y": "Y1", "grid": (0.05, 20.0, 80, "linear")},
            ),
            Check("mrlai", 0.9981785, at=0.01, target="XP", tol=1e-5, provenance="worked example 4.5"),
            Check("mrlai", 0.9935494, at=0.01, target="YP", tol=1e-5, provenance="worked example 4.5"),
            Check(
                "order_verdict",
                "fails",
                provenance="worked example 4.5 (systems of two)",
                params={"order": "mrlai", "x": "XP", "y": "YP", "grid": (0.005, 30.0, 90, "log")},
            ),
        ),
    ),
    CorpusCase(
        id="thm2.5",
        title="linear MRL: survival and intensity closed forms",
        convention=Convention.ZERO,
        specs={"X": MrlLinear(1.0, 8.0)},
        checks=(
            Check(
                "survival",
                (1.0 / 17.0) ** (9.0 / 8.0),
                at=2.0,
                tol=1e-12,
                provenance="theorem 2.5, (a/(a+bt))^{1/b+1}",
            ),
            Check("mrl_average", 5.0, at=1.0, tol=1e-10, provenance="theorem 2.5, a + bt/2"),
            Check("mrlai", 1.8, at=1.0, tol=1e-10, provenance="theorem 2.5, (a+bt)/(a+bt/2)"),
            Check(
                "class_verdict",
                "increasing",
                provenance="theorem 2.9",
                params={"of": "mrlai", "grid": (0.05, 50.0, 128, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="thm2.6a",
        title="reciprocal-linear MRL: survival and intensity closed forms",
        convention=Convention.ZERO,
        specs={"X": MrlReciprocalLinear(1.0, 1.0)},
        checks=(
            Check(
                "survival",
                2 * math.exp(-1.5),
                at=1.0,
                tol=1e-12,
                provenance="theorem 2.6(a), ((a+bt)/a) exp(-(at+bt^2/2))",
            ),
            Check(
                "mrlai",
                1.0 / (2 * math.log(2.0)),
                at=1.0,
                tol=1e-10,
                provenance="theorem 2.6(a), bt/((a+bt) ln((a+bt)/a))",
            ),
            Check(
                "class_verdict",
                "decreasing",
                provenance="theorem 2.6(a) (stated decreasing)",
                params={"of": "mrlai", "grid": (0.05, 10.0, 100, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="thm2.6b",
        title="exponential MRL: survival and intensity closed forms",
        convention=Convention.ZERO,
        specs={"X": MrlExponential(0.0, 1.0)},
        checks=(
            Check(
                "survival",
                math.exp(math.expm1(-1.0) - 1.0),
                at=1.0,
                tol=1e-12,
                provenance="theorem 2.6(b), exp(e^{-a}(e^{-bt}-1)/b - bt)",
            ),
            Check(
                "mrlai",
                E / (E - 1.0),
                at=1.0,
                tol=1e-10,
                provenance="theorem 2.6(b), bt e^{a+bt}/(e^a (e^{bt}-1))",
            ),
            Check(
                "class_verdict",
                "increasing",
                provenance="theorem 2.6(b) with b > 0 (derived)",
                params={"of": "mrlai", "grid": (0.05, 6.0, 100, "linear")},
            ),
        ),
    ),
    CorpusCase(
        id="thm2.7",
        title="unit intensity characterises the exponential lifetime",
        convention=Convention.ZERO,
        specs={"X": Exponential(1.5)},
        checks=(
            Check("mrl", 1.0 / 1.5, at=0.7, tol=1e-12, provenance="theorem 2.7, mu = 1/lambda"),
            Check("mrlai", 1.0, at=0.25, tol=1e-10, provenance="theorem 2.7"),
            Check("mrlai", 1.0, at=4.0, tol=1e-10, provenance="theorem 2.7"),
            Check(
                "class_verdict",
                "constant",
                provenance="theorem 2.7",
                params={"of": "mrlai", "grid": (0.05, 20.0, 128, "linear"), "level": 1.0},
            ),
        ),
    ),
    CorpusCase(
        id="thm2.8",
        title="intensity two characterises the Pareto lifetime (formal convention)",
        convention=Convention.FORMAL,
        specs={"X": Pareto(3.0, 1.0), "P2": Pareto(2.0, 1.0)},
        checks=(
            Check(
                "survival",
                0.25,
                at=2.0,
                target="P2",
                tol=1e-12,
                provenance="theorem 2.8, (b/t)^a",
            ),
            Check("mean", 2.0, target="P2", tol=1e-10, provenance="derived, ab/(a-1)"),
            Check("mrlai", 2.0, at=2.0, target="X", tol=1e-10, provenance="theorem 2.8"),
            Check("mrlai", 2.0, at=1.5, target="P2", tol=1e-10, provenance="theorem 2.8"),
            Check(
                "class_verdict",
                "constant",
                target="X",
                provenance="theorem 2.8",
                params={"of": "mrlai", "grid": (1.0, 40.0, 128, "linear"), "level": 2.0},
            ),
        ),
    ),
)

_CASE_INDEX = {c.id: c for c in _CASES}

"""Verification sweeps over the exhaustive small-space corpus.

Each suite walks a deterministic corpus, counts every individual check, and
collects structured witnesses for failures (the first witness is always the
smallest failing instance in sweep order, which makes regressions pinnable).
A RunReport serializes to canonical JSON; identical inputs give byte-identical
reports except for the single wall_time_s field.

The fault-injection hook used by the harness self-test removes the full set
from the first corpus topology and routes the mangled family through
validation: the resulting axiom violation must surface as a witness and a
non-zero exit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Sequence

from .bitsets import complement, iter_bits, meets, points_of
from .choice import (
    check_filterwise_refinement,
    check_locally_compact_bound,
    check_lower_convergence_lemma,
    classify_property_A,
    limit_set_P,
)
from .errors import NotATopology, TopolabError
from .filters import enumerate_ultrafilters, subsets_carrier
from .finality import check_finality_discrete_square, stone_cech_finite_discrete
from .funcspaces import compact_open, continuous_maps, mu_embedding_report
from .hyperspaces import compacts, vietoris
from .spaces import FiniteSpace, enumerate_topologies, make_space

SUITE_NAMES = (
    "vietoris-inclusion",
    "embedding",
    "finality-square",
    "stone-cech",
    "choice-lemma",
    "property-a",
)

N4_SPACE_STRIDE = 30  # deterministic n=4 sample: corpus indices 0, 30, 60, ...
N4_FILTER_PAIR_CAP = 100


@dataclass
class RunReport:
    suite: str
    parameters: dict
    checked: int = 0
    passed: int = 0
    failed: int = 0
    witnesses: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def record(self, ok: bool, witness: dict | None = None) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if witness is not None:
                self.witnesses.append(witness)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "totals": {
                "checked": self.checked,
                "passed": self.passed,
                "failed": self.failed,
            },
            "witnesses": self.witnesses,
            "wall_time_s": self.wall_time_s,
        }


def corpus(max_n: int) -> list[tuple[int, int, FiniteSpace]]:
    """(n, index within size, space) for all topologies on 1..max_n points."""
    out = []
    for n in range(1, max_n + 1):
        for i, space in enumerate(enumerate_topologies(n)):
            out.append((n, i, space))
    return out


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items)


# ---------------------------------------------------------------- inclusion

def _inclusion_pair(args) -> tuple[int, list]:
    (nx, xi, x), (ny, yi, y) = args
    checked = 0
    witnesses: list = []
    fns = continuous_maps(x, y)
    nf = len(fns)
    fsp = compact_open(x, y)
    mins = fsp.min_nbhds
    ky = compacts(y)
    kindex = {k: i for i, k in enumerate(ky)}
    hyper = vietoris(y, ky)
    imgs = [[f.image_of(m) for m in range(1 << x.n)] for f in fns]

    def tag(kind: str, **extra) -> dict:
        base = {"x": (nx, xi), "y": (ny, yi), "kind": kind}
        base.update(extra)
        return base

    def preimage(vmask: int, proj: Sequence[int]) -> int:
        out = 0
        for fi in range(nf):
            if vmask >> proj[fi] & 1:
                out |= 1 << fi
        return out

    def subbasic(amask: int, w: int) -> int:
        out = 0
        for fi in range(nf):
            if imgs[fi][amask] & ~w == 0:
                out |= 1 << fi
        return out

    def open_in_co(mask: int) -> bool:
        return all(mins[fi] & ~mask == 0 for fi in iter_bits(mask))

    for a in compacts(x):
        proj = [kindex[imgs[fi][a]] for fi in range(nf)]
        for fmask in y.closeds:
            missm = 0
            for ki, k in enumerate(ky):
                if not meets(k, fmask):
                    missm |= 1 << ki
            lhs = preimage(missm, proj)
            rhs = subbasic(a, complement(fmask, y.n))
            checked += 2
            if lhs != rhs:
                witnesses.append(tag("miss-identity", a=points_of(a), closed=points_of(fmask)))
            if not open_in_co(lhs):
                witnesses.append(tag("miss-preimage-not-open", a=points_of(a), closed=points_of(fmask)))
        for o in y.opens:
            hitm = 0
            for ki, k in enumerate(ky):
                if meets(k, o):
                    hitm |= 1 << ki
            lhs = preimage(hitm, proj)
            rhs = 0
            for pt in iter_bits(a):
                rhs |= subbasic(1 << pt, o)
            checked += 2
            if lhs != rhs:
                witnesses.append(tag("hit-identity", a=points_of(a), open=points_of(o)))
            if not open_in_co(lhs):
                witnesses.append(tag("hit-preimage-not-open", a=points_of(a), open=points_of(o)))
        for ovm in hyper.topology.opens:
            checked += 1
            if not open_in_co(preimage(ovm, proj)):
                witnesses.append(
                    tag("vietoris-open-preimage-not-open", a=points_of(a), hyper_open=list(iter_bits(ovm)))
                )
    return checked, witnesses


def suite_vietoris_inclusion(max_n: int = 3, jobs: int = 1) -> RunReport:
    report = RunReport("vietoris-inclusion", {"max_n": max_n})
    spaces = corpus(max_n)
    pairs = [(sx, sy) for sx in spaces for sy in spaces]
    for checked, witnesses in _pmap(_inclusion_pair, pairs, jobs):
        report.checked += checked
        report.passed += checked - len(witnesses)
        report.failed += len(witnesses)
        report.witnesses.extend(witnesses)
    return report


# ---------------------------------------------------------------- embedding

def _embedding_pair(args) -> tuple[int, list]:
    (nx, xi, x), (ny, yi, y) = args
    fam = tuple(range(1, 1 << x.n))
    rep = mu_embedding_report(x, y, continuous_maps(x, y), fam)
    ok = rep.continuous and rep.open_onto_image and rep.injective
    if ok:
        return 3, []
    detail = {
        "x": (nx, xi),
        "y": (ny, yi),
        "kind": "embedding",
        "continuous": rep.continuous,
        "open_onto_image": rep.open_onto_image,
        "injective": rep.injective,
    }
    bad = 3 - sum((rep.continuous, rep.open_onto_image, rep.injective))
    return 3, [detail] * bad


def suite_embedding(max_n: int = 3, jobs: int = 1) -> RunReport:
    report = RunReport("embedding", {"max_n": max_n})
    spaces = corpus(max_n)
    pairs = [(sx, sy) for sx in spaces for sy in spaces]
    for checked, witnesses in _pmap(_embedding_pair, pairs, jobs):
        report.checked += checked
        report.passed += checked - len(witnesses)
        report.failed += len(witnesses)
        report.witnesses.extend(witnesses)
    return report


# ------------------------------------------------------------ finality square

def suite_finality_square(max_y: int = 3) -> RunReport:
    report = RunReport("finality-square", {"max_y": max_y})
    for y_n in range(1, min(max_y, 3) + 1):
        rep = check_finality_discrete_square(y_n)
        witness = None
        if not rep.equal:
            extra = sorted(set(rep.computed.opens) - set(rep.expected.opens))
            missing = sorted(set(rep.expected.opens) - set(rep.computed.opens))
            witness = {
                "kind": "finality-square",
                "y_n": y_n,
                "final_only_opens": extra[:4],
                "vietoris_only_opens": missing[:4],
            }
        report.record(rep.equal, witness)
        if y_n >= 2:
            report.record(
                rep.expected_is_discrete,
                None if rep.expected_is_discrete else {"kind": "vietoris-not-discrete", "y_n": y_n},
            )
    return report


# ----------------------------------------------------------------- stone-cech

def suite_stone_cech(max_d: int = 4) -> RunReport:
    report = RunReport("stone-cech", {"max_d": max_d})
    for d_n in range(1, max_d + 1):
        rep = stone_cech_finite_discrete(d_n)
        for name, ok in (
            ("w-bijective", rep.w_bijective),
            ("closures-clopen", rep.closures_clopen),
            ("base-clopen", rep.base_is_clopen),
            ("clopen-closure-form", rep.clopen_closure_form),
        ):
            report.record(ok, None if ok else {"kind": name, "d_n": d_n})
    return report


# --------------------------------------------------------------- choice lemma

def _choice_space(args) -> tuple[int, list]:
    n, si, space, pair_cap = args
    checked = 0
    witnesses: list = []
    carrier = subsets_carrier(n)
    for ui, phi in enumerate(enumerate_ultrafilters(carrier)):
        vacuous = limit_set_P(space, phi) == 0
        ok = check_lower_convergence_lemma(space, phi)
        checked += 1
        if not ok:
            witnesses.append(
                {"kind": "lower-convergence", "n": n, "space": si, "ultrafilter": ui}
            )
        if vacuous:
            witnesses.append(
                {"kind": "vacuous-empty-limit-set", "n": n, "space": si, "ultrafilter": ui, "informational": True}
            )
        for a in range(1, 1 << n):
            checked += 2
            if not check_locally_compact_bound(space, phi, a):
                witnesses.append(
                    {"kind": "locally-compact-bound", "n": n, "space": si, "ultrafilter": ui, "a": points_of(a)}
                )
            if not check_filterwise_refinement(space, phi, a, pair_cap):
                witnesses.append(
                    {"kind": "filterwise-refinement", "n": n, "space": si, "ultrafilter": ui, "a": points_of(a)}
                )
    return checked, witnesses


def suite_choice_lemma(max_n: int = 3, jobs: int = 1, n4_sample: bool = True) -> RunReport:
    """Exhaustive sweep for n <= max_n plus the deterministic 4-point sample.

    The sample takes every N4_SPACE_STRIDE-th topology of the 355-space
    corpus and caps filterwise function-pair kernels at N4_FILTER_PAIR_CAP.
    """
    report = RunReport(
        "choice-lemma",
        {"max_n": max_n, "n4_sample": bool(n4_sample and max_n == 3)},
    )
    tasks = []
    for n in range(1, min(max_n, 3) + 1):
        for i, space in enumerate(enumerate_topologies(n)):
            tasks.append((n, i, space, None))
    if n4_sample and max_n == 3:
        for i, space in enumerate(enumerate_topologies(4)):
            if i % N4_SPACE_STRIDE == 0:
                tasks.append((4, i, space, N4_FILTER_PAIR_CAP))
    for checked, witnesses in _pmap(_choice_space, tasks, jobs):
        real = [w for w in witnesses if not w.get("informational")]
        report.checked += checked
        report.passed += checked - len(real)
        report.failed += len(real)
        report.witnesses.extend(witnesses)
    return report


# ----------------------------------------------------------------- property A

def suite_property_a(max_n: int = 3) -> RunReport:
    report = RunReport("property-a", {"max_n": max_n})
    expected_counts = {1: 1, 2: 3, 3: 7}
    for n in range(1, min(max_n, 3) + 1):
        cls = classify_property_A(n)
        checks = (
            ("property-a-equals-singletons", cls.property_a_equals_singletons),
            ("property-a-all-ultrafilters", cls.all_property_a_ultrafilters),
            ("property-a-all-countably-complete", cls.all_property_a_countably_complete),
            ("property-a-count", cls.property_a_count == expected_counts[n]),
            ("filter-count", cls.filter_count == (1 << ((1 << n) - 1)) - 1),
        )
        for name, ok in checks:
            report.record(
                ok,
                None
                if ok
                else {
                    "kind": name,
                    "n": n,
                    "property_a_count": cls.property_a_count,
                    "filter_count": cls.filter_count,
                },
            )
    return report


# ------------------------------------------------------------------- harness

def _fault_self_test(report: RunReport, max_n: int) -> None:
    """Flip one open set in the first corpus topology and expect detection."""
    first = next(iter(enumerate_topologies(min(max_n, 2))))
    mangled = [o for o in first.opens if o != first.full]
    try:
        make_space(first.n, mangled)
    except NotATopology as exc:
        report.record(
            False,
            {
                "kind": "injected-fault",
                "space": {"n": first.n, "opens": [list(points_of(o)) for o in mangled]},
                "violated_axiom": exc.axiom,
                "axiom_witness": exc.witness,
            },
        )
        return
    # validation failed to notice the flip: that is itself a failure
    report.record(False, {"kind": "injected-fault-not-detected"})


def run_suite(
    name: str,
    max_n: int = 3,
    jobs: int = 1,
    inject_fault: bool = False,
) -> RunReport:
    start = time.perf_counter()
    if name == "vietoris-inclusion":
        report = suite_vietoris_inclusion(max_n, jobs)
    elif name == "embedding":
        report = suite_embedding(max_n, jobs)
    elif name == "finality-square":
        report = suite_finality_square()
    elif name == "stone-cech":
        report = suite_stone_cech()
    elif name == "choice-lemma":
        report = suite_choice_lemma(max_n, jobs)
    elif name == "property-a":
        report = suite_property_a(max_n)
    else:
        raise TopolabError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    if inject_fault:
        report.parameters["inject_fault"] = True
        _fault_self_test(report, max_n)
    report.wall_time_s = round(time.perf_counter() - start, 3)
    return report


def run_suites(
    names: Sequence[str],
    max_n: int = 3,
    jobs: int = 1,
    inject_fault: bool = False,
) -> list[RunReport]:
    return [run_suite(n, max_n=max_n, jobs=jobs, inject_fault=inject_fault) for n in names]

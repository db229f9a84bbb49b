"""Final topologies over hyperspace projections and the discrete-square check.

The target carrier is the family of non-empty compacts of a codomain space;
sources are pairs (X, A) of a domain space and a compact subset, each
contributing the map f ↦ f(A) from the compact-open function space to the
hyperspace carrier.  The final topology keeps exactly the candidate subsets
whose preimages are open for every source.

Two strategies compute it: materializing the compact-open topology when the
size guard allows, and the neighbourhood test on the carrier otherwise.  For
discrete domains a third, restriction-based route makes the 3x3 square
(19683 maps) tractable: every map out of a discrete space is continuous and
its minimal compact-open neighbourhood is the pointwise box around it, so
both membership and the neighbourhood test only depend on the restriction of
the map to A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import limits
from .bitsets import is_subset, iter_bits, mask_of, points_of
from .errors import SizeLimitExceeded
from .filters import enumerate_ultrafilters, points_carrier, singleton_filter
from .funcspaces import compact_open, continuous_maps
from .hyperspaces import compacts, vietoris
from .maps import FiniteMap
from .spaces import (
    FiniteSpace,
    closure,
    discrete_space,
    final_topology,
    generate_from_subbase,
    make_space,
)


@dataclass(frozen=True)
class FinalitySetup:
    cod: FiniteSpace
    family: tuple[int, ...]  # hyperspace carrier: compacts of cod
    sources: tuple[tuple[FiniteSpace, int], ...]
    computed: FiniteSpace  # final topology over the family indices
    strategy: str


def _projection_images(src: FiniteSpace, cod: FiniteSpace, a: int, family: tuple[int, ...]) -> tuple[int, ...]:
    index = {k: i for i, k in enumerate(family)}
    return tuple(index[f.image_of(a)] for f in continuous_maps(src, cod))


def final_over_projections(
    cod: FiniteSpace,
    sources: Sequence[tuple[FiniteSpace, int]],
    strategy: str = "auto",
) -> FinalitySetup:
    """Final topology on the compacts of ``cod`` w.r.t. all f ↦ f(A) maps.

    strategy: "materialize" builds each compact-open topology extensionally
    (SizeLimitExceeded suggests the other route), "nbhd" uses the carrier
    neighbourhood test, "auto" tries materialization first and falls back.
    """
    if not sources:
        raise ValueError("need at least one source")
    family = compacts(cod)
    k = len(family)
    limits.guard_opens(1 << k, "final topology candidate scan")

    per_source = []
    for src, a in sources:
        if a not in compacts(src):
            raise ValueError("source subset must be a non-empty compact of its space")
        per_source.append((src, a, _projection_images(src, cod, a, family)))

    if strategy == "auto":
        # materialization walks up to 2^|carrier| opens; only worth it when
        # the carrier is small enough for that walk to stay trivial
        carriers_small = all(
            len(continuous_maps(src, cod)) <= 16 for src, _, _ in per_source
        )
        strategy = "materialize" if carriers_small else "nbhd"

    if strategy == "materialize":
        try:
            maps = []
            for src, a, proj in per_source:
                fsp = compact_open(src, cod)
                topo = fsp.materialize()
                maps.append((topo, FiniteMap(fsp.size, k, proj)))
            computed = final_topology(k, maps)
            return FinalitySetup(
                cod, family, tuple((s, a) for s, a in sources), computed, "materialize"
            )
        except SizeLimitExceeded as exc:
            raise SizeLimitExceeded(
                f"{exc}; use the nbhd strategy for this setup"
            ) from exc

    mins = []
    for src, a, proj in per_source:
        fsp = compact_open(src, cod)
        mins.append((fsp.min_nbhds, proj))
    opens = []
    for u in range(1 << k):
        ok = True
        for m, proj in mins:
            pre = 0
            for fi, hp in enumerate(proj):
                if u >> hp & 1:
                    pre |= 1 << fi
            if any(not is_subset(m[fi], pre) for fi in iter_bits(pre)):
                ok = False
                break
        if ok:
            opens.append(u)
    computed = make_space(k, opens)
    return FinalitySetup(cod, family, tuple((s, a) for s, a in sources), computed, "nbhd")


@dataclass(frozen=True)
class InclusionReport:
    contained: bool
    violations: tuple  # (vietoris open mask, source position) pairs


def check_vietoris_contained(setup: FinalitySetup) -> InclusionReport:
    """Every Vietoris open of the hyperspace carrier is final-topology open."""
    hyper = vietoris(setup.cod, setup.family)
    violations = []
    for o in hyper.topology.opens:
        if setup.computed.is_open(o):
            continue
        witness_source = None
        for pos, (src, a) in enumerate(setup.sources):
            fsp = compact_open(src, setup.cod)
            proj = _projection_images(src, setup.cod, a, setup.family)
            pre = 0
            for fi, hp in enumerate(proj):
                if o >> hp & 1:
                    pre |= 1 << fi
            if not fsp.is_open(pre):
                witness_source = pos
                break
        violations.append((o, witness_source))
    return InclusionReport(contained=not violations, violations=tuple(violations))


def _default_square_sources(z_n: int) -> tuple[int, ...]:
    """Deterministic sample of compacts of the discrete square's ground set.

    All singletons plus all prefixes {0..k} (the last prefix is the full
    set, which is always included).
    """
    singles = [1 << z for z in range(z_n)]
    prefixes = [(1 << (k + 1)) - 1 for k in range(z_n)]
    seen = []
    for m in singles + prefixes:
        if m not in seen:
            seen.append(m)
    return tuple(seen)


@dataclass(frozen=True)
class SquareFinalityReport:
    y_n: int
    z_n: int
    source_count: int
    computed: FiniteSpace
    expected: FiniteSpace  # the Vietoris topology on the compacts of Y
    equal: bool
    expected_is_discrete: bool


def final_from_discrete_sources(
    cod: FiniteSpace, z_n: int, source_masks: Sequence[int]
) -> FiniteSpace:
    """Final topology over f ↦ f(A) for sources on a discrete z_n-point space.

    Every map out of a discrete space is continuous and its minimal
    compact-open neighbourhood is the pointwise box { g : g(z) ∈
    min_nbhd(f(z)) }, so both the projection value and the neighbourhood
    test depend only on the restriction of f to A; the scan therefore runs
    over restrictions instead of whole maps.  Agrees with the general
    neighbourhood strategy of final_over_projections (asserted in tests,
    also for non-discrete codomains where the openness condition really
    rejects candidates).
    """
    family = compacts(cod)
    k = len(family)
    limits.guard_opens(1 << k, "final topology candidate scan")
    index = {m: i for i, m in enumerate(family)}
    cod_mins = cod.min_nbhds

    per_source_pairs = []
    for a in source_masks:
        pts = points_of(a)
        if not pts or a >= (1 << z_n):
            raise ValueError("source subset must be a non-empty subset of the discrete space")
        pairs = set()
        for restriction in itertools.product(range(cod.n), repeat=len(pts)):
            h = index[mask_of(restriction)]
            reach = {0}
            for val in restriction:
                nbhd = tuple(iter_bits(cod_mins[val]))
                reach = {s | (1 << c) for s in reach for c in nbhd}
            pairs.add((h, frozenset(index[r] for r in reach)))
        per_source_pairs.append(pairs)

    opens = []
    for u in range(1 << k):
        ok = True
        for pairs in per_source_pairs:
            for h, reach in pairs:
                if u >> h & 1 and any(not (u >> r & 1) for r in reach):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            opens.append(u)
    return make_space(k, opens)


def check_finality_discrete_square(y_n: int, source_cap: int | None = None) -> SquareFinalityReport:
    """Final topology from the discrete square equals the Vietoris topology.

    Y is the discrete space on y_n points (a finite Hausdorff regular space
    is discrete, and a finite discrete space is its own Stone-Čech
    compactification, so the square Z = Y×Y with the discrete topology plays
    the compactification's role directly).  Sources are (Z, A) for a sample
    of compacts A of Z: all of them for y_n <= 2, the documented
    singleton-plus-prefix sample for y_n = 3 (the full set is always
    included).  Equality with the sampled sources implies equality with all
    of them, because adding sources can only shrink the final topology and
    the Vietoris topology is contained in any of these final topologies.

    Every subset of the discrete Z is compact and every map out of it is
    continuous, so the scan runs over restrictions to A (the projection
    value and the minimal-neighbourhood box of a map only depend on f|A).
    """
    if y_n < 1:
        raise ValueError("y_n must be positive")
    if y_n > 3:
        raise SizeLimitExceeded("discrete-square check is limited to y_n <= 3")
    y = discrete_space(y_n)
    family = compacts(y)
    k = len(family)
    expected = vietoris(y, family).topology

    z_n = y_n * y_n
    if y_n <= 2 and source_cap is None:
        source_masks = compacts(discrete_space(z_n))
    else:
        source_masks = _default_square_sources(z_n)
        if source_cap is not None:
            capped = tuple(source_masks[: max(source_cap, 1)])
            full = (1 << z_n) - 1
            source_masks = capped if full in capped else capped + (full,)

    computed = final_from_discrete_sources(y, z_n, source_masks)

    return SquareFinalityReport(
        y_n=y_n,
        z_n=z_n,
        source_count=len(source_masks),
        computed=computed,
        expected=expected,
        equal=computed == expected,
        expected_is_discrete=len(expected.opens) == 1 << k,
    )


@dataclass(frozen=True)
class StoneCechReport:
    d_n: int
    ultrafilter_count: int
    w_bijective: bool
    closures_clopen: bool        # closures of point images are clopen
    base_is_clopen: bool         # the generating base consists of clopen sets
    clopen_closure_form: bool    # every clopen C equals cl(C ∩ w(D))


def stone_cech_finite_discrete(d_n: int) -> StoneCechReport:
    """Ultrafilter-space checks for a finite discrete space.

    The ultrafilter space of the discrete space on d_n points is built with
    the base { Uf(M) : M ⊆ D } (ultrafilters containing M); for a finite
    discrete space all ultrafilters are point filters, so w : x ↦ ε(x) must
    be a bijection and the space coincides with D itself.  The three
    structural facts are then verified extensionally: closures of point-set
    images are clopen, the generating base is clopen, and every clopen set C
    is the closure of its trace C ∩ w(D).
    """
    if d_n < 1:
        raise ValueError("d_n must be positive")
    carrier = points_carrier(d_n)
    ultras = list(enumerate_ultrafilters(carrier))
    # w sends a point to its singleton filter; bijectivity onto the ultrafilters
    w = {x: singleton_filter(carrier, x) for x in range(d_n)}
    w_bijective = (
        len(ultras) == d_n
        and len(set(w.values())) == d_n
        and set(w.values()) == set(ultras)
    )
    uf_index = {u: i for i, u in enumerate(ultras)}

    def uf_of(m: int) -> int:
        """Index mask of the ultrafilters containing M (kernel inside M)."""
        out = 0
        for i, u in enumerate(ultras):
            if all(m >> j & 1 for j in u.kernel):
                out |= 1 << i
        return out

    base = [uf_of(m) for m in range(1 << d_n)]
    space = generate_from_subbase(len(ultras), base)

    def clopen(mask: int) -> bool:
        return space.is_open(mask) and mask in space.closed_set

    w_image_mask = 0
    for x in range(d_n):
        w_image_mask |= 1 << uf_index[w[x]]

    closures_clopen = True
    for m in range(1 << d_n):
        img = 0
        for x in iter_bits(m):
            img |= 1 << uf_index[w[x]]
        cl = closure(space, img)
        if not clopen(cl) or cl != uf_of(m):
            closures_clopen = False
            break

    base_is_clopen = all(clopen(b) for b in base)
    # base property: every open is a union of base sets
    for o in space.opens:
        u = 0
        for b in base:
            if is_subset(b, o):
                u |= b
        if u != o:
            base_is_clopen = False
            break

    clopen_closure_form = True
    for c in range(1 << len(ultras)):
        if not clopen(c):
            continue
        if closure(space, c & w_image_mask) != c:
            clopen_closure_form = False
            break

    return StoneCechReport(
        d_n=d_n,
        ultrafilter_count=len(ultras),
        w_bijective=w_bijective,
        closures_clopen=closures_clopen,
        base_is_clopen=base_is_clopen,
        clopen_closure_form=clopen_closure_form,
    )

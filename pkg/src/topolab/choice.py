"""Choice-function calculus over the non-empty powerset of a finite set.

A choice function assigns to every non-empty subset one of its own elements;
here it is a FiniteMap from the canonical subset indices (mask - 1) to the
ground points.  The checks in this module sweep filters on the subset
carrier and relate their lower-Vietoris limits to the points reachable
through choice-function images.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .bitsets import is_subset, nonempty_subsets, points_of
from .errors import SizeLimitExceeded
from .filters import (
    FilterOnCarrier,
    is_countably_complete,
    is_ultrafilter,
    subsets_carrier,
)
from .hyperspaces import lower_vietoris
from .spaces import (
    FiniteSpace,
    closure,
    is_locally_compact,
    is_nested_neighbourhood,
    minimal_open_nbhd,
)
from .maps import FiniteMap


def choice_function_count(n: int) -> int:
    total = 1
    for m in nonempty_subsets(n):
        total *= m.bit_count()
    return total


def enumerate_choice_functions(n: int) -> Iterator[FiniteMap]:
    """All choice functions on an n-point ground set, deterministic order.

    The image tuple is indexed by the canonical subset order (mask - 1) and
    runs lexicographically over the per-subset element choices.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 4:
        raise SizeLimitExceeded("choice-function enumeration is limited to n <= 4")
    per_subset = [points_of(m) for m in nonempty_subsets(n)]
    for assignment in itertools.product(*per_subset):
        yield FiniteMap((1 << n) - 1, n, assignment)


def is_choice_function(n: int, f: FiniteMap) -> bool:
    """Each subset is sent to one of its own elements."""
    if f.dom_n != (1 << n) - 1 or f.cod_n != n:
        return False
    return all(
        (m >> f.image[m - 1]) & 1 for m in nonempty_subsets(n)
    )


def _image_kernel(f: FiniteMap, phi: FilterOnCarrier) -> int:
    """Point mask of { f(A) : A in kernel(phi) } for a subset-carrier filter."""
    out = 0
    for i in phi.kernel:
        out |= 1 << f.image[i]
    return out


@lru_cache(maxsize=None)
def limit_set_P(space: FiniteSpace, phi: FilterOnCarrier) -> int:
    """Points some choice function's image filter converges to.

    ``phi`` is a filter on the canonical non-empty-subset carrier of the
    space's ground set.
    """
    n = space.n
    if phi.carrier.size != (1 << n) - 1:
        raise ValueError("filter must live on the subset carrier of the space")
    mins = space.min_nbhds
    p = 0
    for f in enumerate_choice_functions(n):
        imgk = _image_kernel(f, phi)
        for x in range(n):
            if is_subset(imgk, mins[x]):
                p |= 1 << x
    return p


def _hyper_converges(space: FiniteSpace, phi: FilterOnCarrier, target_mask: int) -> bool:
    """Convergence of a subset-carrier filter in the lower Vietoris topology."""
    family = tuple(nonempty_subsets(space.n))
    hyper = lower_vietoris(space, family)
    idx = target_mask - 1  # canonical subset order makes the index mask - 1
    m = minimal_open_nbhd(hyper.topology, idx)
    return all(m >> i & 1 for i in phi.kernel)


def check_lower_convergence_lemma(space: FiniteSpace, phi: FilterOnCarrier) -> bool:
    """The filter converges to the closure of its reachable-point set.

    For an ultrafilter on the non-empty subsets, the set P of points reached
    by some choice-function image filter always has non-empty closure and
    the filter converges to that closure in the lower Vietoris topology.
    When P is empty (possible only for non-ultrafilter inputs) the closure
    is not a hyperpoint and lower convergence to the empty set imposes no
    constraint, so the check is vacuously true; suites flag those instances
    via limit_set_P.
    """
    p = limit_set_P(space, phi)
    if p == 0:
        return True
    return _hyper_converges(space, phi, closure(space, p))


def check_locally_compact_bound(space: FiniteSpace, phi: FilterOnCarrier, a: int) -> bool:
    """Lower limits are bounded by the closure of the reachable-point set.

    Requires local compactness (asserted, although every finite space has
    it): if the filter converges to the hyperpoint ``a`` in the lower
    Vietoris topology, then a ⊆ cl(P).  Vacuously true without convergence.
    """
    if not is_locally_compact(space):
        raise ValueError("space is not locally compact")
    if not _hyper_converges(space, phi, a):
        return True
    p = limit_set_P(space, phi)
    return is_subset(a, closure(space, p))


def _default_function_kernels(functions: Sequence[FiniteMap], pair_cap: int | None) -> Iterator[tuple[FiniteMap, ...]]:
    """Deterministic kernel sample: singletons, pairs (capped), full carrier.

    Larger kernels only shrink the applied image filter, so the singleton
    kernels already realize every reachable point; the pairs and the full
    kernel are swept to exercise the non-trivial cases anyway.
    """
    for f in functions:
        yield (f,)
    pairs = itertools.combinations(functions, 2)
    if pair_cap is not None:
        pairs = itertools.islice(pairs, pair_cap)
    yield from pairs
    yield tuple(functions)


@lru_cache(maxsize=None)
def filterwise_limit_set(space: FiniteSpace, phi: FilterOnCarrier, pair_cap: int | None = None) -> int:
    """Points reached by applying a filter of choice functions to ``phi``.

    Filters on the function carrier are swept through the documented
    deterministic kernel sample (singletons, pairs up to ``pair_cap``, the
    full carrier).  The applied filter has kernel { f(A) : f in F, A in
    kernel(phi) }, and a point is collected when that kernel sits inside its
    minimal neighbourhood.  With pair_cap=None all pairs are swept for
    n <= 3; on 4 points the sweep caps itself at the first 100 pairs (the
    20736 choice functions would give 2.1e8 pairs otherwise).
    """
    n = space.n
    functions = tuple(enumerate_choice_functions(n))
    if pair_cap is None and n >= 4:
        pair_cap = 100
    mins = space.min_nbhds
    p = 0
    for kernel in _default_function_kernels(functions, pair_cap):
        imgk = 0
        for f in kernel:
            imgk |= _image_kernel(f, phi)
        for x in range(n):
            if is_subset(imgk, mins[x]):
                p |= 1 << x
    return p


def check_filterwise_refinement(
    space: FiniteSpace, phi: FilterOnCarrier, a: int, pair_cap: int | None = None
) -> bool:
    """Lower limits sit inside the filterwise reachable-point set.

    Requires the nested-neighbourhood property (asserted; every finite space
    has it via minimal neighbourhoods): if the filter converges to the
    hyperpoint ``a`` in the lower Vietoris topology then a ⊆ P, with P the
    filterwise limit set.
    """
    if not is_nested_neighbourhood(space):
        raise ValueError("space is not a nested neighbourhood space")
    if not _hyper_converges(space, phi, a):
        return True
    return is_subset(a, filterwise_limit_set(space, phi, pair_cap))


@dataclass(frozen=True)
class PropertyAReport:
    """Outcome of the every-choice-image-is-a-point-filter test."""

    kernel_subsets: tuple[int, ...]  # the filter kernel, as subset masks
    holds: bool
    witness: FiniteMap | None  # choice function with a >= 2 point image kernel
    is_ultrafilter: bool
    is_singleton: bool
    is_countably_complete: bool


def has_property_A(n: int, phi: FilterOnCarrier) -> PropertyAReport:
    """Does every choice function send the filter to a singleton filter?

    The report carries the ultrafilter / singleton / countable-completeness
    flags alongside, since the property forces all three on finite carriers.
    """
    if phi.carrier.size != (1 << n) - 1:
        raise ValueError("filter must live on the subset carrier")
    holds = True
    witness = None
    for f in enumerate_choice_functions(n):
        imgk = _image_kernel(f, phi)
        if imgk.bit_count() >= 2:
            holds = False
            witness = f
            break
    return PropertyAReport(
        kernel_subsets=tuple(sorted(phi.carrier.elements[i] for i in phi.kernel)),
        holds=holds,
        witness=witness,
        is_ultrafilter=is_ultrafilter(phi),
        is_singleton=len(phi.kernel) == 1,
        is_countably_complete=is_countably_complete(phi),
    )


@dataclass(frozen=True)
class PropertyAClassification:
    n: int
    filter_count: int
    property_a_count: int
    singleton_count: int
    property_a_equals_singletons: bool
    all_property_a_ultrafilters: bool
    all_property_a_countably_complete: bool


def classify_property_A(n: int) -> PropertyAClassification:
    """Exhaustive sweep of all filters on the non-empty subsets of n points."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 3:
        raise SizeLimitExceeded("filter sweep is limited to n <= 3")
    carrier = subsets_carrier(n)
    from .filters import enumerate_filters

    total = 0
    prop_a = []
    singleton = 0
    for phi in enumerate_filters(carrier):
        total += 1
        report = has_property_A(n, phi)
        if report.is_singleton:
            singleton += 1
        if report.holds:
            prop_a.append(report)
    return PropertyAClassification(
        n=n,
        filter_count=total,
        property_a_count=len(prop_a),
        singleton_count=singleton,
        property_a_equals_singletons=all(r.is_singleton for r in prop_a)
        and len(prop_a) == singleton,
        all_property_a_ultrafilters=all(r.is_ultrafilter for r in prop_a),
        all_property_a_countably_complete=all(
            r.is_countably_complete for r in prop_a
        ),
    )

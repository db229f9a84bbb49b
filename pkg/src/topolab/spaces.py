"""Finite topological spaces: representation, generation, operators, predicates.

A space is stored extensionally as its canonical sorted family of open masks,
so equality of topologies is structural equality.  Internally most operators
route through the minimal-open-neighbourhood array ``min_nbhds``: on a finite
ground set the intersection of all opens containing a point is itself open,
and the topology is exactly the family of unions of these minimal
neighbourhoods.  That correspondence (finite topologies = reflexive
transitive neighbourhood systems) also drives the exhaustive enumerator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from . import limits
from .bitsets import (
    canon_family,
    complement,
    full_mask,
    is_subset,
    iter_bits,
    mask_of,
    points_of,
)
from .errors import NotATopology, NotOpen, SizeLimitExceeded
from .maps import FiniteMap


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on the ground set {0,...,n-1}, opens as sorted masks."""

    n: int
    opens: tuple[int, ...]

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self.open_set

    @cached_property
    def closeds(self) -> tuple[int, ...]:
        """All closed masks (complements of opens), canonical order."""
        return canon_family(complement(o, self.n) for o in self.opens)

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closeds)

    @cached_property
    def min_nbhds(self) -> tuple[int, ...]:
        """min_nbhds[x] = intersection of all opens containing x (open)."""
        out = []
        for x in range(self.n):
            m = self.full
            bit = 1 << x
            for o in self.opens:
                if o & bit:
                    m &= o
            out.append(m)
        return tuple(out)


def _validate_axioms(n: int, opens: tuple[int, ...]) -> None:
    full = full_mask(n)
    if any(o > full or o < 0 for o in opens):
        raise ValueError("open mask does not fit the ground set")
    members = frozenset(opens)
    if 0 not in members:
        raise NotATopology("empty set missing")
    if full not in members:
        raise NotATopology("full set missing")
    for a, b in itertools.combinations(opens, 2):
        if a | b not in members:
            raise NotATopology("union not open", (points_of(a), points_of(b)))
        if a & b not in members:
            raise NotATopology("intersection not open", (points_of(a), points_of(b)))


def make_space(n: int, opens: Iterable[int]) -> FiniteSpace:
    """Validate a family of open masks and build the space.

    Pairwise closure under union and intersection is checked; on finite
    families that implies closure under arbitrary unions and finite
    intersections.  Raises NotATopology with the first violated axiom and a
    witnessing pair.
    """
    if n < 0:
        raise ValueError("ground set size must be non-negative")
    fam = canon_family(opens)
    _validate_axioms(n, fam)
    return FiniteSpace(n, fam)


def _union_closure(n: int, generators: Sequence[int], what: str = "topology") -> tuple[int, ...]:
    """All unions of subfamilies of ``generators`` (empty union = 0)."""
    seen = {0}
    frontier = [0]
    lim = limits.max_opens()
    while frontier:
        nxt = []
        for u in frontier:
            for g in generators:
                v = u | g
                if v not in seen:
                    seen.add(v)
                    if len(seen) > lim:
                        raise SizeLimitExceeded(
                            f"{what} exceeds the open-set limit {lim}"
                        )
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(seen))


def min_nbhds_from_subbase(n: int, subbase: Sequence[int]) -> tuple[int, ...]:
    """Minimal basic neighbourhood of each point for a generated topology.

    The empty intersection convention makes the full set the neighbourhood of
    a point not covered by any subbase member.
    """
    full = full_mask(n)
    out = []
    for x in range(n):
        m = full
        bit = 1 << x
        for s in subbase:
            if s & bit:
                m &= s
        out.append(m)
    return tuple(out)


def generate_from_subbase(n: int, subbase: Iterable[int]) -> FiniteSpace:
    """Smallest topology containing ``subbase``.

    Equivalent to closing under finite intersections (empty intersection =
    full set) and then arbitrary unions (empty union = empty set); computed
    here via minimal neighbourhoods: the opens are exactly the unions of the
    per-point subbase intersections.
    """
    fam = canon_family(subbase)
    if any(s > full_mask(n) for s in fam):
        raise ValueError("subbase mask does not fit the ground set")
    mins = min_nbhds_from_subbase(n, fam)
    opens = _union_closure(n, mins)
    return FiniteSpace(n, opens)


def space_from_min_nbhds(mins: Sequence[int]) -> FiniteSpace:
    """Space whose opens are all unions of the given neighbourhood system.

    ``mins`` must be reflexive (x in mins[x]) and transitive
    (y in mins[x] implies mins[y] subset of mins[x]); this is not re-checked.
    """
    return FiniteSpace(len(mins), _union_closure(len(mins), tuple(mins)))


@lru_cache(maxsize=None)
def closure(space: FiniteSpace, a: int) -> int:
    """Smallest closed superset of ``a``."""
    out = space.full
    for c in space.closeds:
        if is_subset(a, c):
            out &= c
    return out


def interior(space: FiniteSpace, a: int) -> int:
    """Largest open subset of ``a``."""
    out = 0
    for o in space.opens:
        if is_subset(o, a):
            out |= o
    return out


@lru_cache(maxsize=None)
def is_t1(space: FiniteSpace) -> bool:
    """Every singleton is closed."""
    return all((1 << x) in space.closed_set for x in range(space.n))


@lru_cache(maxsize=None)
def is_t2(space: FiniteSpace) -> bool:
    """Distinct points are separated by disjoint opens."""
    for x in range(space.n):
        for y in range(x + 1, space.n):
            if not any(
                u & (1 << x) and v & (1 << y) and not u & v
                for u in space.opens
                for v in space.opens
            ):
                return False
    return True


@lru_cache(maxsize=None)
def is_t3(space: FiniteSpace) -> bool:
    """Regularity only: point and disjoint closed set split by disjoint opens.

    T1 is deliberately not folded in; combine with is_t1/is_t2 when a
    Hausdorff regular space is required.
    """
    for f in space.closeds:
        for x in range(space.n):
            if f & (1 << x):
                continue
            if not any(
                u & (1 << x) and is_subset(f, v) and not u & v
                for u in space.opens
                for v in space.opens
            ):
                return False
    return True


@lru_cache(maxsize=None)
def is_compact_subset(space: FiniteSpace, k: int) -> bool:
    """Every open cover of ``k`` has a finite subcover.

    Checked via the cover definition.  Any open cover refines the cover by
    the distinct minimal neighbourhoods of its points (every open containing
    x contains min_nbhds[x]), so it suffices to scan subfamilies of those
    generators; when the topology itself is small enough we scan all
    subfamilies of opens instead.
    """
    if k == 0:
        return True
    if len(space.opens) <= 12:
        members = space.opens
    else:
        members = canon_family(space.min_nbhds)
        if len(members) > 16:
            raise SizeLimitExceeded("too many distinct neighbourhoods for the cover scan")
    for bits in range(1, 1 << len(members)):
        cover = [members[i] for i in iter_bits(bits)]
        union = 0
        for c in cover:
            union |= c
        if not is_subset(k, union):
            continue
        # greedy finite subcover: one member per uncovered point
        sub = []
        remaining = k
        for c in cover:
            if remaining & c:
                sub.append(c)
                remaining &= ~c
            if not remaining:
                break
        if remaining:
            return False
    return True


@lru_cache(maxsize=None)
def is_locally_compact(space: FiniteSpace) -> bool:
    """Each point a and open U ∋ a admit a ∈ O ⊆ K ⊆ U with O open, K compact."""
    for a in range(space.n):
        bit = 1 << a
        for u in space.opens:
            if not u & bit:
                continue
            found = False
            for o in space.opens:
                if o & bit and is_subset(o, u):
                    # candidate compacts between o and u, smallest first
                    for extra in range(1 << (space.n)):
                        k = o | (extra & u)
                        if is_subset(o, k) and is_subset(k, u) and is_compact_subset(space, k):
                            found = True
                            break
                if found:
                    break
            if not found:
                return False
    return True


def minimal_open_nbhd(space: FiniteSpace, x: int) -> int:
    """Intersection of all opens containing ``x`` (open on finite spaces)."""
    if not 0 <= x < space.n:
        raise ValueError("point outside the ground set")
    return space.min_nbhds[x]


@lru_cache(maxsize=None)
def is_nested_neighbourhood(space: FiniteSpace) -> bool:
    """Every point has an open neighbourhood base totally ordered by inclusion.

    The property is not pinned down by a standalone definition in the usual
    references; the reading implemented here is reverse-engineered from how
    it gets used (a base of each point's neighbourhoods that forms a chain
    under ⊆).  On a finite space the single minimal open neighbourhood is
    such a base whenever it is open and below every open neighbourhood, so
    the search reduces to checking exactly that.
    """
    for x in range(space.n):
        m = space.min_nbhds[x]
        if m not in space.open_set:
            return False
        if any(o & (1 << x) and not is_subset(m, o) for o in space.opens):
            return False
    return True


def shrink_between(space: FiniteSpace, k: int, o: int) -> int | None:
    """An open u with k ⊆ u ⊆ cl(u) ⊆ o, or None when no such open exists."""
    if o not in space.open_set:
        raise NotOpen(f"shrink target {points_of(o)} is not open")
    if not is_subset(k, o):
        raise ValueError("k must be contained in o")
    for u in space.opens:
        if is_subset(k, u) and is_subset(closure(space, u), o):
            return u
    return None


@dataclass(frozen=True)
class ProductCodec:
    """Mixed-radix point codec: index = sum(coord[i] * prod(sizes[:i]))."""

    sizes: tuple[int, ...]

    @property
    def total(self) -> int:
        t = 1
        for s in self.sizes:
            t *= s
        return t

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.sizes):
            raise ValueError("coordinate arity mismatch")
        idx = 0
        stride = 1
        for c, s in zip(coords, self.sizes):
            if not 0 <= c < s:
                raise ValueError("coordinate out of range")
            idx += c * stride
            stride *= s
        return idx

    def decode(self, index: int) -> tuple[int, ...]:
        coords = []
        for s in self.sizes:
            coords.append(index % s)
            index //= s
        return tuple(coords)


def product_space(factors: Sequence[FiniteSpace]) -> tuple[FiniteSpace, ProductCodec]:
    """Product of finitely many spaces with the documented mixed-radix codec.

    The topology is generated by the cylinder subbase (preimages of factor
    opens under the projections); the minimal neighbourhood of a product
    point is the product of the factor minimal neighbourhoods.
    """
    if not factors:
        raise ValueError("need at least one factor")
    codec = ProductCodec(tuple(f.n for f in factors))
    total = codec.total
    limits.guard_points(total, "product ground set")
    factor_mins = [f.min_nbhds for f in factors]
    mins = []
    for p in range(total):
        coords = codec.decode(p)
        member_bits = 0
        for q in range(total):
            qc = codec.decode(q)
            if all(fm[c] & (1 << qc[i]) for i, (fm, c) in enumerate(zip(factor_mins, coords))):
                member_bits |= 1 << q
        mins.append(member_bits)
    opens = _union_closure(total, mins, "product topology")
    return FiniteSpace(total, opens), codec


def final_topology(target_n: int, maps: Sequence[tuple[FiniteSpace, FiniteMap]]) -> FiniteSpace:
    """Finest topology on the target making all given maps continuous.

    opens = { U : every f has f^-1(U) open in its source }.
    """
    if not maps:
        raise ValueError("need at least one map")
    for src, f in maps:
        if f.dom_n != src.n:
            raise ValueError("map domain does not match its source space")
        if f.cod_n != target_n:
            raise ValueError("map codomain does not match the target")
    limits.guard_opens(1 << target_n, "final topology candidate scan")
    opens = [
        u
        for u in range(1 << target_n)
        if all(f.preimage_of(u) in src.open_set for src, f in maps)
    ]
    return make_space(target_n, opens)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """All labeled topologies on n points, exactly once, deterministic order.

    Iterates candidate minimal-neighbourhood arrays (reflexive + transitive),
    which are in bijection with topologies on a finite ground set; candidates
    run in lexicographic order of the neighbourhood masks.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 4:
        raise SizeLimitExceeded("exhaustive enumeration is limited to n <= 4")
    if n == 0:
        yield FiniteSpace(0, (0,))
        return
    choices = []
    for x in range(n):
        bit = 1 << x
        choices.append([m for m in range(1 << n) if m & bit])
    for mins in itertools.product(*choices):
        ok = True
        for x in range(n):
            for y in iter_bits(mins[x]):
                if not is_subset(mins[y], mins[x]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield space_from_min_nbhds(mins)


# named small spaces used all over the tests and demos
def discrete_space(n: int) -> FiniteSpace:
    return generate_from_subbase(n, [1 << x for x in range(n)])


def indiscrete_space(n: int) -> FiniteSpace:
    return generate_from_subbase(n, [])


def sierpinski_space() -> FiniteSpace:
    """Two points, with {1} the only non-trivial open."""
    return make_space(2, [0, 0b10, 0b11])


@dataclass(frozen=True)
class SpaceReport:
    """Separation and compactness flags used as preconditions elsewhere."""

    t1: bool
    t2: bool
    t3: bool
    locally_compact: bool
    nested_neighbourhood: bool


def space_report(space: FiniteSpace) -> SpaceReport:
    return SpaceReport(
        t1=is_t1(space),
        t2=is_t2(space),
        t3=is_t3(space),
        locally_compact=is_locally_compact(space),
        nested_neighbourhood=is_nested_neighbourhood(space),
    )


def mask(points: Iterable[int]) -> int:
    """Convenience re-export so demos can write mask([0, 2])."""
    return mask_of(points)

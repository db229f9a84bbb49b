"""Independent brute-force oracles.

These deliberately avoid the library's algorithms: the topology scan checks
the axioms over every set family, the subbase closure follows the literal
two-stage procedure, and the finest-topology search walks all candidate
topologies.  The tests freeze values computed here and compare the library
against them.
"""

import itertools

from topolab.bitsets import full_mask
from topolab.maps import FiniteMap
from topolab.spaces import FiniteSpace


def is_topology_family(n: int, members: tuple[int, ...]) -> bool:
    memberset = set(members)
    if 0 not in memberset or full_mask(n) not in memberset:
        return False
    for a in members:
        for b in members:
            if a | b not in memberset or a & b not in memberset:
                return False
    return True


def brute_force_topologies(n: int) -> list[tuple[int, ...]]:
    """Scan all families of subsets of an n-point set, keep the topologies."""
    subsets = list(range(1 << n))
    out = []
    for fam_bits in range(1 << len(subsets)):
        members = tuple(s for s in subsets if fam_bits >> s & 1)
        if is_topology_family(n, members):
            out.append(members)
    return out


def slow_subbase_closure(n: int, subbase: list[int]) -> tuple[int, ...]:
    """Literal closure: finite intersections (empty = full), then unions."""
    base = {full_mask(n)}
    for r in range(1, len(subbase) + 1):
        for combo in itertools.combinations(subbase, r):
            inter = full_mask(n)
            for s in combo:
                inter &= s
            base.add(inter)
    opens = {0}
    base = sorted(base)
    for r in range(1, len(base) + 1):
        for combo in itertools.combinations(base, r):
            u = 0
            for s in combo:
                u |= s
            opens.add(u)
    return tuple(sorted(opens))


def finest_topology_with_continuous(
    target_n: int, maps: list[tuple[FiniteSpace, FiniteMap]]
) -> tuple[int, ...]:
    """Finest topology (by scanning all of them) making every map continuous."""
    candidates = []
    for members in brute_force_topologies(target_n):
        memberset = set(members)
        if all(
            all(f.preimage_of(u) in src.open_set for u in memberset)
            for src, f in maps
        ):
            candidates.append(members)
    finest = max(candidates, key=len)
    assert all(set(c) <= set(finest) for c in candidates), "finest candidate not unique"
    return finest


def explicit_function_filter_apply(
    function_members: list[tuple[FiniteMap, ...]],
    argument_members: list[tuple[int, ...]],
) -> frozenset[int]:
    """Kernel of the filter generated by all F(M) = {f(m) : f in F, m in M}.

    Takes explicit member lists of both filters and intersects every
    generated image set.
    """
    generated = []
    for F in function_members:
        for M in argument_members:
            generated.append(frozenset(f.image[m] for f in F for m in M))
    kernel = generated[0]
    for g in generated[1:]:
        kernel &= g
    return kernel

"""Projective colors, decompositions, primitivity, tails, and the
reduction-to-primitive engine."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import catalog
from .quotient import (
    build_colors,
    higher_defect_quotients,
    is_star_distinguished,
    quotient,
)
from .rootsystem import Vec, format_root, support
from .system import ColorTable, SphericalSystem, localize_simple


@dataclass(frozen=True)
class DecompositionReport:
    ok: bool
    conditions: tuple[bool, bool, bool, bool, bool]


@dataclass(frozen=True)
class Tail:
    gamma: Vec
    shape: str
    delta_prime: tuple[str, ...]
    quotient: SphericalSystem


@dataclass(frozen=True)
class ReductionNode:
    tag: str  # parabolic-induction | fiber-product | projective-fibration | primitive | closed | open
    system: SphericalSystem
    detail: tuple = ()
    markers: tuple[str, ...] = ()
    children: tuple["ReductionNode", ...] = ()


def supp_sigma(sys: SphericalSystem) -> frozenset[int]:
    out: set[int] = set()
    for v in sys.sigma:
        out |= support(v)
    return frozenset(out)


def is_cuspidal(sys: SphericalSystem) -> bool:
    return supp_sigma(sys) == frozenset(range(sys.rs.n))


def projective_colors(sys: SphericalSystem) -> list[tuple[str, frozenset[int], bool]]:
    """A-colors with nonnegative rows, their supports, and whether the
    support meets the support of a non-simple spherical root."""
    nonsimple: set[int] = set()
    for v in sys.sigma:
        if len(support(v)) > 1 or max(v, default=0) > 1:
            nonsimple |= support(v)
    out = []
    for c in sys.apart:
        if all(x >= 0 for x in c.row):
            out.append((c.name, c.moved_by, bool(c.moved_by & nonsimple)))
    return out


def _star_cache(sys: SphericalSystem, table: ColorTable):
    cache: dict[tuple[str, ...], object] = {}

    def star(names: tuple[str, ...]):
        if names not in cache:
            cache[names] = is_star_distinguished(sys, names, table)
        return cache[names]

    return star


def is_decomposition(sys: SphericalSystem, names1, names2, table: ColorTable | None = None) -> DecompositionReport:
    """Evaluate the five decomposition conditions for a pair of color subsets."""
    table = table if table is not None else build_colors(sys)
    n1, n2 = tuple(names1), tuple(names2)
    c1 = bool(n1) and bool(n2) and not (set(n1) & set(n2))
    star = _star_cache(sys, table)
    r1, r2 = star(n1), star(n2)
    r3 = star(tuple(sorted(set(n1) | set(n2)))) if c1 else None
    c2 = bool(r1.star and r2.star and r3 is not None and r3.star)
    if not (c1 and c2):
        return DecompositionReport(False, (c1, c2, False, False, False))
    sigset = set(sys.sigma)
    kept1 = {v for v in r1.quotient.sigma} & sigset
    kept2 = {v for v in r2.quotient.sigma} & sigset
    gone1 = sigset - kept1
    gone2 = sigset - kept2
    c3 = not (gone1 & gone2)
    new1 = r1.quotient.sp - sys.sp
    new2 = r2.quotient.sp - sys.sp
    c4 = all(sys.rs.sym[a][b] == 0 for a in new1 for b in new2)
    c5 = bool(r1.smooth or r2.smooth)
    return DecompositionReport(c1 and c2 and c3 and c4 and c5, (c1, c2, c3, c4, c5))


def decomposing_pairs(sys: SphericalSystem, table: ColorTable | None = None, first_only: bool = False):
    """Disjoint pairs of (*)-distinguished subsets decomposing the system,
    in canonical order."""
    table = table if table is not None else build_colors(sys)
    names = table.names()
    idx = {n: i for i, n in enumerate(names)}
    star = _star_cache(sys, table)
    starsets = []
    for r in range(1, len(names) + 1):
        for combo in combinations(names, r):
            if star(combo).star:
                starsets.append(combo)
    starsets.sort(key=lambda t: tuple(idx[n] for n in t))
    out = []
    for i, d1 in enumerate(starsets):
        for d2 in starsets:
            if set(d1) & set(d2):
                continue
            if tuple(idx[n] for n in d1) >= tuple(idx[n] for n in d2):
                continue
            rep = is_decomposition(sys, d1, d2, table)
            if rep.ok:
                out.append((d1, d2))
                if first_only:
                    return out
    out.sort(key=lambda p: (tuple(idx[n] for n in p[0]), tuple(idx[n] for n in p[1])))
    return out


def detect_tails(sys: SphericalSystem) -> list[Tail]:
    """Spherical roots of tail shape together with a rank-1 quotient whose
    parabolic datum is the orthogonal set of the root."""
    table = build_colors(sys)
    star = _star_cache(sys, table)
    out = []
    for gamma in sys.sigma:
        apart_rows = None
        alpha_set = support(gamma)
        if len(alpha_set) == 1 and max(gamma) == 1:
            pair = sys.a_colors_of(min(alpha_set))
            if len(pair) == 2:
                apart_rows = (pair[0].row, pair[1].row)
        shape = catalog.classify_tail_shape(
            sys.rs, gamma, sys.sp, sigma=sys.sigma, apart_rows=apart_rows
        )
        if shape is None:
            continue
        target_sp = sys.rs.orthogonal_roots(gamma)
        best = None
        for r in range(1, len(table.colors) + 1):
            for combo in combinations(table.names(), r):
                rep = star(combo)
                if not rep.star:
                    continue
                q = rep.quotient
                if q.sigma == (gamma,) and q.sp == target_sp:
                    best = Tail(gamma, shape, combo, q)
                    break
            if best:
                break
        if best:
            out.append(best)
    return out


def primitive_markers(sys: SphericalSystem) -> tuple[str, ...]:
    rs = sys.rs
    markers = []
    for t in detect_tails(sys):
        markers.append(f"has-tail({format_root(rs, t.gamma)}, {t.shape})")
    for names, k in higher_defect_quotients(sys):
        markers.append(f"has-higher-defect({','.join(names)}, {k})")
    return tuple(markers)


def is_primitive(sys: SphericalSystem, with_markers: bool = True) -> tuple[bool, tuple[str, ...]]:
    """Full support, no projective color, no decomposing pair."""
    if not is_cuspidal(sys):
        return False, ()
    if projective_colors(sys):
        return False, ()
    if decomposing_pairs(sys, first_only=True):
        return False, ()
    return True, (primitive_markers(sys) if with_markers else ())


def reduction_step(sys: SphericalSystem) -> ReductionNode:
    """One application of the reduction cases, in their fixed order."""
    rs = sys.rs
    if sys.rank == 0:
        return ReductionNode("closed", sys)
    sprime = supp_sigma(sys) | sys.sp
    if sprime != frozenset(range(rs.n)):
        child = localize_simple(sys, sprime)
        return ReductionNode(
            "parabolic-induction",
            sys,
            detail=(tuple(sorted(sprime)),),
            children=(ReductionNode("open", child),),
        )
    table = build_colors(sys)
    pairs = decomposing_pairs(sys, table, first_only=True)
    if pairs:
        d1, d2 = pairs[0]
        d3 = tuple(sorted(set(d1) | set(d2), key=table.names().index))
        children = tuple(
            ReductionNode("open", quotient(sys, d, table)) for d in (d1, d2, d3)
        )
        return ReductionNode("fiber-product", sys, detail=(d1, d2, d3), children=children)
    proj = projective_colors(sys)
    if proj:
        name = min(p[0] for p in proj)
        child = quotient(sys, (name,), table, require_star=False)
        return ReductionNode(
            "projective-fibration", sys, detail=(name,), children=(ReductionNode("open", child),)
        )
    if is_cuspidal(sys):
        return ReductionNode("primitive", sys, markers=primitive_markers(sys))
    return ReductionNode("closed", sys)


def reduction_tree(sys: SphericalSystem, _depth: int = 0) -> ReductionNode:
    """Recursive reduction; leaves are primitive systems or closed nodes
    (no case applies, classification assumed known for rank <= 2)."""
    if _depth > 4 * (sys.rs.n + len(sys.sigma) + 4):
        raise RuntimeError("reduction runaway: depth guard tripped")
    node = reduction_step(sys)
    if node.tag in ("primitive", "closed"):
        return node
    children = tuple(reduction_tree(c.system, _depth + 1) for c in node.children)
    return ReductionNode(node.tag, sys, detail=node.detail, markers=node.markers, children=children)

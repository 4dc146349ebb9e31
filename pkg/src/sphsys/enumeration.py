"""Exhaustive generation of all valid spherical systems of a root system."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .catalog import compatible_roots
from .lattice import is_independent
from .quotient import build_colors, defect, is_reductive, is_star_distinguished
from .rootsystem import RootSystem, Vec, support, unit
from .structure import is_cuspidal, is_primitive
from .system import AColor, SphericalSystem, is_valid


@dataclass(frozen=True)
class EnumerationQuery:
    rs: RootSystem
    cuspidal: bool = False
    primitive: bool = False
    reductive: bool | None = None
    max_rank: int | None = None
    defect: int | None = None
    mod_aut: bool = False

    def __post_init__(self) -> None:
        if self.max_rank is not None and self.max_rank < 0:
            raise ValueError("max_rank must be nonnegative")


def _sigma_pair_ok(rs: RootSystem, sigma: list[Vec]) -> bool:
    """Axioms Sigma1/Sigma2 restricted to the candidate set."""
    sigset = set(sigma)
    n = rs.n
    for i in range(n):
        if unit(n, i, 2) in sigset:
            for v in sigma:
                if v == unit(n, i, 2):
                    continue
                p = rs.pairing(i, v)
                if p % 2 != 0 or p > 0:
                    return False
    for i in range(n):
        for j in range(i + 1, n):
            if rs.cartan[i][j] == 0 and tuple(
                1 if k in (i, j) else 0 for k in range(n)
            ) in sigset:
                for v in sigma:
                    if rs.pairing(i, v) != rs.pairing(j, v):
                        return False
    return True


def _shared_structures(rs: RootSystem, simple: list[int]):
    """Ways to cover each simple spherical root by two color slots, where a
    color may straddle an orthogonal pair of roots."""
    ortho_pairs = [
        (a, b)
        for a, b in combinations(simple, 2)
        if rs.cartan[a][b] == 0
    ]
    structures = []

    def rec(k: int, chosen: list[tuple[int, int]], load: dict[int, int]):
        if k == len(ortho_pairs):
            structures.append(tuple(chosen))
            return
        a, b = ortho_pairs[k]
        rec(k + 1, chosen, load)
        for times in (1, 2):
            if load.get(a, 0) + times <= 2 and load.get(b, 0) + times <= 2:
                load[a] = load.get(a, 0) + times
                load[b] = load.get(b, 0) + times
                rec(k + 1, chosen + [(a, b)] * times, dict(load))
                load[a] -= times
                load[b] -= times

    rec(0, [], {})
    return structures


def _apart_assignments(rs: RootSystem, sigma: list[Vec]):
    """All A-part candidates for the given sigma (filtered later by validate)."""
    simple = sorted(
        min(support(v)) for v in sigma if len(support(v)) == 1 and max(v) == 1
    )
    if not simple:
        yield ()
        return
    m = len(sigma)
    bound = max(
        (abs(rs.pairing(a, v)) for a in simple for v in sigma), default=0
    )
    lo = -bound - 1

    for shared in _shared_structures(rs, simple):
        shared_free = []  # per shared color, the sigma positions to fill
        for a, b in shared:
            shared_free.append(
                [k for k in range(m) if sigma[k] not in (unit(rs.n, a), unit(rs.n, b))]
            )

        def gen_singles(acc: tuple):
            def rec(i: int, build: list):
                if i == len(simple):
                    yield acc + tuple(build)
                    return
                a = simple[i]
                have = [row for moved, row in acc if a in moved] + [
                    row for moved, row in build if a in moved
                ]
                need = 2 - len(have)
                target = tuple(rs.pairing(a, v) for v in sigma)
                ka = sigma.index(unit(rs.n, a))
                if need <= 0:
                    if need == 0 and tuple(
                        sum(r[k] for r in have) for k in range(m)
                    ) == target:
                        yield from rec(i + 1, build)
                    return
                if need == 1:
                    row = tuple(target[k] - have[0][k] for k in range(m))
                    if row[ka] == 1 and all(x <= 1 for x in row):
                        yield from rec(i + 1, build + [(frozenset((a,)), row)])
                    return
                # two fresh rows (r, target - r); canonical order kills swaps
                free = [k for k in range(m) if k != ka]
                for vals in product(range(lo, 1), repeat=len(free)):
                    row = [0] * m
                    row[ka] = 1
                    for f, v in zip(free, vals):
                        row[f] = v
                    other = tuple(target[k] - row[k] for k in range(m))
                    if other[ka] != 1 or any(x > 1 for x in other):
                        continue
                    if tuple(row) > other:
                        continue
                    yield from rec(
                        i + 1,
                        build + [(frozenset((a,)), tuple(row)), (frozenset((a,)), other)],
                    )

            yield from rec(0, [])

        def gen_shared(idx: int, acc: tuple):
            if idx == len(shared):
                yield from gen_singles(acc)
                return
            a, b = shared[idx]
            free = shared_free[idx]
            for vals in product(range(lo, 1), repeat=len(free)):
                row = [0] * m
                for k in range(m):
                    if sigma[k] == unit(rs.n, a) or sigma[k] == unit(rs.n, b):
                        row[k] = 1
                for f, v in zip(free, vals):
                    row[f] = v
                yield from gen_shared(idx + 1, acc + ((frozenset((a, b)), tuple(row)),))

        yield from gen_shared(0, ())


def _name_apart(parts) -> tuple[AColor, ...]:
    counts: dict[int, int] = {}
    out = []
    for moved, row in parts:
        lead = min(moved)
        counts[lead] = counts.get(lead, 0) + 1
        suffix = "p" if counts[lead] == 1 else "m"
        if len(moved) > 1:
            name = "d" + "_".join(str(i + 1) for i in sorted(moved))
            if counts[lead] > 1:
                name += suffix
        else:
            name = f"d{lead + 1}{suffix}"
        out.append(AColor(name, moved, row))
    return tuple(out)


def enumerate_systems(query: EnumerationQuery):
    """Generate all valid systems of the root system, deterministically."""
    rs = query.rs
    n = rs.n
    seen: set = set()
    for mask in range(1 << n):
        sp = frozenset(i for i in range(n) if mask >> i & 1)
        roots = compatible_roots(rs, sp)
        cap = len(roots) if query.max_rank is None else min(query.max_rank, len(roots))

        def grow(start: int, sigma: list[Vec]):
            yield list(sigma)
            if len(sigma) >= cap:
                return
            for k in range(start, len(roots)):
                cand = sigma + [roots[k]]
                if not is_independent(cand):
                    continue
                if not _sigma_pair_ok(rs, cand):
                    continue
                yield from grow(k + 1, cand)

        for sigma in grow(0, []):
            for parts in _apart_assignments(rs, sigma):
                sys = SphericalSystem(rs, sp, tuple(sigma), _name_apart(parts))
                if not is_valid(sys):
                    continue
                key = sys.key()
                if key in seen:
                    continue
                seen.add(key)
                if query.mod_aut:
                    ikey = _involution_image(sys).key()
                    if ikey != key and ikey in seen:
                        continue
                if not _passes_filters(sys, query):
                    continue
                yield sys


def _involution_image(sys: SphericalSystem) -> SphericalSystem:
    iota = sys.rs.dynkin_involution

    def map_vec(v: Vec) -> Vec:
        w = [0] * len(v)
        for i, c in enumerate(v):
            w[iota[i]] = c
        return tuple(w)

    sigma = tuple(map_vec(v) for v in sys.sigma)
    apart = tuple(
        AColor(c.name, frozenset(iota[i] for i in c.moved_by), c.row) for c in sys.apart
    )
    # rows follow the image roots in original slot order; constructor re-sorts
    return SphericalSystem(
        sys.rs, frozenset(iota[i] for i in sys.sp), sigma, apart
    )


def _passes_filters(sys: SphericalSystem, query: EnumerationQuery) -> bool:
    if query.cuspidal and not is_cuspidal(sys):
        return False
    if query.defect is not None and defect(sys) != query.defect:
        return False
    if query.reductive is not None and is_reductive(sys)[0] != query.reductive:
        return False
    if query.primitive and not is_primitive(sys, with_markers=False)[0]:
        return False
    return True


def probe_distinguished_not_star(query: EnumerationQuery):
    """Scan for distinguished subsets that are not (*)-distinguished."""
    from .quotient import all_subsets

    hits = []
    for sys in enumerate_systems(query):
        table = build_colors(sys)
        for names in all_subsets(table):
            rep = is_star_distinguished(sys, names, table)
            if rep.distinguished and not rep.star:
                hits.append((sys, names))
    return hits

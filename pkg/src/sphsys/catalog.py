"""The table of spherical roots of rank-1 wonderful varieties (adjoint case).

Entries are instantiated per embedding into a concrete root system.  Each
entry records which support positions must lie in S^p (required friends)
and which may (optional friends); compatibility additionally demands that
every root of S^p pairs to zero with the spherical root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import RootSystem, Vec, support, unit, vec_key


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    gamma: Vec
    order: tuple[int, ...]  # support positions in pattern order
    required: frozenset[int]
    optional: frozenset[int]
    verify: bool = False


def _entry(rs: RootSystem, tag, coeffs, order, required, optional=(), verify=False) -> CatalogEntry:
    gamma = [0] * rs.n
    for c, i in zip(coeffs, order):
        gamma[i] = c
    e = CatalogEntry(tag, tuple(gamma), tuple(order), frozenset(required), frozenset(optional), verify)
    for a in e.required:
        if rs.pairing(a, e.gamma) != 0:
            raise AssertionError(f"catalog table bug: required friend {a} not paired to zero in {tag}")
    return e


def _tree_paths_from(rs: RootSystem, start: int) -> list[list[int]]:
    """All simple paths of length >= 2 starting at `start` (diagram is a forest)."""
    out = []

    def grow(path: list[int]) -> None:
        cur = path[-1]
        for y in rs.neighbors(cur):
            if len(path) >= 2 and y == path[-2]:
                continue
            nxt = path + [y]
            out.append(nxt)
            grow(nxt)

    grow([start])
    return out


def _single(rs: RootSystem, a: int, b: int) -> bool:
    return rs.cartan[a][b] * rs.cartan[b][a] == 1


@lru_cache(maxsize=None)
def catalog_entries(rs: RootSystem) -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []
    n = rs.n

    for i in range(n):
        entries.append(_entry(rs, "a", (1,), (i,), ()))
        entries.append(_entry(rs, "2a", (2,), (i,), ()))
    for i in range(n):
        for j in range(i + 1, n):
            if rs.cartan[i][j] == 0:
                entries.append(_entry(rs, "a+a'", (1, 1), (i, j), ()))

    for start in range(n):
        for path in _tree_paths_from(rs, start):
            m = len(path)
            bonds_single = [_single(rs, a, b) for a, b in zip(path, path[1:])]
            letter = rs.components[rs.component_of(start)].letter
            if all(bonds_single):
                if path[0] < path[-1]:  # one orientation per chain
                    entries.append(_entry(rs, f"a({m})", (1,) * m, path, path[1:-1]))
                if m == 3 and path[0] < path[-1]:
                    entries.append(
                        _entry(rs, "a3", (1, 2, 1), path, (path[0], path[2]), verify=True)
                    )
                continue
            if all(bonds_single[:-1]) and not bonds_single[-1]:
                a, b = path[-2], path[-1]
                if rs.cartan[a][b] * rs.cartan[b][a] != 2:
                    continue  # triple bond: G2 handled explicitly
                if rs.cartan[b][a] == -2 and letter != "C":
                    # B_m shape: terminal short
                    entries.append(_entry(rs, f"b({m})", (1,) * m, path, path[1:]))
                    entries.append(_entry(rs, f"b'({m})", (2,) * m, path, path[1:]))
                    if m == 3:
                        entries.append(
                            _entry(rs, "b3", (1, 2, 3), path, path[:2], verify=True)
                        )
                if rs.cartan[a][b] == -2 and (
                    letter == "C" or (letter == "F" and m >= 3)
                ):
                    # C_m shape: terminal long
                    coeffs = (1,) + (2,) * (m - 2) + (1,) if m >= 3 else (1, 1)
                    entries.append(
                        _entry(rs, f"c*({m})", coeffs, path, path[2:], optional=(path[0],))
                    )
                    if m == 2:
                        # doubled pair, the B2 = C2 coincidence seen from C
                        entries.append(_entry(rs, "b'(2)", (2, 2), path, (path[0],)))

    entries.extend(_fork_entries(rs))
    entries.extend(_exceptional_entries(rs))
    return tuple(entries)


def _fork_entries(rs: RootSystem) -> list[CatalogEntry]:
    """d(m) entries, m >= 4: doubled chain into a fork with two tips."""
    out = []
    for c in range(rs.n):
        nb = rs.neighbors(c)
        if len(nb) < 2:
            continue
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                t1, t2 = nb[i], nb[j]
                if rs.cartan[t1][t2] != 0:
                    continue
                if not (_single(rs, c, t1) and _single(rs, c, t2)):
                    continue
                baddies = {t1, t2}
                for x in nb:
                    if x in baddies:
                        continue
                    for chain in _descending_chains(rs, c, x, baddies):
                        m = len(chain) + 3
                        order = list(reversed(chain)) + [c, t1, t2]
                        coeffs = (2,) * (len(chain) + 1) + (1, 1)
                        out.append(_entry(rs, f"d({m})", coeffs, order, order[1:]))
    return out


def _descending_chains(rs: RootSystem, center: int, first: int, banned: set[int]) -> list[list[int]]:
    """Simple-bond paths [first, ...] leading away from `center`."""
    if not _single(rs, center, first):
        return []
    chains = [[first]]
    out = [[first]]
    while chains:
        nxt = []
        for ch in chains:
            prev = ch[-2] if len(ch) >= 2 else center
            for y in rs.neighbors(ch[-1]):
                if y == prev or y == center or y in banned:
                    continue
                if not _single(rs, ch[-1], y):
                    continue
                grown = ch + [y]
                out.append(grown)
                nxt.append(grown)
        chains = nxt
    return out


def _exceptional_entries(rs: RootSystem) -> list[CatalogEntry]:
    out = []
    for ci, comp in enumerate(rs.components):
        idx = list(rs.component_indices(ci))
        if comp.letter == "F":
            out.append(
                _entry(rs, "f4", (1, 2, 3, 2), idx, idx[:3], verify=True)
            )
        elif comp.letter == "G":
            a1, a2 = idx
            out.append(_entry(rs, "g2-short", (1, 1), (a1, a2), (), verify=True))
            out.append(_entry(rs, "g2-mid", (2, 1), (a1, a2), (a2,), verify=True))
            out.append(_entry(rs, "g2-double", (4, 2), (a1, a2), (a2,), verify=True))
    return out


@lru_cache(maxsize=None)
def _entries_by_gamma(rs: RootSystem) -> dict[Vec, tuple[CatalogEntry, ...]]:
    by: dict[Vec, list[CatalogEntry]] = {}
    for e in catalog_entries(rs):
        by.setdefault(e.gamma, []).append(e)
    return {g: tuple(es) for g, es in by.items()}


def _check_gamma(gamma: Vec) -> None:
    if any(c < 0 for c in gamma):
        raise ValueError("spherical roots have nonnegative coefficients")
    if all(c == 0 for c in gamma):
        raise ValueError("zero vector is not a spherical root")


def is_compatible(rs: RootSystem, gamma: Vec, sp: frozenset[int] | set[int]) -> bool:
    """Whether gamma is a catalog root compatible with the parabolic datum sp."""
    _check_gamma(gamma)
    if any(rs.pairing(a, gamma) != 0 for a in sp):
        return False
    spsupp = frozenset(sp) & support(gamma)
    for e in _entries_by_gamma(rs).get(tuple(gamma), ()):
        if e.required <= spsupp <= (e.required | e.optional):
            return True
    return False


def compatible_roots(rs: RootSystem, sp: frozenset[int] | set[int]) -> list[Vec]:
    """All catalog roots compatible with sp, in canonical order."""
    out = [g for g in _entries_by_gamma(rs) if is_compatible(rs, g, sp)]
    out.sort(key=vec_key)
    return out


def classify_tail_shape(
    rs: RootSystem,
    gamma: Vec,
    sp: frozenset[int] | set[int],
    sigma: tuple[Vec, ...] | None = None,
    apart_rows: tuple[Vec, Vec] | None = None,
) -> str | None:
    """Match gamma against the tail patterns b(m), b'(m), d(m), c*(m).

    The m = 1 and m = 2 degenerations carry extra conditions: b(1) needs
    both colors of the moved root to pair -1 with the unique non-orthogonal
    spherical root (checked when `sigma` and the two A-rows are supplied),
    and d(2) needs the two roots to have equal neighbor sets.
    """
    _check_gamma(gamma)
    entries = _entries_by_gamma(rs).get(tuple(gamma), ())
    for e in entries:
        if e.tag[0] in ("b", "c", "d") and "(" in e.tag:
            return e.tag
    for e in entries:
        if e.tag == "a+a'":
            i, j = e.order
            if set(rs.neighbors(i)) == set(rs.neighbors(j)):
                return "d(2)"
        elif e.tag == "2a":
            (i,) = support(gamma)
            if rs.is_short_in_B(i) and i not in sp:
                return "b'(1)"
        elif e.tag == "a":
            (i,) = support(gamma)
            if not rs.is_short_in_B(i) or i in sp:
                continue
            if sigma is not None:
                others = [s for s in sigma if s != tuple(gamma)]
                nonorth = [s for s in others if not rs.orthogonal(i, s)]
                if len(nonorth) != 1:
                    continue
                if apart_rows is not None:
                    k = sigma.index(nonorth[0])
                    (r1, r2) = apart_rows
                    if not (r1[k] == r2[k] == -1):
                        continue
            return "b(1)"
    return None


def catalog_table(rs: RootSystem) -> list[CatalogEntry]:
    """All embedded entries in canonical display order."""
    return sorted(catalog_entries(rs), key=lambda e: (vec_key(e.gamma), e.tag))

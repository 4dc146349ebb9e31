"""Distinguished subsets, quotient systems, defect, reductivity, center
weights and weight monoids.

All feasibility questions are answered in exact rational arithmetic; all
lattice questions by exact integer reduction.  Subsets of colors are
referred to by color name throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lattice import (
    clear_denominators,
    hilbert_halfspace,
    hilbert_kernel,
    kernel_basis,
    lattices_equal,
    rank as mat_rank,
    solve_inequalities,
)
from .rootsystem import Vec, support, vec_key
from .system import AColor, Color, ColorTable, SphericalSystem, build_colors, localize_sigma


@dataclass(frozen=True)
class QuotientReport:
    delta_prime: tuple[str, ...]
    distinguished: bool
    witness: tuple[int, ...] | None  # positive coefficients on delta_prime
    star: bool | None = None
    smooth: bool | None = None
    homogeneous: bool | None = None
    quotient: SphericalSystem | None = None


@dataclass(frozen=True)
class CenterData:
    q_colors: tuple[str, ...]
    n_basis: tuple[Vec, ...]  # in simple-root coordinates
    n_basis_sigma: tuple[Vec, ...]  # the same vectors over the sigma basis
    lambda_weights: tuple[tuple[tuple[str, int, int], ...], ...]  # (color, weight index, coeff)
    dim_c: int


def _table(sys: SphericalSystem, table: ColorTable | None = None) -> ColorTable:
    return table if table is not None else build_colors(sys)


def _subset(table: ColorTable, names) -> tuple[Color, ...]:
    seen = []
    for name in names:
        seen.append(table.by_name(name))
    return tuple(seen)


def is_distinguished(sys: SphericalSystem, names, table: ColorTable | None = None) -> QuotientReport:
    """Search for a strictly positive combination pairing >= 0 with all of sigma."""
    table = _table(sys, table)
    chosen = _subset(table, names)
    key = tuple(c.name for c in chosen)
    if not chosen:
        return QuotientReport(key, False, None)
    k = len(chosen)
    cons = []
    for i in range(k):
        cons.append((tuple(1 if j == i else 0 for j in range(k)), 1))
    for col in range(len(sys.sigma)):
        cons.append((tuple(c.row[col] for c in chosen), 0))
    x = solve_inequalities(cons, k)
    if x is None:
        return QuotientReport(key, False, None)
    return QuotientReport(key, True, tuple(clear_denominators(x)))


def quotient_sigma(sys: SphericalSystem, names, table: ColorTable | None = None) -> list[Vec]:
    """Minimal generators of the sigma-monoid killed by the chosen colors."""
    table = _table(sys, table)
    chosen = _subset(table, names)
    rows = [c.row for c in chosen]
    return hilbert_kernel(rows, len(sys.sigma))


def _to_roots(sys: SphericalSystem, sigma_coords: Vec) -> Vec:
    out = [0] * sys.rs.n
    for k, q in enumerate(sigma_coords):
        if q:
            for i, c in enumerate(sys.sigma[k]):
                out[i] += q * c
    return tuple(out)


def is_star_distinguished(
    sys: SphericalSystem, names, table: ColorTable | None = None
) -> QuotientReport:
    """Distinguishedness plus the Z-basis condition on the quotient roots."""
    table = _table(sys, table)
    rep = is_distinguished(sys, names, table)
    if not rep.distinguished:
        return QuotientReport(rep.delta_prime, False, None, star=False)
    chosen = _subset(table, names)
    rows = [c.row for c in chosen]
    gens = hilbert_kernel(rows, len(sys.sigma))
    kernel = kernel_basis(rows, len(sys.sigma))
    star = len(gens) == len(kernel) and lattices_equal(gens, kernel)
    if not star:
        return QuotientReport(rep.delta_prime, True, rep.witness, star=False)
    q = _quotient_from_gens(sys, rep.delta_prime, gens, table)
    sigset = set(sys.sigma)
    smooth = all(_to_roots(sys, g) in sigset for g in gens)
    return QuotientReport(
        rep.delta_prime,
        True,
        rep.witness,
        star=True,
        smooth=smooth,
        homogeneous=not gens,
        quotient=q,
    )


def _quotient_from_gens(
    sys: SphericalSystem, names: tuple[str, ...], gens: list[Vec], table: ColorTable
) -> SphericalSystem:
    chosen = set(names)
    sp2 = set(sys.sp)
    for a in range(sys.rs.n):
        moved = table.moved_by(a)
        if moved and all(c.name in chosen for c in moved):
            sp2.add(a)
    # sigma2 and the rows stay aligned with gens; the constructor sorts both
    sigma2 = [_to_roots(sys, g) for g in gens]
    simple2 = {min(support(v)) for v in sigma2 if len(support(v)) == 1 and max(v) == 1}
    apart2 = []
    for c in sys.apart:
        kept = c.moved_by & simple2
        if not kept:
            continue
        row = tuple(sum(g[k] * c.row[k] for k in range(len(sys.sigma))) for g in gens)
        apart2.append(AColor(c.name, kept, row))
    return SphericalSystem(sys.rs, frozenset(sp2), tuple(sigma2), tuple(apart2))


def quotient(
    sys: SphericalSystem,
    names,
    table: ColorTable | None = None,
    require_star: bool = True,
) -> SphericalSystem:
    """The quotient system by a (*)-distinguished subset of colors.

    With `require_star=False` the quotient triple is formed by the defining
    rules even when the quotient roots fail to base the kernel lattice.
    """
    table = _table(sys, table)
    if not tuple(names):
        return sys
    rep = is_star_distinguished(sys, names, table)
    if not rep.distinguished:
        raise ValueError(f"{tuple(names)} is not distinguished")
    if rep.star:
        assert rep.quotient is not None
        return rep.quotient
    if require_star:
        chosen = _subset(table, names)
        kernel = kernel_basis([c.row for c in chosen], len(sys.sigma))
        raise ValueError(
            f"{tuple(names)} is not (*)-distinguished: quotient roots do not base "
            f"the kernel lattice {kernel}"
        )
    gens = quotient_sigma(sys, names, table)
    return _quotient_from_gens(sys, tuple(names), gens, table)


def defect(sys: SphericalSystem, table: ColorTable | None = None) -> int:
    table = _table(sys, table)
    return len(table.colors) - len(sys.sigma)


def is_reductive(sys: SphericalSystem, table: ColorTable | None = None) -> tuple[bool, Vec | None]:
    """Search for sigma >= 0 with strictly positive pairing against every color."""
    table = _table(sys, table)
    if not table.colors:
        return True, tuple([0] * sys.rs.n)
    m = len(sys.sigma)
    if m == 0:
        return False, None
    cons = []
    for k in range(m):
        cons.append((tuple(1 if j == k else 0 for j in range(m)), 0))
    for c in table.colors:
        cons.append((c.row, 1))
    y = solve_inequalities(cons, m)
    if y is None:
        return False, None
    return True, _to_roots(sys, tuple(clear_denominators(y)))


def all_subsets(table: ColorTable):
    names = table.names()
    for r in range(1, len(names) + 1):
        for combo in combinations(range(len(names)), r):
            yield tuple(names[i] for i in combo)


def distinguished_subsets(sys: SphericalSystem, table: ColorTable | None = None) -> list[QuotientReport]:
    table = _table(sys, table)
    out = []
    for names in all_subsets(table):
        rep = is_star_distinguished(sys, names, table)
        if rep.distinguished:
            out.append(rep)
    return out


def minimal_subsets(sys: SphericalSystem, kind: str, table: ColorTable | None = None) -> list[tuple[str, ...]]:
    """Inclusion-minimal (*)-distinguished or homogeneous subsets."""
    if kind not in ("star", "homogeneous"):
        raise ValueError(f"unknown subset kind {kind!r}")
    table = _table(sys, table)
    found: list[tuple[str, ...]] = []
    for names in all_subsets(table):
        nameset = set(names)
        if any(set(f) <= nameset for f in found):
            continue
        rep = is_star_distinguished(sys, names, table)
        ok = bool(rep.star) and (kind == "star" or bool(rep.homogeneous))
        if ok:
            found.append(names)
    return found


def higher_defect_quotients(sys: SphericalSystem, table: ColorTable | None = None) -> list[tuple[tuple[str, ...], int]]:
    """Minimal (*)-distinguished subsets whose quotient strictly raises the defect."""
    table = _table(sys, table)
    d0 = defect(sys, table)
    out = []
    for names in minimal_subsets(sys, "star", table):
        q = quotient(sys, names, table)
        jump = defect(q) - d0
        if jump > 0:
            out.append((names, jump))
    return out


def _restrict_subset_to_localization(
    sys: SphericalSystem, loc: SphericalSystem, chosen: frozenset[str]
) -> frozenset[str]:
    """Image of a color subset in a sigma-localization.

    A color of the localization is kept when every color of the original
    system lying over it belongs to the subset.
    """
    table = build_colors(sys)
    loc_table = build_colors(loc)
    keep = []
    for c in loc_table.colors:
        if c.kind == "A":
            sources = [c.name]
        else:
            sources = []
            for a in sorted(c.moved_by):
                sources.extend(x.name for x in table.moved_by(a))
        if sources and all(s in chosen for s in sources):
            keep.append(c.name)
    return frozenset(keep)


def higher_defect_witnesses(sys: SphericalSystem, names) -> list[Vec]:
    """Spherical roots certifying a higher-defect quotient via rank-drop localizations."""
    table = build_colors(sys)
    jumps = dict(higher_defect_quotients(sys, table))
    key = tuple(names)
    if key not in jumps:
        raise ValueError(f"{key} is not a minimal (*)-distinguished subset of higher defect")
    k = jumps[key]
    out = []
    full = frozenset(range(sys.rs.n))
    for gamma in sys.sigma:
        rest = tuple(v for v in sys.sigma if v != gamma)
        supp_rest = frozenset().union(*(support(v) for v in rest)) if rest else frozenset()
        if supp_rest == full:
            continue
        loc = localize_sigma(sys, rest)
        restricted = _restrict_subset_to_localization(sys, loc, frozenset(key))
        if tuple(sorted(restricted)) not in {
            tuple(sorted(m)) for m in minimal_subsets(loc, "star")
        }:
            continue
        loc_table = build_colors(loc)
        q = quotient(loc, tuple(sorted(restricted)), loc_table)
        if defect(q) - defect(loc, loc_table) == k - 1:
            out.append(gamma)
    return out


def center_data(sys: SphericalSystem, names) -> CenterData:
    """Lattice and weight data of the connected center attached to a minimal
    homogeneous subset of colors."""
    table = build_colors(sys)
    key = tuple(names)
    minimal = {tuple(sorted(m)) for m in minimal_subsets(sys, "homogeneous", table)}
    if tuple(sorted(key)) not in minimal:
        raise ValueError(f"{key} is not a minimal homogeneous subset")
    chosen = _subset(table, key)
    rows = [c.row for c in chosen]
    nbasis_sigma = kernel_basis(rows, len(sys.sigma))
    others = [c for c in table.colors if c.name not in set(key)]
    iota = sys.rs.dynkin_involution

    weights = []
    for g in nbasis_sigma:
        entry = []
        for c in others:
            coeff = sum(g[k] * c.row[k] for k in range(len(sys.sigma)))
            if len(c.moved_by) != 1:
                raise ValueError(
                    f"color {c.name!r} outside a homogeneous subset moved by several roots"
                )
            (alpha,) = c.moved_by
            entry.append((c.name, iota[alpha], coeff))
        weights.append(tuple(entry))

    q = quotient(sys, key, table)
    sp2 = q.sp
    n = sys.rs.n
    lam_rows = []
    for entry in weights:
        vec = [0] * n
        for _, wi, coeff in entry:
            vec[wi] += coeff
        lam_rows.append(tuple(vec))
    root_cols = [tuple(sys.rs.cartan[i][j] for i in range(n)) for j in sorted(sp2)]
    base_rank = mat_rank(root_cols) if root_cols else 0
    fam_rank = (mat_rank(root_cols + lam_rows) if (root_cols or lam_rows) else 0) - base_rank
    dim_c = (n - len(sp2)) - fam_rank
    return CenterData(
        q_colors=key,
        n_basis=tuple(_to_roots(sys, g) for g in nbasis_sigma),
        n_basis_sigma=tuple(nbasis_sigma),
        lambda_weights=tuple(weights),
        dim_c=dim_c,
    )


def weight_monoid(sys: SphericalSystem, names) -> list[Vec]:
    """Hilbert basis of the sigma-monoid nonnegative on the chosen colors,
    in simple-root coordinates."""
    table = build_colors(sys)
    rep = is_star_distinguished(sys, names, table)
    if not rep.homogeneous:
        raise ValueError(f"{tuple(names)} is not a homogeneous subset")
    chosen = _subset(table, names)
    gens = hilbert_halfspace([c.row for c in chosen], len(sys.sigma))
    return [_to_roots(sys, g) for g in gens]


def hilbert_basis(rows: list[Vec], ncols: int, mode: str) -> list[Vec]:
    """Minimal generators of the nonnegative points killed by (kernel mode)
    or nonnegative on (halfspace mode) the given pairing rows."""
    if mode == "kernel":
        return hilbert_kernel(list(rows), ncols)
    if mode == "halfspace":
        return hilbert_halfspace(list(rows), ncols)
    raise ValueError(f"unknown mode {mode!r}")

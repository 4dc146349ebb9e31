"""Spherical systems: the triple (S^p, Sigma, A), the full color set with
its Cartan pairing, axiom validation, and both localizations."""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .lattice import is_independent
from .rootsystem import RootSystem, Vec, support, unit, vec_key


@dataclass(frozen=True)
class AColor:
    """An element of the A-part: name, moved simple roots, functional row."""

    name: str
    moved_by: frozenset[int]
    row: Vec


@dataclass(frozen=True, eq=False)
class SphericalSystem:
    rs: RootSystem
    sp: frozenset[int]
    sigma: tuple[Vec, ...]
    apart: tuple[AColor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "sp", frozenset(self.sp))
        for i in self.sp:
            self.rs._check_index(i)
        sig = [tuple(v) for v in self.sigma]
        for v in sig:
            self.rs._check_vec(v)
        order = sorted(range(len(sig)), key=lambda k: vec_key(sig[k]))
        object.__setattr__(self, "sigma", tuple(sig[k] for k in order))
        ap = []
        for c in self.apart:
            if len(c.row) != len(sig):
                raise ValueError(f"A-row of {c.name!r} has length {len(c.row)}, expected {len(sig)}")
            ap.append(AColor(c.name, frozenset(c.moved_by), tuple(c.row[k] for k in order)))
        ap.sort(key=lambda c: (min(c.moved_by, default=-1), c.row, c.name))
        object.__setattr__(self, "apart", tuple(ap))

    @property
    def rank(self) -> int:
        return len(self.sigma)

    @property
    def simple_sigma(self) -> frozenset[int]:
        """S intersected with Sigma: simple roots that are spherical roots."""
        out = set()
        for v in self.sigma:
            s = support(v)
            if len(s) == 1:
                (i,) = s
                if v[i] == 1:
                    out.add(i)
        return frozenset(out)

    def a_colors_of(self, alpha: int) -> tuple[AColor, ...]:
        return tuple(c for c in self.apart if alpha in c.moved_by)

    def key(self):
        """Identity of the triple; color names are serialization sugar."""
        return (
            self.rs.components,
            tuple(sorted(self.sp)),
            self.sigma,
            tuple(sorted((tuple(sorted(c.moved_by)), c.row) for c in self.apart)),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SphericalSystem) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        from .textio import format_system

        return f"<SphericalSystem {format_system(self, oneline=True)}>"


@dataclass(frozen=True)
class Color:
    name: str
    kind: str  # "A", "a'" or "b"
    moved_by: frozenset[int]
    row: Vec


@dataclass(frozen=True)
class ColorTable:
    colors: tuple[Color, ...]

    @property
    def matrix(self) -> tuple[Vec, ...]:
        return tuple(c.row for c in self.colors)

    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.colors)

    def by_name(self, name: str) -> Color:
        for c in self.colors:
            if c.name == name:
                return c
        raise KeyError(f"no color named {name!r}")

    def moved_by(self, alpha: int) -> tuple[Color, ...]:
        return tuple(c for c in self.colors if alpha in c.moved_by)


def build_colors(sys: SphericalSystem) -> ColorTable:
    """The full color set Delta = A + a'-colors + b-classes with functionals."""
    rs = sys.rs
    sigset = set(sys.sigma)
    colors = [Color(c.name, "A", c.moved_by, c.row) for c in sys.apart]

    half = {i for i in range(rs.n) if unit(rs.n, i, 2) in sigset}
    simple = sys.simple_sigma
    for i in sorted(half):
        row = []
        for v in sys.sigma:
            p = rs.pairing(i, v)
            if p % 2 != 0:
                raise ValueError(f"half-integer a' functional at {rs.root_name(i)}")
            row.append(p // 2)
        colors.append(Color(f"D{i + 1}", "a'", frozenset([i]), tuple(row)))

    pool = [i for i in range(rs.n) if i not in simple and i not in half and i not in sys.sp]
    parent = {i: i for i in pool}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in pool:
        for b in pool:
            if a < b and rs.cartan[a][b] == 0 and tuple(
                1 if k in (a, b) else 0 for k in range(rs.n)
            ) in sigset:
                parent[find(a)] = find(b)

    classes: dict[int, list[int]] = {}
    for i in pool:
        classes.setdefault(find(i), []).append(i)
    for members in sorted(classes.values(), key=min):
        rows = {tuple(rs.pairing(i, v) for v in sys.sigma) for i in members}
        if len(rows) != 1:
            raise ValueError(
                "inconsistent functionals across a b-color class (axiom Sigma2 fails)"
            )
        colors.append(Color(f"D{min(members) + 1}", "b", frozenset(members), rows.pop()))

    a_part = [c for c in colors if c.kind == "A"]
    rest = sorted((c for c in colors if c.kind != "A"), key=lambda c: min(c.moved_by))
    table = tuple(a_part + rest)
    names = [c.name for c in table]
    if len(set(names)) != len(names):
        raise ValueError("color names collide; rename the A-part colors")
    return ColorTable(table)


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str

    def __str__(self) -> str:
        return f"[{self.axiom}] {self.message}"


def validate(sys: SphericalSystem) -> list[Violation]:
    """Check all spherical-system axioms; an empty list means the system is valid."""
    rs = sys.rs
    bad: list[Violation] = []
    name = rs.root_name

    for v in sys.sigma:
        try:
            if not catalog.is_compatible(rs, v, sys.sp):
                bad.append(Violation("compatibility", f"{_fmt(rs, v)} is not compatible with sp"))
        except ValueError as e:
            bad.append(Violation("compatibility", f"{v}: {e}"))

    if sys.sigma and not is_independent(list(sys.sigma)):
        bad.append(Violation("independence", "sigma is linearly dependent over Z"))

    simple = sys.simple_sigma
    for c in sys.apart:
        if not c.moved_by:
            bad.append(Violation("A3", f"color {c.name!r} moves no simple root"))
        stray = c.moved_by - simple
        if stray:
            bad.append(
                Violation("A3", f"color {c.name!r} moved by {_names(rs, stray)} outside S v Sigma")
            )
        for k, v in enumerate(sys.sigma):
            if c.row[k] > 1:
                bad.append(Violation("A1", f"c({c.name}, {_fmt(rs, v)}) = {c.row[k]} > 1"))
            if c.row[k] == 1:
                s = support(v)
                inside = len(s) == 1 and v[min(s)] == 1 and min(s) in c.moved_by
                if not inside:
                    bad.append(
                        Violation("A1", f"c({c.name}, {_fmt(rs, v)}) = 1 but the root is not moved by it")
                    )
        moved = sorted(c.moved_by)
        for a in moved:
            for b in moved:
                if a < b and rs.cartan[a][b] != 0:
                    bad.append(
                        Violation(
                            "A1",
                            f"color {c.name!r} shared between non-orthogonal {name(a)}, {name(b)}",
                        )
                    )

    for a in sorted(simple):
        pair = sys.a_colors_of(a)
        if len(pair) != 2:
            bad.append(Violation("A2", f"card A({name(a)}) = {len(pair)}, expected 2"))
            continue
        for k, v in enumerate(sys.sigma):
            total = pair[0].row[k] + pair[1].row[k]
            if total != rs.pairing(a, v):
                bad.append(
                    Violation(
                        "A2",
                        f"rows of A({name(a)}) sum to {total} != <{name(a)}^vee, {_fmt(rs, v)}>",
                    )
                )
        k = sys.sigma.index(unit(rs.n, a))
        for c in pair:
            if c.row[k] != 1:
                bad.append(Violation("A2", f"c({c.name}, {name(a)}) = {c.row[k]} != 1"))
        # rank-2 split rule: on another simple spherical root the two values
        # are {0, <a^vee, g>} unless a color is shared with that root
        for g in sorted(simple - {a}):
            if any(g in c.moved_by for c in pair):
                continue
            kg = sys.sigma.index(unit(rs.n, g))
            vals = sorted((pair[0].row[kg], pair[1].row[kg]))
            expect = sorted((0, rs.pairing(a, unit(rs.n, g))))
            if vals != expect:
                bad.append(
                    Violation(
                        "A4",
                        f"A({name(a)}) splits {name(g)} as {vals}, expected {expect}",
                    )
                )

    sigset = set(sys.sigma)
    for i in range(rs.n):
        if unit(rs.n, i, 2) in sigset:
            for v in sys.sigma:
                if v == unit(rs.n, i, 2):
                    continue
                p = rs.pairing(i, v)
                if p % 2 != 0 or p > 0:
                    bad.append(
                        Violation(
                            "Sigma1",
                            f"2*{name(i)} in sigma but <{name(i)}^vee, {_fmt(rs, v)}>/2 = {p}/2",
                        )
                    )
    for i in range(rs.n):
        for j in range(i + 1, rs.n):
            if rs.cartan[i][j] == 0 and tuple(
                1 if k in (i, j) else 0 for k in range(rs.n)
            ) in sigset:
                for v in sys.sigma:
                    if rs.pairing(i, v) != rs.pairing(j, v):
                        bad.append(
                            Violation(
                                "Sigma2",
                                f"{name(i)}+{name(j)} in sigma but pairings differ on {_fmt(rs, v)}",
                            )
                        )
    return bad


def is_valid(sys: SphericalSystem) -> bool:
    return not validate(sys)


def _fmt(rs: RootSystem, v: Vec) -> str:
    from .rootsystem import format_root

    return format_root(rs, v)


def _names(rs: RootSystem, xs) -> str:
    return ",".join(rs.root_name(i) for i in sorted(xs))


def localize_simple(sys: SphericalSystem, keep) -> SphericalSystem:
    """Localization in a subset of simple roots."""
    keep = frozenset(keep)
    sub, old2new = sys.rs.restrict(keep)
    sp2 = frozenset(old2new[i] for i in sys.sp & keep)
    kept = [(k, v) for k, v in enumerate(sys.sigma) if support(v) <= keep]
    sigma2 = []
    for _, v in kept:
        w = [0] * sub.n
        for i in support(v):
            w[old2new[i]] = v[i]
        sigma2.append(tuple(w))
    simple_kept = {i for i in sys.simple_sigma if i in keep}
    apart2 = []
    for c in sys.apart:
        if not (c.moved_by & simple_kept):
            continue
        apart2.append(
            AColor(
                c.name,
                frozenset(old2new[i] for i in c.moved_by & simple_kept),
                tuple(c.row[k] for k, _ in kept),
            )
        )
    return SphericalSystem(sub, sp2, tuple(sigma2), tuple(apart2))


def localize_sigma(sys: SphericalSystem, sub_sigma) -> SphericalSystem:
    """Localization with respect to a subset of the spherical roots."""
    subset = [tuple(v) for v in sub_sigma]
    for v in subset:
        if v not in sys.sigma:
            raise ValueError(f"{v} is not a spherical root of the system")
    kept = [k for k, v in enumerate(sys.sigma) if v in set(subset)]
    simple_kept = {
        i
        for i in sys.simple_sigma
        if unit(sys.rs.n, i) in set(subset)
    }
    apart2 = []
    for c in sys.apart:
        if not (c.moved_by & simple_kept):
            continue
        apart2.append(
            AColor(c.name, c.moved_by & simple_kept, tuple(c.row[k] for k in kept))
        )
    return SphericalSystem(sys.rs, sys.sp, tuple(sys.sigma[k] for k in kept), tuple(apart2))

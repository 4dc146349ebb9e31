"""Exact root-system arithmetic for products of simple Dynkin types.

Simple roots are numbered in Bourbaki order within each component and
concatenated into one global 0-based index space.  All matrices are plain
integer tuples; every operation is a pure function of immutable data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Vec = tuple[int, ...]

# Rank constraints per type letter (Bourbaki numbering).
_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class Component:
    letter: str
    rank: int

    def __post_init__(self) -> None:
        if self.letter not in _RANK_OK:
            raise ValueError(f"unknown type letter {self.letter!r}")
        if not _RANK_OK[self.letter](self.rank):
            raise ValueError(f"invalid rank {self.rank} for type {self.letter}")

    @property
    def token(self) -> str:
        return f"{self.letter}{self.rank}"


def _cartan_simply_laced_chain(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _component_cartan(comp: Component) -> list[list[int]]:
    n = comp.rank
    c = _cartan_simply_laced_chain(n)
    if comp.letter == "A":
        return c
    if comp.letter == "B":
        # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
        c[n - 1][n - 2] = -2
        return c
    if comp.letter == "C":
        # alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2
        c[n - 2][n - 1] = -2
        return c
    if comp.letter == "D":
        c[n - 2][n - 1] = 0
        c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = -1
        c[n - 1][n - 3] = -1
        return c
    if comp.letter == "E":
        # chain 1-3-4-5-...-n with node 2 attached to node 4
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            c[a][b] = c[b][a] = -1
        c[1][3] = c[3][1] = -1
        return c
    if comp.letter == "F":
        return [
            [2, -1, 0, 0],
            [-1, 2, -1, 0],
            [0, -2, 2, -1],
            [0, 0, -1, 2],
        ]
    if comp.letter == "G":
        # alpha_1 short: <alpha_1^vee, alpha_2> = -3
        return [[2, -3], [-1, 2]]
    raise AssertionError(comp.letter)


def _component_lengths(comp: Component) -> list[int]:
    """Squared-length weights d_i with (alpha_i, alpha_j) = d_i * cartan[i][j]."""
    n = comp.rank
    if comp.letter == "B":
        return [2] * (n - 1) + [1]
    if comp.letter == "C":
        return [1] * (n - 1) + [2]
    if comp.letter == "F":
        return [2, 2, 1, 1]
    if comp.letter == "G":
        return [1, 3]
    return [1] * n


class RootSystem:
    """A product of simple root systems with a global simple-root index space."""

    def __init__(self, components: tuple[Component, ...] | list[Component]):
        self.components = tuple(components)
        self.n = sum(c.rank for c in self.components)
        offsets = []
        k = 0
        for c in self.components:
            offsets.append(k)
            k += c.rank
        self._offsets = tuple(offsets)

    @classmethod
    def parse(cls, token: str) -> "RootSystem":
        """Parse a type token such as 'B4', 'A1 A3' or 'C2xC3'."""
        parts = token.replace("x", " ").replace("X", " ").replace("*", " ").split()
        if not parts:
            raise ValueError("empty root-system token")
        comps = []
        for p in parts:
            letter, rank = p[0].upper(), p[1:]
            if not rank.isdigit():
                raise ValueError(f"bad component token {p!r}")
            comps.append(Component(letter, int(rank)))
        return cls(tuple(comps))

    @property
    def token(self) -> str:
        return " ".join(c.token for c in self.components)

    def __repr__(self) -> str:
        return f"RootSystem({self.token!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    # -- index bookkeeping ------------------------------------------------

    def component_of(self, i: int) -> int:
        self._check_index(i)
        for ci in range(len(self.components) - 1, -1, -1):
            if i >= self._offsets[ci]:
                return ci
        raise AssertionError

    def local_index(self, i: int) -> int:
        return i - self._offsets[self.component_of(i)]

    def component_indices(self, ci: int) -> range:
        off = self._offsets[ci]
        return range(off, off + self.components[ci].rank)

    def root_name(self, i: int) -> str:
        self._check_index(i)
        return f"a{i + 1}"

    def root_index(self, name: str) -> int:
        if not (name.startswith("a") and name[1:].isdigit()):
            raise ValueError(f"bad root name {name!r}")
        i = int(name[1:]) - 1
        self._check_index(i, name)
        return i

    def _check_index(self, i: int, label: object = None) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"simple-root index out of range: {label or i}")

    # -- Cartan data -------------------------------------------------------

    @cached_property
    def cartan(self) -> tuple[Vec, ...]:
        m = [[0] * self.n for _ in range(self.n)]
        for ci, comp in enumerate(self.components):
            off = self._offsets[ci]
            block = _component_cartan(comp)
            for a in range(comp.rank):
                for b in range(comp.rank):
                    m[off + a][off + b] = block[a][b]
        return tuple(tuple(r) for r in m)

    @cached_property
    def lengths(self) -> Vec:
        out: list[int] = []
        for comp in self.components:
            out.extend(_component_lengths(comp))
        return tuple(out)

    @cached_property
    def sym(self) -> tuple[Vec, ...]:
        """Symmetrized matrix d_i * cartan[i][j] = (alpha_i, alpha_j)."""
        c, d = self.cartan, self.lengths
        return tuple(tuple(d[i] * c[i][j] for j in range(self.n)) for i in range(self.n))

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j != i and self.cartan[i][j] != 0)

    def is_short_in_B(self, i: int) -> bool:
        comp = self.components[self.component_of(i)]
        return comp.letter == "B" and self.local_index(i) == comp.rank - 1

    # -- operations --------------------------------------------------------

    def _check_vec(self, v: Vec) -> None:
        if len(v) != self.n:
            raise ValueError(f"vector length {len(v)} != rank {self.n}")

    def pairing(self, i: int, v: Vec) -> int:
        """Coroot pairing <alpha_i^vee, v> for v over the simple-root basis."""
        self._check_index(i)
        self._check_vec(v)
        row = self.cartan[i]
        return sum(row[j] * v[j] for j in range(self.n))

    def orthogonal(self, i: int, v: Vec) -> bool:
        """Whether (alpha_i, v) = 0 in the Weyl-invariant inner product."""
        self._check_index(i)
        self._check_vec(v)
        row = self.sym[i]
        return sum(row[j] * v[j] for j in range(self.n)) == 0

    @cached_property
    def dynkin_involution(self) -> Vec:
        """The permutation -w_0 of simple-root indices (diagram involution)."""
        perm = list(range(self.n))
        for ci, comp in enumerate(self.components):
            off = self._offsets[ci]
            n = comp.rank
            if comp.letter == "A":
                for a in range(n):
                    perm[off + a] = off + (n - 1 - a)
            elif comp.letter == "D" and n % 2 == 1:
                perm[off + n - 2], perm[off + n - 1] = off + n - 1, off + n - 2
            elif comp.letter == "E" and n == 6:
                pairs = [(0, 5), (2, 4)]
                for a, b in pairs:
                    perm[off + a], perm[off + b] = off + b, off + a
        return tuple(perm)

    def orthogonal_roots(self, v: Vec) -> frozenset[int]:
        """All simple roots orthogonal to v."""
        return frozenset(i for i in range(self.n) if self.orthogonal(i, v))

    # -- restriction (localization of the root system) ---------------------

    def restrict(self, keep: frozenset[int] | set[int]) -> tuple["RootSystem", dict[int, int]]:
        """Induced sub-root-system on `keep`, with the old->new index map.

        Each connected piece of the induced diagram is classified and
        renumbered in Bourbaki order.  A double-bond pair inherits type C2
        when cut from a C component, and type B2 otherwise.
        """
        keep_sorted = sorted(keep)
        for i in keep_sorted:
            self._check_index(i)
        pieces = self._split_pieces(keep_sorted)
        ordered: list[tuple[str, list[int]]] = []
        for nodes in pieces:
            src = self.components[self.component_of(nodes[0])].letter
            ordered.append(_classify_piece(self, nodes, src))
        ordered.sort(key=lambda t: min(t[1]))
        comps = tuple(Component(letter, len(order)) for letter, order in ordered)
        mapping: dict[int, int] = {}
        k = 0
        for _, order in ordered:
            for old in order:
                mapping[old] = k
                k += 1
        return RootSystem(comps), mapping

    def _split_pieces(self, nodes: list[int]) -> list[list[int]]:
        todo = set(nodes)
        pieces = []
        while todo:
            seed = min(todo)
            stack, seen = [seed], {seed}
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if y in todo and y not in seen:
                        seen.add(y)
                        stack.append(y)
            todo -= seen
            pieces.append(sorted(seen))
        return pieces


def _bond(rs: RootSystem, a: int, b: int) -> int:
    """Bond multiplicity between adjacent roots (1, 2 or 3)."""
    return rs.cartan[a][b] * rs.cartan[b][a]


def _classify_piece(rs: RootSystem, nodes: list[int], source_letter: str) -> tuple[str, list[int]]:
    """Classify one connected induced subdiagram; return (letter, Bourbaki order)."""
    if len(nodes) == 1:
        return "A", nodes
    nodeset = set(nodes)
    adj = {x: [y for y in rs.neighbors(x) if y in nodeset] for x in nodes}
    deg3 = [x for x in nodes if len(adj[x]) >= 3]
    bonds = [(a, b) for a in nodes for b in adj[a] if a < b]
    multi = [(a, b) for (a, b) in bonds if _bond(rs, a, b) > 1]

    if deg3:
        if len(deg3) != 1 or multi:
            raise ValueError("induced subdiagram is not of finite type")
        return _classify_fork(rs, nodes, adj, deg3[0])

    # path: find endpoints, walk
    ends = [x for x in nodes if len(adj[x]) == 1]
    order = _walk_path(adj, min(ends))
    if not multi:
        return "A", order

    if len(multi) != 1:
        raise ValueError("induced subdiagram is not of finite type")
    (a, b) = multi[0]
    if _bond(rs, a, b) == 3:
        # G2: short root first
        return "G", [a, b] if rs.cartan[a][b] == -3 else [b, a]

    # one double bond on a path
    if len(order) == 2:
        if source_letter == "C":
            short = a if rs.cartan[a][b] == -2 else b
            long = b if short == a else a
            return "C", [short, long]
        long = a if rs.cartan[b][a] == -2 else b
        short = b if long == a else a
        return "B", [long, short]

    pos = {x: k for k, x in enumerate(order)}
    lo = min(pos[a], pos[b])
    if lo == 0:
        order.reverse()
        pos = {x: k for k, x in enumerate(order)}
        lo = min(pos[a], pos[b])
    if lo == len(order) - 2:
        last, prev = order[-1], order[-2]
        if rs.cartan[last][prev] == -2:
            return "B", order
        return "C", order
    # interior double bond: F4 shape, long roots first
    if len(order) != 4 or lo != 1:
        raise ValueError("induced subdiagram is not of finite type")
    mid_a, mid_b = order[1], order[2]
    if rs.cartan[mid_a][mid_b] == -2:
        order.reverse()
    return "F", order


def _walk_path(adj: dict[int, list[int]], start: int) -> list[int]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [y for y in adj[cur] if y != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _classify_fork(
    rs: RootSystem, nodes: list[int], adj: dict[int, list[int]], center: int
) -> tuple[str, list[int]]:
    arms = []
    for start in adj[center]:
        arm = [start]
        prev, cur = center, start
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    if len(arms) != 3 or len(nodes) != 1 + sum(len(a) for a in arms):
        raise ValueError("induced subdiagram is not of finite type")
    arms.sort(key=lambda a: (len(a), a[0]))
    l1, l2, l3 = (len(a) for a in arms)
    if l1 == 1 and l2 == 1:
        # D_n: long arm from its far end, then center, then tips by index
        tips = sorted([arms[0][0], arms[1][0]])
        return "D", list(reversed(arms[2])) + [center] + tips
    if (l1, l2) == (1, 2) and l3 in (2, 3, 4):
        # E_n Bourbaki: alpha_2 = short arm, alpha_1-alpha_3 = middle arm
        mid, long = arms[1], arms[2]
        if l3 == 2 and long[-1] < mid[-1]:
            mid, long = long, mid
        order = [mid[1], arms[0][0], mid[0], center] + long
        return "E", order
    raise ValueError("induced subdiagram is not of finite type")


# -- vector helpers ---------------------------------------------------------

def support(v: Vec) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(v) if c != 0)


def unit(n: int, i: int, scale: int = 1) -> Vec:
    return tuple(scale if j == i else 0 for j in range(n))


def vec_add(*vs: Vec) -> Vec:
    return tuple(sum(t) for t in zip(*vs))


def vec_key(v: Vec) -> tuple:
    """Canonical sort key: first supported index, then coefficients."""
    s = support(v)
    return (min(s) if s else -1, v)


def format_root(rs: RootSystem, v: Vec) -> str:
    """Render a lattice vector as `a1+2*a3`."""
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        if c < 0:
            raise ValueError("cannot render negative coefficients")
        terms.append(rs.root_name(i) if c == 1 else f"{c}*{rs.root_name(i)}")
    return "+".join(terms) if terms else "0"


def parse_root_expr(rs: RootSystem, text: str) -> Vec:
    """Parse `a1+a2` or `2*a1+2*a2` into a coefficient vector."""
    v = [0] * rs.n
    for term in text.replace(" ", "").split("+"):
        if not term:
            raise ValueError("empty term in root expression")
        if "*" in term:
            k, name = term.split("*", 1)
            if not k.lstrip("-").isdigit():
                raise ValueError(f"bad coefficient {k!r}")
            coeff = int(k)
        else:
            coeff, name = 1, term
        v[rs.root_index(name)] += coeff
    return tuple(v)

"""Block text format for spherical systems.

    system
      roots B4
      sp a4
      sigma a1+a2, a3+a4
      apair dp a1 1 0
    end

`sp -` denotes the empty set; integer combinations are written `2*a1+a2`.
Printing is canonical: sp ascending, sigma in canonical vector order.
"""

from __future__ import annotations

from .rootsystem import RootSystem, format_root, parse_root_expr, support
from .system import AColor, SphericalSystem


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _is_int(tok: str) -> bool:
    t = tok[1:] if tok[:1] == "-" else tok
    return t.isdigit()


def parse_systems(text: str) -> list[SphericalSystem]:
    """Parse every `system ... end` block in the text."""
    out = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        stripped = lines[i].split("#", 1)[0].strip()
        if not stripped:
            i += 1
            continue
        if stripped != "system":
            raise ParseError(i + 1, f"expected 'system', found {stripped!r}")
        block = []
        i += 1
        while True:
            if i >= len(lines):
                raise ParseError(len(lines), "unterminated system block")
            s = lines[i].split("#", 1)[0].strip()
            if s == "end":
                i += 1
                break
            if s:
                block.append((i + 1, s))
            i += 1
        out.append(_parse_block(block))
    return out


def parse_system(text: str) -> SphericalSystem:
    systems = parse_systems(text)
    if len(systems) != 1:
        raise ParseError(1, f"expected exactly one system block, found {len(systems)}")
    return systems[0]


def _parse_block(block: list[tuple[int, str]]) -> SphericalSystem:
    rs: RootSystem | None = None
    sp: frozenset[int] = frozenset()
    sigma: list = []
    apairs: list[tuple[int, list[str]]] = []
    seen = set()
    for line_no, line in block:
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word in ("roots", "sp", "sigma") and word in seen:
            raise ParseError(line_no, f"duplicate {word!r} line")
        seen.add(word)
        if word == "roots":
            try:
                rs = RootSystem.parse(rest)
            except ValueError as e:
                raise ParseError(line_no, str(e)) from None
        elif word == "sp":
            if rs is None:
                raise ParseError(line_no, "'sp' before 'roots'")
            if rest in ("-", ""):
                sp = frozenset()
            else:
                try:
                    sp = frozenset(
                        rs.root_index(tok) for tok in rest.replace(",", " ").split()
                    )
                except (ValueError, IndexError) as e:
                    raise ParseError(line_no, str(e)) from None
        elif word == "sigma":
            if rs is None:
                raise ParseError(line_no, "'sigma' before 'roots'")
            if rest in ("-", ""):
                sigma = []
                continue
            for expr in rest.split(","):
                expr = expr.strip()
                if not expr:
                    continue
                try:
                    sigma.append(parse_root_expr(rs, expr))
                except (ValueError, IndexError) as e:
                    raise ParseError(line_no, f"unknown root in {expr!r}: {e}") from None
        elif word == "apair":
            apairs.append((line_no, rest.replace(",", " ").split()))
        else:
            raise ParseError(line_no, f"unknown keyword {word!r}")
    if rs is None:
        raise ParseError(block[0][0] if block else 1, "missing 'roots' line")

    simple_sigma = {
        min(support(v)) for v in sigma if len(support(v)) == 1 and max(v) == 1
    }
    apart = []
    for line_no, toks in apairs:
        if not toks:
            raise ParseError(line_no, "apair needs a name")
        name, rest_toks = toks[0], toks[1:]
        moved: list[int] = []
        k = 0
        while k < len(rest_toks) and not _is_int(rest_toks[k]):
            try:
                moved.append(rs.root_index(rest_toks[k]))
            except (ValueError, IndexError) as e:
                raise ParseError(line_no, str(e)) from None
            k += 1
        row = rest_toks[k:]
        if not moved:
            raise ParseError(line_no, f"apair {name!r} moves no root")
        for a in moved:
            if a not in simple_sigma:
                raise ParseError(
                    line_no,
                    f"apair {name!r} moved by {rs.root_name(a)} which is not a simple spherical root",
                )
        if len(row) != len(sigma):
            raise ParseError(
                line_no, f"apair {name!r} has {len(row)} row values, expected {len(sigma)}"
            )
        if not all(_is_int(t) for t in row):
            raise ParseError(line_no, f"apair {name!r} has non-integer row values")
        apart.append(AColor(name, frozenset(moved), tuple(int(t) for t in row)))

    try:
        return SphericalSystem(rs, sp, tuple(sigma), tuple(apart))
    except ValueError as e:
        raise ParseError(block[0][0], str(e)) from None


def format_system(sys: SphericalSystem, oneline: bool = False) -> str:
    rs = sys.rs
    sp = " ".join(rs.root_name(i) for i in sorted(sys.sp)) or "-"
    sigma = ", ".join(format_root(rs, v) for v in sys.sigma) or "-"
    lines = [f"roots {rs.token}", f"sp {sp}", f"sigma {sigma}"]
    for c in sys.apart:
        moved = " ".join(rs.root_name(i) for i in sorted(c.moved_by))
        row = " ".join(str(x) for x in c.row)
        lines.append(f"apair {c.name} {moved} {row}".rstrip())
    if oneline:
        return "; ".join(lines)
    return "system\n" + "\n".join("  " + l for l in lines) + "\nend\n"


def format_systems(systems) -> str:
    return "\n".join(format_system(s) for s in systems)

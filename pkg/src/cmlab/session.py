"""The line-oriented session format: one ring block, named module blocks, an options block.

    ring R
      char 32003
      vars x y
      ideal x^2; x*y
    end
    module M over R
      gendeg 0 0
      relations
        x, y;
        0, x^2
    end
    options
      seed 7
    end

``#`` starts a comment. ``k`` names the residue field and the ring's own name
denotes R as a module over itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra.field import DEFAULT_CHAR
from .algebra.parse import ParseError, parse_poly
from .algebra.polyring import PolyRing
from .graded.module import Module
from .graded.ring import GradedRing

OPTION_KEYS = ("seed", "max_pairs", "jmax", "nmax", "bound")


@dataclass
class RingSpec:
    name: str
    vars: Tuple[str, ...]
    ideal: Tuple[str, ...] = ()
    char: int = DEFAULT_CHAR


@dataclass
class ModuleSpec:
    name: str
    over: str
    gendeg: Tuple[int, ...]
    relations: Tuple[Tuple[str, ...], ...] = ()
    # Source line of each relation row, for error messages only.
    lines: Tuple[int, ...] = field(default=(), compare=False, repr=False)


@dataclass
class SessionFile:
    ring: RingSpec
    modules: List[ModuleSpec] = field(default_factory=list)
    options: Dict[str, int] = field(default_factory=dict)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _split_list(text: str, sep: str) -> List[str]:
    return [part.strip() for part in text.split(sep) if part.strip()]


def parse_session(text: str) -> SessionFile:
    """Parse session text; errors carry the offending line number."""
    ring: Optional[RingSpec] = None
    modules: List[ModuleSpec] = []
    options: Dict[str, int] = {}
    block: Optional[str] = None
    current: dict = {}
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        col = raw.index(line[0]) + 1
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if block is None:
            if head == "ring":
                if ring is not None:
                    raise ParseError("only one ring block is allowed", lineno, col)
                if not rest or " " in rest:
                    raise ParseError("expected 'ring NAME'", lineno, col)
                block, current = "ring", {"name": rest, "vars": None, "ideal": [], "char": DEFAULT_CHAR}
            elif head == "module":
                parts = rest.split()
                if len(parts) != 3 or parts[1] != "over":
                    raise ParseError("expected 'module NAME over RING'", lineno, col)
                if ring is None or parts[2] != ring.name:
                    raise ParseError("module %s refers to undeclared ring %s" % (parts[0], parts[2]), lineno, col)
                if parts[0] in ("k", ring.name) or any(m.name == parts[0] for m in modules):
                    raise ParseError("module name %s is already taken" % parts[0], lineno, col)
                block, current = "module", {"name": parts[0], "over": parts[2], "gendeg": None,
                                            "relations": [], "lines": []}
                in_relations = False
            elif head == "options" and not rest:
                block = "options"
            else:
                raise ParseError("expected a ring, module or options block, got %r" % head, lineno, col)
            continue
        if line == "end":
            if block == "ring":
                if current["vars"] is None:
                    raise ParseError("ring block has no vars line", lineno, col)
                ring = RingSpec(current["name"], tuple(current["vars"]), tuple(current["ideal"]), current["char"])
            elif block == "module":
                if current["gendeg"] is None:
                    raise ParseError("module block has no gendeg line", lineno, col)
                modules.append(ModuleSpec(current["name"], current["over"], tuple(current["gendeg"]),
                                          tuple(current["relations"]), tuple(current["lines"])))
            block = None
            continue
        if block == "ring":
            if head == "char":
                current["char"] = _int(rest, lineno, col)
            elif head == "vars":
                names = rest.split()
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable names", lineno, col)
                current["vars"] = names
            elif head == "ideal":
                current["ideal"].extend(_split_list(rest, ";"))
            else:
                raise ParseError("unknown ring key %r" % head, lineno, col)
        elif block == "module":
            if in_relations:
                for row in _split_list(line, ";"):
                    current["relations"].append(tuple(e.strip() for e in row.split(",")))
                    current["lines"].append(lineno)
            elif head == "gendeg":
                current["gendeg"] = [_int(t, lineno, col) for t in rest.split()]
            elif head == "relations" and not rest:
                in_relations = True
            else:
                raise ParseError("unknown module key %r" % head, lineno, col)
        else:
            if head not in OPTION_KEYS:
                raise ParseError("unknown option %r" % head, lineno, col)
            options[head] = _int(rest, lineno, col)
    if block is not None:
        raise ParseError("unterminated %s block" % block, len(text.splitlines()) or 1, 1)
    if ring is None:
        raise ParseError("no ring block", 1, 1)
    return SessionFile(ring, modules, options)


def _int(text: str, line: int, col: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError("expected an integer, got %r" % text, line, col) from None


def format_session(s: SessionFile) -> str:
    out = ["ring %s" % s.ring.name, "  char %d" % s.ring.char, "  vars %s" % " ".join(s.ring.vars)]
    if s.ring.ideal:
        out.append("  ideal " + "; ".join(s.ring.ideal))
    out.append("end")
    for m in s.modules:
        out += ["module %s over %s" % (m.name, m.over), "  gendeg " + " ".join(map(str, m.gendeg))]
        if m.relations:
            out.append("  relations")
            out += ["    " + ", ".join(row) for row in m.relations]
        out.append("end")
    if s.options:
        out.append("options")
        out += ["  %s %d" % kv for kv in s.options.items()]
        out.append("end")
    return "\n".join(out) + "\n"


@dataclass
class Session:
    """A parsed file realized as a ring and its modules."""

    spec: SessionFile
    ring: GradedRing
    modules: Dict[str, Module]

    def module(self, name: str) -> Module:
        if name not in self.modules:
            raise KeyError("unknown module %r (known: %s)" % (name, ", ".join(sorted(self.modules))))
        return self.modules[name]


def build_session(spec: SessionFile) -> Session:
    rs = spec.ring
    source = PolyRing(rs.vars, rs.char)
    ideal = []
    for text in rs.ideal:
        f = parse_poly(source, text)
        if f and not source.is_homogeneous(f):
            raise ParseError("ideal generator %r is not homogeneous" % text)
        ideal.append(f)
    ring = GradedRing(rs.vars, ideal, rs.char)
    modules: Dict[str, Module] = {"k": ring.residue_field(), rs.name: ring.as_module()}
    for ms in spec.modules:
        modules[ms.name] = _build_module(ring, ms)
    return Session(spec, ring, modules)


def _build_module(ring: GradedRing, ms: ModuleSpec) -> Module:
    src = ring.source
    F = ring.free(list(ms.gendeg))
    rows = []
    for r, row in enumerate(ms.relations):
        line = ms.lines[r] if r < len(ms.lines) else 0
        if len(row) != len(ms.gendeg):
            raise ParseError("relation has %d entries for %d generators" % (len(row), len(ms.gendeg)), line)
        degree = None
        entries = []
        for i, text in enumerate(row):
            f = parse_poly(src, text, line)
            if f and not src.is_homogeneous(f):
                raise ParseError("entry %r is not homogeneous" % text, line)
            if f:
                deg = src.degree(f) + ms.gendeg[i]
                if degree is not None and deg != degree:
                    raise ParseError("entry %r has degree %d, the row has degree %d" % (text, deg, degree), line)
                degree = deg
            entries.append(ring.to_ambient(f))
        rows.append(F.vector(entries))
    return Module(ring, list(ms.gendeg), rows, name=ms.name)


def load_session(text: str) -> Session:
    return build_session(parse_session(text))

"""Memory graphs, memory contents and route resolution.

A memory model is a directed graph whose out-edges at every cell are
labelled by a fixed finite mark set, one edge per mark.  All models here
are infinite but have canonical cell identifiers, so cells are computed
on demand instead of being stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Optional, Sequence

PLUS = "+"
MINUS = "-"

KINDS = ("W1", "W2", "W15", "PerversedW15", "Z2", "FreeAbelian")

Z2_MOVES = {"E": (1, 0), "W": (-1, 0), "N": (0, 1), "S": (0, -1)}

Cell = Hashable


class UnknownMark(ValueError):
    pass


@dataclass(frozen=True)
class MemoryModel:
    """An infinite memory graph with an initial cell.

    Use :func:`build_model` rather than constructing this directly.
    ``omega`` and ``default_bit`` are only meaningful for the perversed
    1.5-way tape, ``rank`` only for free abelian Cayley graphs.
    """

    kind: str
    marks: tuple
    initial: Cell
    omega: str = ""
    default_bit: int = 1
    rank: int = 0

    @property
    def is_tape(self) -> bool:
        return self.kind in ("W1", "W2", "W15", "PerversedW15")

    def omega_bit(self, n: int) -> int:
        """Bit governing the right edge of vertex ``n`` (0-indexed)."""
        if n < len(self.omega):
            return int(self.omega[n])
        return self.default_bit

    def neighbor(self, cell: Cell, mark: Optional[str]) -> Cell:
        if mark is None:
            return cell
        if mark not in self.marks:
            raise UnknownMark(f"mark {mark!r} not in {self.marks} for {self.kind}")
        kind = self.kind
        if kind == "W1":
            return cell + 1
        if kind == "W2":
            return cell + 1 if mark == PLUS else cell - 1
        if kind == "W15":
            return cell + 1 if mark == PLUS else 0
        if kind == "PerversedW15":
            right = PLUS if self.omega_bit(cell) else MINUS
            return cell + 1 if mark == right else 0
        if kind == "Z2":
            dx, dy = Z2_MOVES[mark]
            return (cell[0] + dx, cell[1] + dy)
        # FreeAbelian: marks are "+i" / "-i" for generator i in 1..rank
        i = int(mark[1:]) - 1
        step = 1 if mark[0] == PLUS else -1
        return cell[:i] + (cell[i] + step,) + cell[i + 1:]

    def is_cell(self, cell) -> bool:
        if self.kind in ("W1", "W15", "PerversedW15"):
            return isinstance(cell, int) and cell >= 0
        if self.kind == "W2":
            return isinstance(cell, int)
        dim = 2 if self.kind == "Z2" else self.rank
        return (isinstance(cell, tuple) and len(cell) == dim
                and all(isinstance(c, int) for c in cell))

    def window_cells(self, window: int) -> list:
        """Cells used by bounded searches, in canonical order.

        One-way and 1.5-way tapes use cells ``0..window-1``; the 2-way tape
        uses ``-window..window``; lattice models use the graph ball of
        radius ``window`` around the origin, sorted.
        """
        if self.kind in ("W1", "W15", "PerversedW15"):
            return list(range(window))
        if self.kind == "W2":
            return list(range(-window, window + 1))
        dim = 2 if self.kind == "Z2" else self.rank
        cells = [()]
        for _ in range(dim):
            cells = [c + (x,) for c in cells for x in range(-window, window + 1)]
        return sorted(c for c in cells if sum(abs(x) for x in c) <= window)

    def describe(self) -> dict:
        params = {}
        if self.kind == "PerversedW15":
            params = {"omega": self.omega, "default": self.default_bit}
        elif self.kind == "FreeAbelian":
            params = {"rank": self.rank}
        return {"kind": self.kind, "params": params}


def build_model(kind: str, omega: Optional[str] = None, default: int = 1,
                rank: Optional[int] = None) -> MemoryModel:
    if kind == "W1":
        return MemoryModel("W1", (PLUS,), 0)
    if kind in ("W2", "W15"):
        return MemoryModel(kind, (PLUS, MINUS), 0)
    if kind == "PerversedW15":
        if omega is None or any(ch not in "01" for ch in omega):
            raise ValueError(f"omega prefix must be a 0/1 string, got {omega!r}")
        if default not in (0, 1):
            raise ValueError("default bit must be 0 or 1")
        return MemoryModel("PerversedW15", (PLUS, MINUS), 0, omega=omega,
                           default_bit=int(default))
    if kind == "Z2":
        return MemoryModel("Z2", tuple(Z2_MOVES), (0, 0))
    if kind == "FreeAbelian":
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"FreeAbelian needs a rank >= 1, got {rank!r}")
        marks = tuple(f"{s}{i}" for i in range(1, rank + 1) for s in (PLUS, MINUS))
        return MemoryModel("FreeAbelian", marks, (0,) * rank, rank=rank)
    raise ValueError(f"unknown memory model kind {kind!r}")


def model_from_dict(doc: Mapping) -> MemoryModel:
    params = dict(doc.get("params") or {})
    return build_model(doc["kind"], omega=params.get("omega"),
                       default=params.get("default", 1), rank=params.get("rank"))


def resolve_neighbor(model: MemoryModel, cell: Cell, mark: Optional[str]) -> Cell:
    return model.neighbor(cell, mark)


@dataclass(frozen=True)
class MemoryContent:
    """Finitely supported guess: ``default`` everywhere except ``support``."""

    default: str
    support: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {c: s for c, s in dict(self.support).items() if s != self.default}
        object.__setattr__(self, "support", MappingProxyType(clean))

    def read(self, cell: Cell) -> str:
        return self.support.get(cell, self.default)

    def nonzero_count(self) -> int:
        return len(self.support)

    def with_cells(self, cells: Mapping) -> "MemoryContent":
        merged = dict(self.support)
        merged.update(cells)
        return MemoryContent(self.default, merged)

    def __eq__(self, other):
        if not isinstance(other, MemoryContent):
            return NotImplemented
        return self.default == other.default and dict(self.support) == dict(other.support)

    def __hash__(self):
        return hash((self.default, frozenset(self.support.items())))

    def __repr__(self):
        items = ", ".join(f"{c!r}: {s!r}" for c, s in sorted(self.support.items(), key=repr))
        return f"MemoryContent({self.default!r}, {{{items}}})"


def content_read(content: MemoryContent, cell: Cell) -> str:
    return content.read(cell)


@dataclass(frozen=True)
class Unrestricted:
    def admits(self, content: MemoryContent) -> bool:
        return True


@dataclass(frozen=True)
class Sparse:
    """At most ``k`` cells differ from ``zero`` (the U_k guesses)."""

    k: int
    zero: str

    def admits(self, content: MemoryContent) -> bool:
        if content.default != self.zero:
            raise ValueError("sparse membership needs the zero symbol as default")
        return content.nonzero_count() <= self.k


GuessConstraint = (Unrestricted, Sparse)


def route_cells(model: MemoryModel, route: Sequence[Optional[str]]):
    """Walk ``route`` from the initial cell.

    Returns the list of cells (length ``len(route) + 1``) and the
    partition of positions that hold the same cell, each class sorted and
    the classes ordered by first position.
    """
    cells = [model.initial]
    for mark in route:
        cells.append(model.neighbor(cells[-1], mark))
    classes: dict = {}
    for i, c in enumerate(cells):
        classes.setdefault(c, []).append(i)
    return cells, list(classes.values())


def parse_cell(text: str, model: MemoryModel) -> Cell:
    parts = [int(p) for p in text.split(",")]
    if model.is_tape:
        if len(parts) != 1:
            raise ValueError(f"tape cell must be an integer, got {text!r}")
        cell = parts[0]
    else:
        cell = tuple(parts)
    if not model.is_cell(cell):
        raise ValueError(f"{text!r} is not a cell of {model.kind}")
    return cell


def format_cell(cell: Cell) -> str:
    if isinstance(cell, tuple):
        return ",".join(str(c) for c in cell)
    return str(cell)


def parse_content(lines: Iterable[str], model: MemoryModel, default: str) -> MemoryContent:
    """Read ``index symbol`` lines; blank lines and ``#`` comments are skipped."""
    support = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            idx, sym = line.split()
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'index symbol', got {raw!r}") from None
        support[parse_cell(idx, model)] = sym
    return MemoryContent(default, support)


def format_content(content: MemoryContent) -> str:
    rows = sorted(content.support.items(), key=lambda kv: (kv[0] if isinstance(kv[0], tuple) else (kv[0],)))
    return "".join(f"{format_cell(c)} {s}\n" for c, s in rows)

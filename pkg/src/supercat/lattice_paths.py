"""Up/down lattice paths: representation, predicates, factorization, enumeration.

Paths take unit steps (1, 1) and (1, -1) and start at level 0.  The canonical
text encoding is a string over {U, D}; the empty string is the empty path.
All values are immutable after construction and every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

UP = "U"
DOWN = "D"


class Path:
    """A path of up/down unit steps starting at level 0.

    `levels` holds the level at every point of the path, so it always has one
    more entry than `steps` and starts with 0.
    """

    __slots__ = ("steps", "levels")

    def __init__(self, steps: str = ""):
        level = 0
        levels = [0]
        for ch in steps:
            if ch == UP:
                level += 1
            elif ch == DOWN:
                level -= 1
            else:
                raise ValueError(f"invalid step {ch!r}: steps are {UP!r} or {DOWN!r}")
            levels.append(level)
        self.steps = steps
        self.levels = tuple(levels)

    @property
    def height(self) -> int:
        """Highest level reached; 0 for the empty path."""
        return max(self.levels)

    @property
    def end_level(self) -> int:
        return self.levels[-1]

    def is_dyck(self) -> bool:
        """True iff the path never goes below level 0 and ends at level 0."""
        return self.levels[-1] == 0 and min(self.levels) >= 0

    def is_ballot(self) -> bool:
        """True iff the path never goes below level 0 (any end level)."""
        return min(self.levels) >= 0

    def __len__(self) -> int:
        return len(self.steps)

    def __bool__(self) -> bool:
        return bool(self.steps)

    def __add__(self, other: "Path") -> "Path":
        return Path(self.steps + other.steps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Path) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"Path({self.steps!r})"


@dataclass(frozen=True)
class PathClass:
    """Constraint descriptor for nonnegative paths.

    Combines a required end level with an optional height bound.  `max_height`
    and `exact_height` are mutually exclusive.  A negative height bound denotes
    the empty class: nothing satisfies it, not even the empty path.  Vacuous
    combinations (e.g. end level above the bound) are representable and simply
    enumerate to nothing.
    """

    end_level: int = 0
    max_height: int | None = None
    exact_height: int | None = None

    def __post_init__(self):
        if self.end_level < 0:
            raise ValueError("end_level must be nonnegative")
        if self.max_height is not None and self.exact_height is not None:
            raise ValueError("max_height and exact_height are mutually exclusive")

    @property
    def height_bound(self) -> int | None:
        """The level cap enumeration may not exceed (None = unbounded)."""
        return self.exact_height if self.exact_height is not None else self.max_height

    def contains(self, p: Path) -> bool:
        if not p.is_ballot() or p.end_level != self.end_level:
            return False
        if self.exact_height is not None:
            return p.height == self.exact_height
        if self.max_height is not None:
            return p.height <= self.max_height
        return True


def factor_dyck(p: Path) -> tuple[Path, Path]:
    """Split a nonempty Dyck path as U·P·D·Q, cutting at the first return to 0.

    The decomposition is unique: U is the opening up step and D the step of the
    first return to level 0; P and Q are Dyck paths.
    """
    if len(p) == 0 or not p.is_dyck():
        raise ValueError("factorization requires a nonempty Dyck path")
    first_return = p.levels.index(0, 1)
    return Path(p.steps[1:first_return - 1]), Path(p.steps[first_return:])


def enumerate_ballot(path_class: PathClass, steps: int) -> list[Path]:
    """All nonnegative paths with `steps` steps satisfying `path_class`.

    Lexicographic order with U before D.  Empty when steps and end level have
    different parity or when the class is vacuous.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    end = path_class.end_level
    bound = path_class.height_bound
    if (steps - end) % 2 != 0:
        return []
    if bound is not None and (bound < 0 or end > bound):
        return []

    exact = path_class.exact_height
    out: list[Path] = []
    buf: list[str] = []

    def extend(level: int, remaining: int, peak: int) -> None:
        if remaining == 0:
            if level == end and (exact is None or peak == exact):
                out.append(Path("".join(buf)))
            return
        # the end level must stay reachable
        if abs(level - end) > remaining:
            return
        if bound is None or level < bound:
            buf.append(UP)
            extend(level + 1, remaining - 1, max(peak, level + 1))
            buf.pop()
        if level > 0:
            buf.append(DOWN)
            extend(level - 1, remaining - 1, peak)
            buf.pop()

    extend(0, steps, 0)
    return out


def enumerate_dyck(n: int) -> list[Path]:
    """All Dyck paths of semilength n, lexicographic with U before D."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    return enumerate_ballot(PathClass(end_level=0), 2 * n)

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, field_validator

from config.settings import settings
from src.arith.errors import InvalidArgumentError
from src.arith.repdigit import classify


Witness = Tuple[int, int]

PHASE_SMALL = "small"
PHASE_LARGE = "large"
ALL_PHASES: FrozenSet[str] = frozenset({PHASE_SMALL, PHASE_LARGE})


@dataclass(frozen=True, order=True)
class Solution:
    """A triple a > b > c with bc+1, ac+1, ab+1 multi-digit repdigits in base g.

    ``witnesses`` holds the (d, n) pairs of bc+1, ac+1 and ab+1, in that order.
    """
    a: int
    b: int
    c: int
    g: int = field(compare=False)
    witnesses: Tuple[Witness, Witness, Witness] = field(compare=False)

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def products(self) -> Tuple[int, int, int]:
        """(bc, ac, ab)."""
        return (self.b * self.c, self.a * self.c, self.a * self.b)

    @classmethod
    def from_triple(cls, g: int, a: int, b: int, c: int) -> Optional["Solution"]:
        """Classify the three products; None unless all are multi-digit repdigits."""
        if not a > b > c >= 1:
            return None
        witnesses = []
        for product in (b * c, a * c, a * b):
            rd = classify(product + 1, g)
            if rd is None or rd.k < 2:
                return None
            witnesses.append(rd.as_pair())
        return cls(a=a, b=b, c=c, g=g, witnesses=tuple(witnesses))

    def verify(self) -> bool:
        """Recheck the three repdigit equations, the ordering and n3 <= 2·n2."""
        again = Solution.from_triple(self.g, self.a, self.b, self.c)
        if again is None or again.witnesses != self.witnesses:
            return False
        bc, ac, ab = self.products
        (_, n1), (_, n2), (_, n3) = self.witnesses
        if not bc + 1 < ac + 1 < ab + 1:
            return False
        if not 2 <= n1 <= n2 <= n3 <= 2 * n2:
            return False
        # a^2 > ab + 1 >= g^(n3 - 1)
        return self.a * self.a > ab + 1 >= self.g ** (n3 - 1)


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of one search: threshold B, cap override, phases and parallelism."""
    threshold_B: Optional[int] = None
    n3_cap_override: Optional[int] = None
    phases: FrozenSet[str] = ALL_PHASES
    workers: int = 1
    emit_progress: bool = False

    def __post_init__(self):
        if self.threshold_B is not None and self.threshold_B < 2:
            raise InvalidArgumentError(f"threshold B must be >= 2, got {self.threshold_B}")
        if self.n3_cap_override is not None and self.n3_cap_override < 0:
            raise InvalidArgumentError(f"n3 cap must be >= 0, got {self.n3_cap_override}")
        unknown = set(self.phases) - ALL_PHASES
        if unknown or not self.phases:
            raise InvalidArgumentError(f"phases must be a non-empty subset of {sorted(ALL_PHASES)}")
        if self.workers < 1:
            raise InvalidArgumentError(f"workers must be >= 1, got {self.workers}")

    def threshold_for(self, g: int) -> int:
        if self.threshold_B is not None:
            return self.threshold_B
        return settings.default_threshold(g)


class OutputRecord(BaseModel):
    """Wire form of a Solution; integers travel as decimal strings."""
    g: str
    a: str
    b: str
    c: str
    witnesses: List[Tuple[int, int]]

    @field_validator("g", "a", "b", "c")
    @classmethod
    def _decimal(cls, value: str) -> str:
        if not (value.isascii() and value.isdigit()):
            raise ValueError(f"expected a decimal string, got {value!r}")
        return value

    @classmethod
    def from_solution(cls, solution: Solution) -> "OutputRecord":
        return cls(
            g=str(solution.g),
            a=str(solution.a),
            b=str(solution.b),
            c=str(solution.c),
            witnesses=[list(w) for w in solution.witnesses],
        )

    def to_solution(self) -> Solution:
        return Solution(
            a=int(self.a),
            b=int(self.b),
            c=int(self.c),
            g=int(self.g),
            witnesses=tuple(tuple(w) for w in self.witnesses),
        )

    def csv_row(self) -> List[str]:
        row = [self.g, self.a, self.b, self.c]
        for d, n in self.witnesses:
            row += [str(d), str(n)]
        return row


CSV_HEADER = ["g", "a", "b", "c", "d1", "n1", "d2", "n2", "d3", "n3"]

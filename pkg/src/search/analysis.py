"""Which branch of the finiteness argument a found triple falls into."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from src.arith.numtheory import (
    Dependence,
    GcdBoundInput,
    gcd_bound,
    gcd_special,
    mult_dependence,
    product_form,
)
from src.search.models import Solution


class SolutionCase(Enum):
    """Dependence pattern of the ratios x_i/y_i of a triple."""
    ALL_DEPENDENT = 1        # x1/y1 dependent with x2/y2 and with x3/y3
    LONG_PAIR_INDEPENDENT = 2  # x3/y3, x2/y2 independent
    MIXED = 3                # x3/y3 ~ x2/y2, but x3/y3, x1/y1 independent


@dataclass(frozen=True)
class CaseReport:
    """Case classification of one triple, with the gcd check when it applies."""
    g: int
    a: int
    b: int
    c: int
    case: SolutionCase
    dep_12: Dependence
    dep_13: Dependence
    dep_32: Dependence
    delta: Optional[int] = None
    delta_bound: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        def dep(d: Dependence) -> Dict[str, Any]:
            out: Dict[str, Any] = {"verdict": d.verdict.value}
            if d.dependent:
                out.update(alpha=str(d.gen_num), beta=str(d.gen_den), exponents=list(d.exponents))
            return out

        return {
            "g": str(self.g),
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "case": self.case.value,
            "dep_12": dep(self.dep_12),
            "dep_13": dep(self.dep_13),
            "dep_32": dep(self.dep_32),
            "delta": None if self.delta is None else str(self.delta),
            "delta_bound": None if self.delta_bound is None else str(self.delta_bound),
        }


def classify_case(solution: Solution) -> CaseReport:
    """Classify a verified triple by the multiplicative dependence of its ratios."""
    g = solution.g
    (d1, n1), (d2, n2), (d3, n3) = solution.witnesses
    pf1 = product_form(d1, n1, g)
    pf2 = product_form(d2, n2, g)
    pf3 = product_form(d3, n3, g)

    dep_12 = mult_dependence(pf1.x, pf1.y, pf2.x, pf2.y)
    dep_13 = mult_dependence(pf1.x, pf1.y, pf3.x, pf3.y)
    dep_32 = mult_dependence(pf3.x, pf3.y, pf2.x, pf2.y)

    delta = None
    delta_bound = None
    if dep_12.dependent and dep_13.dependent:
        case = SolutionCase.ALL_DEPENDENT
    elif not dep_32.dependent:
        case = SolutionCase.LONG_PAIR_INDEPENDENT
        # (g-1)·ab and (g-1)·ac in special-gcd shape
        delta = gcd_special(d3, d3 + g - 1, n3, d2, d2 + g - 1, n2, g)
        delta_bound = gcd_bound(
            GcdBoundInput(
                t1=d3, w1=d3 + g - 1, t2=d2, w2=d2 + g - 1,
                k1=n3, k2=n2, g=g, X=max(n3, 3),
            )
        )
    else:
        case = SolutionCase.MIXED

    return CaseReport(
        g=g, a=solution.a, b=solution.b, c=solution.c, case=case,
        dep_12=dep_12, dep_13=dep_13, dep_32=dep_32,
        delta=delta, delta_bound=delta_bound,
    )

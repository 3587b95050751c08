"""Skew pairs of crossings and the Casson-type counts they define.

An ordered crossing pair (x, y) is an *upper* skew pair when the four
passes interleave as x_over < y_under < x_under < y_over in the word, and
a *lower* skew pair when x_under < y_over < x_over < y_under.  The pair
sign is sign(x)*sign(y).  Summing pair signs over the upper (resp. lower)
pairs gives the integer invariants c_plus and c_minus; attaching to each
pair the subgroup generated by the loop classes of its two crossings and
summing formally gives the homological refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .codes import KnotoidCode
from .homology import (
    HomologyClass,
    ModuleElement,
    as_class,
    subgroup_from_generators,
)

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class SkewPair:
    first: str
    second: str
    kind: str
    sign: int


class CassonValues(NamedTuple):
    c_plus: int
    c_minus: int


def skew_pairs(code: KnotoidCode) -> tuple[list[SkewPair], list[SkewPair]]:
    """All upper and lower skew pairs, ordered by their pattern positions."""
    pos = code.positions()
    upper: list[tuple[tuple[int, int], SkewPair]] = []
    lower: list[tuple[tuple[int, int], SkewPair]] = []
    for x, (xo, xu) in pos.items():
        for y, (yo, yu) in pos.items():
            if x == y:
                continue
            s = code.signs[x] * code.signs[y]
            if xo < yu < xu < yo:
                upper.append(((xo, yu), SkewPair(x, y, UPPER, s)))
            elif xu < yo < xo < yu:
                lower.append(((xu, yo), SkewPair(x, y, LOWER, s)))
    upper.sort(key=lambda t: t[0])
    lower.sort(key=lambda t: t[0])
    return [p for _, p in upper], [p for _, p in lower]


def casson_pm(code: KnotoidCode) -> CassonValues:
    """Signed counts of upper/lower skew pairs.

    Defined for every valid code; spherical realizability is not required
    (virtual knotoid codes are legal inputs).
    """
    upper, lower = skew_pairs(code)
    return CassonValues(
        sum(p.sign for p in upper),
        sum(p.sign for p in lower),
    )


def casson_homological(
    code: KnotoidCode,
    classes: Mapping[str, "int | HomologyClass"],
) -> tuple[ModuleElement, ModuleElement]:
    """Formal sums, over skew pairs, of the subgroups spanned by loop classes.

    ``classes`` maps each crossing label occurring in some skew pair to the
    homology class of its loop; all classes must have equal rank.  The
    result pair refines (c_plus, c_minus): summing coefficients of either
    element recovers the corresponding integer count.
    """
    upper, lower = skew_pairs(code)
    normalized: dict[str, HomologyClass] = {}
    rank: int | None = None
    for lab, value in classes.items():
        vec = as_class(value)
        if rank is None:
            rank = len(vec)
        elif len(vec) != rank:
            raise ValueError(f"homology class of {lab!r} has rank {len(vec)}, expected {rank}")
        normalized[lab] = vec

    def accumulate(pairs: list[SkewPair]) -> ModuleElement:
        total = ModuleElement.zero()
        for p in pairs:
            for lab in (p.first, p.second):
                if lab not in normalized:
                    raise KeyError(f"no homology class for crossing {lab!r}")
            sub = subgroup_from_generators(normalized[p.first], normalized[p.second])
            total = total + ModuleElement.single(sub, p.sign)
        return total

    return accumulate(upper), accumulate(lower)


def augment(e: ModuleElement) -> int:
    """Forget homological factors: sum of coefficients."""
    return e.total_coefficient()

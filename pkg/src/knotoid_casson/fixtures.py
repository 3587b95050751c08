"""Worked example codes shipped with the library.

The three knotoids are the published low-crossing examples 2_1, 4_6 and
5_19 (names follow the standard tabulation).  The first two share the
integer invariants (1, 0) but differ homologically, and the third has all
four invariants zero, making them the canonical exercise set.
"""

from __future__ import annotations

from .codes import KnotoidCode, parse_knotoid_code

TWO_ONE_TEXT = "Oa Ub Ua Ob ; a=+1 b=+1"
FOUR_SIX_TEXT = "Ua Ob Uc Od Oa Ud Ub Oc ; a=-1 b=+1 c=+1 d=-1"
FIVE_NINETEEN_TEXT = "Ua Ob Uc Od Oc Ub Ue Oa Oe Ud ; a=-1 b=+1 c=+1 d=+1 e=+1"


def two_one() -> KnotoidCode:
    return parse_knotoid_code(TWO_ONE_TEXT)


def four_six() -> KnotoidCode:
    return parse_knotoid_code(FOUR_SIX_TEXT)


def five_nineteen() -> KnotoidCode:
    return parse_knotoid_code(FIVE_NINETEEN_TEXT)


def named_fixtures() -> dict[str, KnotoidCode]:
    return {
        "2_1": two_one(),
        "4_6": four_six(),
        "5_19": five_nineteen(),
    }

"""Reidemeister moves as word rewrites with a realizability recheck.

Moves act on the Gauss word:

* kink insertion/deletion rewrites an adjacent pair of passes of one
  crossing (two chirality variants times two signs);
* bigon insertion pokes one strand over another, creating adjacent pairs
  "Ox Oy" and "Ux Uy" with opposite signs (the oriented generating
  variant); deletion also accepts the antiparallel bigon "Ox Oy ... Uy Ux";
* the triangle move swaps the two items inside each of three adjacent
  blocks (Ox Oy / Uy Uz / Oz Ux, or the mirror-image arrangement), for
  crossings signed (+1, -1, +1).

Every candidate is validated by rebuilding the planar map of the result:
a candidate whose result is not spherically realizable was not a planar
move and is rejected.  Pushing strands over the endpoints cannot arise at
the word level; insertions at the extreme gaps stay legal because they
happen in a disk missing the endpoints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .codes import OVER, UNDER, Item, KnotoidCode, fresh_labels
from .planar import NonRealizableError, build_planar_map

R1_INSERT = "R1Insert"
R1_DELETE = "R1Delete"
R2_INSERT = "R2Insert"
R2_DELETE = "R2Delete"
R3 = "R3"


class IllegalMoveError(Exception):
    """Pattern absent at the stated site, or the rewrite is not planar."""


@dataclass(frozen=True)
class MoveInstance:
    """A fully parameterized move site; carries enough data to invert itself.

    ``gaps`` are insertion points (indices between items), ``positions``
    are first-item indices of the affected blocks.  ``over_first`` is the
    kink chirality for R1 and the block stacking order for an R2 insertion
    at a single gap.  ``parallel`` distinguishes the two bigon patterns.
    """

    kind: str
    gaps: tuple[int, ...] = ()
    positions: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()
    signs: tuple[int, ...] = ()
    over_first: bool = True
    parallel: bool = True


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise IllegalMoveError(message)


def _rewrite(code: KnotoidCode, move: MoveInstance) -> KnotoidCode:
    word = list(code.word)
    signs = dict(code.signs)
    length = len(word)

    if move.kind == R1_INSERT:
        (gap,) = move.gaps
        (label,) = move.labels
        _require(0 <= gap <= length, f"gap {gap} out of range")
        _require(label not in signs, f"label {label!r} is not fresh")
        pair = [Item(OVER, label), Item(UNDER, label)]
        if not move.over_first:
            pair.reverse()
        word[gap:gap] = pair
        signs[label] = move.signs[0]

    elif move.kind == R1_DELETE:
        (pos,) = move.positions
        (label,) = move.labels
        _require(0 <= pos < length - 1, f"position {pos} out of range")
        a, b = word[pos], word[pos + 1]
        _require(a.label == label and b.label == label, "no kink at site")
        _require((a.kind == OVER) == move.over_first, "kink chirality mismatch")
        _require(signs[label] == move.signs[0], "kink sign mismatch")
        del word[pos:pos + 2]
        del signs[label]

    elif move.kind == R2_INSERT:
        g_over, g_under = move.gaps
        x, y = move.labels
        sx = move.signs[0]
        _require(0 <= g_over <= length and 0 <= g_under <= length, "gap out of range")
        _require(x not in signs and y not in signs and x != y, "labels not fresh")
        over_block = [Item(OVER, x), Item(OVER, y)]
        under_block = [Item(UNDER, x), Item(UNDER, y)]
        if not move.parallel:
            under_block.reverse()
        if g_over == g_under:
            block = over_block + under_block if move.over_first else under_block + over_block
            word[g_over:g_over] = block
        elif g_over > g_under:
            word[g_over:g_over] = over_block
            word[g_under:g_under] = under_block
        else:
            word[g_under:g_under] = under_block
            word[g_over:g_over] = over_block
        signs[x] = sx
        signs[y] = -sx

    elif move.kind == R2_DELETE:
        p_over, p_under = move.positions
        x, y = move.labels
        _require(0 <= p_over < length - 1 and 0 <= p_under < length - 1, "position out of range")
        _require(
            word[p_over] == Item(OVER, x) and word[p_over + 1] == Item(OVER, y),
            "no over block at site",
        )
        expected = (Item(UNDER, x), Item(UNDER, y)) if move.parallel else (Item(UNDER, y), Item(UNDER, x))
        _require(
            (word[p_under], word[p_under + 1]) == expected,
            "no matching under block at site",
        )
        _require(signs[x] == -signs[y], "bigon crossings must have opposite signs")
        _require(signs[x] == move.signs[0], "bigon sign mismatch")
        for pos in sorted((p_over, p_over + 1, p_under, p_under + 1), reverse=True):
            del word[pos]
        del signs[x]
        del signs[y]

    elif move.kind == R3:
        p1, p2, p3 = move.positions
        x, y, z = move.labels
        for p in (p1, p2, p3):
            _require(0 <= p < length - 1, f"position {p} out of range")
        _require(
            signs.get(x) == 1 and signs.get(y) == -1 and signs.get(z) == 1,
            "triangle sign pattern mismatch",
        )
        at = lambda p: (word[p], word[p + 1])
        left = (
            at(p1) == (Item(OVER, x), Item(OVER, y))
            and at(p2) == (Item(UNDER, y), Item(UNDER, z))
            and at(p3) == (Item(OVER, z), Item(UNDER, x))
        )
        right = (
            at(p1) == (Item(OVER, y), Item(OVER, x))
            and at(p2) == (Item(UNDER, z), Item(UNDER, y))
            and at(p3) == (Item(UNDER, x), Item(OVER, z))
        )
        _require(left or right, "no triangle at site")
        for p in (p1, p2, p3):
            word[p], word[p + 1] = word[p + 1], word[p]

    else:
        raise IllegalMoveError(f"unknown move kind {move.kind!r}")

    return KnotoidCode(tuple(word), signs)


def apply(code: KnotoidCode, move: MoveInstance) -> KnotoidCode:
    """Apply a move; the result is validated and rechecked for realizability."""
    result = _rewrite(code, move)
    try:
        build_planar_map(result)
    except NonRealizableError as exc:
        raise IllegalMoveError(f"{move.kind} result is not spherically realizable") from exc
    return result


def inverse_move(move: MoveInstance) -> MoveInstance:
    """The move undoing ``move`` at the corresponding site of the result."""
    if move.kind == R1_INSERT:
        return MoveInstance(R1_DELETE, positions=move.gaps, labels=move.labels,
                            signs=move.signs, over_first=move.over_first)
    if move.kind == R1_DELETE:
        return MoveInstance(R1_INSERT, gaps=move.positions, labels=move.labels,
                            signs=move.signs, over_first=move.over_first)
    if move.kind == R2_INSERT:
        g_over, g_under = move.gaps
        if g_over < g_under:
            p_over, p_under = g_over, g_under + 2
        elif g_over > g_under:
            p_over, p_under = g_over + 2, g_under
        else:
            p_over, p_under = (g_over, g_over + 2) if move.over_first else (g_over + 2, g_over)
        return MoveInstance(R2_DELETE, positions=(p_over, p_under), labels=move.labels,
                            signs=move.signs, parallel=move.parallel)
    if move.kind == R2_DELETE:
        p_over, p_under = move.positions
        if p_over < p_under:
            gaps, over_first = (p_over, p_under - 2), True
        else:
            gaps, over_first = (p_over - 2, p_under), False
        return MoveInstance(R2_INSERT, gaps=gaps, labels=move.labels,
                            signs=move.signs, over_first=over_first, parallel=move.parallel)
    if move.kind == R3:
        return move
    raise IllegalMoveError(f"unknown move kind {move.kind!r}")


# ---------------------------------------------------------------------------
# site detection


def r1_delete_sites(code: KnotoidCode) -> list[MoveInstance]:
    word = code.word
    out = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a.label == b.label:
            out.append(MoveInstance(
                R1_DELETE, positions=(p,), labels=(a.label,),
                signs=(code.signs[a.label],), over_first=(a.kind == OVER),
            ))
    return out


def _adjacent_blocks(code: KnotoidCode, kind1: str, kind2: str) -> list[tuple[int, str, str]]:
    word = code.word
    return [
        (p, word[p].label, word[p + 1].label)
        for p in range(len(word) - 1)
        if word[p].kind == kind1 and word[p + 1].kind == kind2
        and word[p].label != word[p + 1].label
    ]


def r2_delete_sites(code: KnotoidCode) -> list[MoveInstance]:
    over_blocks = _adjacent_blocks(code, OVER, OVER)
    under_blocks = _adjacent_blocks(code, UNDER, UNDER)
    out = []
    for p, x, y in over_blocks:
        if code.signs[x] != -code.signs[y]:
            continue
        for q, u1, u2 in under_blocks:
            if {u1, u2} != {x, y}:
                continue
            out.append(MoveInstance(
                R2_DELETE, positions=(p, q), labels=(x, y),
                signs=(code.signs[x],), parallel=(u1 == x),
            ))
    return out


def r3_sites(code: KnotoidCode) -> list[MoveInstance]:
    signs = code.signs
    over_over = _adjacent_blocks(code, OVER, OVER)
    under_under = _adjacent_blocks(code, UNDER, UNDER)
    over_under = {(a, b): p for p, a, b in _adjacent_blocks(code, OVER, UNDER)}
    under_over = {(a, b): p for p, a, b in _adjacent_blocks(code, UNDER, OVER)}
    out = []
    for p1, a, b in over_over:
        # left arrangement: (x+ y+) = (Oa, Ob)
        if signs[a] == 1 and signs[b] == -1:
            for p2, u1, u2 in under_under:
                if u1 != b or u2 in (a, b) or signs[u2] != 1:
                    continue
                p3 = over_under.get((u2, a))
                if p3 is not None:
                    out.append(MoveInstance(R3, positions=(p1, p2, p3), labels=(a, b, u2)))
        # right arrangement: (y+ x+) = (Oa, Ob)
        if signs[b] == 1 and signs[a] == -1:
            for p2, u1, u2 in under_under:
                if u2 != a or u1 in (a, b) or signs[u1] != 1:
                    continue
                p3 = under_over.get((b, u1))
                if p3 is not None:
                    out.append(MoveInstance(R3, positions=(p1, p2, p3), labels=(b, a, u1)))
    return out


def enumerate_moves(code: KnotoidCode) -> list[MoveInstance]:
    """All legal deletion and triangle sites plus realizable insertions.

    Insertions are the bounded candidate set (kinks at every gap in every
    chirality and sign; generating-variant bigons at every gap pair), each
    kept only if the realizability recheck passes.
    """
    length = len(code.word)
    x, y = fresh_labels(code, 2)
    candidates: list[MoveInstance] = []
    candidates += r1_delete_sites(code)
    candidates += r2_delete_sites(code)
    candidates += r3_sites(code)
    for gap in range(length + 1):
        for over_first in (True, False):
            for sign in (1, -1):
                candidates.append(MoveInstance(
                    R1_INSERT, gaps=(gap,), labels=(x,), signs=(sign,),
                    over_first=over_first,
                ))
    for g_over in range(length + 1):
        for g_under in range(length + 1):
            stackings = (True, False) if g_over == g_under else (True,)
            for over_first in stackings:
                for sign in (1, -1):
                    candidates.append(MoveInstance(
                        R2_INSERT, gaps=(g_over, g_under), labels=(x, y),
                        signs=(sign,), over_first=over_first,
                    ))
    legal = []
    for move in candidates:
        try:
            apply(code, move)
        except IllegalMoveError:
            continue
        legal.append(move)
    return legal


# ---------------------------------------------------------------------------
# random walks

_WALK_KINDS = (R1_INSERT, R2_INSERT, R1_DELETE, R2_DELETE, R3)
_GROW_WEIGHTS = (3, 3, 3, 3, 2)
_SHRINK_WEIGHTS = (0, 0, 4, 4, 2)
_MAX_ATTEMPTS = 12


def _random_candidate(code: KnotoidCode, kind: str, rng: random.Random) -> MoveInstance | None:
    length = len(code.word)
    if kind == R1_INSERT:
        (label,) = fresh_labels(code, 1)
        return MoveInstance(
            R1_INSERT, gaps=(rng.randrange(length + 1),), labels=(label,),
            signs=(rng.choice((1, -1)),), over_first=rng.random() < 0.5,
        )
    if kind == R2_INSERT:
        labels = fresh_labels(code, 2)
        return MoveInstance(
            R2_INSERT,
            gaps=(rng.randrange(length + 1), rng.randrange(length + 1)),
            labels=labels, signs=(rng.choice((1, -1)),),
            over_first=rng.random() < 0.5,
        )
    sites = {
        R1_DELETE: r1_delete_sites,
        R2_DELETE: r2_delete_sites,
        R3: r3_sites,
    }[kind](code)
    return rng.choice(sites) if sites else None


def iter_walk(
    code: KnotoidCode, steps: int, seed: int, growth_cap: int = 12
) -> Iterator[tuple[MoveInstance, KnotoidCode]]:
    """Seeded random walk; yields (move, code) per performed step.

    Steps with no legal candidate after a bounded number of attempts are
    skipped.  Insertions are disabled once the code exceeds its starting
    size by ``growth_cap`` crossings, keeping walks bounded.
    """
    rng = random.Random(seed)
    current = code
    cap = code.n_crossings + growth_cap
    for _ in range(steps):
        weights = _SHRINK_WEIGHTS if current.n_crossings >= cap else _GROW_WEIGHTS
        for _attempt in range(_MAX_ATTEMPTS):
            kind = rng.choices(_WALK_KINDS, weights)[0]
            move = _random_candidate(current, kind, rng)
            if move is None:
                continue
            try:
                current = apply(current, move)
            except IllegalMoveError:
                continue
            yield move, current
            break
    return


def random_walk(code: KnotoidCode, steps: int, seed: int) -> KnotoidCode:
    """Endpoint of a seeded walk of legal moves; a diagram of the same knotoid."""
    current = code
    for _, current in iter_walk(code, steps, seed):
        pass
    return current

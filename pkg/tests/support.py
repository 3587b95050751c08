"""Shared helpers: random code generation and independent oracles."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from knotoid_casson.codes import OVER, UNDER, Item, KnotoidCode
from knotoid_casson.planar import (
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    ArcStep,
    NonRealizableError,
    PlanarMap,
    build_planar_map,
    loop_edges,
)


def random_code(rng: random.Random, n_crossings: int) -> KnotoidCode:
    items: list[Item] = []
    for i in range(1, n_crossings + 1):
        items.append(Item(OVER, f"c{i}"))
        items.append(Item(UNDER, f"c{i}"))
    rng.shuffle(items)
    signs = {f"c{i}": rng.choice((1, -1)) for i in range(1, n_crossings + 1)}
    return KnotoidCode(tuple(items), signs)


def random_realizable_code(rng: random.Random, n_crossings: int, max_tries: int = 500):
    for _ in range(max_tries):
        code = random_code(rng, n_crossings)
        try:
            build_planar_map(code)
        except NonRealizableError:
            continue
        return code
    return None


def brute_force_skew_pairs(code: KnotoidCode) -> tuple[set, set]:
    """Independent oracle: exhaustive scan over position quadruples.

    Returns the upper and lower pair sets as (first, second) label tuples.
    """
    word = code.word
    length = len(word)
    upper: set[tuple[str, str]] = set()
    lower: set[tuple[str, str]] = set()
    for p1 in range(length):
        for p2 in range(p1 + 1, length):
            for p3 in range(p2 + 1, length):
                for p4 in range(p3 + 1, length):
                    a, b, c, d = word[p1], word[p2], word[p3], word[p4]
                    if a.label != c.label or b.label != d.label or a.label == b.label:
                        continue
                    kinds = (a.kind, b.kind, c.kind, d.kind)
                    if kinds == (OVER, UNDER, UNDER, OVER):
                        upper.add((a.label, b.label))
                    elif kinds == (UNDER, OVER, OVER, UNDER):
                        lower.add((a.label, b.label))
    return upper, lower


def canonical_relabel(code: KnotoidCode) -> KnotoidCode:
    """Rename labels by first occurrence, for comparisons up to relabeling."""
    mapping: dict[str, str] = {}
    for it in code.word:
        mapping.setdefault(it.label, f"l{len(mapping)}")
    word = tuple(Item(it.kind, mapping[it.label]) for it in code.word)
    return KnotoidCode(word, {mapping[lab]: s for lab, s in code.signs.items()})


def all_simple_dual_paths(pmap: PlanarMap) -> list[tuple[ArcStep, ...]]:
    """Every simple dual path from the head face to the leg face."""
    if pmap.head_face == pmap.leg_face:
        return [()]
    adjacency: dict[int, list[tuple[int, int]]] = {f: [] for f in range(pmap.num_faces)}
    for e in range(pmap.num_edges):
        left, right = pmap.left_face(e), pmap.right_face(e)
        if left != right:
            adjacency[left].append((right, e))
            adjacency[right].append((left, e))
    paths: list[tuple[ArcStep, ...]] = []

    def extend(face: int, visited: set[int], steps: list[ArcStep]) -> None:
        if face == pmap.leg_face:
            paths.append(tuple(steps))
            return
        for nxt, e in adjacency[face]:
            if nxt in visited:
                continue
            direction = RIGHT_TO_LEFT if face == pmap.right_face(e) else LEFT_TO_RIGHT
            visited.add(nxt)
            steps.append(ArcStep(e, direction))
            extend(nxt, visited, steps)
            steps.pop()
            visited.remove(nxt)

    extend(pmap.head_face, {pmap.head_face}, [])
    return paths


def loop_class_along(pmap: PlanarMap, steps, label: str) -> int:
    weights: dict[int, int] = {}
    for e, d in steps:
        weights[e] = weights.get(e, 0) + d
    return sum(weights.get(e, 0) for e in loop_edges(pmap.code, label))


@st.composite
def code_strategy(draw, min_crossings: int = 0, max_crossings: int = 6) -> KnotoidCode:
    n = draw(st.integers(min_crossings, max_crossings))
    items: list[Item] = []
    for i in range(1, n + 1):
        items.append(Item(OVER, f"c{i}"))
        items.append(Item(UNDER, f"c{i}"))
    word = tuple(draw(st.permutations(items))) if items else ()
    signs = {f"c{i}": draw(st.sampled_from((1, -1))) for i in range(1, n + 1)}
    return KnotoidCode(word, signs)

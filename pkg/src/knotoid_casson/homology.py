"""Subgroup lattice of Z^k and integer formal sums of subgroups.

The homological invariants take values in the free Z-module on the set of
subgroups of the first homology group of the ambient surface.  Subgroups
of Z^k are named canonically by the row-style Hermite normal form of a
generating matrix, so equality of formal sums is syntactic.  For the
annulus (k = 1) a subgroup is <j> with j >= 0, meaning j*Z; <0> is the
trivial subgroup and is a basis element distinct from the zero sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

HomologyClass = tuple[int, ...]


def as_class(value: "int | Iterable[int]") -> HomologyClass:
    """Coerce an int (annulus winding) or an int vector to a homology class."""
    if isinstance(value, int):
        return (value,)
    vec = tuple(int(v) for v in value)
    if not vec:
        raise ValueError("a homology class needs rank >= 1")
    return vec


def hermite_normal_form(rows: Iterable[Iterable[int]]) -> tuple[HomologyClass, ...]:
    """Canonical basis (row HNF) of the subgroup of Z^k generated by ``rows``.

    Pivots are positive with increasing pivot columns; entries above a
    pivot are reduced into [0, pivot).  Zero rows are dropped, so the
    trivial subgroup canonicalizes to the empty basis.
    """
    mat = [list(r) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return ()
    k = len(mat[0])
    if any(len(r) != k for r in mat):
        raise ValueError("generators have mixed ranks")
    top = 0
    for col in range(k):
        while True:
            live = [i for i in range(top, len(mat)) if mat[i][col]]
            if not live:
                break
            i_min = min(live, key=lambda i: abs(mat[i][col]))
            mat[top], mat[i_min] = mat[i_min], mat[top]
            pivot = mat[top][col]
            reduced = True
            for i in range(top + 1, len(mat)):
                if mat[i][col]:
                    q = mat[i][col] // pivot
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col]:
                        reduced = False
            if reduced:
                if mat[top][col] < 0:
                    mat[top] = [-a for a in mat[top]]
                pivot = mat[top][col]
                for i in range(top):
                    q = mat[i][col] // pivot
                    if q:
                        mat[i] = [a - q * b for a, b in zip(mat[i], mat[top])]
                top += 1
                break
    return tuple(tuple(r) for r in mat[:top])


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of Z^k in canonical (HNF) form; hashable basis element of M."""

    ambient_rank: int
    basis: tuple[HomologyClass, ...]

    @classmethod
    def generated_by(cls, *generators: "int | Iterable[int]") -> "Subgroup":
        vecs = [as_class(g) for g in generators]
        if not vecs:
            raise ValueError("need at least one generator (possibly zero)")
        rank = len(vecs[0])
        if any(len(v) != rank for v in vecs):
            raise ValueError("rank mismatch between generators")
        return cls(rank, hermite_normal_form(vecs))

    @classmethod
    def cyclic(cls, j: int) -> "Subgroup":
        """The subgroup <j> = jZ of Z (annulus homology); <j> == <-j>."""
        return cls.generated_by(j)

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    def sort_key(self) -> tuple:
        return (self.ambient_rank, self.basis)

    def __str__(self) -> str:
        if self.is_trivial:
            return "<0>"
        if self.ambient_rank == 1:
            return f"<{self.basis[0][0]}>"
        rows = ",".join("(" + ",".join(str(a) for a in row) + ")" for row in self.basis)
        return f"<{rows}>"


def subgroup_from_generators(
    v1: "int | Iterable[int]", v2: "int | Iterable[int]"
) -> Subgroup:
    """Canonical subgroup generated by two homology classes of equal rank."""
    a, b = as_class(v1), as_class(v2)
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    return Subgroup.generated_by(a, b)


class ModuleElement:
    """A finite integer formal sum of canonical subgroups (zero terms dropped)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Subgroup, int] | None = None) -> None:
        self._terms = {s: int(c) for s, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "ModuleElement":
        return cls()

    @classmethod
    def single(cls, subgroup: Subgroup, coefficient: int = 1) -> "ModuleElement":
        return cls({subgroup: coefficient})

    def terms(self) -> dict[Subgroup, int]:
        return dict(self._terms)

    def items_sorted(self) -> list[tuple[Subgroup, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __iter__(self) -> Iterator[tuple[Subgroup, int]]:
        return iter(self.items_sorted())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, 0) + c
        return ModuleElement(out)

    def __neg__(self) -> "ModuleElement":
        return ModuleElement({s: -c for s, c in self._terms.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def __mul__(self, n: int) -> "ModuleElement":
        return ModuleElement({s: n * c for s, c in self._terms.items()})

    __rmul__ = __mul__

    def norm(self) -> int:
        """Sum of absolute coefficients."""
        return sum(abs(c) for c in self._terms.values())

    def total_coefficient(self) -> int:
        """Sum of coefficients (augmentation, forgetting the subgroups)."""
        return sum(self._terms.values())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{s}" for s, c in self.items_sorted())

    def __repr__(self) -> str:
        return f"ModuleElement({self})"


def add(a: ModuleElement, b: ModuleElement) -> ModuleElement:
    return a + b


def scale(a: ModuleElement, n: int) -> ModuleElement:
    return a * n


def norm(e: ModuleElement) -> int:
    return e.norm()

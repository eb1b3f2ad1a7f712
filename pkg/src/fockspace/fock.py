"""The level-1 Fock space over the integers.

Basis vectors are indexed by partitions.  The generator f_i adds one box of
residue i in all possible ways, e_i removes one, and h_i acts diagonally by
n_i.  All coefficients are exact integers; single operator applications are
always finite, so no truncation happens here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .partitions import (
    Partition,
    addable_boxes,
    add_box,
    canonical_residue,
    check_modulus,
    n_value,
    partitions_of,
    removable_boxes,
    remove_box,
    residue,
)


class FockVector:
    """A finite integer combination of basis partitions (no zero terms)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, int] | None = None):
        self.terms: dict[Partition, int] = {}
        if terms:
            for p, c in terms.items():
                if not isinstance(p, Partition):
                    raise TypeError(f"keys must be partitions, got {p!r}")
                if c:
                    self.terms[p] = int(c)

    @classmethod
    def basis(cls, p: Partition) -> "FockVector":
        return cls({p: 1})

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    def coefficient(self, p: Partition) -> int:
        return self.terms.get(p, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-1) * other

    def __neg__(self) -> "FockVector":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "FockVector":
        return FockVector({p: scalar * c for p, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items(), reverse=True)))

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "FockVector(0)"
        body = " + ".join(f"{c}*v{p}" for p, c in self.sorted_items())
        return f"FockVector({body})"


def apply_f(v: FockVector, i: int, e: int) -> FockVector:
    """Add one i-box in all ways, extended linearly."""
    i = canonical_residue(i, e)
    out: dict[Partition, int] = {}
    for p, c in v.terms.items():
        for b in addable_boxes(p):
            if residue(b, e) == i:
                q = add_box(p, b)
                out[q] = out.get(q, 0) + c
    return FockVector(out)


def apply_e(v: FockVector, i: int, e: int) -> FockVector:
    """Remove one i-box in all ways, extended linearly."""
    i = canonical_residue(i, e)
    out: dict[Partition, int] = {}
    for p, c in v.terms.items():
        for b in removable_boxes(p):
            if residue(b, e) == i:
                q = remove_box(p, b)
                out[q] = out.get(q, 0) + c
    return FockVector(out)


def apply_h(v: FockVector, i: int, e: int) -> FockVector:
    """Diagonal action v_p -> n_i(p) * v_p."""
    i = canonical_residue(i, e)
    return FockVector({p: n_value(p, i, e) * c for p, c in v.terms.items()})


@dataclass(frozen=True)
class Weight:
    """An affine weight omega_0 - sum m_i alpha_i, keyed by residue.

    Stored as the sorted tuple of nonzero (residue, multiplicity) pairs; the
    omega_0 coefficient is implicitly 1.
    """

    modulus: int
    alpha: tuple[tuple[int, int], ...]

    def multiplicity(self, i: int) -> int:
        return dict(self.alpha).get(canonical_residue(i, self.modulus), 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.alpha)

    def json_dict(self) -> dict[str, int]:
        return {str(i): m for i, m in self.alpha}


def weight(p: Partition, e: int) -> Weight:
    """The weight of the basis vector at p: residue -> box count."""
    check_modulus(e)
    counts: dict[int, int] = {}
    for b in p.boxes():
        r = residue(b, e)
        counts[r] = counts.get(r, 0) + 1
    return Weight(e, tuple(sorted(counts.items())))


def cartan_entry(i: int, j: int, e: int) -> int:
    """Entry a_ij of the affine type-A Cartan matrix (doubled bond for e=2)."""
    check_modulus(e)
    if e == 0:
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0
    i, j = i % e, j % e
    if i == j:
        return 2
    if e == 2:
        return -2
    return -1 if (i - j) % e in (1, e - 1) else 0


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse integer matrix with partition-labelled rows and columns."""

    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[int, int, int], ...]  # (row index, col index, coeff)

    @classmethod
    def build(
        cls,
        rows: Iterable[Partition],
        cols: Iterable[Partition],
        entries: Mapping[tuple[int, int], int],
    ) -> "SparseMatrix":
        triples = tuple(
            (r, c, v) for (r, c), v in sorted(entries.items()) if v
        )
        return cls(tuple(rows), tuple(cols), triples)

    def entry_dict(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, c, v in self.entries}

    def transpose(self) -> "SparseMatrix":
        flipped = {(c, r): v for r, c, v in self.entries}
        return SparseMatrix.build(self.cols, self.rows, flipped)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix bases do not match")
        merged = self.entry_dict()
        for key, v in other.entry_dict().items():
            merged[key] = merged.get(key, 0) + v
        return SparseMatrix.build(self.rows, self.cols, merged)

    def json_dict(self) -> dict:
        return {
            "rows": [str(p) for p in self.rows],
            "cols": [str(p) for p in self.cols],
            "entries": [[r, c, v] for r, c, v in self.entries],
        }

    def csv_lines(self) -> list[str]:
        return ["row,col,coeff"] + [f"{r},{c},{v}" for r, c, v in self.entries]


_OPERATORS = {"e": apply_e, "f": apply_f, "h": apply_h}


def op_matrix(kind: str, i: int, e: int, d: int) -> SparseMatrix:
    """Matrix of e_i, f_i or h_i out of the degree-d graded piece.

    Columns are indexed by the partitions of d, rows by the partitions of
    the target degree (d-1 for e, d+1 for f, d for h), both in descending
    lexicographic order.
    """
    kind = kind.lower()
    if kind not in _OPERATORS:
        raise ValueError(f"operator kind must be one of e, f, h, got {kind!r}")
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    check_modulus(e)
    cols = partitions_of(d)
    target = {"e": d - 1, "f": d + 1, "h": d}[kind]
    rows = partitions_of(target)
    row_index = {p: k for k, p in enumerate(rows)}
    apply = _OPERATORS[kind]
    entries: dict[tuple[int, int], int] = {}
    for c_idx, p in enumerate(cols):
        image = apply(FockVector.basis(p), i, e)
        for q, coeff in image.terms.items():
            entries[(row_index[q], c_idx)] = coeff
    return SparseMatrix.build(rows, cols, entries)

"""Block decomposition of each degree layer by shared core.

Partitions of a fixed size fall into the same block exactly when they have
the same e-core, equivalently the same weight; the two characterisations
are computed through independent code paths and compared in the test
suites rather than identified by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fock import Weight, weight
from .partitions import Partition, check_modulus, p_core, partitions_of


@dataclass(frozen=True)
class Block:
    modulus: int
    degree: int
    core: Partition
    members: tuple[Partition, ...]
    weight: Weight
    p_weight: int

    def json_dict(self) -> dict:
        return {
            "core": str(self.core),
            "members": [str(p) for p in self.members],
            "weight": self.weight.json_dict(),
            "p_weight": self.p_weight,
        }


def blocks(d: int, e: int) -> list[Block]:
    """Partition the degree-d layer into classes of equal e-core."""
    check_modulus(e)
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    by_core: dict[Partition, list[Partition]] = {}
    for p in partitions_of(d):
        by_core.setdefault(p_core(p, e), []).append(p)
    out = []
    for core in sorted(by_core, reverse=True):
        members = tuple(sorted(by_core[core], reverse=True))
        out.append(
            Block(
                modulus=e,
                degree=d,
                core=core,
                members=members,
                weight=weight(members[0], e),
                p_weight=(d - core.size) // e if e else 0,
            )
        )
    return out


def same_block(p: Partition, q: Partition, e: int) -> bool:
    """Whether two partitions of equal size share their e-core."""
    check_modulus(e)
    if p.size != q.size:
        raise ValueError(f"sizes differ: |{p}| = {p.size}, |{q}| = {q.size}")
    return p_core(p, e) == p_core(q, e)


def derived_equivalence_classes(d: int, e: int) -> list[list[Block]]:
    """Group the blocks of degree d by equal p-weight (requires e >= 2)."""
    check_modulus(e)
    if e == 0:
        raise ValueError("derived-equivalence grouping needs a modulus >= 2")
    by_weight: dict[int, list[Block]] = {}
    for block in blocks(d, e):
        by_weight.setdefault(block.p_weight, []).append(block)
    return [by_weight[w] for w in sorted(by_weight)]

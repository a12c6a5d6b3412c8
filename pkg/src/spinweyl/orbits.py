"""Nilpotent orbit labels and middle elements for the central-character dictionary.

For type A the middle element of the orbit with Jordan form lambda is the
sorted concatenation of the strings (p-1, p-3, ..., 1-p) over the parts p.
Middle elements for other classical Jordan types are not implemented (the
type-B central characters come from the box-labelling rule instead), and
exceptional orbits are opaque Bala-Carter strings validated through the
Casimir identity only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import Partition
from .params import ParameterFunction, QuadK


@dataclass(frozen=True)
class OrbitLabel:
    """Either a classical Jordan partition or a Bala-Carter string."""

    jordan: Partition | None = None
    bala_carter: str | None = None

    def __str__(self):
        if self.jordan is not None:
            return f"A[{','.join(map(str, self.jordan.parts))}]"
        return self.bala_carter


def middle_element_type_a(lam: Partition) -> tuple[Fraction, ...]:
    """h for the sl_n orbit with Jordan blocks lam; entries sum to zero."""
    entries: list[Fraction] = []
    for p in lam.parts:
        entries.extend(Fraction(p - 1 - 2 * i) for i in range(p))
    entries.sort(reverse=True)
    assert sum(entries) == 0
    return tuple(entries)


def identcc(label: OrbitLabel) -> tuple[Fraction, ...]:
    """Central character (1/2) h at parameter 1 for orbits with a stored h."""
    if label.jordan is None:
        raise ValueError(f"no middle element stored for {label}")
    return tuple(x / 2 for x in middle_element_type_a(label.jordan))


def hh_norm(h) -> Fraction:
    return sum(x * x for x in h)


def casimir_matches_hh(type_str: str, row_index: int, lam: Partition,
                       rank: int | None = None) -> bool:
    """sigma~(Omega at k=1) == (h, h) for the type A orbit with Jordan form lam."""
    from .chartab import casimir_scalar
    h = middle_element_type_a(lam)
    value = casimir_scalar(type_str, row_index, rank).specialize(
        ParameterFunction.make(1))
    return value == hh_norm(h)

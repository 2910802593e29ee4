"""States and moves of the orientation game."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from app.polytope.models import ValidationReport


class Status(str, Enum):
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741


class PairClass(str, Enum):
    VERY_GOOD = "VeryGood"
    GOOD = "Good"
    BAD = "Bad"


@dataclass(frozen=True)
class State:
    """Per facet, True when the facet has status O."""

    outward: tuple[bool, ...]

    @classmethod
    def from_labels(cls, labels) -> "State":
        values = []
        for label in labels:
            raw = str(label).strip().upper()
            if raw not in {"I", "O"}:
                raise ValueError(f"unsupported_status:{label}")
            values.append(raw == "O")
        return cls(tuple(values))

    @classmethod
    def constant(cls, num_facets: int, status: Status = Status.I) -> "State":
        return cls(tuple([status == Status.O] * num_facets))

    def status(self, facet: int) -> Status:
        return Status.O if self.outward[facet] else Status.I

    def labels(self) -> list[str]:
        return ["O" if value else "I" for value in self.outward]

    def flipped(self) -> "State":
        return State(tuple(not value for value in self.outward))


@dataclass(frozen=True)
class Moves:
    """Partition of the colour palette {1..c} into blocks."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, blocks) -> "Moves":
        normalized = [tuple(sorted(int(colour) for colour in block)) for block in blocks]
        return cls(tuple(sorted(normalized)))

    @classmethod
    def discrete(cls, palette_size: int) -> "Moves":
        return cls(tuple((colour,) for colour in range(1, palette_size + 1)))

    @cached_property
    def _block_index(self) -> dict[int, int]:
        return {colour: index for index, block in enumerate(self.blocks) for colour in block}

    def block_of(self, colour: int) -> int:
        return self._block_index[colour]

    def same_block(self, a: int, b: int) -> bool:
        return self._block_index.get(a) == self._block_index.get(b)

    def colour_masks(self, palette_size: int) -> tuple[int, ...]:
        """Entry i-1 is the bitmask of colours sharing a block with colour i."""
        masks = [0] * palette_size
        for block in self.blocks:
            mask = 0
            for colour in block:
                mask |= 1 << (colour - 1)
            for colour in block:
                if 1 <= colour <= palette_size:
                    masks[colour - 1] = mask
        return tuple(masks)

    def is_discrete(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)


def validate_moves(moves: Moves, palette_size: int) -> ValidationReport:
    report = ValidationReport()
    seen: list[int] = []
    for block in moves.blocks:
        report.checked += 1
        if not block:
            report.add("empty_block")
        seen.extend(block)
    for colour in sorted(set(seen)):
        if seen.count(colour) > 1:
            report.add(f"colour in several blocks:{colour}")
        if not 1 <= colour <= palette_size:
            report.add(f"block colour out of palette:{colour}")
    for colour in range(1, palette_size + 1):
        if colour not in seen:
            report.add(f"colour in no block:{colour}")
    return report


def validate_state(state: State, num_facets: int) -> ValidationReport:
    report = ValidationReport(checked=len(state.outward))
    if len(state.outward) != num_facets:
        report.add(f"state covers {len(state.outward)} facets, polytope has {num_facets}")
    return report


__all__ = ["Moves", "PairClass", "State", "Status", "validate_moves", "validate_state"]

"""Formal integer combinations of hashable labels."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable


class FormalSum(dict):
    """A finitely supported map label -> int with zero terms dropped."""

    def __init__(self, terms=()):
        """`terms` is a mapping or an iterable of (label, coefficient) pairs."""
        super().__init__()
        if isinstance(terms, dict):
            terms = terms.items()
        for label, coeff in terms:
            self.add(label, coeff)

    @classmethod
    def single(cls, label: Hashable, coeff: int = 1) -> "FormalSum":
        out = cls()
        out.add(label, coeff)
        return out

    @classmethod
    def of(cls, labels: Iterable[Hashable]) -> "FormalSum":
        out = cls()
        for label in labels:
            out.add(label, 1)
        return out

    def add(self, label: Hashable, coeff: int = 1) -> None:
        value = self.get(label, 0) + coeff
        if value:
            self[label] = value
        elif label in self:
            del self[label]

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(self)
        for label, coeff in other.items():
            out.add(label, coeff)
        return out

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, c: int) -> "FormalSum":
        out = FormalSum()
        for label, coeff in self.items():
            out.add(label, c * coeff)
        return out

    def map(self, f: Callable) -> "FormalSum":
        """Push the sum forward along a label map (collisions add up)."""
        out = FormalSum()
        for label, coeff in self.items():
            out.add(f(label), coeff)
        return out

    def total(self) -> int:
        return sum(self.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.values())

    def sorted_items(self, key: Callable | None = None) -> list:
        if key is None:
            key = repr
        return sorted(self.items(), key=lambda kv: key(kv[0]))

    def __repr__(self) -> str:
        if not self:
            return "0"
        parts = []
        for label, c in self.sorted_items():
            parts.append(f"{label!r}" if c == 1 else f"{c}*{label!r}")
        return " + ".join(parts)

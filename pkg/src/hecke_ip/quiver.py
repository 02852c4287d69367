"""Finite quivers: vertices, arrow multiplicities, components, DOT output."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable


@dataclass
class Quiver:
    vertices: list
    arrows: dict = field(default_factory=dict)   # (source, target) -> multiplicity

    def add_arrows(self, a: Hashable, b: Hashable, mult: int) -> None:
        if mult:
            self.arrows[(a, b)] = self.arrows.get((a, b), 0) + mult

    def loops(self) -> list:
        return [a for (a, b) in self.arrows if a == b]

    def arrow_count(self) -> int:
        return sum(self.arrows.values())

    def neighbours(self) -> dict:
        nb = {v: set() for v in self.vertices}
        for a, b in self.arrows:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def components(self) -> list[list]:
        """Connected components of the underlying undirected graph."""
        nb = self.neighbours()
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in nb[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            order = {u: i for i, u in enumerate(self.vertices)}
            out.append(sorted(comp, key=order.__getitem__))
        return out

    def underlying_edges(self, comp: Iterable) -> set:
        comp = set(comp)
        return {frozenset((a, b)) for (a, b) in self.arrows if a in comp and b in comp and a != b}

    def component_kind(self, comp: list) -> str:
        """'point', 'path<k>' (k vertices), 'cycle<k>' or 'other' for the simple graph."""
        edges = self.underlying_edges(comp)
        k = len(comp)
        if k == 1:
            return "point"
        deg = {v: 0 for v in comp}
        for e in edges:
            for v in e:
                deg[v] += 1
        if len(edges) == k - 1 and max(deg.values()) <= 2:
            return f"path{k}"
        if len(edges) == k and all(d == 2 for d in deg.values()):
            return f"cycle{k}"
        return "other"

    def shape(self) -> dict:
        """Multiset of component kinds, e.g. {'point': 4, 'path2': 4, 'cycle4': 1}."""
        out: dict[str, int] = {}
        for comp in self.components():
            kind = self.component_kind(comp)
            out[kind] = out.get(kind, 0) + 1
        return out

    def tensor(self, other: "Quiver", combine: Callable = lambda a, b: (a, b)) -> "Quiver":
        """Quiver of A (x) B for basic algebras: arrows change exactly one coordinate."""
        verts = [combine(a, b) for a in self.vertices for b in other.vertices]
        out = Quiver(verts)
        for (a, a2), m in self.arrows.items():
            for b in other.vertices:
                out.add_arrows(combine(a, b), combine(a2, b), m)
        for (b, b2), m in other.arrows.items():
            for a in self.vertices:
                out.add_arrows(combine(a, b), combine(a, b2), m)
        return out

    def relabel(self, f: Callable) -> "Quiver":
        out = Quiver([f(v) for v in self.vertices])
        for (a, b), m in self.arrows.items():
            out.add_arrows(f(a), f(b), m)
        return out

    @staticmethod
    def disjoint_union(parts: Iterable["Quiver"]) -> "Quiver":
        out = Quiver([])
        for q in parts:
            out.vertices.extend(q.vertices)
            for (a, b), m in q.arrows.items():
                out.add_arrows(a, b, m)
        return out

    def sorted_arrows(self) -> list:
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(self.arrows.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))

    def to_dot(self, label: Callable = str, name: str = "Q") -> str:
        ids = {v: f"v{i}" for i, v in enumerate(self.vertices)}
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            text = label(v).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {ids[v]} [label="{text}"];')
        for (a, b), m in self.sorted_arrows():
            for _ in range(m):
                lines.append(f"  {ids[a]} -> {ids[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self, label: Callable = str) -> dict:
        return {"vertices": [label(v) for v in self.vertices],
                "arrows": [[label(a), label(b), m] for (a, b), m in self.sorted_arrows()],
                "shape": dict(sorted(self.shape().items()))}

"""Finite permutation groups acting on a labelled carrier.

Carrier points are dense indices ``0..n-1``; an optional label table maps
them to domain objects (pitch classes, triads, ...), and every query that
takes a point accepts the label. Groups are closed from generators by
breadth-first product saturation, so element order is reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field
from typing import Any

__all__ = [
    "CarrierMismatch",
    "NotAnElement",
    "Permutation",
    "FiniteGroup",
    "GroupClassification",
    "close_generators",
    "permutation_from_action",
]


class CarrierMismatch(ValueError):
    pass


class NotAnElement(KeyError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a bijection on {len(mapping)} points: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def _trusted(cls, mapping: tuple[int, ...]) -> "Permutation":
        # skips validation; only for products of known bijections
        p = object.__new__(cls)
        object.__setattr__(p, "mapping", mapping)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self * other`` applies ``other`` first."""
        if len(other) != len(self):
            raise CarrierMismatch(f"carrier sizes differ: {len(self)} vs {len(other)}")
        m = self.mapping
        return Permutation._trusted(tuple([m[j] for j in other.mapping]))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.mapping))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity:
            p, k = self * p, k + 1
        return k

    def fixes(self, i: int) -> bool:
        return self.mapping[i] == i


def permutation_from_action(act: Callable[[Any], Any], points: Sequence[Hashable]) -> Permutation:
    """The permutation induced on ``points`` by the function ``act``."""
    index = {p: i for i, p in enumerate(points)}
    try:
        return Permutation(tuple(index[act(p)] for p in points))
    except KeyError as exc:
        raise ValueError(f"action leaves the carrier: {exc.args[0]!r}") from None


@dataclass(frozen=True)
class GroupClassification:
    kind: str  # "cyclic", "dihedral" or "other"
    n: int | None = None
    witnesses: tuple[int, ...] = ()  # element indices: (generator,) or (r, s)

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Cyclic({self.n})"
        if self.kind == "dihedral":
            return f"Dihedral({self.n})"
        return "Other"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    carrier_size: int
    elements: tuple[Permutation, ...]
    words: tuple[str, ...]
    labels: tuple[Any, ...]
    identity: int = 0
    cayley: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False)
    _point_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        index = {p: i for i, p in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate group elements")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_point_index", {p: i for i, p in enumerate(self.labels)})
        try:
            cayley = tuple(tuple(index[a * b] for b in self.elements) for a in self.elements)
        except KeyError:
            raise ValueError("element list is not closed under composition") from None
        object.__setattr__(self, "cayley", cayley)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, e: Permutation | int) -> int:
        if isinstance(e, Permutation):
            try:
                return self._index[e]
            except KeyError:
                raise NotAnElement(e) from None
        if not 0 <= e < len(self.elements):
            raise NotAnElement(e)
        return e

    def __contains__(self, e: object) -> bool:
        return e in self._index

    def point_index(self, point: Any) -> int:
        try:
            return self._point_index[point]
        except KeyError:
            raise KeyError(f"{point!r} is not in the carrier") from None

    def product(self, a: int, b: int) -> int:
        """Index of ``elements[a] * elements[b]``."""
        return self.cayley[a][b]

    def inverse_index(self, a: int) -> int:
        return self.cayley[a].index(self.identity)

    def power_index(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse_index(a), -k
        result = self.identity
        for _ in range(k):
            result = self.cayley[a][result]
        return result

    def element_order(self, e: Permutation | int) -> int:
        a = self.index_of(e)
        k, x = 1, a
        while x != self.identity:
            x, k = self.cayley[a][x], k + 1
        return k

    def is_abelian(self) -> bool:
        n = len(self)
        return all(self.cayley[a][b] == self.cayley[b][a] for a in range(n) for b in range(a + 1, n))

    def orbit(self, point: Any) -> frozenset:
        i = self.point_index(point)
        return frozenset(self.labels[p(i)] for p in self.elements)

    def orbits(self) -> list[frozenset]:
        """Orbit partition, ordered by smallest carrier index in each orbit."""
        seen: set[int] = set()
        result = []
        for i in range(self.carrier_size):
            if i in seen:
                continue
            members = sorted({p(i) for p in self.elements})
            seen.update(members)
            result.append(frozenset(self.labels[j] for j in members))
        return result

    def stabilizer(self, point: Any) -> list[int]:
        i = self.point_index(point)
        return [k for k, p in enumerate(self.elements) if p.fixes(i)]

    def is_transitive(self) -> bool:
        return self.carrier_size <= 1 or len(self.orbits()) == 1

    def is_simply_transitive(self) -> bool:
        """Exactly one element sends each point to each other point."""
        n = self.carrier_size
        counts = [[0] * n for _ in range(n)]
        for p in self.elements:
            for i, j in enumerate(p.mapping):
                counts[i][j] += 1
        return all(c == 1 for row in counts for c in row)

    def elements_mapping(self, x: Any, y: Any) -> list[int]:
        i, j = self.point_index(x), self.point_index(y)
        return [k for k, p in enumerate(self.elements) if p(i) == j]

    def classify(self) -> GroupClassification:
        n = len(self)
        orders = [self.element_order(a) for a in range(n)]
        for a in range(n):
            if orders[a] == n:
                return GroupClassification("cyclic", n, (a,))
        if n % 2 == 0:
            half = n // 2
            for r in (a for a in range(n) if orders[a] == half):
                r_inv = self.inverse_index(r)
                powers = {self.power_index(r, k) for k in range(half)}
                for s in (a for a in range(n) if orders[a] == 2):
                    # s outside <r> with s r s = r^-1 makes <r> and s<r> disjoint, so <r, s> = G
                    if s not in powers and self.product(self.product(s, r), s) == r_inv:
                        return GroupClassification("dihedral", half, (r, s))
        return GroupClassification("other")

    def restrict(self, points: Sequence[Any]) -> "FiniteGroup":
        """Action on an invariant subset of the carrier; duplicates collapse."""
        idx = [self.point_index(p) for p in points]
        local = {i: k for k, i in enumerate(idx)}
        perms: dict[Permutation, str] = {}
        for p, w in zip(self.elements, self.words):
            try:
                q = Permutation(tuple(local[p(i)] for i in idx))
            except KeyError:
                raise ValueError("subset is not invariant under the group") from None
            perms.setdefault(q, w)
        return FiniteGroup(len(idx), tuple(perms), tuple(perms.values()), tuple(points),
                           identity=list(perms).index(Permutation.identity(len(idx))))

    def label_of(self, a: int) -> str:
        return self.words[a]

    def to_dict(self, element_label: Callable[[int], str] | None = None,
                point_label: Callable[[Any], str] = str) -> dict:
        label = element_label or self.label_of
        return {
            "order": len(self),
            "carrier_size": self.carrier_size,
            "classification": str(self.classify()),
            "elements": [{"label": label(a), "order": self.element_order(a)} for a in range(len(self))],
            "orbits": [sorted(point_label(p) for p in orb) for orb in self.orbits()],
        }


def close_generators(gens: Sequence[Permutation], names: Sequence[str] | None = None,
                     labels: Sequence[Any] | None = None,
                     carrier_size: int | None = None) -> FiniteGroup:
    """Close ``gens`` under composition.

    Generators are first sorted by mapping, then the group is grown breadth
    first from the identity, each new element being ``g * e`` for a generator
    ``g``. ``words[k]`` spells element ``k`` as a generator word in
    application order ("LR" means L first); the identity is ``"1"``.
    """
    gens = list(gens)
    if names is None:
        names = [f"g{i}" for i in range(len(gens))]
    if len(names) != len(gens):
        raise ValueError("need one name per generator")
    sizes = {len(g) for g in gens}
    if carrier_size is not None:
        sizes.add(carrier_size)
    if labels is not None:
        sizes.add(len(labels))
    if len(sizes) > 1:
        raise CarrierMismatch(f"generators act on carriers of different sizes: {sorted(sizes)}")
    if not sizes:
        raise ValueError("carrier size unknown: pass carrier_size for an empty generator list")
    n = sizes.pop()
    ordered = sorted(zip(gens, names), key=lambda gn: gn[0])

    ident = Permutation.identity(n)
    elements = [ident]
    words = ["1"]
    seen = {ident}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        e, w = elements[k], words[k]
        for g, name in ordered:
            h = g * e
            if h not in seen:
                seen.add(h)
                elements.append(h)
                words.append(name if w == "1" else w + name)
                queue.append(len(elements) - 1)
    return FiniteGroup(n, tuple(elements), tuple(words),
                       tuple(labels) if labels is not None else tuple(range(n)))

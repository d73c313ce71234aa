from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from ggraph.exception import GroupAxiomViolation, OrderLimitExceeded
from ggraph.logger_manager import LoggerManager

logging = LoggerManager.get_logger(__name__)

RowCompose = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class GroupElement:
    index: int
    display: str
    order: int


class FiniteGroup(ABC):
    """
    Abstract base class for finite groups with dense element indices.

    Element 0 is always the identity. Subclasses provide `_compose` (and, when
    they can do it in bulk, `_compose_row`); everything else (powers, orders,
    inverses, cyclic subgroups, centre) is derived here once `_finalize` runs
    at the end of the subclass constructor. After that the group is read-only.
    """

    def __init__(self, name: str, order: int, generators: Sequence[int] = ()):
        self.name = name
        self.order = int(order)
        self.generators = tuple(int(g) for g in generators)
        self._table: Optional[np.ndarray] = None

    @abstractmethod
    def _compose(self, a: int, b: int) -> int:
        """Product a*b on element indices."""

    @abstractmethod
    def label(self, a: int) -> str:
        """Human-readable name of element a."""

    def _compose_row(self, a: int) -> np.ndarray:
        return np.fromiter(
            (self._compose(a, b) for b in range(self.order)),
            dtype=np.int64,
            count=self.order,
        )

    def _finalize(self, table_cap: int):
        if self.order <= table_cap:
            table = np.empty((self.order, self.order), dtype=np.int32)
            for a in range(self.order):
                table[a] = self._compose_row(a)
            self._table = table
        self._build_cyclic_structure()

    def _build_cyclic_structure(self):
        """
        Walks the elements in index order; the first unseen g starts a new cyclic
        subgroup <g> whose generators g^k (gcd(k, o(g)) = 1) are all assigned
        at once. Every class is therefore discovered through its least index.
        """
        n = self.order
        class_of = np.full(n, -1, dtype=np.int64)
        exponent = np.zeros(n, dtype=np.int64)
        cycles: list[tuple[int, ...]] = []
        for g in range(n):
            if class_of[g] >= 0:
                continue
            cycle = [0]
            x = g
            while x != 0:
                cycle.append(x)
                x = self.multiply(x, g)
                if len(cycle) > n:
                    raise GroupAxiomViolation(f"{self.name}: element {g} has no finite order")
            o = len(cycle)
            cid = len(cycles)
            cycles.append(tuple(cycle))
            for k in range(o):
                if gcd(k, o) == 1:
                    class_of[cycle[k]] = cid
                    exponent[cycle[k]] = k
        self._class_of = class_of
        self._exponent = exponent
        self._cycles = cycles
        self.orders = np.array([len(cycles[c]) for c in class_of], dtype=np.int64)

    # === core queries ===

    def multiply(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        return self._compose(a, b)

    @property
    def identity(self) -> int:
        return 0

    @property
    def has_table(self) -> bool:
        return self._table is not None

    @property
    def table(self) -> Optional[np.ndarray]:
        return self._table

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def element(self, g: int) -> GroupElement:
        return GroupElement(index=g, display=self.label(g), order=self.element_order(g))

    def elements(self) -> range:
        return range(self.order)

    def powers(self, g: int) -> tuple[int, ...]:
        """(g^0, g^1, ..., g^(o-1))."""
        cycle = self._cycles[self._class_of[g]]
        k = int(self._exponent[g])
        o = len(cycle)
        return tuple(cycle[(k * j) % o] for j in range(o))

    def power(self, g: int, e: int) -> int:
        cycle = self._cycles[self._class_of[g]]
        return cycle[(int(self._exponent[g]) * e) % len(cycle)]

    def inverse(self, g: int) -> int:
        return self.power(g, -1)

    def cyclic_subgroup(self, g: int) -> frozenset[int]:
        return frozenset(self._cycles[self._class_of[g]])

    def cyclic_classes(self) -> list[tuple[int, ...]]:
        """One entry per cyclic subgroup: the powers of its least-index generator."""
        return list(self._cycles)

    def cyclic_class_index(self, g: int) -> int:
        return int(self._class_of[g])

    def commute(self, a: int, b: int) -> bool:
        return self.multiply(a, b) == self.multiply(b, a)

    @cached_property
    def center(self) -> frozenset[int]:
        """Elements commuting with every generator, hence with all of G."""
        gens = self.generators
        if self._table is not None:
            mask = np.ones(self.order, dtype=bool)
            for s in gens:
                mask &= self._table[:, s] == self._table[s, :]
            return frozenset(int(i) for i in np.flatnonzero(mask))
        return frozenset(
            g for g in range(self.order) if all(self.commute(g, s) for s in gens)
        )

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.commute(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :])

    def involutions(self) -> list[int]:
        return [int(g) for g in np.flatnonzero(self.orders == 2)]

    def unique_involution(self) -> Optional[int]:
        invs = self.involutions()
        return invs[0] if len(invs) == 1 else None

    def generated(self, gens: Iterable[int]) -> list[int]:
        """Sorted element indices of the subgroup generated by `gens`."""
        gens = [g for g in gens if g != 0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.multiply(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def order_multiset(self) -> list[int]:
        return sorted(int(o) for o in self.orders)

    # === validation ===

    def validate(
        self,
        exhaustive_cap: int = 64,
        samples: int = 100_000,
        order_check_cap: int = 2000,
        seed: int = 0,
    ):
        """Raises GroupAxiomViolation on the first broken group law."""
        n = self.order
        idx = np.arange(n)
        if self._table is not None:
            t = self._table
            if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
                raise GroupAxiomViolation(f"{self.name}: element 0 is not a two-sided identity")
        else:
            for g in range(n):
                if self.multiply(0, g) != g or self.multiply(g, 0) != g:
                    raise GroupAxiomViolation(f"{self.name}: 0*{g} or {g}*0 != {g}")

        for g in range(n):
            if self.multiply(g, self.inverse(g)) != 0:
                raise GroupAxiomViolation(f"{self.name}: {g} * inverse({g}) != identity")

        bad = np.flatnonzero(n % self.orders != 0)
        if bad.size:
            raise GroupAxiomViolation(
                f"{self.name}: order of element {int(bad[0])} does not divide {n}"
            )

        if n <= order_check_cap:
            for g in range(n):
                cycle = self.powers(g)
                if self.multiply(cycle[-1], g) != 0 or 0 in cycle[1:]:
                    raise GroupAxiomViolation(f"{self.name}: wrong order recorded for {g}")

        self._check_associativity(exhaustive_cap, samples, seed)
        logging.debug(f"✔️ {self.name}: group laws hold (order {n})")

    def _check_associativity(self, exhaustive_cap: int, samples: int, seed: int):
        n = self.order
        t = self._table
        if n <= exhaustive_cap and t is not None:
            idx = np.arange(n)
            lhs = t[t[:, :, None], idx[None, None, :]]
            rhs = t[idx[:, None, None], t[None, :, :]]
            if not np.array_equal(lhs, rhs):
                a, b, c = (int(v[0]) for v in np.nonzero(lhs != rhs))
                raise GroupAxiomViolation(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c})")
            return
        rng = np.random.default_rng(seed)
        triples = rng.integers(0, n, size=(samples, 3))
        if t is not None:
            a, b, c = triples.T
            broken = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
            if broken.size:
                a, b, c = (int(v) for v in triples[broken[0]])
                raise GroupAxiomViolation(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c})")
            return
        for a, b, c in triples.tolist():
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                raise GroupAxiomViolation(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c})")

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, order={self.order})"


class ArithmeticGroup(FiniteGroup):
    """
    A group whose product is a closed formula on indices. `operation` must accept
    numpy arrays as well as ints so whole table rows are computed in one call.
    """

    def __init__(
        self,
        name: str,
        order: int,
        operation: Callable,
        labeler: Callable[[int], str],
        generators: Sequence[int],
        table_cap: int = 4096,
    ):
        super().__init__(name, order, generators)
        self._operation = operation
        self._labeler = labeler
        self._finalize(table_cap)

    def _compose(self, a: int, b: int) -> int:
        return int(self._operation(a, b))

    def _compose_row(self, a: int) -> np.ndarray:
        return np.asarray(self._operation(a, np.arange(self.order)), dtype=np.int64)

    def label(self, a: int) -> str:
        return self._labeler(a)


def _row_keys(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows)
    return rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()


class ClosureGroup(FiniteGroup):
    """
    Group generated by concrete elements (permutation images, flattened matrices)
    stored as rows of a small-integer array. Elements are discovered by
    breadth-first closure from the identity; index order is discovery order.
    """

    def __init__(
        self,
        name: str,
        identity: Sequence[int],
        generators: Sequence[Sequence[int]],
        compose_rows: RowCompose,
        labeler: Callable[[np.ndarray], str],
        order_cap: int = 50_000,
        table_cap: int = 4096,
        dtype=np.int16,
    ):
        self._compose_rows = compose_rows
        self._labeler = labeler
        ident = tuple(int(v) for v in identity)
        gen_rows = [tuple(int(v) for v in g) for g in generators]

        index = {ident: 0}
        rows = [ident]
        frontier = [ident]
        gen_array = np.array(gen_rows, dtype=dtype).reshape(len(gen_rows), len(ident))
        while frontier:
            block = np.array(frontier, dtype=dtype)
            nxt = []
            for s in range(len(gen_rows)):
                right = np.broadcast_to(gen_array[s], block.shape)
                for row in map(tuple, compose_rows(block, right).tolist()):
                    if row not in index:
                        index[row] = len(rows)
                        rows.append(row)
                        nxt.append(row)
                        if len(rows) > order_cap:
                            raise OrderLimitExceeded(name, len(rows), order_cap)
            frontier = nxt

        super().__init__(name, len(rows), [index[g] for g in gen_rows if g != ident])
        self._index = index
        self._rows = np.array(rows, dtype=dtype)
        keys = _row_keys(self._rows)
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        self._finalize(table_cap)

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    def index_of(self, row: Sequence[int]) -> int:
        return self._index[tuple(int(v) for v in row)]

    def _lookup(self, rows: np.ndarray) -> np.ndarray:
        keys = _row_keys(rows.astype(self._rows.dtype, copy=False))
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        if not np.all(self._sorted_keys[pos] == keys):
            raise GroupAxiomViolation(f"{self.name}: product left the generated set")
        return self._key_order[pos]

    def _compose(self, a: int, b: int) -> int:
        row = self._compose_rows(self._rows[a : a + 1], self._rows[b : b + 1])[0]
        return self._index[tuple(row.tolist())]

    def _compose_row(self, a: int) -> np.ndarray:
        left = np.broadcast_to(self._rows[a], self._rows.shape)
        return self._lookup(self._compose_rows(left, self._rows))

    def label(self, a: int) -> str:
        return self._labeler(self._rows[a])


class DirectProduct(FiniteGroup):
    """
    Direct product of factor groups. Element indices are row-major over the
    factor indices, so (g_1, ..., g_r) sits at sum(g_i * stride_i) and the
    identity (all zeros) stays at index 0.
    """

    def __init__(self, factors: Sequence[FiniteGroup], table_cap: int = 4096, name: Optional[str] = None):
        self.factors = tuple(factors)
        sizes = [f.order for f in self.factors]
        strides = [prod(sizes[i + 1 :]) for i in range(len(sizes))]
        self._sizes = sizes
        self._strides = strides
        gens = [g * stride for f, stride in zip(self.factors, strides) for g in f.generators]
        super().__init__(
            name or " x ".join(f.name for f in self.factors), prod(sizes), gens
        )
        self._finalize(table_cap)

    def coordinates(self, a: int) -> tuple[int, ...]:
        return tuple((a // s) % n for s, n in zip(self._strides, self._sizes))

    def from_coordinates(self, coords: Sequence[int]) -> int:
        return sum(c * s for c, s in zip(coords, self._strides))

    def _compose(self, a: int, b: int) -> int:
        return sum(
            f.multiply((a // s) % n, (b // s) % n) * s
            for f, s, n in zip(self.factors, self._strides, self._sizes)
        )

    def _compose_row(self, a: int) -> np.ndarray:
        if not all(f.has_table for f in self.factors):
            return super()._compose_row(a)
        b = np.arange(self.order)
        out = np.zeros(self.order, dtype=np.int64)
        for f, s, n in zip(self.factors, self._strides, self._sizes):
            out += f.table[(a // s) % n, (b // s) % n].astype(np.int64) * s
        return out

    def label(self, a: int) -> str:
        parts = [f.label(c) for f, c in zip(self.factors, self.coordinates(a))]
        return "(" + ", ".join(parts) + ")"


class Subgroup(FiniteGroup):
    """A subgroup given by sorted parent indices; `parent_indices[i]` is the provenance of i."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], generators: Sequence[int] = (), table_cap: int = 4096, name: Optional[str] = None):
        members = sorted(set(int(m) for m in members))
        if not members or members[0] != 0:
            raise GroupAxiomViolation(f"subgroup of {parent.name} must contain the identity")
        self.parent = parent
        self.parent_indices = tuple(members)
        self._local = {g: i for i, g in enumerate(members)}
        local_gens = [self._local[g] for g in generators if g in self._local]
        if not local_gens:
            local_gens = list(range(1, len(members)))
        super().__init__(name or f"<{', '.join(map(str, generators))}> in {parent.name}", len(members), local_gens)
        self._finalize(table_cap)

    def _compose(self, a: int, b: int) -> int:
        product = self.parent.multiply(self.parent_indices[a], self.parent_indices[b])
        try:
            return self._local[product]
        except KeyError:
            raise GroupAxiomViolation(f"{self.name} is not closed under multiplication") from None

    def label(self, a: int) -> str:
        return self.parent.label(self.parent_indices[a])

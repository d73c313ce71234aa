from math import factorial, gcd, prod
from typing import Optional, Sequence, Union

import numpy as np
from sympy.combinatorics import Permutation

from ggraph.components.groups.finite_group import (
    ArithmeticGroup,
    ClosureGroup,
    DirectProduct,
    FiniteGroup,
)
from ggraph.components.groups.galois_field import GaloisField, galois_field
from ggraph.components.groups.spec_parser import parse_group_spec
from ggraph.config.config import Config
from ggraph.exception import GroupAxiomViolation, OrderLimitExceeded
from ggraph.logger_manager import LoggerManager
from ggraph.models.group_spec import AtomSpec, GroupSpec

logging = LoggerManager.get_logger(__name__)

M11_GENERATORS = (
    "(1 2 3 4 5 6 7 8 9 10 11)",
    "(3 7 11 8)(4 10 5 6)",
)
M11_ORDER = 7920


# === element codecs ===


def compose_permutations(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a*b acting on the right: (a*b)[i] = b[a[i]]."""
    return np.take_along_axis(b, a.astype(np.int64), axis=1)


def cycle_label(row: Sequence[int]) -> str:
    cycles = Permutation([int(v) for v in row]).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)


def permutation_row(cycles: Sequence[Sequence[int]], degree: int) -> list[int]:
    """0-based cycles -> image list on `degree` points."""
    return list(Permutation([list(c) for c in cycles], size=degree).array_form)


def matrix_composer(field: GaloisField, dim: int):
    """Row-wise product of flattened dim x dim matrices over `field`."""

    def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        m = a.shape[0]
        a3 = a.reshape(m, dim, dim).astype(np.int64)
        b3 = b.reshape(m, dim, dim).astype(np.int64)
        out = np.zeros((m, dim, dim), dtype=np.int64)
        for i in range(dim):
            for j in range(dim):
                acc = np.zeros(m, dtype=np.int64)
                for k in range(dim):
                    acc = field.add[acc, field.mul[a3[:, i, k], b3[:, k, j]]]
                out[:, i, j] = acc
        return out.reshape(m, dim * dim)

    return compose


def matrix_labeler(field: GaloisField, dim: int):
    def label(row: np.ndarray) -> str:
        cells = [field.label(int(v)) for v in row]
        return "[" + "; ".join(" ".join(cells[r * dim : (r + 1) * dim]) for r in range(dim)) + "]"

    return label


def identity_matrix(dim: int) -> list[int]:
    return [1 if i == j else 0 for i in range(dim) for j in range(dim)]


# === atoms ===


def cyclic(n: int, table_cap: int = 4096) -> FiniteGroup:
    return ArithmeticGroup(
        f"Z({n})", n, lambda a, b: (a + b) % n, str, [1] if n > 1 else [], table_cap
    )


def dihedral(m: int, table_cap: int = 4096) -> FiniteGroup:
    """D(m) of order m = 2n: index k + n*f stands for r^k s^f, with s r s = r^-1."""
    n = m // 2

    def op(a, b):
        k, f = a % n, a // n
        j, g = b % n, b // n
        rot = (k + np.where(f == 1, -j, j)) % n
        return rot + n * ((f + g) % 2)

    def label(a: int) -> str:
        k, f = a % n, a // n
        rot = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        ref = "s" if f else ""
        return (rot + ref) or "e"

    gens = [1, n] if n > 1 else [1]
    return ArithmeticGroup(f"D({m})", m, op, label, gens, table_cap)


def quaternion(m: int, table_cap: int = 4096) -> FiniteGroup:
    """
    Generalised quaternion Q(m), m = 2^N >= 8, as the dicyclic group
    <a, x | a^(2h) = 1, x^2 = a^h, x a x^-1 = a^-1> with h = m/4.
    Index i + 2h*f stands for a^i x^f.
    """
    h = m // 4
    n2 = 2 * h

    def op(a, b):
        i, f = a % n2, a // n2
        j, g = b % n2, b // n2
        e = i + np.where(f == 1, -j, j) + np.where((f == 1) & (g == 1), h, 0)
        return e % n2 + n2 * (f ^ g)

    def label(a: int) -> str:
        i, f = a % n2, a // n2
        rot = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        return (rot + ("x" if f else "")) or "e"

    return ArithmeticGroup(f"Q({m})", m, op, label, [1, n2], table_cap)


def permutation_group(
    name: str,
    degree: int,
    generators: Sequence[Sequence[int]],
    order_cap: int = 50_000,
    table_cap: int = 4096,
) -> ClosureGroup:
    return ClosureGroup(
        name,
        list(range(degree)),
        generators,
        compose_permutations,
        cycle_label,
        order_cap=order_cap,
        table_cap=table_cap,
    )


def symmetric(n: int, order_cap: int = 50_000, table_cap: int = 4096) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens.append(permutation_row([[0, 1]], n))
    if n >= 3:
        gens.append(permutation_row([list(range(n))], n))
    return permutation_group(f"Sym({n})", n, gens, order_cap, table_cap)


def alternating(n: int, order_cap: int = 50_000, table_cap: int = 4096) -> FiniteGroup:
    gens = [permutation_row([[0, 1, k]], n) for k in range(2, n)]
    return permutation_group(f"Alt({n})", n, gens, order_cap, table_cap)


def mathieu11(order_cap: int = 50_000, table_cap: int = 4096) -> FiniteGroup:
    spec = parse_group_spec("Perm(" + ", ".join(M11_GENERATORS) + ")")
    gens = [
        permutation_row([[p - 1 for p in c] for c in perm], 11)
        for perm in spec.factors[0].permutations
    ]
    group = permutation_group("M11", 11, gens, order_cap, table_cap)
    _assert_order(group, M11_ORDER)
    return group


def special_linear(q: int, order_cap: int = 50_000, table_cap: int = 4096) -> FiniteGroup:
    """SL(2,q) generated by the elementary transvections along an additive basis of GF(q)."""
    field = galois_field(q)
    gens = []
    for t in field.additive_basis():
        gens.append([1, t, 0, 1])
        gens.append([1, 0, t, 1])
    group = ClosureGroup(
        f"SL(2,{q})",
        identity_matrix(2),
        gens,
        matrix_composer(field, 2),
        matrix_labeler(field, 2),
        order_cap=order_cap,
        table_cap=table_cap,
    )
    _assert_order(group, q * (q * q - 1))
    return group


def projective_line_generators(field: GaloisField) -> list[list[int]]:
    """
    Permutations of the q+1 points of the projective line (point q is infinity):
    translations x -> x + t for an additive basis, x -> -1/x, and x -> g^2 x
    for a primitive element g.
    """
    q = field.q
    inf = q
    gens = []
    for t in field.additive_basis():
        gens.append([int(field.add[x, t]) for x in range(q)] + [inf])
    weyl = [inf] + [int(field.neg[field.inv[x]]) for x in range(1, q)] + [0]
    gens.append(weyl)
    square = field.power(field.primitive_element, 2)
    gens.append([int(field.mul[square, x]) for x in range(q)] + [inf])
    return gens


def psl_order(q: int) -> int:
    return q * (q * q - 1) // gcd(q - 1, 2)


def projective_special_linear(q: int, order_cap: int = 50_000, table_cap: int = 4096) -> FiniteGroup:
    expected = psl_order(q)
    if expected > order_cap:
        raise OrderLimitExceeded(f"PSL(2,{q})", expected, order_cap)
    field = galois_field(q)
    group = permutation_group(
        f"PSL(2,{q})", q + 1, projective_line_generators(field), order_cap, table_cap
    )
    _assert_order(group, expected)
    return group


def _assert_order(group: FiniteGroup, expected: int):
    if group.order != expected:
        raise GroupAxiomViolation(
            f"{group.name}: closure has order {group.order}, expected {expected}"
        )


def predicted_order(atom: AtomSpec) -> Optional[int]:
    """Order of an atom from its parameters alone; None for Perm(...)."""
    kind, params = atom.kind, atom.params
    if kind in ("Z", "D", "Q"):
        return params[0]
    if kind == "Sym":
        return factorial(params[0])
    if kind == "Alt":
        return max(1, factorial(params[0]) // 2)
    if kind == "SL":
        q = params[1]
        return q * (q * q - 1)
    if kind == "PSL":
        return psl_order(params[1])
    if kind == "M11":
        return M11_ORDER
    if kind == "ElemAb":
        return params[0] ** params[1]
    return None


class GroupBuilder:
    """
    Turns a GroupSpec into a FiniteGroup under the configured caps, and checks
    the group laws on the result when `validate_groups` is on.
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()

    def build(self, spec: Union[GroupSpec, str]) -> FiniteGroup:
        if isinstance(spec, str):
            spec = parse_group_spec(spec)
        cap = self.config.order_cap
        known = [predicted_order(a) for a in spec.factors]
        if all(o is not None for o in known) and prod(known) > cap:
            raise OrderLimitExceeded(spec.text, prod(known), cap)

        factors = [self._build_atom(atom) for atom in spec.factors]
        if len(factors) == 1:
            group = factors[0]
        else:
            total = prod(f.order for f in factors)
            if total > cap:
                raise OrderLimitExceeded(spec.text, total, cap)
            group = DirectProduct(factors, self.config.table_cap, name=spec.text)

        if self.config.validate_groups:
            group.validate(
                exhaustive_cap=self.config.exhaustive_assoc_cap,
                samples=self.config.assoc_samples,
                order_check_cap=self.config.order_check_cap,
                seed=self.config.random_seed,
            )
        logging.debug(f"🧱 Built {group.name} (order {group.order})")
        return group

    def _build_atom(self, atom: AtomSpec) -> FiniteGroup:
        cap, tcap = self.config.order_cap, self.config.table_cap
        kind, params = atom.kind, atom.params
        if kind == "Z":
            return cyclic(params[0], tcap)
        if kind == "D":
            return dihedral(params[0], tcap)
        if kind == "Q":
            return quaternion(params[0], tcap)
        if kind == "Sym":
            return symmetric(params[0], cap, tcap)
        if kind == "Alt":
            return alternating(params[0], cap, tcap)
        if kind == "SL":
            return special_linear(params[1], cap, tcap)
        if kind == "PSL":
            return projective_special_linear(params[1], cap, tcap)
        if kind == "M11":
            return mathieu11(cap, tcap)
        if kind == "ElemAb":
            p, k = params
            if k == 1:
                return cyclic(p, tcap)
            return DirectProduct([cyclic(p, tcap) for _ in range(k)], tcap, name=atom.text)
        if kind == "Perm":
            degree = max((pt for perm in atom.permutations for c in perm for pt in c), default=1)
            gens = [
                permutation_row([[p - 1 for p in c] for c in perm], degree)
                for perm in atom.permutations
            ]
            return permutation_group(atom.text, degree, gens, cap, tcap)
        raise GroupAxiomViolation(f"no constructor for atom {kind}")  # parser admits only known atoms


def build_group(spec: Union[GroupSpec, str]) -> FiniteGroup:
    return GroupBuilder().build(spec)

from typing import List

from sympy import isprime

from ggraph.components.groups.galois_field import FIELD_SIZE_LIMIT, prime_power_decomposition
from ggraph.exception import GroupSpecSyntaxError, InvalidParameter, NotAPrimePower
from ggraph.models.group_spec import AtomSpec, GroupSpec, PermutationSpec

# longest names first so "PSL" is not read as "P..." and "SL" after it
ATOM_NAMES = ("ElemAb", "Perm", "PSL", "Sym", "Alt", "M11", "SL", "Z", "D", "Q")
PRODUCT_SIGNS = ("x", "X", "×")

_ARITY = {"Z": 1, "D": 1, "Q": 1, "Sym": 1, "Alt": 1, "SL": 2, "PSL": 2, "ElemAb": 2}


class GroupSpecParser:
    """
    Recursive-descent parser for

        spec := term { "x" term }
        term := ATOM "(" args ")" | "M11"

    Whitespace is ignored between tokens. Errors report the byte offset.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> GroupSpec:
        factors = [self._term()]
        while True:
            self._skip_ws()
            if self._at_end():
                break
            sign = next((s for s in PRODUCT_SIGNS if self.text.startswith(s, self.pos)), None)
            if sign is None:
                self._fail(["'x'", "end of input"])
            self.pos += len(sign)
            factors.append(self._term())
        spec = GroupSpec(tuple(factors))
        for atom in spec.factors:
            validate_atom(atom)
        return spec

    # === lexical helpers ===

    def _byte_offset(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def _fail(self, expected: List[str]):
        raise GroupSpecSyntaxError(self.text, self._byte_offset(self.pos), expected)

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _at_end(self) -> bool:
        return self.pos >= len(self.text)

    def _expect(self, char: str):
        self._skip_ws()
        if not self.text.startswith(char, self.pos):
            self._fail([f"'{char}'"])
        self.pos += 1

    def _peek(self, char: str) -> bool:
        self._skip_ws()
        return self.text.startswith(char, self.pos)

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail(["integer"])
        return int(self.text[start : self.pos])

    # === grammar ===

    def _term(self) -> AtomSpec:
        self._skip_ws()
        offset = self._byte_offset(self.pos)
        name = next((a for a in ATOM_NAMES if self.text.startswith(a, self.pos)), None)
        if name is None:
            self._fail([f"'{a}'" for a in sorted(ATOM_NAMES)])
        self.pos += len(name)
        if name == "M11":
            return AtomSpec("M11", offset=offset)
        self._expect("(")
        if name == "Perm":
            perms = [self._permutation()]
            while self._peek(","):
                self.pos += 1
                perms.append(self._permutation())
            self._expect(")")
            return AtomSpec("Perm", permutations=tuple(perms), offset=offset)
        params = [self._integer()]
        while self._peek(","):
            self.pos += 1
            params.append(self._integer())
        self._expect(")")
        return AtomSpec(name, tuple(params), offset=offset)

    def _permutation(self) -> PermutationSpec:
        cycles = []
        self._expect("(")
        cycles.append(self._cycle_body())
        while self._peek("("):
            self.pos += 1
            cycles.append(self._cycle_body())
        return tuple(c for c in cycles if c)

    def _cycle_body(self) -> tuple:
        """Reads `p1 p2 ... pk)` after an opening parenthesis."""
        points = []
        while True:
            self._skip_ws()
            if self._peek(")"):
                self.pos += 1
                return tuple(points)
            if points and self._peek(","):
                self.pos += 1
            points.append(self._integer())


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def validate_atom(atom: AtomSpec):
    """Raises InvalidParameter when an atom's parameters are outside its family."""
    kind, params = atom.kind, atom.params
    label = atom.text
    if kind in _ARITY and len(params) != _ARITY[kind]:
        raise InvalidParameter(f"{label}: {kind} takes {_ARITY[kind]} parameter(s)")

    if kind in ("Z", "Sym", "Alt"):
        if params[0] < 1:
            raise InvalidParameter(f"{label}: parameter must be >= 1")
    elif kind == "D":
        if params[0] < 2 or params[0] % 2:
            raise InvalidParameter(f"{label}: dihedral order must be even and >= 2")
    elif kind == "Q":
        if params[0] < 8 or not _is_power_of_two(params[0]):
            raise InvalidParameter(f"{label}: quaternion order must be a power of 2 that is >= 8")
    elif kind in ("SL", "PSL"):
        degree, q = params
        if degree != 2:
            raise InvalidParameter(f"{label}: only degree 2 is supported")
        try:
            prime_power_decomposition(q)
        except NotAPrimePower:
            raise InvalidParameter(f"{label}: {q} is not a prime power") from None
        if q > FIELD_SIZE_LIMIT:
            raise InvalidParameter(f"{label}: field size {q} exceeds {FIELD_SIZE_LIMIT}")
    elif kind == "ElemAb":
        p, k = params
        if not isprime(p):
            raise InvalidParameter(f"{label}: {p} is not prime")
        if k < 1:
            raise InvalidParameter(f"{label}: rank must be >= 1")
    elif kind == "Perm":
        for perm in atom.permutations:
            for cycle in perm:
                if any(pt < 1 for pt in cycle):
                    raise InvalidParameter(f"{label}: points are numbered from 1")
                if len(set(cycle)) != len(cycle):
                    raise InvalidParameter(f"{label}: cycle {cycle} repeats a point")


def parse_group_spec(text: str) -> GroupSpec:
    return GroupSpecParser(text).parse()

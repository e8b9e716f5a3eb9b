"""Finite monoids, right M-sets and the standard submonoids of End(X).

Multiplication is diagrammatic: ``mul(a, b)`` is "apply a, then b", so for
monoids of endomaps ``mul(a, b) = b ∘ a``.  The evaluation action
``act(x, f) = f(x)`` is then a right action.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapacityError, ValidationError

MAX_MONOID_SIZE = 10_000


class MonoidKind(str, enum.Enum):
    ORIENTED = "oriented"
    SYMMETRIC = "symmetric"
    HEREDITARY = "hereditary"
    REFLEXIVE_ORIENTED = "reflexive-oriented"
    REFLEXIVE_SYMMETRIC = "reflexive-symmetric"
    REFLEXIVE_HEREDITARY = "reflexive-hereditary"

    @property
    def reflexive(self) -> bool:
        return self.value.startswith("reflexive")

    @property
    def base(self) -> "MonoidKind":
        """The non-reflexive kind with the same group of units."""
        return MonoidKind(self.value.removeprefix("reflexive-"))

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid given by its full multiplication table.

    ``maps`` is set for submonoids of End(X): ``maps[m][x]`` is the image of
    ``x`` under the endomap named by element ``m``.
    """

    names: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    identity: int = 0
    kind: MonoidKind | None = field(default=None, compare=False)
    maps: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.names)
        if n > MAX_MONOID_SIZE:
            raise CapacityError(f"monoid has {n} elements, limit is {MAX_MONOID_SIZE}")
        if n == 0:
            raise ValidationError("a monoid needs at least an identity element")
        if len(set(self.names)) != n:
            raise ValidationError("monoid element names must be distinct")
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValidationError(f"multiplication table must be {n}x{n}")
        for a, row in enumerate(self.mul):
            for b, c in enumerate(row):
                if not 0 <= c < n:
                    raise ValidationError(
                        f"mul({self.names[a]}, {self.names[b]}) = {c} is out of range"
                    )
        if not 0 <= self.identity < n:
            raise ValidationError("identity index out of range")

    @classmethod
    def from_table(cls, names, mul, identity=None, check=True) -> "FiniteMonoid":
        """Build a monoid from an explicit table, locating the identity if needed."""
        names = tuple(names)
        mul = tuple(tuple(row) for row in mul)
        if identity is None:
            n = len(names)
            units = [
                e for e in range(n)
                if all(mul[e][a] == a and mul[a][e] == a for a in range(n))
            ]
            if not units:
                raise ValidationError("table has no two-sided identity")
            identity = units[0]
        monoid = cls(names, mul, identity)
        if check:
            problems = monoid.check_laws()
            if problems:
                raise ValidationError(problems[0])
        return monoid

    def __len__(self):
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no monoid element named {name!r}") from None

    def product(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def check_laws(self, limit: int | None = None) -> list[str]:
        """Exhaustive unit and associativity check; returns violations."""
        out = []
        e = self.identity
        for a in self.elements:
            if self.mul[e][a] != a or self.mul[a][e] != a:
                out.append(f"identity law fails at {self.names[a]}")
        for a, b, c in itertools.product(self.elements, repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                out.append(
                    "associativity fails at "
                    f"({self.names[a]}, {self.names[b]}, {self.names[c]})"
                )
                if limit is not None and len(out) >= limit:
                    break
        return out

    @cached_property
    def inverses(self) -> dict[int, int]:
        """Map from each invertible element to its two-sided inverse."""
        e = self.identity
        inv = {}
        for a in self.elements:
            for b in self.elements:
                if self.mul[a][b] == e and self.mul[b][a] == e:
                    inv[a] = b
                    break
        return inv

    def inverse(self, a: int) -> int:
        try:
            return self.inverses[a]
        except KeyError:
            raise ValidationError(f"{self.names[a]} is not invertible") from None


@dataclass(frozen=True)
class RightMSet:
    monoid: FiniteMonoid
    names: tuple[str, ...]
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, k = len(self.names), len(self.monoid)
        if len(set(self.names)) != n:
            raise ValidationError("M-set element names must be distinct")
        if len(self.act) != n or any(len(row) != k for row in self.act):
            raise ValidationError(f"action table must be {n}x{k}")
        for x, row in enumerate(self.act):
            for m, y in enumerate(row):
                if not 0 <= y < n:
                    raise ValidationError(
                        f"act({self.names[x]}, {self.monoid.names[m]}) out of range"
                    )

    def __len__(self):
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def check_laws(self) -> list[str]:
        M = self.monoid
        out = []
        for x in self.elements:
            if self.act[x][M.identity] != x:
                out.append(f"act({self.names[x]}, id) != {self.names[x]}")
            for a, b in itertools.product(M.elements, repeat=2):
                if self.act[x][M.mul[a][b]] != self.act[self.act[x][a]][b]:
                    out.append(
                        f"act({self.names[x]}, {M.names[a]}{M.names[b]}) differs "
                        "from acting in sequence"
                    )
        return out


def fix_set(M: FiniteMonoid) -> tuple[int, ...]:
    """Elements m' with mul(m, m') = m' for every m, in index order."""
    return tuple(
        f for f in M.elements if all(M.mul[m][f] == f for m in M.elements)
    )


def invertibles(M: FiniteMonoid) -> tuple[int, ...]:
    return tuple(sorted(M.inverses))


def _x_names(n: int) -> tuple[str, ...]:
    return ("s", "t") if n == 2 else tuple(str(i) for i in range(n))


def _predicted_size(n: int, kind: MonoidKind) -> int:
    perms = math.factorial(n)
    return {
        MonoidKind.ORIENTED: 1,
        MonoidKind.SYMMETRIC: perms,
        MonoidKind.HEREDITARY: n**n,
        MonoidKind.REFLEXIVE_ORIENTED: 1 + n if n > 1 else 1,
        MonoidKind.REFLEXIVE_SYMMETRIC: perms + n if n > 1 else 1,
        MonoidKind.REFLEXIVE_HEREDITARY: n**n,
    }[kind]


def _is_perm(f) -> bool:
    return len(set(f)) == len(f)


def _is_const(f) -> bool:
    return len(f) > 0 and len(set(f)) == 1


def _element_name(f, xn) -> str:
    if f == tuple(range(len(f))):
        return "id"
    if _is_const(f) and not _is_perm(f):
        return "c_" + xn[f[0]]
    return "[" + ",".join(xn[y] for y in f) + "]"


def build_standard_monoid(x_size: int, kind) -> tuple[FiniteMonoid, RightMSet]:
    """The named submonoid of End(X) for |X| = x_size with its evaluation action.

    Element order: identity, other permutations, constants, remaining maps;
    each group in lexicographic order of image tuples.
    """
    kind = MonoidKind(kind)
    if x_size < 0:
        raise ValidationError("x_size must be non-negative")
    if kind.reflexive and x_size == 0:
        raise ValidationError(f"{kind} needs |X| >= 1, otherwise Fix(M) is empty")
    size = _predicted_size(x_size, kind)
    if size > MAX_MONOID_SIZE:
        raise CapacityError(
            f"{kind} monoid on {x_size} points has {size} elements, "
            f"limit is {MAX_MONOID_SIZE}"
        )

    X = range(x_size)
    ident = tuple(X)
    if kind.base is MonoidKind.HEREDITARY:
        candidates = itertools.product(X, repeat=x_size)
    else:
        candidates = [ident]
        if kind.base is MonoidKind.SYMMETRIC:
            candidates += list(itertools.permutations(X))
        if kind.reflexive:
            candidates += [(x,) * x_size for x in X]

    def rank(f):
        if f == ident:
            return (0, f)
        if _is_perm(f):
            return (1, f)
        if _is_const(f):
            return (2, f)
        return (3, f)

    maps = tuple(sorted(set(candidates), key=rank))
    where = {f: i for i, f in enumerate(maps)}
    mul = tuple(
        tuple(where[tuple(b[a[x]] for x in X)] for b in maps) for a in maps
    )
    xn = _x_names(x_size)
    M = FiniteMonoid(
        names=tuple(_element_name(f, xn) for f in maps),
        mul=mul,
        identity=0,
        kind=kind,
        maps=maps,
    )
    xset = RightMSet(M, xn, tuple(tuple(f[x] for f in maps) for x in X))
    return M, xset


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(("id",), ((0,),), 0)

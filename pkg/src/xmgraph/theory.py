"""The two-object theories whose presheaves are (reflexive) (X,M)-graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import FiniteMonoid, MonoidKind, RightMSet, build_standard_monoid, fix_set
from .errors import ValidationError

V, A = "V", "A"


@dataclass(frozen=True)
class Theory:
    """Objects V and A with hom(V,A) = X, hom(A,A) = M, hom(V,V) = {Id_V}.

    Reflexive theories add ℓ: A -> V; there the carrier of X is Fix(M) and
    ``fix_elem[x]`` is the monoid element named by x.
    """

    monoid: FiniteMonoid
    xset: RightMSet
    reflexive: bool = False
    fix_elem: tuple[int, ...] = ()

    @property
    def kind(self) -> MonoidKind | None:
        return self.monoid.kind

    @property
    def n_x(self) -> int:
        return len(self.xset)

    @property
    def n_m(self) -> int:
        return len(self.monoid)

    @property
    def x_names(self) -> tuple[str, ...]:
        return self.xset.names

    @property
    def m_names(self) -> tuple[str, ...]:
        return self.monoid.names

    def x_index(self, name: str) -> int:
        return self.xset.names.index(name)

    def act_x(self, x: int, m: int) -> int:
        return self.xset.act[x][m]

    def label(self) -> str:
        if self.kind is not None:
            return f"{self.kind}-{self.n_x}"
        return f"{'reflexive ' if self.reflexive else ''}theory |X|={self.n_x} |M|={self.n_m}"


def make_theory(monoid: FiniteMonoid, xset: RightMSet, reflexive: bool = False) -> Theory:
    if xset.monoid != monoid:
        raise ValidationError("M-set is over a different monoid")
    if not reflexive:
        return Theory(monoid, xset, False, ())
    fix = fix_set(monoid)
    if not fix:
        raise ValidationError("reflexive theory needs Fix(M) to be non-empty")
    if len(fix) != len(xset):
        raise ValidationError(
            f"carrier mismatch: |X| = {len(xset)} but |Fix(M)| = {len(fix)}"
        )
    # x_i names the i-th fixed element; the action must be x_m.n = x_{mul(m,n)}
    where = {f: i for i, f in enumerate(fix)}
    for x, f in enumerate(fix):
        for m in monoid.elements:
            if where.get(monoid.mul[f][m]) != xset.act[x][m]:
                raise ValidationError(
                    f"carrier mismatch: {xset.names[x]}.{monoid.names[m]} is not "
                    "the element named by the product in Fix(M)"
                )
    return Theory(monoid, xset, True, tuple(fix))


def fix_carrier(monoid: FiniteMonoid, names=None) -> RightMSet:
    """Fix(M) as a right M-set under right multiplication."""
    fix = fix_set(monoid)
    where = {f: i for i, f in enumerate(fix)}
    names = tuple(names) if names is not None else tuple(monoid.names[f] for f in fix)
    act = tuple(tuple(where[monoid.mul[f][m]] for m in monoid.elements) for f in fix)
    return RightMSet(monoid, names, act)


def standard_theory(kind, x_size: int) -> Theory:
    kind = MonoidKind(kind)
    M, X = build_standard_monoid(x_size, kind)
    return make_theory(M, X, kind.reflexive)


@dataclass(frozen=True)
class TheoryMorphism:
    """A tagged arrow: ``idV``, ``x`` (V->A), ``m`` (A->A) or ``ell`` (A->V)."""

    tag: str
    index: int = field(default=0)

    @property
    def src(self) -> str:
        return {"idV": V, "x": V, "m": A, "ell": A}[self.tag]

    @property
    def dst(self) -> str:
        return {"idV": V, "x": A, "m": A, "ell": V}[self.tag]


ID_V = TheoryMorphism("idV")
ELL = TheoryMorphism("ell")


def elem_x(x: int) -> TheoryMorphism:
    return TheoryMorphism("x", x)


def elem_m(m: int) -> TheoryMorphism:
    return TheoryMorphism("m", m)


def identity(t: Theory, obj: str) -> TheoryMorphism:
    return ID_V if obj == V else elem_m(t.monoid.identity)


def homset(t: Theory, src: str, dst: str) -> list[TheoryMorphism]:
    if (src, dst) == (V, V):
        return [ID_V]
    if (src, dst) == (V, A):
        return [elem_x(x) for x in t.xset.elements]
    if (src, dst) == (A, A):
        return [elem_m(m) for m in t.monoid.elements]
    return [ELL] if t.reflexive else []


def morphisms(t: Theory) -> list[TheoryMorphism]:
    return [f for s in (V, A) for d in (V, A) for f in homset(t, s, d)]


def compose(t: Theory, f: TheoryMorphism, g: TheoryMorphism) -> TheoryMorphism:
    """``f ∘ g``: first g, then f."""
    if g.dst != f.src:
        raise ValidationError(f"cannot compose {f} after {g}: {g.dst} != {f.src}")
    if g.tag == "idV":
        return f
    if f.tag == "idV":
        return g
    match (f.tag, g.tag):
        case ("m", "x"):
            return elem_x(t.act_x(g.index, f.index))
        case ("m", "m"):
            return elem_m(t.monoid.mul[g.index][f.index])
        case ("ell", "m"):
            return ELL
        case ("ell", "x"):
            return ID_V
        case ("x", "ell"):
            return elem_m(t.fix_elem[f.index])
    raise ValidationError(f"no composite for {f} after {g}")  # pragma: no cover


def describe(t: Theory, f: TheoryMorphism) -> str:
    if f.tag == "x":
        return t.x_names[f.index]
    if f.tag == "m":
        return t.m_names[f.index]
    return "Id_V" if f.tag == "idV" else "ℓ"


@dataclass
class AxiomReport:
    checked_pairs: int = 0
    checked_triples: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_axioms(t: Theory) -> AxiomReport:
    """Identity and associativity over every composable pair and triple."""
    report = AxiomReport()
    arrows = morphisms(t)
    out_of = {V: [], A: []}
    for f in arrows:
        out_of[f.src].append(f)

    def safe(f, g):
        try:
            return compose(t, f, g)
        except (ValidationError, IndexError) as exc:
            report.violations.append(f"{describe(t, f)}∘{describe(t, g)}: {exc}")
            return None

    for f in arrows:
        report.checked_pairs += 1
        left = safe(identity(t, f.dst), f)
        right = safe(f, identity(t, f.src))
        if left != f or right != f:
            report.violations.append(f"identity law fails for {describe(t, f)}")

    for h in arrows:
        for g in out_of[h.dst]:
            gh = safe(g, h)
            for f in out_of[g.dst]:
                report.checked_triples += 1
                fg = safe(f, g)
                if gh is None or fg is None:
                    continue
                lhs, rhs = safe(f, gh), safe(fg, h)
                if lhs != rhs:
                    report.violations.append(
                        "associativity fails at "
                        f"({describe(t, f)}, {describe(t, g)}, {describe(t, h)})"
                    )
    return report


def standard_theories(max_x: int = 3):
    """Every standard theory with |X| <= max_x (reflexive kinds need |X| >= 1)."""
    for kind, n in itertools.product(MonoidKind, range(max_x + 1)):
        if kind.reflexive and n == 0:
            continue
        yield standard_theory(kind, n)

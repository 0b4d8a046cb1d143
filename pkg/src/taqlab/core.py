"""Free graded-commutative algebras over F_p and their truncated presentations.

A :class:`FreeGCAlgebra` is a finite multiset of generators, each of which is
polynomial, exterior, truncated of height p, or divided power.  Divided powers
are never multiplied directly; over F_p they split as an infinite tensor
product of height-p truncated algebras on ``gamma_{p^e}(x)``, and that
splitting is materialized per cutoff by :func:`expand_divided`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Mapping, Sequence


class InvariantError(RuntimeError):
    """An internal mathematical invariant failed (e.g. d∘d ≠ 0)."""


def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, otherwise raise ``ValueError``."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p == 2:
        raise ValueError("p = 2 is not supported: only odd primes are handled")
    if p < 3 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


class GeneratorKind(enum.Enum):
    POLYNOMIAL = "polynomial"
    EXTERIOR = "exterior"
    TRUNCATED = "truncated"
    DIVIDED_POWER = "divided_power"

    @property
    def odd(self) -> bool:
        return self is GeneratorKind.EXTERIOR


def _render_label(label: Hashable) -> str:
    render = getattr(label, "render", None)
    return render() if callable(render) else str(label)


@dataclass(frozen=True)
class Generator:
    degree: int
    kind: GeneratorKind
    label: Hashable = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"generator degree must be >= 1, got {self.degree}")
        if (self.degree % 2 == 1) != self.kind.odd:
            want = "odd" if self.kind.odd else "even"
            raise ValueError(
                f"{self.kind.value} generator {self.name} needs {want} degree, got {self.degree}"
            )

    @property
    def name(self) -> str:
        return _render_label(self.label)

    def divided_part(self, e: int, p: int) -> Generator:
        """The truncated generator ``gamma_{p^e}`` of a divided-power generator."""
        if e == 0:
            label = self.label
        else:
            hook = getattr(self.label, "divided_power", None)
            label = hook(e) if callable(hook) else f"gamma_{p**e}({self.name})"
        return Generator(self.degree * p**e, GeneratorKind.TRUNCATED, label)


@dataclass(frozen=True)
class FreeGCAlgebra:
    p: int
    generators: tuple[Generator, ...] = ()

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if not isinstance(g, Generator):
                raise TypeError(f"expected Generator, got {g!r}")

    def tensor(self, other: FreeGCAlgebra) -> FreeGCAlgebra:
        if other.p != self.p:
            raise ValueError(f"cannot tensor algebras over F_{self.p} and F_{other.p}")
        return FreeGCAlgebra(self.p, self.generators + other.generators)

    def truncated(self, cutoff: int) -> FreeGCAlgebra:
        """Drop generators above ``cutoff``; they are invisible through the cutoff."""
        return FreeGCAlgebra(self.p, tuple(g for g in self.generators if g.degree <= cutoff))

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def describe(self) -> str:
        sym = {
            GeneratorKind.POLYNOMIAL: "P",
            GeneratorKind.EXTERIOR: "E",
            GeneratorKind.TRUNCATED: f"P_{self.p}",
            GeneratorKind.DIVIDED_POWER: "Γ",
        }
        if not self.generators:
            return "F_%d" % self.p
        return " ⊗ ".join(f"{sym[g.kind]}({g.name}; {g.degree})" for g in self.generators)


def polynomial(p: int, degree: int, label: Hashable = "x") -> FreeGCAlgebra:
    return FreeGCAlgebra(p, (Generator(degree, GeneratorKind.POLYNOMIAL, label),))


def exterior(p: int, degree: int, label: Hashable = "x") -> FreeGCAlgebra:
    return FreeGCAlgebra(p, (Generator(degree, GeneratorKind.EXTERIOR, label),))


def truncated(p: int, degree: int, label: Hashable = "x") -> FreeGCAlgebra:
    return FreeGCAlgebra(p, (Generator(degree, GeneratorKind.TRUNCATED, label),))


def divided(p: int, degree: int, label: Hashable = "x") -> FreeGCAlgebra:
    return FreeGCAlgebra(p, (Generator(degree, GeneratorKind.DIVIDED_POWER, label),))


@dataclass(frozen=True)
class DimTable:
    """Exact ranks per degree, valid for ``|degree| <= cutoff``.

    Zero ranks are not stored.  Indexing a degree outside the cutoff raises,
    so a table can never be silently read past the range it is exact on.
    """

    cutoff: int
    dims: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for d, r in sorted(self.dims.items()):
            if r < 0:
                raise ValueError(f"negative rank {r} in degree {d}")
            if abs(d) > self.cutoff:
                raise ValueError(f"degree {d} outside cutoff {self.cutoff}")
            if r:
                clean[int(d)] = int(r)
        object.__setattr__(self, "dims", clean)

    def __getitem__(self, degree: int) -> int:
        if abs(degree) > self.cutoff:
            raise KeyError(f"degree {degree} is outside the cutoff {self.cutoff}")
        return self.dims.get(degree, 0)

    def items(self) -> Iterable[tuple[int, int]]:
        return self.dims.items()

    def support(self) -> list[int]:
        return sorted(self.dims)

    def as_list(self, start: int = 0, stop: int | None = None) -> list[int]:
        stop = self.cutoff if stop is None else stop
        return [self[d] for d in range(start, stop + 1)]

    def restrict(self, cutoff: int) -> DimTable:
        return DimTable(cutoff, {d: r for d, r in self.dims.items() if abs(d) <= cutoff})


def convolve(a: Sequence[int], b: Sequence[int], cutoff: int) -> list[int]:
    """Product of two truncated power series given as coefficient lists."""
    out = [0] * (cutoff + 1)
    for i, x in enumerate(a[: cutoff + 1]):
        if x:
            for j, y in enumerate(b[: cutoff + 1 - i]):
                out[i + j] += x * y
    return out


def expand_divided(alg: FreeGCAlgebra, cutoff: int) -> FreeGCAlgebra:
    """Replace each divided-power generator by its truncated pieces up to ``cutoff``."""
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    out: list[Generator] = []
    for g in alg.generators:
        if g.kind is not GeneratorKind.DIVIDED_POWER:
            out.append(g)
            continue
        e = 0
        while g.degree * alg.p**e <= cutoff:
            out.append(g.divided_part(e, alg.p))
            e += 1
    return FreeGCAlgebra(alg.p, tuple(out))


def _factor_series(g: Generator, p: int, cutoff: int) -> list[int]:
    s = [0] * (cutoff + 1)
    s[0] = 1
    if g.kind is GeneratorKind.EXTERIOR:
        top = 1
    elif g.kind is GeneratorKind.TRUNCATED:
        top = p - 1
    else:
        top = cutoff // g.degree
    for e in range(1, top + 1):
        if e * g.degree > cutoff:
            break
        s[e * g.degree] = 1
    return s


def hilbert_series(alg: FreeGCAlgebra, cutoff: int) -> DimTable:
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    series = [1] + [0] * cutoff
    for g in expand_divided(alg, cutoff).generators:
        if g.degree <= cutoff:
            series = convolve(series, _factor_series(g, alg.p, cutoff), cutoff)
    return DimTable(cutoff, dict(enumerate(series)))


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    """A connected graded algebra over F_p truncated at ``cutoff``.

    ``products`` maps a pair of positive-degree basis indices ``(i, j)`` with
    ``degrees[i] + degrees[j] <= cutoff`` to a tuple of ``(k, coefficient)``
    terms; missing pairs multiply to zero.  Index 0 is the unit.
    """

    p: int
    cutoff: int
    degrees: tuple[int, ...]
    products: Mapping[tuple[int, int], tuple[tuple[int, int], ...]]
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        check_prime(self.p)
        if not self.degrees or self.degrees[0] != 0:
            raise ValueError("basis element 0 must be the degree-0 unit")
        if any(d <= 0 for d in self.degrees[1:]):
            raise ValueError("presentation must be connected: one basis element in degree 0")
        if any(d > self.cutoff for d in self.degrees):
            raise ValueError("basis element above the cutoff")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"b{i}" for i in range(len(self.degrees))))

    @property
    def unit(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.degrees)

    def in_degree(self, degree: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == degree]

    def multiply(self, i: int, j: int) -> dict[int, int]:
        """Product of two basis elements as a sparse vector."""
        if self.degrees[i] + self.degrees[j] > self.cutoff:
            raise ValueError("product lands above the cutoff")
        if i == 0:
            return {j: 1}
        if j == 0:
            return {i: 1}
        return {k: c % self.p for k, c in self.products.get((i, j), ()) if c % self.p}

    def _mul_vec(self, u: Mapping[int, int], v: Mapping[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.multiply(i, j).items():
                    out[k] = (out.get(k, 0) + a * b * c) % self.p
        return {k: c for k, c in out.items() if c}

    def commutativity_violations(self) -> list[tuple[int, int]]:
        bad = []
        n = len(self.degrees)
        for i in range(1, n):
            for j in range(i, n):
                if self.degrees[i] + self.degrees[j] > self.cutoff:
                    continue
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                lhs = self.multiply(i, j)
                rhs = {k: (sign * c) % self.p for k, c in self.multiply(j, i).items()}
                if lhs != {k: c for k, c in rhs.items() if c}:
                    bad.append((i, j))
        return bad

    def associativity_violations(self) -> list[tuple[int, int, int]]:
        bad = []
        n = len(self.degrees)
        for i, j, k in itertools.product(range(1, n), repeat=3):
            if self.degrees[i] + self.degrees[j] + self.degrees[k] > self.cutoff:
                continue
            left = self._mul_vec(self.multiply(i, j), {k: 1})
            right = self._mul_vec({i: 1}, self.multiply(j, k))
            if left != right:
                bad.append((i, j, k))
        return bad


def _monomials(gens: Sequence[Generator], p: int, cutoff: int) -> list[tuple[int, ...]]:
    def bound(g: Generator) -> int:
        if g.kind is GeneratorKind.EXTERIOR:
            return 1
        if g.kind is GeneratorKind.TRUNCATED:
            return p - 1
        return cutoff // g.degree

    out: list[tuple[int, ...]] = []

    def rec(idx: int, budget: int, acc: list[int]) -> None:
        if idx == len(gens):
            out.append(tuple(acc))
            return
        g = gens[idx]
        for e in range(min(bound(g), budget // g.degree) + 1):
            acc.append(e)
            rec(idx + 1, budget - e * g.degree, acc)
            acc.pop()

    rec(0, cutoff, [])
    return out


def _monomial_name(gens: Sequence[Generator], expo: Sequence[int]) -> str:
    parts = []
    for g, e in zip(gens, expo):
        if e == 1:
            parts.append(f"[{g.name}]")
        elif e > 1:
            parts.append(f"[{g.name}]^{e}")
    return "·".join(parts) or "1"


def presentation_from_free(alg: FreeGCAlgebra, cutoff: int) -> GradedAlgebraPresentation:
    """Monomial basis and Koszul-signed structure constants through ``cutoff``.

    Basis order is by degree, then lexicographic on exponent vectors.
    """
    if any(g.degree == 0 for g in alg.generators):
        raise ValueError("degree-0 generators are not allowed")
    gens = [g for g in expand_divided(alg, cutoff).generators if g.degree <= cutoff]
    degs = [g.degree for g in gens]
    monos = _monomials(gens, alg.p, cutoff)
    monos.sort(key=lambda m: (sum(e * d for e, d in zip(m, degs)), m))
    index = {m: i for i, m in enumerate(monos)}
    mdeg = [sum(e * d for e, d in zip(m, degs)) for m in monos]
    caps = [
        1 if g.kind is GeneratorKind.EXTERIOR else (alg.p - 1 if g.kind is GeneratorKind.TRUNCATED else None)
        for g in gens
    ]
    odd = [g.kind.odd for g in gens]

    products: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    for i in range(1, len(monos)):
        for j in range(1, len(monos)):
            if mdeg[i] + mdeg[j] > cutoff:
                continue
            a, b = monos[i], monos[j]
            prod = tuple(x + y for x, y in zip(a, b))
            if any(c is not None and e > c for e, c in zip(prod, caps)):
                continue
            # moving each odd factor of b left past the odd factors of a above it
            swaps = sum(
                1
                for u in range(len(gens))
                if odd[u] and a[u]
                for v in range(u)
                if odd[v] and b[v]
            )
            products[(i, j)] = ((index[prod], -1 if swaps % 2 else 1),)
    return GradedAlgebraPresentation(
        p=alg.p,
        cutoff=cutoff,
        degrees=tuple(mdeg),
        products=products,
        names=tuple(_monomial_name(gens, m) for m in monos),
    )

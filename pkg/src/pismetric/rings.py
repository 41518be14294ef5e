"""Finite products of local chain rings and their ideal arithmetic.

A finite commutative ring whose factors are chain rings (local Artinian
principal ideal rings) is described here purely by the ideal count of each
factor: a chain ring with c ideals has the totally ordered ideal lattice

    0 = m^(c-1) < m^(c-2) < ... < m < R

so an ideal is just an index j in 0..c-1, with j = 0 the zero ideal,
j = c-2 the maximal ideal and j = c-1 the whole ring. An ideal of the
product is a vector of per-factor indices, ideal sum is the componentwise
maximum, and the prime ideals are exactly "maximal in one slot, full
everywhere else". Residue fields never matter for this structure, so they
are not modeled.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product

from .errors import NotChainRing, RingSyntaxError

IdealVec = tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """An ordered product of chain-ring factors, each given by its ideal count.

    ``components[i]`` is the number of ideals of factor i, including 0 and
    the factor itself (so 2 means a field, 3 a ring with a unique nontrivial
    ideal). ``names`` holds display names, autogenerated when absent.
    """

    components: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.components:
            raise RingSyntaxError("ring must have at least one factor")
        if any(c < 2 for c in self.components):
            raise RingSyntaxError("every chain factor has at least 2 ideals")
        if self.names is not None and len(self.names) != len(self.components):
            raise RingSyntaxError("one name per factor required")
        object.__setattr__(self, "components", tuple(int(c) for c in self.components))

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def total_ideals(self) -> int:
        t = 1
        for c in self.components:
            t *= c
        return t

    @property
    def vertex_count(self) -> int:
        """Number of nonzero proper ideals."""
        return self.total_ideals - 2

    @property
    def is_reduced(self) -> bool:
        """True iff every factor is a field (all ideal counts equal 2)."""
        return all(c == 2 for c in self.components)

    def group_counts(self) -> tuple[int, int, int]:
        """Factor counts (c >= 4, c == 3, c == 2): many / one / no nontrivial ideals."""
        big = sum(1 for c in self.components if c >= 4)
        three = sum(1 for c in self.components if c == 3)
        fields = sum(1 for c in self.components if c == 2)
        return big, three, fields

    def component_name(self, i: int) -> str:
        if self.names is not None:
            return self.names[i]
        return ("F" if self.components[i] == 2 else "R") + str(i + 1)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse an 'x'-separated ring description into a RingSpec.

    Tokens: ``GF(q)`` or ``F<q>`` (q a prime power) for a field, ``Z<n>``
    (n a prime power p^k, giving k+1 ideals), ``chain(c)`` for a chain ring
    with c ideals. Example: ``"Z4 x GF(9) x chain(5)"``.
    """
    if not text or not text.strip():
        raise RingSyntaxError("empty ring description")
    counts: list[int] = []
    names: list[str] = []
    tokens = re.split(r"\s*[x×]\s*", text.strip())
    for pos, tok in enumerate(tokens):
        tok = tok.strip()
        if not tok:
            raise RingSyntaxError(f"empty factor in {text!r}")
        m = re.fullmatch(r"(?:GF\((\d+)\)|F(\d+))", tok, re.IGNORECASE)
        if m:
            q = int(m.group(1) or m.group(2))
            if _prime_power(q) is None:
                raise RingSyntaxError(f"{tok}: {q} is not a prime power, no such field")
            counts.append(2)
            names.append(tok)
            continue
        m = re.fullmatch(r"Z(\d+)", tok, re.IGNORECASE)
        if m:
            n = int(m.group(1))
            pk = _prime_power(n)
            if pk is None:
                raise NotChainRing(
                    f"Z{n} is not a chain ring ({n} is not a prime power); "
                    "write the factored form, e.g. Z4 x Z3 instead of Z12"
                )
            counts.append(pk[1] + 1)
            names.append(f"Z{n}")
            continue
        m = re.fullmatch(r"chain\((\d+)\)", tok, re.IGNORECASE)
        if m:
            c = int(m.group(1))
            if c < 2:
                raise RingSyntaxError(f"{tok}: a chain ring has at least 2 ideals")
            counts.append(c)
            names.append(f"R{pos + 1}")
            continue
        raise RingSyntaxError(f"unrecognized factor {tok!r}")
    return RingSpec(tuple(counts), tuple(names))


def _prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p^k for a prime p, or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if p * p > n:
        p = n  # n itself is prime
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def enumerate_ideals(spec: RingSpec, vertices_only: bool = False) -> list[IdealVec]:
    """All ideals of the product as index vectors, in lexicographic order.

    With ``vertices_only`` the zero ideal and the whole ring are dropped,
    leaving exactly the vertex set of the prime ideal sum graph.
    """
    out = list(product(*(range(c) for c in spec.components)))
    if vertices_only:
        zero = tuple(0 for _ in spec.components)
        full = tuple(c - 1 for c in spec.components)
        out = [v for v in out if v != zero and v != full]
    return out


def is_vertex(a: IdealVec, spec: RingSpec) -> bool:
    """True iff the ideal is nonzero and proper."""
    _check(a, spec)
    return any(j != 0 for j in a) and any(j != c - 1 for j, c in zip(a, spec.components))


def ideal_sum(a: IdealVec, b: IdealVec) -> IdealVec:
    """Sum of two ideals: componentwise maximum in the chain lattices."""
    if len(a) != len(b):
        raise ValueError(f"ideal vectors of different lengths: {len(a)} vs {len(b)}")
    return tuple(max(x, y) for x, y in zip(a, b))


def is_prime(a: IdealVec, spec: RingSpec) -> bool:
    """True iff exactly one slot is the maximal ideal and all others are full."""
    _check(a, spec)
    maximal = 0
    for j, c in zip(a, spec.components):
        if j == c - 2:
            maximal += 1
        elif j != c - 1:
            return False
    return maximal == 1


def in_jacobson(a: IdealVec, spec: RingSpec) -> bool:
    """True iff the ideal is contained in the Jacobson radical (no full slot)."""
    _check(a, spec)
    return all(j <= c - 2 for j, c in zip(a, spec.components))


def maximal_ideals(spec: RingSpec) -> list[IdealVec]:
    """Max(R): one vector per factor, maximal in that slot and full elsewhere."""
    full = [c - 1 for c in spec.components]
    out = []
    for i, c in enumerate(spec.components):
        v = full.copy()
        v[i] = c - 2
        out.append(tuple(v))
    return out


def jacobson_vector(spec: RingSpec) -> IdealVec:
    """J(R): the componentwise maximal-ideal vector."""
    return tuple(c - 2 for c in spec.components)


def ideal_label(spec: RingSpec, i: int, j: int) -> str:
    """Display name of ideal j of factor i, e.g. "0", "(2)", "m1^2", "Z4"."""
    c = spec.components[i]
    name = spec.component_name(i)
    if j == 0:
        return "0"
    if j == c - 1:
        return name
    m = re.fullmatch(r"Z(\d+)", name)
    if m:
        p, k = _prime_power(int(m.group(1)))  # type: ignore[misc]
        return f"({p ** (k - j)})"
    exp = c - 1 - j
    base = f"m{i + 1}" if spec.names is None or name.startswith("R") else f"m({name})"
    return base if exp == 1 else f"{base}^{exp}"


def vertex_label(spec: RingSpec, a: IdealVec) -> str:
    """Human-readable product label, e.g. "(2)×Z2"."""
    _check(a, spec)
    return "×".join(ideal_label(spec, i, j) for i, j in enumerate(a))


def _check(a: IdealVec, spec: RingSpec) -> None:
    if len(a) != spec.n_components:
        raise ValueError(f"vector length {len(a)} != {spec.n_components} factors")
    for j, c in zip(a, spec.components):
        if not 0 <= j <= c - 1:
            raise ValueError(f"ideal index {j} out of range for a {c}-ideal chain")

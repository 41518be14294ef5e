"""Closed-form metric dimension values and explicit resolving sets.

Each covered ring family has a known metric dimension and a concrete
witness set achieving it. Families are keyed by a stable ``theorem_id``:

    reduced_n3       product of exactly 3 fields            -> 2
    reduced_general  product of n >= 4 fields               -> n
    three_n1         one factor, one nontrivial ideal       -> 0
    three_small      2 or 3 such factors                    -> 2n - 1
    three_general    n >= 4 such factors                    -> 2n
    chain_n1_small   one chain factor with 2 nontrivials    -> 1
    chain_general    n chain factors, >= 2 nontrivials each -> |V| - 3^n + 1
    chain_c4         special case, all factors 4 ideals     -> 4^n - 3^n - 1
    mixed_corollary  groups of sizes (n, m, k), each 0 or
                     >= 4, at least two nonzero             -> |V| - 3^(n+m) 2^k + 2m + k + 2

Everything else (single field, two fields, mixed products with a group of
size 1..3) raises NotCovered. Counts of nontrivial ideals are what the
formulas consume, so |V| below is always the vertex count of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import rings
from .errors import NotCovered
from .rings import IdealVec, RingSpec


@dataclass(frozen=True)
class FormulaResult:
    value: int
    theorem_id: str
    hypothesis_note: str


@dataclass(frozen=True)
class Construction:
    """A resolving set given as vertex indices plus the ideal vectors."""

    indices: tuple[int, ...]
    vectors: tuple[IdealVec, ...]
    theorem_id: str


def formula_metric_dim(spec: RingSpec) -> FormulaResult:
    """Dispatch to the closed-form value for the spec's family.

    Raises NotCovered when no family's hypothesis holds.
    """
    n = spec.n_components
    big, three, fields = spec.group_counts()
    v = spec.vertex_count

    if fields == n:
        if n == 3:
            return FormulaResult(2, "reduced_n3", "product of exactly 3 fields")
        if n >= 4:
            return FormulaResult(n, "reduced_general", f"product of {n} fields")
        raise NotCovered(
            "a single field has no graph; a product of two fields is disconnected"
        )
    if three == n:
        if n == 1:
            return FormulaResult(0, "three_n1", "single factor with one nontrivial ideal")
        if n <= 3:
            return FormulaResult(
                2 * n - 1, "three_small", f"{n} factors with one nontrivial ideal each"
            )
        return FormulaResult(
            2 * n, "three_general", f"{n} factors with one nontrivial ideal each"
        )
    if big == n:
        if n == 1 and spec.components[0] == 4:
            return FormulaResult(1, "chain_n1_small", "one chain factor with 2 nontrivial ideals")
        tid = "chain_c4" if all(c == 4 for c in spec.components) else "chain_general"
        return FormulaResult(
            v - 3**n + 1, tid, f"{n} chain factors with >=2 nontrivial ideals each"
        )
    if _mixed_applicable(spec):
        return FormulaResult(
            mixed_formula_value(spec),
            "mixed_corollary",
            f"group sizes (chain, one-ideal, field) = ({big}, {three}, {fields})",
        )
    raise NotCovered(
        f"no closed form covers ring {list(spec.components)}: "
        f"group sizes (chain, one-ideal, field) = ({big}, {three}, {fields})"
    )


def mixed_formula_value(spec: RingSpec) -> int:
    """Evaluate the mixed-product formula with its side condition suppressed.

    |V| - 3^(n+m) 2^k + 2m + k + 2 for group sizes (n, m, k). Meaningful only
    under the side condition; exposed so the gap on small mixed products can
    be demonstrated against the exact value.
    """
    big, three, fields = spec.group_counts()
    return spec.vertex_count - 3 ** (big + three) * 2**fields + 2 * three + fields + 2


def _mixed_applicable(spec: RingSpec) -> bool:
    groups = spec.group_counts()
    nonzero = sum(1 for s in groups if s > 0)
    return nonzero >= 2 and all(s == 0 or s >= 4 for s in groups)


def construct_resolving(spec: RingSpec) -> Construction:
    """Build the explicit resolving set for the spec's family.

    For every covered family except mixed_corollary the returned set has
    minimum size; the mixed recipe is size-optimal only under its side
    condition, which admits no desk-scale instance.
    """
    result = formula_metric_dim(spec)  # raises NotCovered for unknown families
    tid = result.theorem_id
    n = spec.n_components
    full = [c - 1 for c in spec.components]

    vectors: list[IdealVec]
    if tid == "reduced_n3":
        vectors = [(0, 1, 1), (1, 0, 1)]
    elif tid == "reduced_general":
        vectors = rings.maximal_ideals(spec)
    elif tid == "three_n1":
        vectors = []
    elif tid == "three_small" and n == 2:
        vectors = [(2, 0), (0, 2), (2, 1)]
    elif tid == "three_small":
        vectors = [(0, 2, 2), (2, 0, 2), (2, 2, 0), (2, 1, 1), (1, 1, 2)]
    elif tid == "three_general":
        zero_slot = [_one_slot(full, i, 0) for i in range(n)]
        vectors = zero_slot + rings.maximal_ideals(spec)
    elif tid == "chain_n1_small":
        vectors = [(1,)]
    elif tid in ("chain_general", "chain_c4"):
        vectors = _chain_resolving_vectors(spec)
    elif tid == "mixed_corollary":
        vectors = mixed_resolving_vectors(spec)
    else:  # pragma: no cover
        raise AssertionError(f"unhandled theorem_id {tid}")

    index_of = {v: i for i, v in enumerate(rings.enumerate_ideals(spec, vertices_only=True))}
    indices = tuple(sorted(index_of[v] for v in vectors))
    return Construction(indices, tuple(vectors), tid)


def _one_slot(full: list[int], i: int, value: int) -> IdealVec:
    v = full.copy()
    v[i] = value
    return tuple(v)


def _chain_resolving_vectors(spec: RingSpec) -> list[IdealVec]:
    """All-chain-factor construction: keep every vertex except the skeleton.

    The skeleton consists of the vertices whose slots all sit at 0, the
    maximal ideal, or the full ring, plus one fixed extra vertex strictly
    inside every maximal ideal (index 1 per slot; factors have >= 4 ideals
    so that index exists and is neither 0 nor maximal).
    """
    skel = set(_pattern_vertices(spec))
    skel.add(tuple(1 for _ in spec.components))
    return [v for v in rings.enumerate_ideals(spec, vertices_only=True) if v not in skel]


def mixed_resolving_vectors(spec: RingSpec) -> list[IdealVec]:
    """Mixed-product recipe, applicable to any spec (no side condition).

    Takes every vertex with some chain slot strictly between 0 and the
    maximal ideal, plus two landmarks per one-nontrivial-ideal factor (slot
    at 0 and slot at its maximal, rest full) and one per field factor (slot
    at 0, rest full).
    """
    skel = set(_pattern_vertices(spec))
    vectors = [v for v in rings.enumerate_ideals(spec, vertices_only=True) if v not in skel]
    full = [c - 1 for c in spec.components]
    for i, c in enumerate(spec.components):
        if c == 3:
            vectors.append(_one_slot(full, i, 0))
            vectors.append(_one_slot(full, i, 1))
        elif c == 2:
            vectors.append(_one_slot(full, i, 0))
    return vectors


def _pattern_vertices(spec: RingSpec) -> list[IdealVec]:
    """Vertices whose every slot is 0, the slot's maximal ideal, or full."""
    choices = []
    for c in spec.components:
        vals = {0, c - 2, c - 1}
        choices.append(sorted(vals))
    zero = tuple(0 for _ in spec.components)
    whole = tuple(c - 1 for c in spec.components)
    return [v for v in product(*choices) if v != zero and v != whole]


def pattern_classes(spec: RingSpec) -> list[tuple[int, ...]]:
    """Partition vertex indices by per-slot position pattern.

    The pattern of a slot is "below" (strictly inside the maximal ideal,
    including 0), "maximal", or "full". On all-chain-factor specs these
    classes are exactly the twin classes of the graph sharing open
    neighborhoods; their number is 3^n - 1.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, v in enumerate(rings.enumerate_ideals(spec, vertices_only=True)):
        key = tuple(
            0 if j <= c - 3 else (1 if j == c - 2 else 2)
            for j, c in zip(v, spec.components)
        )
        groups.setdefault(key, []).append(i)
    return sorted((tuple(g) for g in groups.values()), key=lambda cls: cls[0])

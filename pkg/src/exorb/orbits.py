"""Nilpotent orbit machinery: gradings, diagram tests, representatives, triples.

Orbits are identified by their weighted Dynkin diagram (labels in {0,1,2} on
the simple roots).  A label vector is accepted when some element e of g(2)
provably realizes it: ad e must map g(0) onto g(2), the centralizer must have
the minimal dimension dim g(0) + dim g(1), and [e, f] = h must be solvable in
g(-2), which constructs the defining triple outright.  Representatives are
found among sparse sums of root vectors, falling back to seeded random
coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

import numpy as np

from ._modp import has_full_rank
from .algebra import Element, LieAlgebra, Subspace, bracket, centralizer
from .linalg import RatMatrix, solve

__all__ = [
    "WeightedDynkinDiagram",
    "Characteristic",
    "Sl2Triple",
    "Grading",
    "NilpotentOrbit",
    "characteristic_element",
    "grading_from_h",
    "dynkin_test",
    "find_representative",
    "complete_triple",
    "enumerate_orbits",
    "orbit_dimension",
]

DEFAULT_TRIALS = 25
TRIAL_COEFF_MAX = 10_000
SUBSET_BUDGET = 200
RANDOM_BUDGET = 600
RANDOM_COEFF_MAX = 10


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Node labels of a weighted Dynkin diagram, in Bourbaki order."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(v in (0, 1, 2) for v in self.labels):
            raise ValueError("diagram labels must lie in {0, 1, 2}")

    @classmethod
    def from_string(cls, text: str) -> "WeightedDynkinDiagram":
        parts = text.replace(" ", "").split(",")
        if len(parts) == 1:
            parts = list(text.strip())
        return cls(tuple(int(p) for p in parts))

    def is_zero(self) -> bool:
        return not any(self.labels)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.labels)


@dataclass(frozen=True)
class Characteristic:
    """The dominant Cartan element realizing a diagram's labels."""

    h: Element


@dataclass(frozen=True)
class Sl2Triple:
    e: Element
    h: Element
    f: Element


@dataclass(frozen=True)
class Grading:
    """The eigenspace decomposition of the algebra under ad h."""

    pieces: dict[int, Subspace]

    def piece(self, k: int) -> Subspace | None:
        return self.pieces.get(k)

    def dims(self) -> dict[int, int]:
        return {k: s.dim for k, s in sorted(self.pieces.items())}


@dataclass(frozen=True)
class NilpotentOrbit:
    diagram: WeightedDynkinDiagram
    triple: Sl2Triple
    label: str | None = None

    def with_label(self, label: str) -> "NilpotentOrbit":
        return replace(self, label=label)


def characteristic_element(L: LieAlgebra, d: WeightedDynkinDiagram) -> Element:
    """The Cartan element h with alpha_i(h) = labels[i]."""
    if len(d.labels) != L.rank:
        raise ValueError("diagram rank mismatch")
    coords = solve(RatMatrix(L.rs.cartan), [Fraction(v) for v in d.labels])
    assert coords is not None  # the Cartan matrix is invertible
    out = [Fraction(0)] * L.dim
    for j, c in enumerate(coords):
        out[2 * L.npos + j] = c
    return Element(tuple(out))


def grading_from_h(L: LieAlgebra, h: Element) -> Grading:
    """Eigenspace decomposition g = sum of g(k) for a Cartan element h."""
    values = L.cartan_values(h)
    buckets: dict[int, list[int]] = {}
    for i in range(L.dim):
        if i < 2 * L.npos:
            c = L._root_of_index[i]
            w = sum(m * v for m, v in zip(c, values))
            if w.denominator != 1:
                raise ValueError("ad h does not act with integer eigenvalues")
            buckets.setdefault(int(w), []).append(i)
        else:
            buckets.setdefault(0, []).append(i)
    pieces = {}
    for k, idxs in buckets.items():
        rows = []
        for i in sorted(idxs):
            row = [Fraction(0)] * L.dim
            row[i] = Fraction(1)
            rows.append(row)
        pieces[k] = Subspace(L, RatMatrix(rows, L.dim))
    return Grading(pieces)


# -- internal weight bookkeeping --------------------------------------------


def _weight_layout(L: LieAlgebra, labels: Sequence[int]):
    """Basis indices of each graded piece under the given labels."""
    weights = L.basis_weights(labels)
    buckets: dict[int, list[int]] = {}
    for i, w in enumerate(weights):
        buckets.setdefault(w, []).append(i)
    return weights, buckets


def _block_matrix(
    L: LieAlgebra, supp: dict[int, int], domain: list[int], codomain: list[int]
) -> np.ndarray:
    """Integer matrix of ad(e) restricted to one graded piece."""
    pos = {b: r for r, b in enumerate(codomain)}
    out = np.zeros((len(codomain), len(domain)), dtype=np.int64)
    adj = L._adj
    for col, j in enumerate(domain):
        for i, c in supp.items():
            hits = adj[i].get(j)
            if hits:
                for k, n in hits:
                    out[pos[k], col] += c * n
    return out


def _interlaced(buckets: dict[int, list[int]]) -> bool:
    ks = [k for k in buckets if k >= 0]
    return all(len(buckets.get(k, ())) >= len(buckets.get(k + 2, ())) for k in ks)


def _centralizer_dim_is_minimal(
    L: LieAlgebra, supp: dict[int, int], buckets: dict[int, list[int]]
) -> bool:
    """Certify dim ker(ad e) == dim g(0) + dim g(1) for e in g(2).

    ad e maps g(k) into g(k+2); the kernel dimension is minimal exactly when
    every block has full rank, and ranks for k <= -2 mirror those for k >= 0,
    so only blocks at k >= -1 are tested.  Full rank mod p certifies full
    rational rank, making acceptance exact.
    """
    for k in sorted(buckets):
        if k < -1:
            continue
        codomain = buckets.get(k + 2)
        if not codomain:
            continue
        domain = buckets[k]
        target = len(domain) if k == -1 else len(codomain)
        if not has_full_rank(_block_matrix(L, supp, domain, codomain), target):
            return False
    return True


def _derive_seed(seed: int, labels: Sequence[int]) -> int:
    out = seed
    for v in labels:
        out = out * 3 + v
    return out


# -- operations --------------------------------------------------------------


def dynkin_test(
    L: LieAlgebra,
    d: WeightedDynkinDiagram,
    trials: int = DEFAULT_TRIALS,
    seed: int = 1,
) -> bool:
    """Whether the label vector is the weighted Dynkin diagram of an orbit.

    Tests `trials` seeded random elements e of g(2) and returns True on the
    first that demonstrably realizes the labels: e must map g(0) onto g(2)
    with centralizer of the minimal dimension dim g(0) + dim g(1), and the
    defining equation [e, f] = h must have a solution f in g(-2) (solved
    exactly; the resulting triple is the proof).  Surjectivity of ad e on
    g(0) alone does not suffice: a one-dimensional g(2) always satisfies it,
    yet may admit no triple.  The empty g(2) is accepted only for the
    all-zero diagram (the zero orbit).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if len(d.labels) != L.rank:
        raise ValueError("diagram rank mismatch")
    weights, buckets = _weight_layout(L, d.labels)
    g2 = buckets.get(2, [])
    if not g2:
        return d.is_zero()
    g0 = buckets.get(0, [])
    if len(g0) < len(g2) or not _interlaced(buckets):
        return False
    blocks = np.stack([_block_matrix(L, {j: 1}, g0, g2) for j in g2])
    h = characteristic_element(L, d)
    rng = random.Random(_derive_seed(seed, d.labels))
    for _ in range(trials):
        supp = {j: rng.randint(1, TRIAL_COEFF_MAX) for j in g2}
        coeffs = np.array([supp[j] for j in g2], dtype=np.int64)
        if not has_full_rank(np.tensordot(coeffs, blocks, axes=1), len(g2)):
            continue
        if not _centralizer_dim_is_minimal(L, supp, buckets):
            continue
        e = L.element({j: Fraction(c) for j, c in supp.items()})
        try:
            complete_triple(L, h, e)
        except RuntimeError:
            continue
        return True
    return False


def find_representative(
    L: LieAlgebra, d: WeightedDynkinDiagram, seed: int = 1
) -> Element:
    """A representative e in g(2) with dim g_e = dim g(0) + dim g(1).

    Tries sums of basis root vectors over small subsets first (unit
    coefficients, sizes 1..5 in deterministic order), then seeded random
    small-integer combinations.  Deterministic for a fixed seed.
    """
    if len(d.labels) != L.rank:
        raise ValueError("diagram rank mismatch")
    if d.is_zero():
        return L.zero()
    weights, buckets = _weight_layout(L, d.labels)
    g2 = buckets.get(2, [])
    if not g2 or not _interlaced(buckets):
        raise ValueError(f"not a weighted Dynkin diagram: {d}")

    def accepted(supp: dict[int, int]) -> bool:
        return _centralizer_dim_is_minimal(L, supp, buckets)

    tried = 0
    for size in range(1, min(5, len(g2)) + 1):
        if tried >= SUBSET_BUDGET:
            break
        for subset in combinations(g2, size):
            supp = {j: 1 for j in subset}
            if accepted(supp):
                return L.element({j: Fraction(1) for j in subset})
            tried += 1
            if tried >= SUBSET_BUDGET:
                break
    rng = random.Random(_derive_seed(seed, d.labels) + 1)
    for _ in range(RANDOM_BUDGET):
        supp = {j: rng.randint(1, RANDOM_COEFF_MAX) for j in g2}
        if accepted(supp):
            return L.element({j: Fraction(c) for j, c in supp.items()})
    raise RuntimeError(
        f"representative search exhausted for diagram {d} of {L.rs.type_rank}"
    )


def complete_triple(L: LieAlgebra, h: Element, e: Element) -> Sl2Triple:
    """Solve [e, f] = h for f in g(-2) and return the verified triple."""
    two_e = 2 * e
    if bracket(L, h, e) != two_e:
        raise ValueError("[h, e] = 2e fails: not a weight-2 vector for h")
    values = L.cartan_values(h)
    neg2: list[int] = []
    for i in range(2 * L.npos):
        c = L._root_of_index[i]
        if sum(m * v for m, v in zip(c, values)) == -2:
            neg2.append(i)
    cols = [bracket(L, e, L.basis_element(j)).coeffs for j in neg2]
    system = RatMatrix([[col[i] for col in cols] for i in range(L.dim)], len(neg2))
    sol = solve(system, h.coeffs)
    if sol is None:
        raise RuntimeError("no completion to a triple: invalid representative")
    out = [Fraction(0)] * L.dim
    for j, c in zip(neg2, sol):
        out[j] = c
    f = Element(tuple(out))
    if bracket(L, e, f) != h or bracket(L, h, f) != -2 * f:
        raise RuntimeError("triple relations failed verification")
    return Sl2Triple(e=e, h=h, f=f)


def enumerate_orbits(
    L: LieAlgebra, seed: int = 1, trials: int = DEFAULT_TRIALS
) -> list[NilpotentOrbit]:
    """All nonzero nilpotent orbits, sorted by (orbit dimension, labels).

    Sweeps the 3^rank label vectors, keeps those passing the diagram test,
    and constructs a representative with its verified triple for each.
    """
    found: list[tuple[int, tuple[int, ...], NilpotentOrbit]] = []
    for labels in product((0, 1, 2), repeat=L.rank):
        if not any(labels):
            continue
        d = WeightedDynkinDiagram(labels)
        if not dynkin_test(L, d, trials=trials, seed=seed):
            continue
        e = find_representative(L, d, seed=seed)
        h = characteristic_element(L, d)
        triple = complete_triple(L, h, e)
        _, buckets = _weight_layout(L, labels)
        dim_orbit = L.dim - len(buckets.get(0, ())) - len(buckets.get(1, ()))
        found.append((dim_orbit, labels, NilpotentOrbit(d, triple)))
    found.sort(key=lambda item: (item[0], item[1]))
    return [o for _, _, o in found]


def orbit_dimension(L: LieAlgebra, o: NilpotentOrbit) -> int:
    """dim G.e = dim g - dim g_e."""
    return L.dim - centralizer(L, o.triple.e).dim

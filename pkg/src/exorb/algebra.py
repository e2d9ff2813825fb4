"""Chevalley-basis Lie algebras over the rationals.

The basis is x_a for each positive root a, y_a = x_{-a}, and the simple
coroots h_1..h_rank.  All products come from an integer multiplication
table, so every derived quantity (centralizers, derived subalgebras,
gradings) is exact.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .linalg import RatMatrix, _exact, member, rref, kernel
from .roots import Root, RootSystem, TypeRank, build_root_system

__all__ = [
    "LieAlgebra",
    "Element",
    "Subspace",
    "build_lie_algebra",
    "bracket",
    "ad_matrix",
    "centralizer",
    "derived_subalgebra",
    "subalgebra_closure",
    "quotient_with_action",
]


@dataclass(frozen=True)
class Element:
    """A vector in the algebra, as exact coefficients over the fixed basis."""

    coeffs: tuple[Fraction, ...]

    def __add__(self, other: "Element") -> "Element":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("dimension mismatch")
        return Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("dimension mismatch")
        return Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar: Fraction | int) -> "Element":
        s = _exact(scalar)
        return Element(tuple(s * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)


class LieAlgebra:
    """A simple Lie algebra with its full multiplication table.

    Immutable after construction; all operations on it are pure functions,
    so per-orbit analyses may run concurrently.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        m = rs.num_positive
        self.npos = m
        self.rank = rs.rank
        self.dim = 2 * m + rs.rank
        self._hbase = 2 * m

        pos = [r.coeffs for r in rs.positive_roots]
        signed: list[tuple[int, ...]] = pos + [tuple(-x for x in c) for c in pos]
        self._root_of_index = signed
        self._index_of_root = {c: i for i, c in enumerate(signed)}

        adj: list[dict[int, tuple[tuple[int, int], ...]]] = [
            {} for _ in range(self.dim)
        ]
        for (a, b), n in rs.structconsts.items():
            total = tuple(x + y for x, y in zip(a, b))
            adj[self._index_of_root[a]][self._index_of_root[b]] = (
                (self._index_of_root[total], n),
            )
        for i, a in enumerate(signed):
            coroot = rs.coroot_coords(a)
            adj[i][self._index_of_root[tuple(-x for x in a)]] = tuple(
                (self._hbase + j, c) for j, c in enumerate(coroot) if c
            )
        for j in range(rs.rank):
            hj = self._hbase + j
            for i, a in enumerate(signed):
                w = rs.pairing(a, j)
                if w:
                    adj[hj][i] = ((i, w),)
                    adj[i][hj] = ((i, -w),)
        self._adj = adj

    # -- basis elements -------------------------------------------------

    def zero(self) -> Element:
        return Element((Fraction(0),) * self.dim)

    def basis_element(self, i: int) -> Element:
        if not 0 <= i < self.dim:
            raise ValueError("basis index out of range")
        return Element(
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))
        )

    def root_vector(self, root: Root | tuple[int, ...]) -> Element:
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        return self.basis_element(self._index_of_root[coeffs])

    def cartan_element(self, i: int) -> Element:
        return self.basis_element(self._hbase + i)

    def coroot_element(self, root: Root | tuple[int, ...]) -> Element:
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        out = [Fraction(0)] * self.dim
        for j, c in enumerate(self.rs.coroot_coords(coeffs)):
            out[self._hbase + j] = Fraction(c)
        return Element(tuple(out))

    def element(self, entries: Mapping[int, Fraction | int] | Sequence[Fraction | int]) -> Element:
        if isinstance(entries, Mapping):
            out = [Fraction(0)] * self.dim
            for i, c in entries.items():
                out[i] = _exact(c)
            return Element(tuple(out))
        if len(entries) != self.dim:
            raise ValueError("dimension mismatch")
        return Element(tuple(_exact(c) for c in entries))

    def basis_name(self, i: int) -> str:
        if i < self.npos:
            return f"x{self._root_of_index[i]}"
        if i < 2 * self.npos:
            return f"y{self._root_of_index[i - self.npos]}"
        return f"h{i - self._hbase + 1}"

    def cartan_values(self, elt: Element) -> tuple[Fraction, ...]:
        """Values of the simple roots on a Cartan element."""
        if any(elt.coeffs[i] for i in range(self._hbase)):
            raise ValueError("element is not in the Cartan subalgebra")
        c = elt.coeffs[self._hbase :]
        return tuple(
            sum(c[j] * self.rs.cartan[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def basis_weights(self, labels: Sequence[int]) -> tuple[int, ...]:
        """Eigenvalue of each basis vector under the characteristic of `labels`."""
        if len(labels) != self.rank:
            raise ValueError("label vector has wrong length")
        out = []
        for c in self._root_of_index:
            out.append(sum(m * d for m, d in zip(c, labels)))
        return tuple(out) + (0,) * self.rank

    def __repr__(self) -> str:
        return f"LieAlgebra({self.rs.type_rank}, dim={self.dim})"


@lru_cache(maxsize=None)
def _cached_algebra(letter: str, rank: int) -> LieAlgebra:
    return LieAlgebra(build_root_system(TypeRank(letter, rank)))


def build_lie_algebra(t: TypeRank | str) -> LieAlgebra:
    if isinstance(t, str):
        t = TypeRank.from_string(t)
    return _cached_algebra(t.letter, t.rank)


# -- sparse integer plumbing ------------------------------------------------


def _scaled_support(coeffs: Sequence[Fraction]) -> tuple[dict[int, int], int]:
    """(integer support, denominator) with coeffs == support / denominator."""
    scale = 1
    for c in coeffs:
        if c:
            scale = lcm(scale, c.denominator)
    return {i: int(c * scale) for i, c in enumerate(coeffs) if c}, scale


def _sparse_row(coeffs: Sequence[Fraction]) -> dict[int, Fraction]:
    return {i: c for i, c in enumerate(coeffs) if c}


def _bracket_supp(
    adj: list[dict[int, tuple[tuple[int, int], ...]]],
    sa: dict,
    sb: dict,
) -> dict:
    """[a, b] for sparse coefficient dicts; values may be ints or Fractions."""
    out: dict[int, int] = {}
    if len(sa) > len(sb):
        sa, sb = sb, sa
        sign = -1
    else:
        sign = 1
    get = out.get
    for i, ca in sa.items():
        row = adj[i]
        if not row:
            continue
        for j, cb in sb.items():
            hits = row.get(j)
            if hits:
                f = ca * cb
                for k, n in hits:
                    v = get(k, 0) + f * n
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
    if sign < 0:
        return {k: -v for k, v in out.items()}
    return out


_PRIMES = (2147483629, 2147483587)


def _bracket_mod(
    adj: list[dict[int, tuple[tuple[int, int], ...]]],
    sa: dict[int, int],
    sb: dict[int, int],
    p: int,
) -> dict[int, int]:
    out: dict[int, int] = {}
    if len(sa) > len(sb):
        sa, sb = sb, sa
        sign = -1
    else:
        sign = 1
    get = out.get
    for i, ca in sa.items():
        row = adj[i]
        if not row:
            continue
        for j, cb in sb.items():
            hits = row.get(j)
            if hits:
                f = ca * cb
                for k, n in hits:
                    v = (get(k, 0) + f * n) % p
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
    if sign < 0:
        return {k: p - v for k, v in out.items()}
    return out


class _ModSpan:
    """A row span tracked modulo a fixed prime.

    Built from exact rows whose coordinates over the span's pivot columns
    are the vector's own pivot entries (pivot-normalized rows), so a nonzero
    residual here proves non-membership over the rationals.  A zero residual
    is only probable membership.
    """

    __slots__ = ("p", "rows", "order", "usable", "_inv")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, dict[int, int]] = {}
        self.order: list[int] = []
        self.usable = True
        self._inv: dict[int, int] = {}

    def mod_row(self, row: dict[int, Fraction] | dict[int, int]) -> dict[int, int] | None:
        """Image of a rational row mod p, or None when a denominator hits p."""
        p = self.p
        inv = self._inv
        out: dict[int, int] = {}
        for k, x in row.items():
            num = x.numerator
            den = x.denominator
            if den == 1:
                v = num % p
            else:
                iv = inv.get(den)
                if iv is None:
                    if den % p == 0:
                        return None
                    iv = pow(den, -1, p)
                    inv[den] = iv
                v = num * iv % p
            if v:
                out[k] = v
        return out

    def reduce(self, v: dict[int, int]) -> dict[int, int]:
        p = self.p
        rows = self.rows
        for piv in self.order:
            c = v.get(piv)
            if not c:
                continue
            row = rows[piv]
            for k, x in row.items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                elif k in v:
                    del v[k]
        return v

    def add(self, exact_row: dict[int, Fraction] | dict[int, int]) -> None:
        if not self.usable:
            return
        vec = self.mod_row(exact_row)
        if vec is None:
            self.usable = False
            return
        v = self.reduce(vec)
        if not v:
            return
        piv = min(v)
        ivp = pow(v[piv], -1, self.p)
        self.rows[piv] = {k: x * ivp % self.p for k, x in v.items()}
        insort(self.order, piv)


class _Echelon:
    """Accumulates a row span as sparse pivot-normalized rational rows.

    Rows are keyed by their leading index and carry a 1 there, so reducing a
    vector never rescales it; entry sizes stay at the subspace's intrinsic
    rational complexity instead of compounding.
    """

    __slots__ = ("rows", "order")

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, Fraction]] = {}
        self.order: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.order)

    def reduce(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        """Fully reduce v (destructively) against the stored rows."""
        rows = self.rows
        for p in self.order:
            c = v.get(p)
            if not c:
                continue
            row = rows[p]
            for k, x in row.items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                elif k in v:
                    del v[k]
        return v

    def _store(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        p = min(v)
        piv = v[p]
        row = {k: x / piv for k, x in v.items()}
        self.rows[p] = row
        insort(self.order, p)
        return row

    def insert(self, v: dict[int, int] | dict[int, Fraction]) -> bool:
        """Reduce v into the span; returns True when the dimension grew."""
        v = self.reduce({k: Fraction(x) for k, x in v.items()})
        if not v:
            return False
        self._store(v)
        return True

    def contains(self, v: dict[int, int] | dict[int, Fraction]) -> bool:
        return not self.reduce({k: Fraction(x) for k, x in v.items()})

    def to_subspace(self, amb: "LieAlgebra") -> "Subspace":
        return Subspace.from_rows(
            amb, [_row_to_fractions(r, amb.dim) for r in self.rows.values()]
        )

    @classmethod
    def from_matrix(cls, m: RatMatrix) -> "_Echelon":
        ech = cls()
        for row in m.data:
            ech.insert({i: c for i, c in enumerate(row) if c})
        return ech


def _row_to_fractions(row: dict[int, Fraction], dim: int) -> list[Fraction]:
    out = [Fraction(0)] * dim
    for k, v in row.items():
        out[k] = v
    return out


# -- public types and operations --------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of a fixed algebra, held as a canonical echelon basis."""

    amb: LieAlgebra
    basis: RatMatrix

    @classmethod
    def from_rows(cls, amb: LieAlgebra, rows: Iterable[Sequence[Fraction | int]]) -> "Subspace":
        reduced, _ = rref(RatMatrix(rows, amb.dim))
        return cls(amb, reduced)

    @classmethod
    def full(cls, amb: LieAlgebra) -> "Subspace":
        return cls(amb, RatMatrix.identity(amb.dim))

    @classmethod
    def zero(cls, amb: LieAlgebra) -> "Subspace":
        return cls(amb, RatMatrix([], amb.dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, elt: Element) -> bool:
        return member(elt.coeffs, self.basis)

    def basis_elements(self) -> list[Element]:
        return [Element(row) for row in self.basis.data]


def bracket(L: LieAlgebra, a: Element, b: Element) -> Element:
    """The product [a, b], extended bilinearly from the multiplication table."""
    if len(a.coeffs) != L.dim or len(b.coeffs) != L.dim:
        raise ValueError("dimension mismatch")
    sa, da = _scaled_support(a.coeffs)
    sb, db = _scaled_support(b.coeffs)
    raw = _bracket_supp(L._adj, sa, sb)
    scale = da * db
    out = [Fraction(0)] * L.dim
    for k, v in raw.items():
        out[k] = Fraction(v, scale)
    return Element(tuple(out))


def ad_matrix(L: LieAlgebra, a: Element) -> RatMatrix:
    """Matrix of x -> [a, x]; column j holds the image of basis vector j."""
    sa, da = _scaled_support(a.coeffs)
    cols: list[dict[int, int]] = [
        _bracket_supp(L._adj, sa, {j: 1}) for j in range(L.dim)
    ]
    rows = []
    for i in range(L.dim):
        rows.append([Fraction(col.get(i, 0), da) for col in cols])
    return RatMatrix(rows, L.dim)


def centralizer(L: LieAlgebra, a: Element) -> Subspace:
    """The kernel of ad a, as a subspace of L."""
    return Subspace(L, kernel(ad_matrix(L, a)))


def derived_subalgebra(L: LieAlgebra, s: Subspace) -> Subspace:
    """Span of all pairwise brackets of a subalgebra's basis.

    Raises ValueError when some bracket of basis vectors falls outside s,
    i.e. when s is not actually closed under the product.
    """
    if s.amb is not L:
        raise ValueError("subspace belongs to a different algebra")
    rows = [_sparse_row(r) for r in s.basis.data]
    checker = _Echelon.from_matrix(s.basis)
    acc = _Echelon()
    adj = L._adj
    n = len(rows)

    # Per-prime screens: a bracket whose image lies in the accumulated span
    # mod every usable prime is skipped (it lies in s mod p as well, since
    # the span sits inside s); a nonzero residual is an exact proof of
    # novelty and routes the pair through the rational path.
    screens = []
    for p in _PRIMES:
        sp, ap = _ModSpan(p), _ModSpan(p)
        mod_rows = []
        for r in rows:
            sp.add(r)
            mod_rows.append(sp.mod_row(r))
        if sp.usable and all(mr is not None for mr in mod_rows):
            screens.append((sp, ap, mod_rows))

    def settle_exactly(ri: dict, rj: dict) -> None:
        v = _bracket_supp(adj, ri, rj)
        if not v:
            return
        residual = acc.reduce({k: Fraction(x) for k, x in v.items()})
        if not residual:
            return
        if not checker.contains(dict(residual)):
            raise ValueError("subspace is not closed under the bracket")
        stored = acc._store(residual)
        for _, ap, _ in screens:
            ap.add(stored)

    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            live = [entry for entry in screens if entry[0].usable and entry[1].usable]
            if not live:
                settle_exactly(ri, rows[j])
                continue
            novel = False
            for sp, ap, mod_rows in live:
                vb = _bracket_mod(adj, mod_rows[i], mod_rows[j], sp.p)
                if not vb:
                    continue
                if ap.reduce(dict(vb)):
                    if sp.reduce(vb):
                        # provably outside s; recompute exactly for the error
                        ve = _bracket_supp(adj, ri, rows[j])
                        if not checker.contains(ve):
                            raise ValueError(
                                "subspace is not closed under the bracket"
                            )
                    novel = True
                    break
            if novel:
                settle_exactly(ri, rows[j])
    return acc.to_subspace(L)


def subalgebra_closure(
    L: LieAlgebra, gens: Sequence[Element], within: Subspace | None = None
) -> Subspace:
    """Smallest bracket-closed subspace containing the generators.

    When `within` is supplied it must be bracket-closed and contain the
    generators (containment is checked here, closedness is the caller's
    contract); it then bounds the iteration, which stops as soon as the
    accumulated span fills it.
    """
    for g in gens:
        if len(g.coeffs) != L.dim:
            raise ValueError("dimension mismatch")
        if within is not None and not within.contains(g):
            raise ValueError("generator lies outside the enclosing subspace")
    limit = within.dim if within is not None else L.dim
    acc = _Echelon()
    screens = [_ModSpan(p) for p in _PRIMES]
    basis_rows: list[dict[int, Fraction]] = []
    queue: list[dict] = [_sparse_row(g.coeffs) for g in gens]
    adj = L._adj
    while queue:
        v = queue.pop()
        screened = False
        for sp in screens:
            if not sp.usable:
                continue
            vm = sp.mod_row(v)
            if vm is None:
                continue
            screened = True
            if sp.reduce(vm):
                break  # provably novel
        else:
            if screened:
                continue  # in the span mod every usable prime
        residual = acc.reduce({k: Fraction(x) for k, x in v.items()})
        if not residual:
            continue
        row = acc._store(residual)
        for sp in screens:
            sp.add(row)
        if acc.dim >= limit:
            break
        for u in basis_rows:
            w = _bracket_supp(adj, u, row)
            if w:
                queue.append(w)
        basis_rows.append(row)
    return acc.to_subspace(L)


def quotient_with_action(
    L: LieAlgebra, s: Subspace, t: Subspace, h: Element
) -> tuple[int, tuple[int, ...]]:
    """Dimension and h-eigenvalue multiset of the quotient s/t.

    Both spaces must be stable under ad h (checked), t must sit inside s
    (checked), and h must act with integer eigenvalues.  The multiset is
    computed gradewise: the multiplicity of k is dim(s ∩ g(k)) - dim(t ∩ g(k)).
    """
    if s.amb is not L or t.amb is not L:
        raise ValueError("subspace belongs to a different algebra")
    values = L.cartan_values(h)
    s_check = _Echelon.from_matrix(s.basis)
    for row in t.basis.data:
        if not s_check.contains(_sparse_row(row)):
            raise ValueError("t is not contained in s")
    t_check = _Echelon.from_matrix(t.basis)
    sh = _sparse_row(h.coeffs)
    for space, checker in ((s, s_check), (t, t_check)):
        for row in space.basis.data:
            img = _bracket_supp(L._adj, sh, _sparse_row(row))
            if img and not checker.contains(img):
                raise ValueError("subspace is not stable under ad h")

    weights: list[int] = []
    for c in L._root_of_index:
        w = sum(m * v for m, v in zip(c, values))
        if w.denominator != 1:
            raise ValueError("ad h does not act with integer eigenvalues")
        weights.append(int(w))
    weights.extend([0] * L.rank)

    def graded_dims(space: Subspace) -> dict[int, int]:
        buckets: dict[int, _Echelon] = {}
        for row in space.basis.data:
            parts: dict[int, dict[int, Fraction]] = {}
            for i, v in _sparse_row(row).items():
                parts.setdefault(weights[i], {})[i] = v
            for w, comp in parts.items():
                buckets.setdefault(w, _Echelon()).insert(comp)
        return {w: e.dim for w, e in buckets.items()}

    dims_s = graded_dims(s)
    dims_t = graded_dims(t)
    out: list[int] = []
    for w in sorted(dims_s):
        mult = dims_s[w] - dims_t.get(w, 0)
        if mult < 0:
            raise ValueError("inconsistent graded dimensions")
        out.extend([w] * mult)
    total = s.dim - t.dim
    if len(out) != total:
        raise ValueError("graded dimension mismatch")
    return total, tuple(sorted(out))

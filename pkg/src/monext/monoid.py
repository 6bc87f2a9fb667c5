"""Finite monoids as Cayley tables, zero-preserving maps and homomorphisms.

Elements of a monoid of size n are the indices 0..n-1, the identity is always
index 0 and ``table[i][j]`` is the sum ``i + j`` (the operation is written
additively even when it is not commutative).  Pairs in a product M x N are
encoded as ``i * N.size + j``.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from . import kernels
from .errors import (CodomainMismatch, DimensionMismatch, DomainMismatch,
                     IndexOutOfRange, NotAHomomorphism, NotAssociative,
                     NotIdentity, NotPointed, SizeTooLarge)

MAX_ENUM_SIZE = 4


@dataclass(frozen=True)
class MonoidTable:
    table: tuple
    labels: tuple = field(default=None, compare=False)
    name: str = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    def add(self, *xs):
        acc = 0
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def is_idempotent(self):
        return all(self.table[a][a] == a for a in self.elements)

    def is_commutative(self):
        t = self.table
        return all(t[i][j] == t[j][i] for i in self.elements for j in self.elements)

    def inverse(self, a):
        """Two-sided inverse of ``a`` or None."""
        for b in self.elements:
            if self.table[a][b] == 0 and self.table[b][a] == 0:
                return b
        return None

    def is_group(self):
        return all(self.inverse(a) is not None for a in self.elements)

    def __repr__(self):
        tag = self.name or "MonoidTable"
        return f"{tag}{[list(r) for r in self.table]}"


def make_monoid(table, labels=None, name=None):
    """Validate a Cayley table and wrap it as a :class:`MonoidTable`.

    Raises the first violated law, with witnesses: ``IndexOutOfRange``,
    ``NotIdentity`` (index 0 is not a two-sided identity) or
    ``NotAssociative`` with the lexicographically first failing triple.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("table must be a non-empty square matrix",
                                shape=[len(r) for r in rows])
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"entry ({i},{j}) = {v!r} is not an index < {n}",
                                      i=i, j=j, value=v)
    for j in range(n):
        if rows[0][j] != j:
            raise NotIdentity(f"0+{j} = {rows[0][j]} != {j}", side="left", j=j)
        if rows[j][0] != j:
            raise NotIdentity(f"{j}+0 = {rows[j][0]} != {j}", side="right", i=j)
    w = kernels.assoc_witness(rows)
    if w is not None:
        i, j, k = w
        raise NotAssociative(f"({i}+{j})+{k} != {i}+({j}+{k})", i=i, j=j, k=k)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise DimensionMismatch("one label per element is required",
                                    labels=len(labels), size=n)
    return MonoidTable(tuple(tuple(r) for r in rows), labels, name)


def trivial_monoid():
    return MonoidTable(((0,),), name="T")


@dataclass(frozen=True, eq=False)
class PointedMap:
    """A total map between carriers sending 0 to 0."""

    dom: MonoidTable
    cod: MonoidTable
    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.dom.size:
            raise DimensionMismatch("map needs one value per domain element",
                                    values=len(values), size=self.dom.size)
        for i, v in enumerate(values):
            if not 0 <= v < self.cod.size:
                raise IndexOutOfRange(f"value {v} at {i} outside codomain", i=i, value=v)
        if values[0] != 0:
            raise NotPointed("map does not send 0 to 0", value=values[0])

    def __call__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if not isinstance(other, PointedMap):
            return NotImplemented
        return (self.values == other.values and self.dom == other.dom
                and self.cod == other.cod)

    def __hash__(self):
        return hash((self.values, self.dom.table, self.cod.table))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.values)})"

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def is_surjective(self):
        return len(set(self.values)) == self.cod.size

    def image(self):
        return sorted(set(self.values))


def hom_witness(f):
    """First pair (i, j) where f(i+j) != f(i)+f(j), or None."""
    d, c, v = f.dom.table, f.cod.table, f.values
    for i in f.dom.elements:
        for j in f.dom.elements:
            if v[d[i][j]] != c[v[i]][v[j]]:
                return (i, j)
    return None


def is_homomorphism(f):
    return hom_witness(f) is None


@dataclass(frozen=True, eq=False)
class Homomorphism(PointedMap):
    """A pointed map that also preserves the operation."""

    def __post_init__(self):
        super().__post_init__()
        w = hom_witness(self)
        if w is not None:
            raise NotAHomomorphism(f"f({w[0]}+{w[1]}) != f({w[0]})+f({w[1]})",
                                   i=w[0], j=w[1])

    __hash__ = PointedMap.__hash__


def as_homomorphism(f):
    return f if isinstance(f, Homomorphism) else Homomorphism(f.dom, f.cod, f.values)


def identity_map(M):
    return Homomorphism(M, M, tuple(M.elements))


def zero_map(M, N):
    return Homomorphism(M, N, (0,) * M.size)


def compose_maps(g, f):
    """g after f; a homomorphism when both factors are."""
    if f.cod != g.dom:
        raise DomainMismatch("cod(f) must equal dom(g)")
    values = tuple(g.values[v] for v in f.values)
    cls = Homomorphism if isinstance(f, Homomorphism) and isinstance(g, Homomorphism) else PointedMap
    return cls(f.dom, g.cod, values)


def add_maps(f, g):
    """Pointwise sum (f+g)(a) = f(a) + g(a) in the common codomain."""
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("maps must share domain and codomain")
    t = f.cod.table
    return PointedMap(f.dom, f.cod, tuple(t[x][y] for x, y in zip(f.values, g.values)))


# -- products and pullbacks ----------------------------------------------------

def pair_index(M, N, i, j):
    return i * N.size + j


def product_monoid(M, N):
    """Componentwise product; the pair (i, j) is element i * N.size + j."""
    m, n = M.size, N.size
    table = tuple(
        tuple(M.table[i][k] * n + N.table[j][l] for k in range(m) for l in range(n))
        for i in range(m) for j in range(n))
    labels = tuple(f"({M.label(i)},{N.label(j)})" for i in range(m) for j in range(n))
    name = f"{M.name}x{N.name}" if M.name and N.name else None
    return MonoidTable(table, labels, name)


def product_projections(M, N):
    P = product_monoid(M, N)
    n = N.size
    pi1 = Homomorphism(P, M, tuple(e // n for e in P.elements))
    pi2 = Homomorphism(P, N, tuple(e % n for e in P.elements))
    return P, pi1, pi2


@dataclass(frozen=True)
class SubmonoidCarrier:
    parent: MonoidTable
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", members)
        if not members or members[0] != 0:
            raise NotIdentity("a submonoid carrier must contain 0")
        mset = set(members)
        t = self.parent.table
        for a in members:
            for b in members:
                if t[a][b] not in mset:
                    raise NotAssociative("carrier is not closed", a=a, b=b)

    def monoid(self, labels=None, name=None):
        """The carrier as a monoid, element i standing for members[i]."""
        pos = {m: i for i, m in enumerate(self.members)}
        t = self.parent.table
        table = tuple(tuple(pos[t[a][b]] for b in self.members) for a in self.members)
        if labels is None and self.parent.labels:
            labels = tuple(self.parent.labels[m] for m in self.members)
        return MonoidTable(table, labels, name)


@dataclass(frozen=True)
class Pullback:
    """A x_B C with its projections; element i of ``monoid`` is ``pairs[i]``."""

    carrier: SubmonoidCarrier
    monoid: MonoidTable
    pairs: tuple
    pi1: Homomorphism
    pi2: Homomorphism

    def index_of(self, a, c):
        return self.pairs.index((a, c))


def pullback(p, h):
    """Pull back p: A -> B along h: C -> B."""
    if p.cod != h.cod:
        raise CodomainMismatch("p and h must share a codomain")
    A, C = p.dom, h.dom
    P = product_monoid(A, C)
    members = [a * C.size + c for a in A.elements for c in C.elements if p(a) == h(c)]
    carrier = SubmonoidCarrier(P, members)
    R = carrier.monoid()
    pairs = tuple(divmod(m, C.size) for m in carrier.members)
    pi1 = Homomorphism(R, A, tuple(a for a, _ in pairs))
    pi2 = Homomorphism(R, C, tuple(c for _, c in pairs))
    return Pullback(carrier, R, pairs, pi1, pi2)


# -- map search ----------------------------------------------------------------

def _map_search(M, N, injective):
    n = M.size
    vals = [-1] * n
    vals[0] = 0
    out = []
    mt, nt = M.table, N.table

    def consistent(i):
        # every pair of assigned elements whose sum is also assigned
        for a in range(i + 1):
            for b in range(i + 1):
                s = vals[mt[a][b]]
                if s >= 0 and s != nt[vals[a]][vals[b]]:
                    return False
        return True

    def rec(i):
        if i == n:
            out.append(tuple(vals))
            return
        for v in range(N.size):
            if injective and v in vals[:i]:
                continue
            vals[i] = v
            if consistent(i):
                rec(i + 1)
        vals[i] = -1

    if consistent(0):
        rec(1)
    return [Homomorphism(M, N, v) for v in out]


def enumerate_homomorphisms(M, N):
    """All homomorphisms M -> N in lexicographic order of value arrays."""
    return _map_search(M, N, injective=False)


def find_isomorphisms(M, N):
    """All bijective homomorphisms M -> N, lexicographically ordered."""
    if M.size != N.size:
        return []
    return _map_search(M, N, injective=True)


def pointed_maps(M, N):
    """Every zero-preserving map M -> N (lexicographic)."""
    for tail in product(range(N.size), repeat=M.size - 1):
        yield PointedMap(M, N, (0,) + tail)


# -- canonical forms and enumeration -------------------------------------------

def relabel(M, perm):
    """The copy of M in which element i is renamed perm[i] (perm[0] == 0)."""
    n = M.size
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    table = tuple(tuple(perm[M.table[inv[r]][inv[c]]] for c in range(n)) for r in range(n))
    return MonoidTable(table)


def canonical_form(M):
    """Least relabeled table over permutations fixing 0, with the permutation."""
    best, best_perm = None, None
    for rest in permutations(range(1, M.size)):
        perm = (0,) + rest
        t = relabel(M, perm).table
        if best is None or t < best:
            best, best_perm = t, perm
    return MonoidTable(best), best_perm


def enumerate_monoids(n):
    """Monoids of order n up to isomorphism, sorted by canonical table."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"enumeration is capped at order {MAX_ENUM_SIZE}",
                           n=n, limit=MAX_ENUM_SIZE)
    seen = set()
    for t in kernels.unital_tables(n):
        seen.add(canonical_form(MonoidTable(t))[0].table)
    return [MonoidTable(t) for t in sorted(seen)]

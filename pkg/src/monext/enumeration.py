"""Exhaustive enumeration and isomorphism classification of action systems.

Matrices below use element indices: the two-element monoids M (idempotent)
and G (group) are written {0, 1} with 0 the identity, so a table entry "1"
in multiplicative notation becomes 0 and "2" becomes 1.
"""

from dataclasses import dataclass, field
from itertools import product

from . import kernels
from .action import (ActionSystem, ActMorphism, functor_Q, is_act_morphism,
                     verify_action_system)
from .errors import SizeTooLarge
from .monoid import (MAX_ENUM_SIZE, Homomorphism, canonical_form,
                     enumerate_monoids, find_isomorphisms, product_monoid)
from .registry import BUILTIN, G, M
from .semibiproduct import PsbMorphism, is_psb_morphism

# The two possible values of each component over two-element X and B.
RHO = {0: ((0, 0), (1, 1)), 1: ((0, 0), (1, 0))}
PHI = {0: ((0, 1), (0, 1)), 1: ((0, 1), (0, 0))}
GAMMA = {0: ((0, 0), (0, 0)), 1: ((0, 0), (0, 1))}

# The fourteen (X, B, rho, phi, gamma) flag tuples, in census order.
CENSUS_2X2_FLAGS = (
    ("G", "G", 0, 0, 0), ("G", "G", 0, 0, 1),
    ("G", "M", 0, 0, 0), ("G", "M", 0, 0, 1), ("G", "M", 0, 1, 0), ("G", "M", 1, 1, 0),
    ("M", "G", 0, 0, 0), ("M", "G", 0, 0, 1), ("M", "G", 1, 1, 1),
    ("M", "M", 0, 0, 0), ("M", "M", 0, 0, 1), ("M", "M", 0, 1, 0), ("M", "M", 0, 1, 1),
    ("M", "M", 1, 1, 0),
)

TAGS = ("split", "schreier", "group-kernel", "group-quotient", "group-total")


def system_from_flags(x, b, r, f, g):
    return ActionSystem(BUILTIN[x], BUILTIN[b], RHO[r], PHI[f], GAMMA[g])


def flags(T):
    """(rho, phi, gamma) flags: 0 for the trivial component, 1 otherwise."""
    rho0 = all(T.rho[x][b] == x for x in T.X.elements for b in T.B.elements)
    phi0 = all(T.phi[b][x] == x for b in T.B.elements for x in T.X.elements)
    gamma0 = all(v == 0 for row in T.gamma for v in row)
    return (int(not rho0), int(not phi0), int(not gamma0))


def describe(T):
    r, f, g = flags(T)
    return f"({T.X.name or '?'},{T.B.name or '?'},ρ{r},φ{f},γ{g})"


def _check_size(*mons):
    for m in mons:
        if m.size > MAX_ENUM_SIZE:
            raise SizeTooLarge(f"carriers are capped at order {MAX_ENUM_SIZE}",
                               size=m.size, limit=MAX_ENUM_SIZE)


# -- canonical keys --------------------------------------------------------------

def _flat(m):
    return [v for row in m for v in row]


def canonical_key(T):
    """Bytes identifying T up to isomorphism of action systems.

    X and B are replaced by their canonical tables and the triple is
    transported along every pair of isomorphisms onto them; the least
    serialization wins.
    """
    cX, _ = canonical_form(T.X)
    cB, _ = canonical_form(T.B)
    nx, nb = T.X.size, T.B.size
    head = [nx, nb] + _flat(cX.table) + _flat(cB.table)
    best = None
    for s in find_isomorphisms(T.X, cX):
        for t in find_isomorphisms(T.B, cB):
            rho = [[0] * nb for _ in range(nx)]
            phi = [[0] * nx for _ in range(nb)]
            gamma = [[0] * nb for _ in range(nb)]
            for x in range(nx):
                for b in range(nb):
                    rho[s(x)][t(b)] = s(T.rho[x][b])
                    phi[t(b)][s(x)] = s(T.phi[b][x])
            for b in range(nb):
                for b2 in range(nb):
                    gamma[t(b)][t(b2)] = s(T.gamma[b][b2])
            key = bytes(head + _flat(rho) + _flat(phi) + _flat(gamma))
            if best is None or key < best:
                best = key
    return best


def _raw_key(T):
    return bytes(_flat(T.X.table) + _flat(T.B.table) + _flat(T.rho)
                 + _flat(T.phi) + _flat(T.gamma))


# -- enumeration -----------------------------------------------------------------

def enumerate_action_systems(X, B, backend=None):
    """Every action system over (X, B), ordered by canonical key."""
    _check_size(X, B)
    systems = [ActionSystem(X, B, r, f, g)
               for r, f, g in kernels.action_systems(X.table, B.table, backend=backend)]
    return sorted(systems, key=lambda T: (canonical_key(T), _raw_key(T)))


def candidate_systems(X, B):
    """All triples allowed by the pointedness axioms alone."""
    nx, nb = X.size, B.size
    free = 2 * (nx - 1) * (nb - 1) + (nb - 1) ** 2
    for vals in product(range(nx), repeat=free):
        it = iter(vals)
        rho = [[x if b == 0 else (0 if x == 0 else next(it)) for b in range(nb)]
               for x in range(nx)]
        phi = [[x if b == 0 else (0 if x == 0 else next(it)) for x in range(nx)]
               for b in range(nb)]
        gamma = [[0 if b == 0 or c == 0 else next(it) for c in range(nb)]
                 for b in range(nb)]
        yield ActionSystem(X, B, rho, phi, gamma)


def exhaustive_action_systems(X, B):
    """Generate-and-filter route: every pointed candidate that verifies."""
    _check_size(X, B)
    found = [T for T in candidate_systems(X, B) if verify_action_system(T).passed]
    return sorted(found, key=lambda T: (canonical_key(T), _raw_key(T)))


# -- census ------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusEntry:
    system: ActionSystem
    tags: frozenset
    realization_size: int
    canonical_key: bytes = field(repr=False)

    @property
    def label(self):
        return describe(self.system)


def make_entry(T):
    real = functor_Q(T)
    r, _, g = flags(T)
    tags = set()
    if g == 0:
        tags.add("split")
    if r == 0:
        tags.add("schreier")
    if T.X.is_group():
        tags.add("group-kernel")
    if T.B.is_group():
        tags.add("group-quotient")
    if real.monoid.is_group():
        tags.add("group-total")
    return CensusEntry(T, frozenset(tags), real.monoid.size, canonical_key(T))


def census(monoids, backend=None):
    """Entries for every ordered pair (X, B) drawn from ``monoids``."""
    out = []
    for X in monoids:
        for B in monoids:
            out.extend(make_entry(T) for T in enumerate_action_systems(X, B, backend))
    return out


def census_2x2(backend=None):
    """The fourteen systems over two-element X and B, grouped by (X, B) then flags."""
    out = []
    for X, B in ((G, G), (G, M), (M, G), (M, M)):
        systems = enumerate_action_systems(X, B, backend)
        out.extend(make_entry(T) for T in sorted(systems, key=flags))
    return out


# -- isomorphism ---------------------------------------------------------------------

def act_isomorphisms(S, T):
    """All (f, g) bijective homomorphism pairs that are morphisms S -> T."""
    out = []
    for f in find_isomorphisms(S.X, T.X):
        for g in find_isomorphisms(S.B, T.B):
            m = ActMorphism(f, g, S, T)
            if is_act_morphism(m).passed:
                out.append(m)
    return out


def _inverse(f):
    inv = [0] * len(f.values)
    for i, v in enumerate(f.values):
        inv[v] = i
    return Homomorphism(f.cod, f.dom, inv)


def act_isomorphic(S, T):
    for m in act_isomorphisms(S, T):
        back = ActMorphism(_inverse(m.f), _inverse(m.g), T, S)
        if is_act_morphism(back).passed:
            return True
    return False


def psb_isomorphic(S, T):
    """Is there a triple of bijective homomorphisms forming a morphism S -> T?"""
    if (S.X.size, S.A.size, S.B.size) != (T.X.size, T.A.size, T.B.size):
        return False
    for f1 in find_isomorphisms(S.X, T.X):
        for f3 in find_isomorphisms(S.B, T.B):
            for f2 in find_isomorphisms(S.A, T.A):
                if is_psb_morphism(PsbMorphism(f1, f2, f3, S, T)).passed:
                    back = PsbMorphism(_inverse(f1), _inverse(f2), _inverse(f3), T, S)
                    if is_psb_morphism(back).passed:
                        return True
    return False


@dataclass
class IsoClass:
    representative: CensusEntry
    members: list


def classify(entries, relation="act"):
    """Partition entries into isomorphism classes.

    ``relation="act"`` buckets by canonical key and confirms each membership
    with an explicit isomorphism of action systems; ``relation="psb"``
    compares the realized semibiproducts pairwise.  Classes are listed in
    order of first appearance; each representative is the canonically least
    member.
    """
    classes = []
    if relation == "act":
        buckets = {}
        for e in entries:
            buckets.setdefault(e.canonical_key, []).append(e)
        placed = {}
        for e in entries:
            if id(e) in placed:
                continue
            groups = []
            for cand in buckets[e.canonical_key]:
                for grp in groups:
                    if act_isomorphic(grp[0].system, cand.system):
                        grp.append(cand)
                        break
                else:
                    groups.append([cand])
            for grp in groups:
                for m in grp:
                    placed[id(m)] = grp
            classes.extend(groups)
    elif relation == "psb":
        sbps = [functor_Q(e.system).semibiproduct for e in entries]
        groups = []
        for i, e in enumerate(entries):
            for grp in groups:
                if psb_isomorphic(sbps[grp[0]], sbps[i]):
                    grp.append(i)
                    break
            else:
                groups.append([i])
        classes = [[entries[i] for i in grp] for grp in groups]
    else:
        raise ValueError(f"unknown relation {relation!r}")
    out = []
    for members in classes:
        rep = min(members, key=lambda e: (e.canonical_key, _raw_key(e.system)))
        out.append(IsoClass(rep, list(members)))
    return out


def classification_agreement(entries):
    """Both partitions and whether they coincide as sets of member ids."""
    act = classify(entries, "act")
    psb = classify(entries, "psb")

    def parts(cls):
        return sorted(sorted(id(m) for m in c.members) for c in cls)

    return act, psb, parts(act) == parts(psb)


# -- realizations ---------------------------------------------------------------------

def _known_names():
    named = dict(BUILTIN)
    named["MxM"] = product_monoid(M, M)
    named["MxG"] = product_monoid(M, G)
    out = {}
    for name, mon in named.items():
        out.setdefault(canonical_form(mon)[0].table, name)
    return out


@dataclass(frozen=True)
class RealizationRow:
    entry: CensusEntry
    monoid: object
    iso_index: int        # position in enumerate_monoids(size), -1 if unmatched
    iso_name: str


def realization_census(entries):
    names = _known_names()
    cache = {}
    rows = []
    for e in entries:
        R = functor_Q(e.system).monoid
        if R.size > MAX_ENUM_SIZE:
            rows.append(RealizationRow(e, R, -1, "unmatched"))
            continue
        if R.size not in cache:
            cache[R.size] = [m.table for m in enumerate_monoids(R.size)]
        canon = canonical_form(R)[0].table
        idx = cache[R.size].index(canon) if canon in cache[R.size] else -1
        name = names.get(canon, f"order{R.size}#{idx}" if idx >= 0 else "unmatched")
        rows.append(RealizationRow(e, R, idx, name))
    return rows

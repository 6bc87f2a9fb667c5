"""Pointed monoid action systems and the functors relating them to semibiproducts.

An action system over monoids X and B is a triple of maps

    rho:   X x B -> X      stored as rho[x][b]
    phi:   B x X -> X      stored as phi[b][x]
    gamma: B x B -> X      stored as gamma[b][b']

subject to the pointedness axioms act01-act03, the three absorption axioms
act04-act06 and the seven-variable associativity axiom act07.  ``functor_Q``
realizes a system as the monoid of pairs (x, b) with rho(x, b) = x under

    (x, b) + (x', b') = (rho(x + phi(b, x') + gamma(b, b'), b + b'), b + b')

and ``functor_P`` reads a system back off any pointed semibiproduct.
"""

from dataclasses import dataclass

from . import kernels
from .errors import (CarrierMismatch, DimensionMismatch, IndexOutOfRange,
                     InvalidActionSystem, InvalidSemibiproduct)
from .monoid import (Homomorphism, MonoidTable, PointedMap, hom_witness,
                     identity_map, make_monoid)
from .report import VerificationReport
from .semibiproduct import (PsbMorphism, Semibiproduct, is_psb_morphism,
                            verify_semibiproduct)


def _matrix(m, rows, cols, bound, what):
    m = tuple(tuple(int(v) for v in row) for row in m)
    if len(m) != rows or any(len(r) != cols for r in m):
        raise DimensionMismatch(f"{what} must be {rows}x{cols}", matrix=what)
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if not 0 <= v < bound:
                raise IndexOutOfRange(f"{what}[{i}][{j}] = {v} out of range",
                                      matrix=what, i=i, j=j, value=v)
    return m


@dataclass(frozen=True)
class ActionSystem:
    X: MonoidTable
    B: MonoidTable
    rho: tuple
    phi: tuple
    gamma: tuple

    def __post_init__(self):
        nx, nb = self.X.size, self.B.size
        object.__setattr__(self, "rho", _matrix(self.rho, nx, nb, nx, "rho"))
        object.__setattr__(self, "phi", _matrix(self.phi, nb, nx, nx, "phi"))
        object.__setattr__(self, "gamma", _matrix(self.gamma, nb, nb, nx, "gamma"))

    def components(self):
        return (self.X.table, self.B.table, self.rho, self.phi, self.gamma)


def trivial_system(X, B):
    """rho(x, b) = x, phi(b, x) = x, gamma = 0: the direct product."""
    return ActionSystem(X, B, [[x] * B.size for x in X.elements],
                        [list(X.elements) for _ in B.elements],
                        [[0] * B.size for _ in B.elements])


def verify_action_system(T, backend=None):
    """Check act01-act07; act07 reports the lexicographically first witness.

    The act07 witness is ordered as (x, x', x'', b, b', b'').
    """
    r = VerificationReport()
    X, B, rho, phi, gamma = T.X.table, T.B.table, T.rho, T.phi, T.gamma
    xs, bs = T.X.elements, T.B.elements
    for x in xs:
        if rho[x][0] != x:
            r.add("act01", x=x, b=0, got=rho[x][0])
    for b in bs:
        if rho[0][b] != 0:
            r.add("act01", x=0, b=b, got=rho[0][b])
    for x in xs:
        if phi[0][x] != x:
            r.add("act02", b=0, x=x, got=phi[0][x])
    for b in bs:
        if phi[b][0] != 0:
            r.add("act02", b=b, x=0, got=phi[b][0])
    for b in bs:
        if gamma[b][0] != 0:
            r.add("act03", b=b, b2=0, got=gamma[b][0])
        if gamma[0][b] != 0:
            r.add("act03", b=0, b2=b, got=gamma[0][b])
    for x in xs:
        for b in bs:
            v = rho[x][b]
            if rho[v][b] != v:
                r.add("act04", x=x, b=b)
    for b in bs:
        for x in xs:
            v = phi[b][x]
            if rho[v][b] != v:
                r.add("act05", b=b, x=x)
    for b in bs:
        for b2 in bs:
            v = gamma[b][b2]
            if rho[v][B[b][b2]] != v:
                r.add("act06", b=b, b2=b2)
    w = kernels.act07_witness(X, B, rho, phi, gamma, backend=backend)
    if w is not None:
        r.add("act07", **dict(zip(("x", "x1", "x2", "b", "b1", "b2"), w)))
    return r


def synthetic_sum(T, u, v):
    (x, b), (x2, b2) = u, v
    X, bb = T.X.table, T.B.table[b][b2]
    return (T.rho[X[X[x][T.phi[b][x2]]][T.gamma[b][b2]]][bb], bb)


@dataclass(frozen=True)
class SyntheticRealization:
    """The monoid R of pairs (x, b) with rho(x, b) = x, with its four maps."""

    base: ActionSystem
    carrier: tuple
    monoid: MonoidTable
    k_hat: Homomorphism
    p_hat: Homomorphism
    q_hat: PointedMap
    s_hat: PointedMap

    def index_of(self, x, b):
        return self.carrier.index((x, b))

    @property
    def semibiproduct(self):
        return Semibiproduct(self.base.X, self.monoid, self.base.B,
                             self.p_hat, self.k_hat, self.q_hat, self.s_hat)


def membership_carrier(T):
    """Pairs with (x, b) = (x, 0) + (0, b) under the synthetic sum on all of X x B."""
    return tuple((x, b) for x in T.X.elements for b in T.B.elements
                 if synthetic_sum(T, (x, 0), (0, b)) == (x, b))


def functor_Q(T):
    report = verify_action_system(T)
    if not report.passed:
        raise InvalidActionSystem("not a pointed monoid action system",
                                  violations=report.to_dict()["violations"])
    X, B = T.X, T.B
    carrier = tuple((x, b) for x in X.elements for b in B.elements if T.rho[x][b] == x)
    pos = {pair: i for i, pair in enumerate(carrier)}
    table = [[pos[synthetic_sum(T, u, v)] for v in carrier] for u in carrier]
    labels = [f"({X.label(x)},{B.label(b)})" for x, b in carrier]
    R = make_monoid(table, labels)
    k_hat = Homomorphism(X, R, tuple(pos[(x, 0)] for x in X.elements))
    p_hat = Homomorphism(R, B, tuple(b for _, b in carrier))
    q_hat = PointedMap(R, X, tuple(x for x, _ in carrier))
    s_hat = PointedMap(B, R, tuple(pos[(0, b)] for b in B.elements))
    return SyntheticRealization(T, carrier, R, k_hat, p_hat, q_hat, s_hat)


def functor_P(S):
    report = verify_semibiproduct(S)
    if not report.passed:
        raise InvalidSemibiproduct("not a pointed semibiproduct",
                                   violations=report.to_dict()["violations"])
    A = S.A.table
    k, q, s = S.k.values, S.q.values, S.s.values
    xs, bs = S.X.elements, S.B.elements
    rho = [[q[A[k[x]][s[b]]] for b in bs] for x in xs]
    phi = [[q[A[s[b]][k[x]]] for x in xs] for b in bs]
    gamma = [[q[A[s[b]][s[b2]]] for b2 in bs] for b in bs]
    return ActionSystem(S.X, S.B, rho, phi, gamma)


# -- morphisms ---------------------------------------------------------------------

@dataclass(frozen=True)
class ActMorphism:
    f: Homomorphism
    g: Homomorphism
    source: ActionSystem
    target: ActionSystem


def is_act_morphism(m):
    S, T = m.source, m.target
    if m.f.dom != S.X or m.f.cod != T.X or m.g.dom != S.B or m.g.cod != T.B:
        raise CarrierMismatch("(f, g) does not match the systems' carriers")
    r = VerificationReport()
    f, g = m.f, m.g
    for x in S.X.elements:
        for b in S.B.elements:
            if f(S.rho[x][b]) != T.rho[f(x)][g(b)]:
                r.add("act08", x=x, b=b)
    for b in S.B.elements:
        for x in S.X.elements:
            if f(S.phi[b][x]) != T.phi[g(b)][f(x)]:
                r.add("act09", b=b, x=x)
    for b in S.B.elements:
        for b2 in S.B.elements:
            if f(S.gamma[b][b2]) != T.gamma[g(b)][g(b2)]:
                r.add("act10", b=b, b2=b2)
    return r


def realization_map(f, g, source, target):
    """R(f, g)(x, b) = (f(x), g(b)) between two realizations."""
    values = tuple(target.index_of(f(x), g(b)) for x, b in source.carrier)
    return Homomorphism(source.monoid, target.monoid, values)


def act_to_psb_morphism(m, source=None, target=None):
    """Q on morphisms: (f, g) |-> (f, R(f, g), g)."""
    source = source or functor_Q(m.source)
    target = target or functor_Q(m.target)
    f2 = realization_map(m.f, m.g, source, target)
    return PsbMorphism(m.f, f2, m.g, source.semibiproduct, target.semibiproduct)


def psb_to_act_morphism(m):
    """P on morphisms: (f1, f2, f3) |-> (f1, f3)."""
    return ActMorphism(m.f1, m.f3, functor_P(m.source), functor_P(m.target))


# -- the unit of the equivalence -------------------------------------------------------

@dataclass(frozen=True)
class RoundtripWitness:
    """alpha: A -> R and beta: R -> A for R the realization of P(S)."""

    source: Semibiproduct
    realization: SyntheticRealization
    alpha: PointedMap
    beta: PointedMap


def roundtrip_witness(S):
    """alpha(a) = (q(a), p(a)) and beta(x, b) = k(x) + s(b)."""
    real = functor_Q(functor_P(S))
    pos = {pair: i for i, pair in enumerate(real.carrier)}
    try:
        alpha = PointedMap(S.A, real.monoid,
                           tuple(pos[(S.q(a), S.p(a))] for a in S.A.elements))
    except KeyError as exc:
        raise InvalidSemibiproduct("alpha leaves the realization carrier",
                                   pair=list(exc.args[0])) from None
    beta = PointedMap(real.monoid, S.A,
                      tuple(S.A.table[S.k(x)][S.s(b)] for x, b in real.carrier))
    return RoundtripWitness(S, real, alpha, beta)


def check_roundtrip(W):
    """Mutual inverses, homomorphisms, and compatibility with both diagrams."""
    r = VerificationReport()
    S, R = W.source, W.realization
    for name, f in (("alpha", W.alpha), ("beta", W.beta)):
        w = hom_witness(f)
        if w is not None:
            r.add(f"{name} homomorphism", i=w[0], j=w[1])
    for a in S.A.elements:
        if W.beta(W.alpha(a)) != a:
            r.add("beta.alpha=1", a=a)
    for i in R.monoid.elements:
        if W.alpha(W.beta(i)) != i:
            r.add("alpha.beta=1", element=i)
    if r.passed:
        one_x, one_b = identity_map(S.X), identity_map(S.B)
        there = PsbMorphism(one_x, Homomorphism(S.A, R.monoid, W.alpha.values), one_b,
                            S, R.semibiproduct)
        back = PsbMorphism(one_x, Homomorphism(R.monoid, S.A, W.beta.values), one_b,
                           R.semibiproduct, S)
        r.extend(is_psb_morphism(there), "alpha: ")
        r.extend(is_psb_morphism(back), "beta: ")
    return r


def naturality_report(m, W_source=None, W_target=None):
    """alpha' f2 = R(f1, f3) alpha for a semibiproduct morphism (f1, f2, f3)."""
    Ws = W_source or roundtrip_witness(m.source)
    Wt = W_target or roundtrip_witness(m.target)
    Rf = realization_map(m.f1, m.f3, Ws.realization, Wt.realization)
    r = VerificationReport()
    for a in m.source.A.elements:
        if Wt.alpha(m.f2(a)) != Rf(Ws.alpha(a)):
            r.add("naturality", a=a)
    return r

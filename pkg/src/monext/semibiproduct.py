"""Pointed semibiproducts of monoids and their morphisms.

A semibiproduct is a diagram ``X --k--> A --p--> B`` with homomorphisms
``k`` and ``p`` together with zero-preserving maps ``q: A -> X`` and
``s: B -> A`` such that

    ps = 1_B,   qk = 1_X,   kq + sp = 1_A     (the three splitting laws)
    pk = 0,     qs = 0                         (the pointedness laws)

where ``kq + sp`` is the pointwise sum a -> k(q(a)) + s(p(a)).
"""

from dataclasses import dataclass
from itertools import product as cartesian

from .errors import (CarrierMismatch, KernelMismatch, MiddleMismatch,
                     NotAGroup, PreimageNotFound, SectionNotSplitting)
from .monoid import (Homomorphism, PointedMap, as_homomorphism, compose_maps,
                     enumerate_homomorphisms, identity_map, is_homomorphism,
                     product_projections,
                     pullback, zero_map)
from .report import VerificationReport

SPLITTING_LAWS = ("ps=1", "qk=1", "kq+sp=1")
POINTED_LAWS = ("pk=0", "qs=0")


def _expect(f, dom, cod, what):
    if f.dom != dom or f.cod != cod:
        raise CarrierMismatch(f"{what} has the wrong domain or codomain", map=what)


@dataclass(frozen=True)
class Semibiproduct:
    X: object
    A: object
    B: object
    p: Homomorphism
    k: Homomorphism
    q: PointedMap
    s: PointedMap

    def __post_init__(self):
        _expect(self.p, self.A, self.B, "p")
        _expect(self.k, self.X, self.A, "k")
        _expect(self.q, self.A, self.X, "q")
        _expect(self.s, self.B, self.A, "s")
        object.__setattr__(self, "p", as_homomorphism(self.p))
        object.__setattr__(self, "k", as_homomorphism(self.k))

    def is_split(self):
        """True when the section s is itself a homomorphism."""
        return is_homomorphism(self.s)


def make_semibiproduct(X, A, B, p, k, q, s):
    """Build a tuple from raw value arrays."""
    return Semibiproduct(X, A, B, Homomorphism(A, B, p), Homomorphism(X, A, k),
                         PointedMap(A, X, q), PointedMap(B, A, s))


def verify_semibiproduct(S, pointed=True):
    """Check every law; ``pointed=False`` checks only the splitting laws."""
    r = VerificationReport()
    X, A = S.X, S.A
    p, k, q, s = S.p.values, S.k.values, S.q.values, S.s.values
    for b in S.B.elements:
        if p[s[b]] != b:
            r.add("ps=1", b=b, got=p[s[b]])
    for x in X.elements:
        if q[k[x]] != x:
            r.add("qk=1", x=x, got=q[k[x]])
    for a in A.elements:
        v = A.table[k[q[a]]][s[p[a]]]
        if v != a:
            r.add("kq+sp=1", a=a, got=v)
    if pointed:
        for x in X.elements:
            if p[k[x]] != 0:
                r.add("pk=0", x=x, got=p[k[x]])
        for b in S.B.elements:
            if q[s[b]] != 0:
                r.add("qs=0", b=b, got=q[s[b]])
    return r


def check_exactness(S):
    """k injective, p surjective and image(k) equal to the kernel set of p."""
    r = VerificationReport()
    seen = {}
    for x in S.X.elements:
        a = S.k(x)
        if a in seen:
            r.add("k injective", x=seen[a], x2=x, a=a)
        seen.setdefault(a, x)
    hit = set(S.p.values)
    for b in S.B.elements:
        if b not in hit:
            r.add("p surjective", b=b)
    image = set(S.k.values)
    kernel = {a for a in S.A.elements if S.p(a) == 0}
    for a in sorted(image ^ kernel):
        r.add("image(k)=ker(p)", a=a, in_image=a in image, in_kernel=a in kernel)
    return r


def sum_decomposition(S, a, a2):
    """The right-hand side k(q(a)+q(sp(a)+kq(a'))+q(sp(a)+sp(a'))) + s(p(a)+p(a'))."""
    A, X, B = S.A.table, S.X.table, S.B.table
    k, q, p, s = S.k.values, S.q.values, S.p.values, S.s.values
    spa, spa2 = s[p[a]], s[p[a2]]
    x = X[X[q[a]][q[A[spa][k[q[a2]]]]]][q[A[spa][spa2]]]
    return A[k[x]][s[B[p[a]][p[a2]]]]


def sum_decomposition_check(S, a, a2):
    return S.A.table[a][a2] == sum_decomposition(S, a, a2)


def sum_decomposition_report(S):
    r = VerificationReport()
    for a in S.A.elements:
        for a2 in S.A.elements:
            v = sum_decomposition(S, a, a2)
            if v != S.A.table[a][a2]:
                r.add("a+a'", a=a, a2=a2, expected=S.A.table[a][a2], got=v)
    return r


# -- standard constructions ------------------------------------------------------

def direct_product_semibiproduct(X, B):
    """X -> X x B -> B with the product injections and projections."""
    P, pi_x, pi_b = product_projections(X, B)
    n = B.size
    k = Homomorphism(X, P, tuple(x * n for x in X.elements))
    s = Homomorphism(B, P, tuple(B.elements))
    return Semibiproduct(X, P, B, pi_b, k, pi_x, s)


def idempotent_tuple(A):
    """(A, A, A, 1, 1, 1, 1); a semibiproduct exactly when A is idempotent."""
    one = identity_map(A)
    return Semibiproduct(A, A, A, one, one, one, one)


def from_group_extension(k, p, s):
    """Complete a group extension with a pointed section to a semibiproduct.

    The retraction is q(a) = the unique x with k(x) = a - s(p(a)).
    """
    X, A, B = k.dom, k.cod, p.cod
    if p.dom != A or s.dom != B or s.cod != A:
        raise CarrierMismatch("k, p and s do not form an extension diagram")
    for name, G in (("X", X), ("A", A), ("B", B)):
        if not G.is_group():
            raise NotAGroup(f"{name} is not a group", carrier=name)
    for b in B.elements:
        if p(s(b)) != b:
            raise SectionNotSplitting(f"p(s({b})) != {b}", b=b)
    if not k.is_injective():
        raise KernelMismatch("k is not injective")
    kernel = sorted(a for a in A.elements if p(a) == 0)
    if k.image() != kernel:
        raise KernelMismatch("image(k) differs from the kernel of p",
                             image=k.image(), kernel=kernel)
    pre = {k(x): x for x in X.elements}
    q = []
    for a in A.elements:
        target = A.table[a][A.inverse(s(p(a)))]
        if target not in pre:
            raise PreimageNotFound(f"{target} is not in the image of k", a=a)
        q.append(pre[target])
    return Semibiproduct(X, A, B, p, k, PointedMap(A, X, q), s)


def semibiproduct_search(X, A, B):
    """Every (p, k, q, s) over (X, A, B) satisfying the three splitting laws.

    Homomorphisms p, k are enumerated outright; s ranges over sections of p
    and q is built element by element from the values allowed by qk = 1 and
    kq + sp = 1 at that element, which prunes nothing that could satisfy the
    laws.  Pointedness is not imposed.
    """
    ks = [k for k in enumerate_homomorphisms(X, A) if k.is_injective()]
    for p in enumerate_homomorphisms(A, B):
        fibres = [[a for a in A.elements if p(a) == b] for b in B.elements]
        if any(not f for f in fibres):
            continue
        sec_choices = [[0]] + fibres[1:]
        for k in ks:
            pre = {k(x): x for x in X.elements}
            for svals in cartesian(*sec_choices):
                options = []
                for a in A.elements:
                    spa = svals[p(a)]
                    opts = [x for x in X.elements if A.table[k(x)][spa] == a]
                    if a == 0:
                        opts = [0] if 0 in opts else []
                    if a in pre:
                        opts = [x for x in opts if x == pre[a]]
                    if not opts:
                        break
                    options.append(opts)
                else:
                    for qvals in cartesian(*options):
                        yield Semibiproduct(X, A, B, p, k, PointedMap(A, X, qvals),
                                            PointedMap(B, A, svals))


# -- pullback and composition ------------------------------------------------------

@dataclass(frozen=True)
class PsbMorphism:
    f1: Homomorphism
    f2: Homomorphism
    f3: Homomorphism
    source: Semibiproduct
    target: Semibiproduct


def pullback_square(S, h):
    """Pull S back along h: C -> B; also returns the morphism (1_X, pi1, h) to S."""
    if h.cod != S.B:
        raise CarrierMismatch("h must land in the quotient B", map="h")
    pb = pullback(S.p, h)
    R, C = pb.monoid, h.dom
    k = Homomorphism(S.X, R, tuple(pb.index_of(S.k(x), 0) for x in S.X.elements))
    q = compose_maps(S.q, pb.pi1)
    s = PointedMap(C, R, tuple(pb.index_of(S.s(h(c)), c) for c in C.elements))
    T = Semibiproduct(S.X, R, C, pb.pi2, k, q, s)
    return T, PsbMorphism(identity_map(S.X), pb.pi1, as_homomorphism(h), T, S)


def pullback_semibiproduct(S, h):
    return pullback_square(S, h)[0]


@dataclass(frozen=True)
class CompositionObstruction:
    """A witness b with s(b) != s k'q'(b) + s s'p'(b)."""

    b: int
    s_value: int
    rebuilt_value: int

    def to_dict(self):
        return {"composable": False, "b": self.b, "s(b)": self.s_value,
                "sk'q'(b)+ss'p'(b)": self.rebuilt_value}


def composition_obstruction(S, T):
    A, s = S.A, S.s
    for b in S.B.elements:
        v = A.table[s(T.k(T.q(b)))][s(T.s(T.p(b)))]
        if v != s(b):
            return CompositionObstruction(b, s(b), v)
    return None


def compose_semibiproducts(S, T):
    """Compose (X, A, B, ...) with (C, B, D, ...) into (A x_B C, A, D, ...).

    Returns the composite semibiproduct, or a :class:`CompositionObstruction`
    when s differs from sk'q' + ss'p'.
    """
    if T.A != S.B:
        raise MiddleMismatch("the middle monoid of T must be the quotient of S")
    obstruction = composition_obstruction(S, T)
    if obstruction is not None:
        return obstruction
    pb = pullback(S.p, T.k)
    A = S.A
    qq = []
    for a in A.elements:
        c = T.q(S.p(a))
        first = A.table[S.k(S.q(a))][S.s(T.k(c))]
        qq.append(pb.index_of(first, c))
    return Semibiproduct(pb.monoid, A, T.B, compose_maps(T.p, S.p), pb.pi1,
                         PointedMap(A, pb.monoid, qq), compose_maps(S.s, T.s))


# -- morphisms ---------------------------------------------------------------------

def identity_psb_morphism(S):
    return PsbMorphism(identity_map(S.X), identity_map(S.A), identity_map(S.B), S, S)


def compose_psb_morphisms(m2, m1):
    """m2 after m1."""
    return PsbMorphism(compose_maps(m2.f1, m1.f1), compose_maps(m2.f2, m1.f2),
                       compose_maps(m2.f3, m1.f3), m1.source, m2.target)


def is_psb_morphism(m):
    S, T = m.source, m.target
    _expect(m.f1, S.X, T.X, "f1")
    _expect(m.f2, S.A, T.A, "f2")
    _expect(m.f3, S.B, T.B, "f3")
    r = VerificationReport()
    f1, f2, f3 = m.f1, m.f2, m.f3
    for x in S.X.elements:
        if f2(S.k(x)) != T.k(f1(x)):
            r.add("f2k=k'f1", x=x)
    for a in S.A.elements:
        if T.p(f2(a)) != f3(S.p(a)):
            r.add("p'f2=f3p", a=a)
        if T.q(f2(a)) != f1(S.q(a)):
            r.add("q'f2=f1q", a=a)
    for b in S.B.elements:
        if f2(S.s(b)) != T.s(f3(b)):
            r.add("f2s=s'f3", b=b)
    return r


def zero_psb_triple(S, T):
    """The triple of zero maps S -> T; rarely a morphism, useful as a probe."""
    return PsbMorphism(zero_map(S.X, T.X), zero_map(S.A, T.A), zero_map(S.B, T.B), S, T)

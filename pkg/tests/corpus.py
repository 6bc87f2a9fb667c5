"""Every semibiproduct the suite builds, grouped by how it was constructed."""

from functools import lru_cache

from monext.action import functor_Q
from monext.enumeration import census_2x2
from monext.monoid import Homomorphism, PointedMap, enumerate_homomorphisms
from monext.registry import G, M, T, Z3, Z4, K4
from monext.semibiproduct import (compose_semibiproducts, direct_product_semibiproduct,
                                  from_group_extension, idempotent_tuple,
                                  pullback_semibiproduct)

PULLBACK_SOURCES = (T, M, G, Z3)


@lru_cache(maxsize=None)
def realizations():
    return tuple(functor_Q(e.system) for e in census_2x2())


def census_semibiproducts():
    return [r.semibiproduct for r in realizations()]


def z4_extension():
    k = Homomorphism(G, Z4, [0, 2])
    p = Homomorphism(Z4, G, [0, 1, 0, 1])
    return from_group_extension(k, p, PointedMap(G, Z4, [0, 1]))


def direct_products():
    mons = (T, M, G, Z3)
    return [direct_product_semibiproduct(X, B) for X in mons for B in mons]


@lru_cache(maxsize=None)
def pullbacks():
    """Each census realization pulled back along every hom C -> B, C in {T, M, G, Z3}."""
    out = []
    for S in census_semibiproducts():
        for C in PULLBACK_SOURCES:
            for h in enumerate_homomorphisms(C, S.B):
                out.append((S, h, pullback_semibiproduct(S, h)))
    return tuple(out)


@lru_cache(maxsize=None)
def composable_pairs():
    """Pairs (S, T) of split semibiproducts with S.B = T.A and T a split census realization.

    Census realizations never compose with each other directly (their
    quotients have order 2 while their middles have order 3 or 4), so S is
    drawn from split semibiproducts whose quotient is T's middle: direct
    products X x T.A and pullbacks of split census realizations along
    homomorphisms T.A -> B.
    """
    census = census_semibiproducts()
    split = [S for S in census if S.is_split()]
    pairs = []
    for Tn in split:
        lefts = [direct_product_semibiproduct(X, Tn.A) for X in (M, G)]
        for S0 in split:
            for h in enumerate_homomorphisms(Tn.A, S0.B):
                lefts.append(pullback_semibiproduct(S0, h))
        pairs.extend((S, Tn) for S in lefts)
    return tuple(pairs)


@lru_cache(maxsize=None)
def composites():
    return tuple(compose_semibiproducts(S, Tn) for S, Tn in composable_pairs())


def misc():
    return [idempotent_tuple(T), z4_extension(),
            direct_product_semibiproduct(G, K4)]


@lru_cache(maxsize=None)
def all_semibiproducts():
    return tuple(census_semibiproducts() + [r[2] for r in pullbacks()]
                 + list(composites()) + direct_products() + misc())

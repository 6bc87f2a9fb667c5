from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monext import errors
from monext.monoid import (Homomorphism, PointedMap, SubmonoidCarrier, add_maps,
                           canonical_form, compose_maps, enumerate_homomorphisms,
                           enumerate_monoids, find_isomorphisms, identity_map,
                           is_homomorphism, make_monoid, pointed_maps,
                           product_monoid, product_projections, pullback,
                           relabel, trivial_monoid, zero_map)
from monext.registry import BUILTIN, G, K4, M, Z3, Z4

from .oracles import all_unital_monoid_tables, assoc_failures, count_up_to_iso, isomorphisms

SMALL = enumerate_monoids(1) + enumerate_monoids(2) + enumerate_monoids(3)


# -- make_monoid ---------------------------------------------------------------

@pytest.mark.parametrize("table", [[[0, 1], [1, 1]], [[0, 1], [1, 0]],
                                   [[0, 1, 2], [1, 2, 0], [2, 0, 1]]])
def test_valid_tables(table):
    m = make_monoid(table)
    assert m.size == len(table)
    assert not assoc_failures([list(r) for r in m.table])


def test_nonassociative_witness():
    t = [[0, 1, 2], [1, 2, 0], [2, 1, 1]]
    with pytest.raises(errors.NotAssociative) as exc:
        make_monoid(t)
    d = exc.value.details
    i, j, k = d["i"], d["j"], d["k"]
    assert (i, j, k) == (1, 1, 1)
    assert t[t[i][j]][k] != t[i][t[j][k]]
    assert (i, j, k) == assoc_failures(t)[0]


def test_not_identity():
    with pytest.raises(errors.NotIdentity):
        make_monoid([[1, 0], [0, 1]])
    with pytest.raises(errors.NotIdentity):
        make_monoid([[0, 1], [0, 1]])


@pytest.mark.parametrize("table", [[[0, 2], [2, 0]], [[0, -1], [1, 0]], [[0, 1.0], [1, 0]],
                                   [[0, True], [1, 0]]])
def test_index_out_of_range(table):
    with pytest.raises(errors.IndexOutOfRange):
        make_monoid(table)


@pytest.mark.parametrize("table", [[], [[0, 1]], [[0, 1], [1]]])
def test_dimension_mismatch(table):
    with pytest.raises(errors.DimensionMismatch):
        make_monoid(table)


def test_labels_and_properties():
    m = make_monoid([[0, 1], [1, 1]], labels=["1", "2"])
    assert m.label(1) == "2"
    assert m.is_idempotent() and m.is_commutative() and not m.is_group()
    assert G.is_group() and G.inverse(1) == 1 and M.inverse(1) is None
    with pytest.raises(errors.DimensionMismatch):
        make_monoid([[0, 1], [1, 1]], labels=["a"])
    assert M.add(1, 0, 1) == 1 and G.add(1, 1, 1) == 1
    assert trivial_monoid().size == 1


def test_error_documents():
    with pytest.raises(errors.NotAssociative) as exc:
        make_monoid([[0, 1, 2], [1, 2, 0], [2, 1, 1]])
    doc = exc.value.to_dict()
    assert doc["error"] == "NotAssociative"
    assert set(doc["details"]) >= {"i", "j", "k"}


# -- maps ------------------------------------------------------------------------

def test_homomorphism_examples():
    assert is_homomorphism(identity_map(M))
    assert not is_homomorphism(PointedMap(G, M, [0, 1]))
    assert is_homomorphism(PointedMap(M, G, [0, 0]))
    with pytest.raises(errors.NotAHomomorphism):
        Homomorphism(G, M, [0, 1])


def test_pointed_map_validation():
    with pytest.raises(errors.NotPointed):
        PointedMap(G, G, [1, 0])
    with pytest.raises(errors.DimensionMismatch):
        PointedMap(G, G, [0])
    with pytest.raises(errors.IndexOutOfRange):
        PointedMap(G, G, [0, 2])


def test_map_equality_ignores_class():
    assert PointedMap(G, G, [0, 1]) == identity_map(G)
    assert hash(PointedMap(G, G, [0, 1])) == hash(identity_map(G))
    assert PointedMap(G, G, [0, 0]) != PointedMap(G, M, [0, 0])


def test_compose_and_add():
    f = PointedMap(Z3, Z3, [0, 2, 1])
    assert add_maps(zero_map(Z3, Z3), f) == f
    assert add_maps(f, zero_map(Z3, Z3)) == f
    assert compose_maps(identity_map(Z3), f) == f
    assert isinstance(compose_maps(identity_map(Z3), identity_map(Z3)), Homomorphism)
    assert not isinstance(compose_maps(identity_map(Z3), f), Homomorphism)
    with pytest.raises(errors.DomainMismatch):
        compose_maps(f, PointedMap(G, M, [0, 1]))
    with pytest.raises(errors.DomainMismatch):
        add_maps(f, identity_map(G))


@pytest.mark.parametrize("dom,cod", [(M, Z3), (G, M), (Z3, G), (M, M)])
def test_add_maps_associative(dom, cod):
    maps = list(pointed_maps(dom, cod))
    for f, g, h in product(maps, repeat=3):
        assert add_maps(add_maps(f, g), h) == add_maps(f, add_maps(g, h))


def test_pointed_maps_count():
    assert len(list(pointed_maps(Z3, M))) == 4


def test_enumerate_homomorphisms_brute_force():
    for dom in SMALL:
        for cod in SMALL:
            expected = [f for f in pointed_maps(dom, cod) if is_homomorphism(f)]
            assert enumerate_homomorphisms(dom, cod) == sorted(expected, key=lambda f: f.values)


# -- products and pullbacks --------------------------------------------------------

def test_product_examples():
    P = product_monoid(M, G)
    assert P.size == 4
    members = [0 * G.size + b for b in G.elements]
    sub = SubmonoidCarrier(P, members).monoid()
    assert sub.table == G.table
    assert len(find_isomorphisms(product_monoid(G, G), K4)) == 6
    assert isomorphisms([list(r) for r in product_monoid(G, G).table],
                        [list(r) for r in K4.table])
    assert not find_isomorphisms(product_monoid(G, G), Z4)


def test_product_projections_are_homs():
    P, p1, p2 = product_projections(Z3, M)
    assert P.size == 6 and p1.is_surjective() and p2.is_surjective()


def test_submonoid_validation():
    with pytest.raises(errors.NotIdentity):
        SubmonoidCarrier(Z3, [1])
    with pytest.raises(errors.NotAssociative):
        SubmonoidCarrier(Z3, [0, 1])


def test_pullback_examples():
    pb = pullback(identity_map(Z3), identity_map(Z3))
    assert pb.pi1.is_injective() and pb.pi1.is_surjective()
    pb = pullback(identity_map(G), zero_map(G, G))
    # p(a) = h(c) = 0 forces a = 0 while c is free
    assert pb.pairs == ((0, 0), (0, 1))
    assert find_isomorphisms(pb.monoid, G)
    pb = pullback(zero_map(G, G), identity_map(G))
    assert pb.pairs == ((0, 0), (1, 0))
    P, _, pi_g = product_projections(M, G)
    pb = pullback(pi_g, identity_map(G))
    assert pb.monoid.size == 4
    assert list(pb.pairs) == [(0, 0), (1, 1), (2, 0), (3, 1)]
    with pytest.raises(errors.CodomainMismatch):
        pullback(identity_map(G), identity_map(M))


def test_pullback_maximal():
    for A in SMALL:
        for C in SMALL:
            for B in enumerate_monoids(2):
                for p in enumerate_homomorphisms(A, B):
                    for h in enumerate_homomorphisms(C, B):
                        pb = pullback(p, h)
                        expect = {(a, c) for a in A.elements for c in C.elements if p(a) == h(c)}
                        assert set(pb.pairs) == expect


# -- isomorphisms and enumeration ----------------------------------------------------

def test_find_isomorphisms_examples():
    assert find_isomorphisms(M, G) == []
    assert find_isomorphisms(G, G) == [identity_map(G)]
    assert find_isomorphisms(M, M) == [identity_map(M)]
    assert find_isomorphisms(M, Z3) == []
    assert [f.values for f in find_isomorphisms(Z3, Z3)] == [(0, 1, 2), (0, 2, 1)]


def test_find_isomorphisms_matches_oracle_and_is_symmetric():
    mons = [m for n in (2, 3) for m in enumerate_monoids(n)] + [relabel(m, (0, 2, 1)) for m in enumerate_monoids(3)]
    for a in mons:
        for b in mons:
            got = [f.values for f in find_isomorphisms(a, b)]
            assert got == isomorphisms([list(r) for r in a.table], [list(r) for r in b.table])
            assert bool(got) == bool(find_isomorphisms(b, a))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7)])
def test_enumerate_monoids_counts(n, count):
    found = enumerate_monoids(n)
    assert len(found) == count
    assert count_up_to_iso(list(all_unital_monoid_tables(n))) == count
    for a in found:
        assert not assoc_failures([list(r) for r in a.table])
    for i, a in enumerate(found):
        for b in found[i + 1:]:
            assert not find_isomorphisms(a, b)


def test_enumerate_order_two_is_m_and_g():
    assert {m.table for m in enumerate_monoids(2)} == {M.table, G.table}


@pytest.mark.slow
def test_enumerate_monoids_order_four():
    found = enumerate_monoids(4)
    assert len(found) == 35
    for i, a in enumerate(found):
        for b in found[i + 1:]:
            assert not find_isomorphisms(a, b)


def test_enumerate_monoids_guards():
    with pytest.raises(errors.SizeTooLarge):
        enumerate_monoids(5)
    with pytest.raises(ValueError):
        enumerate_monoids(0)


def test_enumeration_is_deterministic():
    assert enumerate_monoids(3) == enumerate_monoids(3)
    tables = [m.table for m in enumerate_monoids(3)]
    assert tables == sorted(tables)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(enumerate_monoids(3)), st.permutations([1, 2]))
def test_canonical_form_invariant_under_relabeling(m, rest):
    perm = (0,) + tuple(rest)
    assert canonical_form(relabel(m, perm))[0] == canonical_form(m)[0]
    assert find_isomorphisms(m, relabel(m, perm))


def test_builtins_are_valid():
    for name, m in BUILTIN.items():
        assert make_monoid(m.table) == m
        assert m.name == name

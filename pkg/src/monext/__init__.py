"""Finite-monoid engine for pointed semibiproducts and pointed monoid action systems."""

from .action import (ActionSystem, ActMorphism, RoundtripWitness, SyntheticRealization,
                     act_to_psb_morphism, check_roundtrip, functor_P, functor_Q,
                     is_act_morphism, naturality_report, psb_to_act_morphism,
                     roundtrip_witness, verify_action_system)
from .enumeration import (CensusEntry, IsoClass, census, census_2x2, classify,
                          enumerate_action_systems, realization_census)
from .kernels import BACKEND
from .monoid import (Homomorphism, MonoidTable, PointedMap, SubmonoidCarrier,
                     add_maps, compose_maps, enumerate_homomorphisms,
                     enumerate_monoids, find_isomorphisms, is_homomorphism,
                     make_monoid, product_monoid, pullback)
from .registry import G, K4, M, T, Z3, Z4
from .report import VerificationReport
from .semibiproduct import (CompositionObstruction, PsbMorphism, Semibiproduct,
                            check_exactness, compose_semibiproducts,
                            from_group_extension, is_psb_morphism,
                            pullback_semibiproduct, sum_decomposition_check,
                            verify_semibiproduct)

__version__ = "0.1.0"

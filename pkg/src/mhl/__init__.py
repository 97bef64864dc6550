"""Matroid-intersection workbench over finite independence oracles."""

from .core import (ElementSet, GroundSet, MatroidOracle, MatroidSpec,
                   build_matroid, check_same_ground, direct_sum,
                   direct_sum_spec, graphic, linear_gf2, minor_spec,
                   partition, spec_ground_size, uniform)
from .errors import (CapacityError, InputError, MhlError, NoCircuitError,
                     PreconditionError, PropertyViolation, ValidationError)
from .exchange import (AugmentingPath, ExchangeDigraph, apply_augmentation,
                       build_exchange_digraph, digraph_to_dot,
                       enumerate_augmenting_paths, find_augmenting_path,
                       reachable_from, validate_augmenting_path)
from .instances import (FAMILIES, InstanceFile, SplitMix64, bipartite_pair,
                        build_pair, generate_instance, instance_to_json,
                        parse_instance)
from .solver import (Blocked, HallCertificate, IntersectionRun, Matchable,
                     check_hall, is_finitely_matchable, is_matchable,
                     max_common_independent, min_max_certificate,
                     solve_intersection)
from .structure import (ClassFingerprint, ClassPoset, LabContext,
                        SwitchingCycle, WitnessStructures,
                        apply_switching_cycle, augmentation_closure,
                        build_class_poset, compute_witnesses,
                        enumerate_common_independents, find_switching_cycles,
                        fingerprint, is_negligible, is_stable,
                        maximal_negligible, merge_stable, preorder_leq,
                        switching_component)
from .verify import run_verify

__version__ = "0.1.0"

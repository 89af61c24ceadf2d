"""Finite-universe engine for subset-relation approximation spaces.

Computes partition-based, successor-based and relation-pair lower/upper
approximations, classifies subset relations by the min condition and
complement closure, builds and verifies the induced clopen topologies,
and classifies those topologies up to homeomorphism by degree signature
with integer-partition counting.
"""

from .errors import (CapacityError, ContractViolationError, DocumentError,
                     DomainError, InternalConsistencyError, SApproxError,
                     TheoremHypothesisError, UniverseMismatchError)
from .sets import Mask, Universe
from .relation import (AtomFamily, AtomMap, AtomShape, Inclusion, SetFunction,
                       SRelation, TruthTable, UnionCover, atoms,
                       check_atom_structure, count_smc_relations,
                       enumerate_smc_relations, is_complement_closed,
                       is_minimizing, is_s_min, is_smc, left_slice)
from .approx import (BinaryRelation, EquivalenceRelation, PropertyReport,
                     SApproximationSpace, pawlak_lower,
                     pawlak_property_report, pawlak_upper, s_lower, s_upper,
                     verify_sm_properties, yao_lower, yao_property_report,
                     yao_upper)
from .topology import (DegreeProfile, FiniteTopology, build_topology,
                       degree_profile, is_clopen_topology,
                       minimal_open_containing, verify_topology_axioms)
from .classify import (Bijection, CensusReport, IntegerPartition,
                       canonical_space, census, enumerate_partitions,
                       homeo_bruteforce, homeo_by_profile, partition_count,
                       space_from_assignment)
from .document import format_space, format_subset, parse_space

__version__ = "0.1.0"

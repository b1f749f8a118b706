"""Concrete modules over sl_{n+1} and W, and the checks run on them."""
from uslab.lab.functors import (
    G1_act, G1Module, G_act, GModule, PreconditionViolation, WeightWindow, check_no_int1,
    check_no_int2, freeness_rank, injectivity_scan, local_nilpotency_check, root_vectors,
    sample_generic_mu, weighting_evaluate,
)
from uslab.lab.fuzz import ModuleAxiomFailure, module_axiom_check
from uslab.lab.gln import (
    GlnModuleData, GlnRelationError, gln_highest_weight, scalar_gln_module, sl_weight_of,
    sym_gln_module, tensor_gln, wedge_gln_module,
)
from uslab.lab.modules import Module, OmegaOneC, TModule, omega1c_act, omega_act, pi_map, psi_act
from uslab.lab.principal import (
    a_structure_defects, chain_defects, equivariance_defects, hom_dimension, is_simple,
    principal_block, principal_simple,
)
from uslab.lab.weights import (
    NotAnEigenvector, NotSumZeroError, WeightVector, casimir_scalar, casimir_value,
    classify_weight, dot_action, gamma, rho,
)
from uslab.lab.weyl import WeylElement, euler_commutation_defects, phi, phi_bracket_defects
from uslab.lab.whittaker import (
    InvalidTruncation, NoTwistExists, TwistStep, composed_twist, extract_w_action,
    twist_to_standard, twisted_character, weight_space, whittaker_subspace,
)
from uslab.lab.wmodule import (
    RelationCheckError, SchemaError, WModuleData, load_w_module, one_dim_w_module,
    restrict_w_module, save_w_module, trivial_w_module, w_action_on_wedge,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact invariants of the classical Lie superalgebras.

Constructs, in exact Gaussian-rational arithmetic, the central elements of
U(g) that arise from the centralizer algebras acting on tensor powers of
the natural module, for g one of gl(m|n), osp(m|2n), q(n), p(n); verifies
centrality, Harish-Chandra images, the defining relations of the
centralizer algebras, and the diagram combinatorics that forces the center
of U(p(n)) to be trivial.
"""

from .algebras import Algebra, LieElement, bracket, build_algebra, phi_k, pi_tilde, rho
from .enveloping import (
    CartanPolynomial,
    PBWElement,
    eta_prime,
    harish_chandra_image,
    is_central,
    is_J_poly,
    is_Q_poly,
    is_supersymmetric,
    pbw_normalize,
    psi_map,
    rho_shift,
    u_multiply,
    zeta_project,
)
from .scalars import Rational, Scalar
from .signs import Permutation, gamma_sign, p_sign, symmetric_group
from .spaces import SuperSpace
from .tensoralg import (
    SymElement,
    TensorAlgebraElement,
    adjoint_act,
    eta,
    is_invariant,
    omega_k,
    project_tensor,
)
from .tensors import (
    Tensor,
    VectorTensor,
    apply,
    compose,
    partial_supertrace,
    permute_word,
    supertrace,
    supertranspose,
)
from .schurweyl import (
    UValuedTensor,
    check_duality_relations,
    clifford_operator,
    contraction_operator,
    c_power,
    generator_matrix,
    invariant_tensor,
    molev_element,
    omega_iso,
    perm_operator,
    sergeev_Z,
    sergeev_elements,
    str_gelfand,
    tensor_is_invariant,
    theta_brauer,
    theta_glq,
    z_sigma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

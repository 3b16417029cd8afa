"""Grassmannian realizations of the classical matrix groups.

Ten families of real, complex, and quaternionic matrix groups are
represented as subspaces of a doubled vector space: each group element
g becomes its graph span[I; g], the group law becomes a composition of
subspace configurations, and the Cartan-type involutions become
orthogonal complements with respect to auxiliary ambient forms.  The
package verifies the structural claims of this picture numerically:
group laws, involutions, isometries, Cayley transforms, Cartan
dimension counts, and boundary strata.
"""

__version__ = "0.1.0"

from .config import Tolerances
from .errors import (AmbientMismatch, BadSignature, BoundaryPoint,
                     GrasslieError, InvalidConfig, InvalidGroupCode, NoForm,
                     NoIsotropicVectors, NotGroupElement, NotHermitian,
                     NotInMXY, NotOrthonormal, NotPositiveDefinite,
                     RankDeficient, ShapeMismatch, Singular, SingularShift,
                     WrongField, ZeroDivisor)
from .scalar import COMPLEX, QUATERNION, REAL, Quaternion
from .matgeom import (FMatrix, frob_dist, inverse, matrix_exp,
                      orthocomplement, orthonormalize, principal_angles,
                      random_fmatrix)
from .groups import (GroupSpec, form_matrix, gl, identity_element,
                     is_algebra_element, is_group_element, o_c, o_pq, o_star,
                     parse_group_code, random_element, sp_c, sp_pq, sp_r,
                     standard_specs, u_pq)
from .grassmann import (IsotropicPoint, Subspace, boundary_sample,
                        diagonal_subspace, graph_embed, graph_extract,
                        graph_subspace, intersection_dim, is_isotropic,
                        random_subspace, v1_subspace, v2_subspace)
from .groupstruct import (GraphFrame, group_compose, group_identity,
                          group_invert, standard_frame)
from .involutions import (AmbientForm, cayley_grass, cayley_matrix, eta_bar,
                          form_complement, is_spacelike, is_w_isotropic,
                          rho_bar, sigma_bar)
from .metric import distance, isometry_defect
from .symspace import (cartan_split, eta_fixed_component_sample,
                       other_component_sample, table2_audit)
from .harness import (CampaignConfig, VerificationReport, emit_strata,
                      emit_table2, run_campaign)

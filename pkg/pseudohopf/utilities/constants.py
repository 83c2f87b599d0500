# Global constants that do not change during the execution

from typing import Final, Dict  # Final is just a hint for programmers, does not actually prevent reassigning the value

# Curvatures
TOTAL_CURVATURE: Final[float] = -1.0
BASE_CURVATURE: Final[float] = -4.0

# Quadric membership
MEMBERSHIP_TOLERANCE: Final[float] = 1e-12
REPROJECTION_THRESHOLD: Final[float] = 1e-10

# Indefinite linear algebra
NULL_THRESHOLD: Final[float] = 1e-9
DEPENDENCY_THRESHOLD: Final[float] = 1e-8
PIVOT_TIE_RELATIVE: Final[float] = 1e-9
RANK_THRESHOLD: Final[float] = 1e-8

# Finite differences
FD_STEP: Final[float] = 1e-4
FD_OUTER_STEP: Final[float] = 1e-3

# Sampling
DEFAULT_SEED: Final[int] = 42
DEFAULT_SAMPLES: Final[int] = 500
DEFAULT_QUOTIENT_DIMENSION: Final[int] = 2
SAMPLE_SPREAD: Final[float] = 0.6
MIN_CAUSAL_RATIO: Final[float] = 0.2
MEMBERSHIP_SAMPLES: Final[int] = 10_000
ALGEBRA_SAMPLES: Final[int] = 10_000
FIBRE_SAMPLE_POINTS: Final[int] = 20
NONCOMPACT_FIBRE_RANGE: Final[float] = 3.0
RK4_STEPS: Final[int] = 200
LIFT_DRIFT_LIMIT: Final[float] = 1e-6

# Fixed curvature pairing, echoed in report headers
CURVATURE_CONVENTION: Final[str] = "R(X,Y,Z,W) = g(R(X,Y)W, Z); R(X,Y,X,Y) = c(g(X,X)g(Y,Y) - g(X,Y)^2)"

# Identity id -> tolerance. Overridable per run, echoed in every report.
DEFAULT_TOLERANCES: Final[Dict[str, float]] = {
    # algebra
    "composition": 1e-10,
    "alternativity": 1e-10,
    "anti_automorphism": 1e-10,
    "associativity": 0.0,
    "table_reproduction": 0.0,
    "pi9_conformance": 1e-12,
    # spaces
    "geodesic_membership": 1e-10,
    "closed_timelike_geodesic": 1e-10,
    "gram_schmidt_orthonormality": 1e-10,
    "gram_schmidt_idempotence": 1e-12,
    "covariant_derivative_closed_form": 1e-6,
    "metric_compatibility": 1e-6,
    # fibrations
    "total_membership": 1e-12,
    "target_membership": 1e-10,
    "euler_identity": 1e-10,
    "differential_rank": 0.0,
    "submersion_isometry": 1e-10,
    "splitting_orthogonality": 1e-10,
    "vertical_signature": 0.0,
    "fibre_geodesic": 1e-8,
    "horizontal_lift": 1e-10,
    "metric_push_consistency": 1e-8,
    "orbit_reproduction": 1e-9,
    # A and T tensors
    "a_alternating": 1e-7,
    "a_skew": 1e-7,
    "a_injective": 1e-6,
    "a_basic_extension": 1e-6,
    "axaxv": 1e-6,
    "a_reciprocity": 1e-6,
    "a_vertical_isometry": 1e-6,
    "ranjan": 1e-6,
    "t_vanishes": 1e-6,
    # O'Neill equations
    "oneill_a": 1e-6,
    "oneill_b": 1e-4,
    "oneill_c": 1e-4,
    "oneill_d": 1e-6,
    "oneill_e": 1e-6,
    "oneill_corollary_a": 1e-6,
    "oneill_corollary_b": 1e-6,
    "curvature_symmetries": 1e-6,
    # Osserman and Clifford
    "jacobi_spectrum": 1e-6,
    "jacobi_ratio": 1e-5,
    "jacobi_diagonalizable": 1e-6,
    "osserman_reciprocity": 1e-6,
    "osserman_kernel": 1e-6,
    "clifford_anticommutation": 1e-6,
    "clifford_skew": 1e-6,
    "clifford_curvature": 1e-6,
    "clifford_signs": 0.0,
    # special basis and fibre signs
    "special_basis_orthonormality": 1e-8,
    "special_basis_a_vanishes": 1e-6,
    "special_basis_index": 0.0,
    "special_basis_fibre_transport": 1e-7,
    "fibre_signs": 0.0,
    # horizontal lifts of curves
    "lift_retrace": 1e-7,
    "holonomy_isometry": 1e-6,
}

# Identity id -> the relation it checks
IDENTITY_ANCHORS: Final[Dict[str, str]] = {
    "composition": "N(xy) = N(x)N(y)",
    "alternativity": "x(xy) = (xx)y, (yx)x = y(xx)",
    "anti_automorphism": "conj(xy) = conj(y)conj(x)",
    "associativity": "(xy)z = x(yz) on basis triples iff the algebra is associative",
    "table_reproduction": "multiplication table reproduces the product on basis pairs",
    "pi9_conformance": "pi9 via split-octonion multiplication = literal pi9 polynomial",
    "geodesic_membership": "<gamma(t), gamma(t)> = 1/c",
    "closed_timelike_geodesic": "gamma(2 pi) = gamma(0) for timelike unit v",
    "gram_schmidt_orthonormality": "<u_i, u_j> = +-delta_ij",
    "gram_schmidt_idempotence": "GS(GS(V)) = GS(V)",
    "covariant_derivative_closed_form": "nabla_E (P c) = -c <c,p> E for constant ambient c",
    "metric_compatibility": "E<F,G> = <nabla_E F, G> + <F, nabla_E G>",
    "total_membership": "<p, p> = -1 on the total quadric",
    "target_membership": "<pi(p), pi(p)> = -1/4 on explicit targets, Phi S Phi = -Phi for Phi = z z*",
    "euler_identity": "d pi_p(p) = 2 pi(p)",
    "differential_rank": "rank d pi_p restricted to T_pM = dim base",
    "submersion_isometry": "<d pi X, d pi Y> = <X, Y> on horizontal vectors",
    "splitting_orthogonality": "<v, h> = 0, vertical in kernel of d pi",
    "vertical_signature": "index of the induced fibre metric = r'",
    "fibre_geodesic": "geodesics launched from vertical vectors stay in the fibre",
    "horizontal_lift": "d pi(lift(w)) = w, lift horizontal",
    "metric_push_consistency": "Gram of lifted frame at q = Gram at p on the same fibre",
    "orbit_reproduction": "theta(pi_inner(z)) = pi_outer(z) on orbits",
    "a_alternating": "A_X Y + A_Y X = 0",
    "a_skew": "g(A_E F, G) + g(F, A_E G) = 0",
    "a_injective": "A_X restricted to V is injective for non-null X",
    "a_basic_extension": "A_X V = h nabla_V X~ for the basic extension X~",
    "axaxv": "A_X A_X V = -c g(X,X) V",
    "a_reciprocity": "A_{A_X V} V = -c g(V,V) X",
    "a_vertical_isometry": "g(A_X v_i, A_X v_j) = c g(X,X) g(v_i, v_j)",
    "ranjan": "A^v A^w + A^w A^v = -2c g(v,w) Id",
    "t_vanishes": "T_E F = 0 (totally geodesic fibres)",
    "oneill_a": "R(X,Y,Z,Z') = R'(X,Y,Z,Z') - 2g(A_XY,A_ZZ') + g(A_YZ,A_XZ') - g(A_XZ,A_YZ')",
    "oneill_b": "R(X,Y,Z,U) = g((nabla_Z A)_X Y, U)",
    "oneill_c": "R(X,U,Y,V) = g((nabla_U A)_X Y, V) + g(A_X U, A_Y V)",
    "oneill_d": "R(U,V,W,W') = R^(U,V,W,W')",
    "oneill_e": "R(U,V,W,X) = 0",
    "oneill_corollary_a": "R(X,Y,X,Y) = R'(X,Y,X,Y) - 3g(A_XY,A_XY)",
    "oneill_corollary_b": "R(X,U,X,U) = g(A_X U, A_X U)",
    "curvature_symmetries": "R' antisymmetric in both pairs, first Bianchi identity",
    "jacobi_spectrum": "spec R'_X = {-4 eps_X (x r), -eps_X (x n-1-r)}",
    "jacobi_ratio": "lambda / mu = 4",
    "jacobi_diagonalizable": "(J - lambda)(J - mu) = 0",
    "osserman_reciprocity": "Y in E_-4(X): X = bY + A_Y W",
    "osserman_kernel": "Y in ker(R'_X + eps_X): A_X Y = 0 and R'_Y X = -eps_Y X",
    "clifford_anticommutation": "J_s J_t + J_t J_s = -2 eps_s delta_st Id",
    "clifford_skew": "g(J_s X, Y) = -g(X, J_s Y)",
    "clifford_curvature": "R'(x,y)z = l0(g(y,z)x - g(x,z)y) + 1/3 sum eps_s (l_s - l0)(...), l0 = -1, l_s = -4",
    "clifford_signs": "eps_s = c g(v_s, v_s) matches the base structure",
    "special_basis_orthonormality": "special basis orthonormal",
    "special_basis_a_vanishes": "A_{L_a} L_b = 0",
    "special_basis_index": "n = k(r+1), s = q1(r'+1) + q2(r-r')",
    "special_basis_fibre_transport": "special basis members are basic along the fibre",
    "fibre_signs": "fibre metric signs per base type (negative / positive / (2,1) with A_X J X timelike)",
    "lift_retrace": "pi(lift(t)) = b(t)",
    "holonomy_isometry": "holonomy of a closed loop preserves inner products of fibre points",
}

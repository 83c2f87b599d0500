from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import List, Sequence

from .clifford_structure import clifford_matrices
from .field_evaluator import basic_extension
from .geometry_exception import GeometryException
from .jacobi_operator import unit_causal
from .point_geometry import PointGeometry
from .sampling import PointSample, SPECIAL_BASIS_STREAM, make_trackers, build_report, scaled

from ..fibrations import Submersion, HopfSubmersion, CompositeSubmersion, QuotientSubmersion
from ..spaces import OrthonormalFrame, DegenerateSubspaceException, indefinite_gram_schmidt
from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import MIN_CAUSAL_RATIO, FIBRE_SAMPLE_POINTS

logger = get_logger(__name__)

SPECIAL_BASIS_IDENTITIES = ("special_basis_orthonormality", "special_basis_a_vanishes", "special_basis_index",
                            "special_basis_fibre_transport")

# Fibre points at which the transported basis is re-checked for A_{L_a} L_b = 0
_A_CHECK_POINTS = 3
_TRANSPORT_SAMPLES = 5


@dataclass(frozen=True, eq=False)
class SpecialBasis:
    """Blocks [L_a, A_{L_a} v_1, ..., A_{L_a} v_r] of an orthonormal horizontal basis at p."""
    p: np.ndarray
    vertical_frame: OrthonormalFrame
    blocks: List[np.ndarray]
    block_signs: List[np.ndarray]

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def vectors(self) -> np.ndarray:
        return np.vstack(self.blocks)

    @property
    def signs(self) -> np.ndarray:
        return np.concatenate(self.block_signs)

    @property
    def leaders(self) -> np.ndarray:
        return np.array([block[0] for block in self.blocks])

    @property
    def leader_signs(self) -> np.ndarray:
        return np.array([signs[0] for signs in self.block_signs])

    @property
    def q1(self) -> int:
        """Number of timelike leaders."""
        return int(np.sum(self.leader_signs < 0))

    @property
    def q2(self) -> int:
        return self.k - self.q1

    def predicted_index(self) -> int:
        r = len(self.vertical_frame)
        r_prime = int(np.sum(self.vertical_frame.signs < 0))
        return self.q1 * (r_prime + 1) + self.q2 * (r - r_prime)

    def as_frame(self) -> OrthonormalFrame:
        return OrthonormalFrame(vectors=self.vectors, signs=self.signs)


def _block(geometry: PointGeometry, leader: np.ndarray, sign: int):
    images = geometry.a_on_vertical(leader).T
    vectors = np.vstack([leader[None, :], images])
    signs = np.array([sign] + [int(round(geometry.c * sign * s)) for s in geometry.vertical_frame.signs])
    return vectors, signs


def special_basis(geometry: PointGeometry, x: np.ndarray) -> SpecialBasis:
    """
    Greedy construction starting from L_0 = X: every further leader is the standard basis vector with the
    largest |<u,u>| after projection onto the complement of the blocks built so far.
    """
    leader, sign = unit_causal(geometry, x)
    blocks, block_signs = [], []
    while True:
        vectors, signs = _block(geometry, leader, sign)
        blocks.append(vectors)
        block_signs.append(signs)
        count = sum(len(block) for block in blocks)
        if count >= geometry.base_dim:
            break
        built = OrthonormalFrame(vectors=np.vstack(blocks), signs=np.concatenate(block_signs))
        residual = geometry.horizontal - built.projector(geometry.eta)
        try:
            pivot = indefinite_gram_schmidt(list(residual.T), geometry.eta, max_vectors=1)
        except DegenerateSubspaceException as e:
            raise GeometryException(f"Residual subspace of the special basis is degenerate after {count} "
                                    f"vectors: {e}") from e
        if len(pivot) == 0:
            raise GeometryException(f"Special basis stalled after {count} of {geometry.base_dim} vectors")
        leader, sign = pivot[0], int(pivot.signs[0])
    if count != geometry.base_dim:
        raise GeometryException(f"Special basis has {count} vectors, the horizontal space {geometry.base_dim}")
    return SpecialBasis(p=geometry.p, vertical_frame=geometry.vertical_frame, blocks=blocks,
                        block_signs=block_signs)


def _orthonormality_residual(vectors: np.ndarray, signs: np.ndarray, eta: np.ndarray) -> float:
    gram = (vectors * eta) @ vectors.T
    return float(np.max(np.abs(gram - np.diag(signs))))


def _a_vanishing_residual(geometry: PointGeometry, leaders: np.ndarray) -> float:
    residual = 0.0
    for a in leaders:
        for b in leaders:
            residual = max(residual, scaled(np.linalg.norm(geometry.A(a, b)), a, b))
    return residual


def expected_fibre_index(submersion: Submersion) -> int:
    """
    Number of timelike fibre directions read off the algebra: z e_j is timelike exactly when N(e_j) = +1.
    """
    if isinstance(submersion, CompositeSubmersion):
        algebra, acting = submersion.outer.algebra, submersion.data.composite_acting
    elif isinstance(submersion, QuotientSubmersion):
        algebra, acting = submersion.algebra, submersion.acting
    elif isinstance(submersion, HopfSubmersion):
        algebra = submersion.algebra
        acting = tuple(range(1, algebra.dim))
    else:
        raise GeometryException(f"No fibre sign rule for {submersion}")
    return int(sum(1 for j in acting if algebra.norm_signs[j] > 0))


def distinguished_vertical(geometry: PointGeometry, x: np.ndarray) -> np.ndarray:
    """A_X J X for the Clifford generator with J^2 = -Id. On fibres of signature (2,1) it is timelike."""
    identity = np.eye(geometry.base_dim)
    s = int(np.argmin([np.max(np.abs(j @ j + identity)) for j in clifford_matrices(geometry)]))
    return geometry.A(x, geometry.a_on_vertical(x)[:, s])


def _has_split_fibre(submersion: Submersion) -> bool:
    fibre = submersion.spec.fibre
    return not submersion.is_composite and (fibre.dim, fibre.index) == (3, 1)


def special_basis_check(samples: Sequence[PointSample], tolerances: Tolerances) -> VerificationReport:
    """
    Special bases at unit X of every causal type, their index bookkeeping and their transport along the fibre,
    plus the fibre sign audit.
    """
    submersion = samples[0].geometry.submersion
    label = submersion.spec.label
    trackers = make_trackers(("fibre_signs",) + (() if submersion.is_composite else SPECIAL_BASIS_IDENTITIES))
    expected_index = expected_fibre_index(submersion)
    fibre = submersion.spec.fibre
    trackers["fibre_signs"].details["expected_index"] = expected_index
    trackers["fibre_signs"].details["signature"] = f"({fibre.dim - fibre.index},{fibre.index})"
    split_fibre = _has_split_fibre(submersion)

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(SPECIAL_BASIS_STREAM)
        measured = int(np.sum(geometry.vertical_frame.signs < 0))
        trackers["fibre_signs"].add(0.0 if measured == expected_index == fibre.index else 1.0)
        if split_fibre:
            x = geometry.unit_horizontal(rng, geometry.causal_signs(geometry.horizontal_frame)[0], MIN_CAUSAL_RATIO)
            if x is not None:
                v = distinguished_vertical(geometry, x)
                trackers["fibre_signs"].add(0.0 if geometry.g(v, v) < 0 else 1.0)
        if submersion.is_composite:
            continue

        for sign in geometry.causal_signs(geometry.horizontal_frame):
            x = geometry.unit_horizontal(rng, sign, MIN_CAUSAL_RATIO)
            try:
                basis = special_basis(geometry, x)
            except GeometryException as e:
                logger.warning(f"{label}: special basis skipped at sample {sample.index}: {e}")
                continue
            trackers["special_basis_orthonormality"].add(
                _orthonormality_residual(basis.vectors, basis.signs, geometry.eta))
            trackers["special_basis_a_vanishes"].add(_a_vanishing_residual(geometry, basis.leaders))
            r = geometry.fibre_dim
            index = int(np.sum(basis.signs < 0))
            trackers["special_basis_index"].add(abs(geometry.base_dim - basis.k * (r + 1))
                                                + abs(index - basis.predicted_index())
                                                + abs(index - submersion.base_index))
            if sample.index < _TRANSPORT_SAMPLES:
                _check_fibre_transport(geometry, basis, rng, trackers)

    not_applicable = {}
    if submersion.is_composite:
        not_applicable = {identity_id: "the total space of a composite fibration is not pseudo-hyperbolic"
                          for identity_id in SPECIAL_BASIS_IDENTITIES}
    return build_report(label, samples[0].seed, trackers, tolerances, not_applicable)


def _check_fibre_transport(geometry: PointGeometry, basis: SpecialBasis, rng: np.random.Generator, trackers):
    """Basic extensions of the basis along a fibre geodesic: constant pushforward, still a special basis."""
    submersion = geometry.submersion
    p = geometry.p
    direction = geometry.random_vertical(rng)
    start, end = submersion.fibre_parameter_range(direction)
    extensions = [basic_extension(submersion, p, vector) for vector in basis.vectors]
    pushed = np.array([submersion.pushforward(p, vector) for vector in basis.vectors])
    for j, s in enumerate(np.linspace(start, end, FIBRE_SAMPLE_POINTS)):
        q = submersion.fibre_point(p, direction, s)
        moved = np.array([extension(q) for extension in extensions])
        moved_pushed = np.array([submersion.pushforward(q, vector) for vector in moved])
        scale = max(1.0, float(np.max(np.abs(pushed))))
        trackers["special_basis_fibre_transport"].add(float(np.max(np.abs(moved_pushed - pushed))) / scale)
        trackers["special_basis_orthonormality"].add(_orthonormality_residual(moved, basis.signs, geometry.eta))
        if j < _A_CHECK_POINTS:
            local = PointGeometry(submersion, q, geometry.step)
            leaders = np.array([moved[a * (geometry.fibre_dim + 1)] for a in range(basis.k)])
            trackers["special_basis_a_vanishes"].add(_a_vanishing_residual(local, leaders))

import numpy as np

from typing import Dict

from ..algebra import (AlgebraName, AlgebraTag, get_algebra, multiply, conjugate, basis_element,
                       build_multiplication_table, associator_witness)
from ..algebra.cayley_dickson import norm_form
from ..fibrations import selected_split_octonion_convention
from ..geometry.sampling import make_trackers, build_report
from ..utilities import Tolerances, VerificationReport, sample_rng, get_logger
from ..utilities.constants import ALGEBRA_SAMPLES

logger = get_logger(__name__)

ALGEBRA_IDENTITIES = ("composition", "alternativity", "anti_automorphism", "associativity", "table_reproduction")


def audited_algebras() -> Dict[AlgebraName, AlgebraTag]:
    """Every algebra of the catalog; the split octonions carry the convention selected by the pi9 audit."""
    algebras = {name: get_algebra(name) for name in AlgebraName.all()}
    algebras[AlgebraName.Oprime] = get_algebra(AlgebraName.Oprime, selected_split_octonion_convention())
    return algebras


def _relative(values: np.ndarray, *factors: np.ndarray) -> np.ndarray:
    scale = np.ones(values.shape[0])
    for factor in factors:
        scale = scale * np.maximum(1.0, np.linalg.norm(factor, axis=-1))
    return np.abs(values) / scale


def algebra_checks(tolerances: Tolerances, seed: int, pairs: int = ALGEBRA_SAMPLES) -> VerificationReport:
    """
    Composition, alternativity, the conjugation anti-automorphism and associativity of every algebra, batched
    over `pairs` random pairs per algebra. The multiplication table has to reproduce the product exactly.
    """
    trackers = make_trackers(ALGEBRA_IDENTITIES)
    for index, (name, tag) in enumerate(audited_algebras().items()):
        rng = sample_rng(seed, 0, index)
        x, y = rng.normal(size=(2, pairs, tag.dim))
        xy = multiply(tag, x, y)

        composition = _relative(norm_form(tag, xy) - norm_form(tag, x) * norm_form(tag, y), x, x, y, y)
        left = np.linalg.norm(multiply(tag, x, xy) - multiply(tag, multiply(tag, x, x), y), axis=-1)
        right = np.linalg.norm(multiply(tag, multiply(tag, y, x), x) - multiply(tag, y, multiply(tag, x, x)),
                               axis=-1)
        alternativity = _relative(np.maximum(left, right), x, x, y)
        anti = _relative(np.linalg.norm(conjugate(xy) - multiply(tag, conjugate(y), conjugate(x)), axis=-1), x, y)
        trackers["composition"].add_all(composition)
        trackers["alternativity"].add_all(alternativity)
        trackers["anti_automorphism"].add_all(anti)

        witness = associator_witness(tag)
        trackers["associativity"].add(0.0 if (witness is None) == tag.is_associative else 1.0)
        trackers["associativity"].details[name.name] = None if witness is None else list(witness)

        table = build_multiplication_table(tag)
        for i in range(tag.dim):
            for j in range(tag.dim):
                e_i, e_j = basis_element(tag, i), basis_element(tag, j)
                trackers["table_reproduction"].add(np.max(np.abs(table.multiply(e_i, e_j) - multiply(tag, e_i, e_j))))
        trackers["table_reproduction"].details[name.name] = table.metadata["convention"]
        logger.debug(f"Audited {tag}: associator witness {witness}")

    return build_report("foundations", seed, trackers, tolerances)

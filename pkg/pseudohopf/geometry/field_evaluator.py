from __future__ import annotations

import numpy as np

from enum import Enum
from dataclasses import dataclass
from typing import Callable

from .geometry_exception import GeometryException

from ..fibrations import Submersion, FibrationException, HopfSubmersion, QuotientSubmersion, CompositeSubmersion
from ..spaces import PseudoHyperbolicSpace


class FieldKind(Enum):
    basic_extension = 1
    fibre_tangent = 2
    custom = 3

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FieldEvaluator:
    """A vector field given by a point -> ambient vector map, differentiable along curves."""
    kind: FieldKind
    evaluate: Callable[[np.ndarray], np.ndarray]
    anchor: str

    def __call__(self, q: np.ndarray) -> np.ndarray:
        try:
            return np.asarray(self.evaluate(q), dtype=float)
        except (FibrationException, np.linalg.LinAlgError) as e:
            raise GeometryException(f"Evaluation of the {self.kind} field ({self.anchor}) failed: {e}") from e


def tangential_constant_field(space: PseudoHyperbolicSpace, constant: np.ndarray) -> FieldEvaluator:
    """q -> tangential part of a fixed ambient vector."""
    constant = np.asarray(constant, dtype=float)
    return FieldEvaluator(kind=FieldKind.custom,
                          evaluate=lambda q: space.project_to_tangent(q, constant),
                          anchor=f"tangential projection of a constant vector on {space.space_id}")


def position_field(space: PseudoHyperbolicSpace) -> FieldEvaluator:
    return FieldEvaluator(kind=FieldKind.custom, evaluate=lambda q: np.asarray(q, dtype=float),
                          anchor=f"position vector of {space.space_id}")


def basic_extension(submersion: Submersion, p: np.ndarray, x: np.ndarray) -> FieldEvaluator:
    """
    The basic field through the horizontal x at p, evaluated on the fibre of p.

    Explicit targets lift the pushforward of x; quotient targets move x along the right action.
    """
    p, x = np.asarray(p, dtype=float), np.asarray(x, dtype=float)
    if isinstance(submersion, HopfSubmersion):
        pushed = submersion.pushforward(p, x)
        evaluate = lambda q: submersion.lift(q, pushed)
    elif isinstance(submersion, CompositeSubmersion):
        evaluate = lambda q: submersion.outer.transport_horizontal(p, x, q)
    elif isinstance(submersion, QuotientSubmersion):
        evaluate = lambda q: submersion.transport_horizontal(p, x, q)
    else:
        raise GeometryException(f"No basic extension for {submersion}")
    return FieldEvaluator(kind=FieldKind.basic_extension, evaluate=evaluate,
                          anchor=f"basic extension along the fibre of {submersion.spec.label}")


def fibre_tangent_field(submersion: Submersion, v: np.ndarray) -> FieldEvaluator:
    """q -> vertical part of v at q; a vertical field through v."""
    v = np.asarray(v, dtype=float)
    return FieldEvaluator(kind=FieldKind.fibre_tangent,
                          evaluate=lambda q: submersion.vertical_projector(q) @ v,
                          anchor=f"vertical projection field of {submersion.spec.label}")

from .signature import Signature
from .reprojection import ReprojectionCounter
from .spaces_exception import SpaceException, DegenerateSubspaceException
from .gram_schmidt import OrthonormalFrame, indefinite_gram_schmidt
from .pseudo_hyperbolic_space import PseudoHyperbolicSpace, AmbientPoint, TangentVector, inner, geodesic

__all__ = [
    "Signature",
    "ReprojectionCounter",
    "SpaceException",
    "DegenerateSubspaceException",
    "OrthonormalFrame",
    "indefinite_gram_schmidt",
    "PseudoHyperbolicSpace",
    "AmbientPoint",
    "TangentVector",
    "inner",
    "geodesic",
]

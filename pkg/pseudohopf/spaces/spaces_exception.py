class SpaceException(Exception):
    """
    Exception raised for invalid points, vectors or spaces.

    Covers length mismatches, points off the quadric, non-tangent vectors and non-negative curvatures.
    """


class DegenerateSubspaceException(SpaceException):
    """
    Exception raised when indefinite orthonormalization meets a degenerate subspace.

    Degenerate input is reported, never perturbed.
    """

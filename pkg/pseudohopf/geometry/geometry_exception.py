class GeometryException(Exception):
    """
    Exception raised by the curvature and tensor machinery.

    Raised for null vectors where a unit causal vector is required, degenerate residual subspaces, failed
    field evaluations along probe curves and horizontal lifts of curves that drift off the base curve.
    """

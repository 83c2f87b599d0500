class AlgebraException(Exception):
    """
    Exception raised for invalid composition algebra operations.

    Covers tag mismatches between operands and Cayley-Dickson doublings outside the six supported algebras.
    """

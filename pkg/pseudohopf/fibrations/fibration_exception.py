class FibrationException(Exception):
    """
    Exception raised for invalid fibration data.

    Covers points off the domain quadric, degenerate fibre metrics, lift data outside the image of the
    differential, incompatible compositions and unknown fibration ids or parameters.
    """

class ConfigurationException(Exception):
    """
    Exception raised for invalid configurations.

    Covers unknown or misplaced options, values outside their constraints and unknown tolerance ids.
    """

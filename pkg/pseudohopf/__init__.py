import pseudohopf.algebra
import pseudohopf.spaces
import pseudohopf.fibrations
import pseudohopf.geometry
import pseudohopf.classify
import pseudohopf.validations
import pseudohopf.utilities


__version__ = utilities.__version__

__all__ = [
    "algebra", "spaces", "fibrations", "geometry", "classify", "validations", "utilities", "__version__"
]

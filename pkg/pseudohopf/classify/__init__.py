from .admissibility import (AdmissibilityInstance, admissible, fibre_parallelizability_filter,
                            derive_classified_rows, excluded_rows, FIBRE_DIMENSIONS)
from .catalog import (ExistenceStatus, CatalogEntry, CatalogMatch, FAMILIES, COMPOSITES, NONEXISTENT, catalog,
                      lookup, entry_for_spec, family_invariants, admissibility_defects, catalog_to_json,
                      catalog_to_markdown)

__all__ = [
    "AdmissibilityInstance",
    "admissible",
    "fibre_parallelizability_filter",
    "derive_classified_rows",
    "excluded_rows",
    "FIBRE_DIMENSIONS",
    "ExistenceStatus",
    "CatalogEntry",
    "CatalogMatch",
    "FAMILIES",
    "COMPOSITES",
    "NONEXISTENT",
    "catalog",
    "lookup",
    "entry_for_spec",
    "family_invariants",
    "admissibility_defects",
    "catalog_to_json",
    "catalog_to_markdown",
]

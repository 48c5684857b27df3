"""Finite residuated lattices: filters, spectra, pure filters and the mp property."""

from ._reslat import (
    AxiomError,
    ConsistencyError,
    Document,
    Lattice,
    SchemaError,
    canonical_key,
    census,
    coannihilator,
    enumerate,
    filters,
    is_domain,
    load_lattice,
    mp_check,
    naive_oracle,
    parse_lattice,
    pure_filters,
    sigma,
    spectrum,
)

__all__ = [
    "AxiomError",
    "ConsistencyError",
    "Document",
    "Lattice",
    "SchemaError",
    "canonical_key",
    "census",
    "coannihilator",
    "enumerate",
    "filters",
    "is_domain",
    "load_lattice",
    "mp_check",
    "naive_oracle",
    "parse_lattice",
    "pure_filters",
    "sigma",
    "spectrum",
]

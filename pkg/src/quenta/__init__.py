"""Entanglement-assisted quantum code parameters from classical cyclic codes."""

from .gf import GF, Embedding, embedding, field_create, field_from_order, splitting_field

__all__ = [
    "GF",
    "Embedding",
    "embedding",
    "field_create",
    "field_from_order",
    "splitting_field",
]

__version__ = "0.1.0"

"""Quiver Schur algebras, mixed quiver Schur algebras, CoHA and CoHM realized
as exact operators on rings of partial invariants."""

__version__ = "0.1.0"

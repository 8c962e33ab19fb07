"""Exact-arithmetic toolkit for hypersurfaces containing projective varieties.

Submodules (import explicitly, e.g. ``from hypersurfaces import formulas``):
  exactcore   -- rationals/prime fields, matrix rank, sparse polynomials
  formulas    -- closed-form hypersurface-count bounds and their identities
  pointconfig -- finite point sets: Hilbert functions, regularity, position
  varieties   -- parametrised curves/surfaces over exact fields
  cohomology  -- a_m counts, ideal-deficiency profiles, regularity checks
  secants     -- secant dimensions of quadratic embeddings (Terracini)
  cli         -- batch command-line front end
"""

__version__ = "0.1.0"

__all__ = [
    "exactcore",
    "formulas",
    "pointconfig",
    "varieties",
    "cohomology",
    "secants",
    "cli",
]

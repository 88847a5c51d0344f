"""mfci: exact matrix-factorization machinery over graded complete
intersections — higher homotopy systems, graded matrix factorizations,
standard resolutions, Eisenbud operators, stable Ext, and support sets."""

__version__ = "0.1.0"

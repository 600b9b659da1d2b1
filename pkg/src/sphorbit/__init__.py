"""Exact computational models for the spherical nilpotent orbits of
sl_n(R), their stabilizer decompositions, restrictions to maximal
parabolics, and the attached differential-operator realizations."""

__version__ = "0.1.0"

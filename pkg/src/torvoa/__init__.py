"""torvoa: exact toroidal Lie algebra / vertex algebra kernel and verifier."""

__version__ = "0.1.0"

"""Finite semiflows: transitivity, stability and structure checkers."""

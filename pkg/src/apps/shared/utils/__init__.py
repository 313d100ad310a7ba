"""Helpers shared by the solver apps."""

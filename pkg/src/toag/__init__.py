"""Truncated ordered abelian groups."""

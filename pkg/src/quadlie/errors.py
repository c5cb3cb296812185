"""Shared exception types.

Validation failures carry which law broke and the first violating witness
(usually a basis triple) so callers can report precisely.
"""
from __future__ import annotations


class QuadlieError(Exception):
    pass


class ValidationError(QuadlieError):
    def __init__(self, message: str, law: str = "", witness=None):
        super().__init__(message)
        self.law = law
        self.witness = witness

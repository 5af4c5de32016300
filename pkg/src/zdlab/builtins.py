"""Named example structures usable wherever a structure file is expected."""

from __future__ import annotations

import re

import numpy as np

from .errors import InputError
from .rules import RuleStructure, triangular_n0_z2
from .structures import SEMIGROUP, SEMIRING, FiniteStructure, from_elements


def boolean() -> FiniteStructure:
    """B = ({0, 1}, max, min)."""
    return from_elements(SEMIRING, [0, 1], min, max, 0, 1)


def residues(n: int) -> FiniteStructure:
    """The ring Z_n viewed as a semiring."""
    if n < 2:
        raise InputError("Z_n needs n >= 2")
    return from_elements(SEMIRING, range(n), lambda a, b: a * b % n, lambda a, b: (a + b) % n, 0, 1)


def capped(T: int) -> FiniteStructure:
    """N_T = {0..T} with a+b and ab capped at T."""
    if T < 1:
        raise InputError("capped semiring needs T >= 1")
    return from_elements(SEMIRING, range(T + 1), lambda a, b: min(a * b, T), lambda a, b: min(a + b, T), 0, 1)


def null_semigroup(n: int) -> FiniteStructure:
    """Order-n semigroup with every product zero."""
    if n < 2:
        raise InputError("structures have at least two elements")
    return FiniteStructure(SEMIGROUP, np.zeros((n, n), dtype=np.int64))


_PATTERNS = [
    (re.compile(r"boolean|b"), lambda m: boolean()),
    (re.compile(r"z(\d+)"), lambda m: residues(int(m.group(1)))),
    (re.compile(r"capped(\d+)"), lambda m: capped(int(m.group(1)))),
    (re.compile(r"null(\d+)"), lambda m: null_semigroup(int(m.group(1)))),
    (re.compile(r"triangular-n0-z2"), lambda m: triangular_n0_z2()),
]

BUILTIN_NAMES = ("boolean", "z<n>", "capped<T>", "null<n>", "triangular-n0-z2")


def builtin(name: str) -> FiniteStructure | RuleStructure | None:
    """The structure called ``name``, or None if it is not a builtin name."""
    for pattern, make in _PATTERNS:
        m = pattern.fullmatch(name.lower())
        if m:
            return make(m)
    return None

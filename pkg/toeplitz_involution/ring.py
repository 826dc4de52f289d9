# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
Commutative rings with 1 and their exact elements.

Two families are supported: the integers Z and the residue rings Z/M for any
M >= 2, composite moduli included. Elements are Python integers kept in
canonical form (the least nonnegative residue for Z/M), so arithmetic is
exact and equality is a value comparison. There is no division anywhere.
"""

import enum
import re
from dataclasses import dataclass
from typing import Optional

import logging
msg = logging.getLogger(__name__)
from toeplitz_involution import ParseError, RangeError, SpecMismatch
from toeplitz_involution.util import _


class RingKind(enum.Enum):
    INTEGERS = "z"
    INTEGERS_MOD = "zmod"


@dataclass(frozen=True)
class RingSpec:
    """
    A ring chosen at run time. 'modulus' is None for the integers.
    """
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise RangeError(_("modulus must be at least 2, got %d") % self.modulus)

    @classmethod
    def integers(cls):
        return cls(None)

    @classmethod
    def integers_mod(cls, modulus):
        return cls(modulus)

    @property
    def kind(self):
        return RingKind.INTEGERS if self.modulus is None else RingKind.INTEGERS_MOD

    @property
    def characteristic(self):
        return 0 if self.modulus is None else self.modulus

    def canonical(self, value: int) -> int:
        if self.modulus is None:
            return value
        return value % self.modulus

    def element(self, value: int) -> "RingElement":
        return RingElement(self, value)

    @property
    def zero(self):
        return RingElement(self, 0)

    @property
    def one(self):
        return RingElement(self, 1)

    def __str__(self):
        if self.modulus is None:
            return RingKind.INTEGERS.value
        return "%s:%d" % (RingKind.INTEGERS_MOD.value, self.modulus)


ZZ = RingSpec()


@dataclass(frozen=True)
class RingElement:
    """
    An element of 'spec'. The value is canonicalized on construction.
    """
    spec: RingSpec
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.canonical(self.value))

    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_sub(self, other)

    def __mul__(self, other):
        return ring_mul(self, other)

    def __neg__(self):
        return ring_neg(self)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return ring_format(self)


def _check_same(a, b):
    if a.spec != b.spec:
        raise SpecMismatch(_("ring mismatch: %s and %s") % (a.spec, b.spec))


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    _check_same(a, b)
    return RingElement(a.spec, a.value + b.value)


def ring_sub(a: RingElement, b: RingElement) -> RingElement:
    _check_same(a, b)
    return RingElement(a.spec, a.value - b.value)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    _check_same(a, b)
    return RingElement(a.spec, a.value * b.value)


def ring_neg(a: RingElement) -> RingElement:
    return RingElement(a.spec, -a.value)


#-- Text forms --{{{1

re_integer = re.compile(r"[+-]?[0-9]+")


def ring_parse(spec: RingSpec, text: str) -> RingElement:
    """
    Parse an optionally signed decimal integer and reduce it into 'spec'.
    """
    m = re_integer.fullmatch(text)
    if not m:
        bad = 0
        while bad < len(text) and re_integer.fullmatch(text[:bad + 1] + "0"):
            bad += 1
        raise ParseError(_("expected an optionally signed decimal integer"), text, bad)
    return RingElement(spec, int(text))


def ring_format(a: RingElement) -> str:
    return str(a.value)


re_ring_spec = re.compile(r"z|zmod:(?P<modulus>[0-9]+)")


def parse_ring_spec(text: str) -> RingSpec:
    """
    Parse 'z' or 'zmod:M' with M >= 2.
    """
    m = re_ring_spec.fullmatch(text.strip())
    if not m:
        raise ParseError(_("unknown ring '%s' (expected z or zmod:M)") % text, text, 0)
    if m.group("modulus") is None:
        return ZZ
    modulus = int(m.group("modulus"))
    if modulus < 2:
        raise ParseError(_("modulus must be at least 2 in '%s'") % text, text, m.start("modulus"))
    return RingSpec.integers_mod(modulus)

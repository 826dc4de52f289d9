# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
The substitution homomorphism phi: x_k -> m_k of R[x1..xn] and the check
that it is an involution.

phi is always built from a MinorTable, normally the one produced by the
recursion in toeplitz.minor_table, never from a determinant.
Since phi is a ring homomorphism fixing R, phi o phi is the identity as soon
as it fixes every generator; verify_involution checks exactly that and
reports instead of raising, so an inconsistent table shows up as data.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import logging
msg = logging.getLogger(__name__)
from toeplitz_involution import RangeError, SpecMismatch
from toeplitz_involution.poly import (Homomorphism, Polynomial, compose, poly_format,
                                      poly_to_json, substitute)
from toeplitz_involution.ring import RingSpec
from toeplitz_involution.toeplitz import MinorTable, minor_table
from toeplitz_involution.util import _


def phi_homomorphism(ring: RingSpec, n: int, minors: Optional[MinorTable] = None) -> Homomorphism:
    """x_k -> minors[k] for 1 <= k <= n; the true minor table by default."""
    if n < 0:
        raise RangeError(_("negative variable count %d") % n)
    if minors is None:
        minors = minor_table(ring, n)
    elif minors.ring != ring or minors.nvars != n:
        raise SpecMismatch(_("table over %s[x1..x%d] used in %s[x1..x%d]")
                           % (minors.ring, minors.nvars, ring, n))
    return Homomorphism(ring, n, minors.minors[1:])


def _check_domain(p, ring, n):
    if p.ring != ring or p.nvars != n:
        raise SpecMismatch(_("%s lives in %s[x1..x%d], not in %s[x1..x%d]")
                           % (poly_format(p), p.ring, p.nvars, ring, n))


def apply_phi(p: Polynomial, ring: RingSpec, n: int, minors: Optional[MinorTable] = None) -> Polynomial:
    _check_domain(p, ring, n)
    return substitute(p, phi_homomorphism(ring, n, minors))


def apply_phi_twice(p: Polynomial, ring: RingSpec, n: int, minors: Optional[MinorTable] = None) -> Polynomial:
    _check_domain(p, ring, n)
    phi = phi_homomorphism(ring, n, minors)
    return substitute(substitute(p, phi), phi)


def phi_squared(ring: RingSpec, n: int, minors: Optional[MinorTable] = None) -> Homomorphism:
    """phi o phi as a map of its own; the identity when the table is right."""
    phi = phi_homomorphism(ring, n, minors)
    return compose(phi, phi)


@dataclass(frozen=True)
class GeneratorCheck:
    k: int
    passed: bool
    image: Polynomial
    double_image: Polynomial


@dataclass(frozen=True)
class InvolutionReport:
    ring: RingSpec
    n: int
    per_generator: Tuple[GeneratorCheck, ...] = ()

    @property
    def overall(self):
        return all(check.passed for check in self.per_generator)

    def failures(self):
        return [check.k for check in self.per_generator if not check.passed]

    def to_json(self):
        return {
            "ring": str(self.ring),
            "n": self.n,
            "overall": self.overall,
            "generators": [{
                "k": check.k,
                "pass": check.passed,
                "image": poly_to_json(check.image),
                "double_image": poly_to_json(check.double_image),
            } for check in self.per_generator],
        }


def verify_involution(ring: RingSpec, n: int, minors: Optional[MinorTable] = None) -> InvolutionReport:
    """
    Check phi(phi(x_k)) = x_k for every 1 <= k <= n. Mathematical failure is
    recorded in the report, never raised.
    """
    phi = phi_homomorphism(ring, n, minors)
    checks = []
    for k in range(1, n + 1):
        generator = Polynomial.generator(ring, n, k)
        image = phi.image(k)
        double_image = substitute(image, phi)
        passed = double_image == generator
        if passed:
            msg.debug(_("phi(phi(x%d)) = x%d"), k, k)
        else:
            msg.info(_("phi(phi(x%d)) = %s, expected x%d"), k, poly_format(double_image), k)
        checks.append(GeneratorCheck(k, passed, image, double_image))
    return InvolutionReport(ring, n, tuple(checks))

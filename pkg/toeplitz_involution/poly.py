# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
"""
Sparse multivariate polynomials over a RingSpec, in the variables x1..xn.

A polynomial is a map from exponent vectors (tuples of length n) to nonzero
canonical coefficients. The representation is unique, so equality of
polynomials is equality of their term maps. Terms are put in the canonical
order (total degree first, then lexicographic with x1 highest, both
decreasing) only when they are formatted or iterated for output.

The text grammar understood by poly_parse is

    poly   := term (("+" | "-") term)* | "0"
    term   := coeff | coeff "*" monom | monom
    monom  := var ("*" var)*
    var    := "x" index ("^" exponent)?
    coeff  := optionally signed decimal integer

with whitespace allowed around tokens and a leading "-" negating the first
term. poly_format produces text in this grammar.
"""

import re
from typing import Dict, Iterable, Iterator, Sequence, Tuple

import logging
msg = logging.getLogger(__name__)
from toeplitz_involution import (ParseError, RangeError, SpecMismatch,
                                 VariableOutOfRange)
from toeplitz_involution.ring import RingElement, RingSpec, parse_ring_spec
from toeplitz_involution.util import _

Monomial = Tuple[int, ...]


def canonical_key(monomial: Monomial):
    """Sort key of the canonical order, to be used with reverse=True."""
    return (sum(monomial), monomial)


def ordered_monomials(monomials: Iterable[Monomial]):
    return sorted(monomials, key=canonical_key, reverse=True)


def weighted_degree(monomial: Monomial, weights: Sequence[int]) -> int:
    if len(weights) != len(monomial):
        raise RangeError(
            _("%d weights given for %d variables") % (len(weights), len(monomial)))
    if any(w < 1 for w in weights):
        raise RangeError(_("weights must be positive integers"))
    return sum(e * w for e, w in zip(monomial, weights))


def _coefficient_value(coeff, ring):
    """The integer behind a coefficient given as an int or a RingElement of ring."""
    if isinstance(coeff, RingElement):
        if coeff.spec != ring:
            raise SpecMismatch(_("coefficient from %s in a polynomial over %s") % (coeff.spec, ring))
        return coeff.value
    return coeff


class Polynomial:
    """
    An immutable element of R[x1..xn]. Coefficients are stored as canonical
    integers of 'ring'; the public accessors hand out RingElements.
    """

    __slots__ = ("ring", "nvars", "_terms", "_hash")

    def __init__(self, ring: RingSpec, nvars: int, terms=None):
        """
        'terms' maps exponent vectors to integers or RingElements. Equal
        monomials cannot repeat in a mapping; use from_terms to merge a list.
        """
        if nvars < 0:
            raise RangeError(_("negative variable count %d") % nvars)
        acc = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != nvars or any(e < 0 for e in monomial):
                raise RangeError(
                    _("exponent vector %r does not fit %d variables") % (monomial, nvars))
            acc[monomial] = _coefficient_value(coeff, ring)
        self._init(ring, nvars, acc)

    def _init(self, ring, nvars, acc):
        self.ring = ring
        self.nvars = nvars
        canonical = ring.canonical
        terms = {}
        for monomial, coeff in acc.items():
            coeff = canonical(coeff)
            if coeff:
                terms[monomial] = coeff
        self._terms = terms
        self._hash = None

    @classmethod
    def _make(cls, ring, nvars, acc):
        """Build from an accumulator whose monomials are already well formed."""
        p = cls.__new__(cls)
        p._init(ring, nvars, acc)
        return p

    #-- Constructors --{{{2

    @classmethod
    def from_terms(cls, ring, nvars, terms: Iterable[Tuple[int, Monomial]]):
        """Merge (coefficient, exponent vector) pairs; repeats are added."""
        acc = {}
        for coeff, monomial in terms:
            monomial = tuple(monomial)
            acc[monomial] = acc.get(monomial, 0) + _coefficient_value(coeff, ring)
        return cls(ring, nvars, acc)

    @classmethod
    def zero(cls, ring, nvars):
        return cls._make(ring, nvars, {})

    @classmethod
    def constant(cls, ring, nvars, value):
        return cls._make(ring, nvars, {(0,) * nvars: _coefficient_value(value, ring)})

    @classmethod
    def one(cls, ring, nvars):
        return cls.constant(ring, nvars, 1)

    @classmethod
    def generator(cls, ring, nvars, k):
        """The variable x_k, 1 <= k <= nvars."""
        if not 1 <= k <= nvars:
            raise RangeError(_("no variable x%d among x1..x%d") % (k, nvars))
        exps = [0] * nvars
        exps[k - 1] = 1
        return cls._make(ring, nvars, {tuple(exps): 1})

    #-- Accessors --{{{2

    @property
    def terms(self) -> Dict[Monomial, RingElement]:
        return {m: RingElement(self.ring, c) for m, c in self._terms.items()}

    def items(self) -> Iterator[Tuple[Monomial, RingElement]]:
        """Terms in canonical order."""
        for monomial in ordered_monomials(self._terms):
            yield monomial, RingElement(self.ring, self._terms[monomial])

    def coefficient(self, monomial: Monomial) -> RingElement:
        return RingElement(self.ring, self._terms.get(tuple(monomial), 0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def total_degree(self):
        """Largest total degree of a term, -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def support(self):
        """1-based indices of the variables occurring in some term."""
        return sorted({i + 1 for m in self._terms for i, e in enumerate(m) if e})

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring == other.ring and self.nvars == other.nvars
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __neg__(self):
        return poly_neg(self)

    def __pow__(self, exponent):
        return poly_pow(self, exponent)

    def __str__(self):
        return poly_format(self)

    def __repr__(self):
        return "Polynomial(%s, %d, %r)" % (self.ring, self.nvars, poly_format(self))


#-- Arithmetic --{{{1


def _check_compatible(p, q):
    if p.ring != q.ring:
        raise SpecMismatch(_("ring mismatch: %s and %s") % (p.ring, q.ring))
    if p.nvars != q.nvars:
        raise SpecMismatch(_("variable count mismatch: %d and %d") % (p.nvars, q.nvars))


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_compatible(p, q)
    acc = dict(p._terms)
    for monomial, coeff in q._terms.items():
        acc[monomial] = acc.get(monomial, 0) + coeff
    return Polynomial._make(p.ring, p.nvars, acc)


def poly_neg(p: Polynomial) -> Polynomial:
    return Polynomial._make(p.ring, p.nvars, {m: -c for m, c in p._terms.items()})


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_compatible(p, q)
    acc = dict(p._terms)
    for monomial, coeff in q._terms.items():
        acc[monomial] = acc.get(monomial, 0) - coeff
    return Polynomial._make(p.ring, p.nvars, acc)


def poly_scale(p: Polynomial, c) -> Polynomial:
    """Multiply by a ring element (or a plain integer, read in p.ring)."""
    c = _coefficient_value(c, p.ring)
    return Polynomial._make(p.ring, p.nvars, {m: c * v for m, v in p._terms.items()})


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_compatible(p, q)
    if not p._terms or not q._terms:
        return Polynomial.zero(p.ring, p.nvars)
    acc = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            monomial = tuple(a + b for a, b in zip(m1, m2))
            acc[monomial] = acc.get(monomial, 0) + c1 * c2
    # products of zero divisors vanish here
    return Polynomial._make(p.ring, p.nvars, acc)


def poly_pow(p: Polynomial, exponent: int) -> Polynomial:
    if exponent < 0:
        raise RangeError(_("negative exponent %d") % exponent)
    result = Polynomial.one(p.ring, p.nvars)
    base = p
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        exponent >>= 1
        if exponent:
            base = poly_mul(base, base)
    return result


def is_weighted_homogeneous(p: Polynomial, weights: Sequence[int], degree=None) -> bool:
    """
    True when every term of p has the same weighted degree, which must equal
    'degree' if it is given. The zero polynomial is homogeneous of any degree.
    """
    degrees = {weighted_degree(m, weights) for m in p._terms}
    if degree is not None:
        return degrees <= {degree}
    return len(degrees) <= 1


def change_ring(p: Polynomial, spec: RingSpec) -> Polynomial:
    """
    Apply the quotient map Z -> Z/M, or Z/M -> Z/D when D divides M,
    coefficientwise.
    """
    if p.ring == spec:
        return p
    if p.ring.modulus is not None and (spec.modulus is None or p.ring.modulus % spec.modulus):
        raise SpecMismatch(_("no quotient map from %s to %s") % (p.ring, spec))
    return Polynomial._make(spec, p.nvars, dict(p._terms))


#-- Substitution --{{{1


class Homomorphism:
    """
    The R-algebra endomorphism of R[x1..xn] sending x_k to images[k-1].
    """

    __slots__ = ("ring", "nvars", "images")

    def __init__(self, ring: RingSpec, nvars: int, images: Sequence[Polynomial]):
        images = tuple(images)
        if len(images) != nvars:
            raise RangeError(_("%d images given for %d generators") % (len(images), nvars))
        for image in images:
            if image.ring != ring or image.nvars != nvars:
                raise SpecMismatch(_("image %s does not live in %s[x1..x%d]")
                                   % (poly_format(image), ring, nvars))
        self.ring = ring
        self.nvars = nvars
        self.images = images

    @classmethod
    def identity(cls, ring, nvars):
        return cls(ring, nvars, [Polynomial.generator(ring, nvars, k) for k in range(1, nvars + 1)])

    def image(self, k):
        """Image of x_k, 1-based."""
        if not 1 <= k <= self.nvars:
            raise RangeError(_("no generator x%d among x1..x%d") % (k, self.nvars))
        return self.images[k - 1]

    def is_identity(self):
        return self == Homomorphism.identity(self.ring, self.nvars)

    def __call__(self, p):
        return substitute(p, self)

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (self.ring, self.nvars, self.images) == (other.ring, other.nvars, other.images)

    def __hash__(self):
        return hash((self.ring, self.nvars, self.images))


def substitute(p: Polynomial, h: Homomorphism) -> Polynomial:
    """
    Image of p under h. Powers of each image and images of monomial prefixes
    (x1^e1 ... xj^ej) are cached for the duration of the call.
    """
    if p.ring != h.ring or p.nvars != h.nvars:
        raise SpecMismatch(_("cannot substitute into a polynomial of %s[x1..x%d] with a map of %s[x1..x%d]")
                           % (p.ring, p.nvars, h.ring, h.nvars))
    ring, nvars = p.ring, p.nvars
    one = Polynomial.one(ring, nvars)
    powers = [[one] for _ in range(nvars)]

    def power(i, e):
        table = powers[i]
        while len(table) <= e:
            table.append(poly_mul(table[-1], h.images[i]))
        return table[e]

    prefixes = {(): one}
    acc = {}
    for monomial, coeff in p._terms.items():
        image = one
        for j in range(nvars):
            key = monomial[:j + 1]
            cached = prefixes.get(key)
            if cached is None:
                e = monomial[j]
                cached = poly_mul(image, power(j, e)) if e else image
                prefixes[key] = cached
            image = cached
        for m, c in image._terms.items():
            acc[m] = acc.get(m, 0) + coeff * c
    return Polynomial._make(ring, nvars, acc)


def compose(g: Homomorphism, h: Homomorphism) -> Homomorphism:
    """g after h: x_k goes to g(h(x_k))."""
    if g.ring != h.ring or g.nvars != h.nvars:
        raise SpecMismatch(_("cannot compose maps of %s[x1..x%d] and %s[x1..x%d]")
                           % (g.ring, g.nvars, h.ring, h.nvars))
    return Homomorphism(g.ring, g.nvars, [substitute(image, g) for image in h.images])


#-- Text forms --{{{1


def _format_monomial(monomial):
    factors = []
    for i, e in enumerate(monomial, 1):
        if e == 1:
            factors.append("x%d" % i)
        elif e > 1:
            factors.append("x%d^%d" % (i, e))
    return "*".join(factors)


def poly_format(p: Polynomial) -> str:
    if not p._terms:
        return "0"
    pieces = []
    for monomial in ordered_monomials(p._terms):
        coeff = p._terms[monomial]
        negative = coeff < 0
        size = -coeff if negative else coeff
        body = _format_monomial(monomial)
        if not body:
            text = str(size)
        elif size == 1:
            text = body
        else:
            text = "%d*%s" % (size, body)
        if not pieces:
            pieces.append("-" + text if negative else text)
        else:
            pieces.append(("- " if negative else "+ ") + text)
    return " ".join(pieces)


re_digits = re.compile(r"[0-9]+")
re_signed = re.compile(r"[+-]?[0-9]+")


def _isdigit(c):
    return c != "" and c in "0123456789"


class _Parser:
    """
    Recursive descent over the characters of 'text'; every error carries the
    offset where it was detected.
    """

    def __init__(self, ring, nvars, text):
        self.ring = ring
        self.nvars = nvars
        self.text = text
        self.pos = 0

    def error(self, reason, pos=None):
        raise ParseError(reason, self.text, self.pos if pos is None else pos)

    def peek(self, offset=0):
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def skip(self):
        while self.peek() and self.peek() in " \t\r\n":
            self.pos += 1

    def parse(self):
        acc = {}
        self.skip()
        sign = 1
        if self.peek() == "-" and not _isdigit(self.peek(1)):
            sign = -1
            self.pos += 1
        self.term(sign, acc)
        while True:
            self.skip()
            c = self.peek()
            if not c:
                break
            if c not in "+-":
                self.error(_("expected '+' or '-', found '%s'") % c)
            self.pos += 1
            self.term(1 if c == "+" else -1, acc)
        return Polynomial._make(self.ring, self.nvars, acc)

    def term(self, sign, acc):
        self.skip()
        c = self.peek()
        if _isdigit(c) or (c in ("+", "-") and _isdigit(self.peek(1))):
            m = re_signed.match(self.text, self.pos)
            coeff = int(m.group())
            self.pos = m.end()
            self.skip()
            if self.peek() == "*":
                self.pos += 1
                monomial = self.monomial()
            else:
                monomial = (0,) * self.nvars
        elif c == "x":
            coeff = 1
            monomial = self.monomial()
        elif not c:
            self.error(_("unexpected end of input, expected a term"))
        else:
            self.error(_("expected a coefficient or a variable, found '%s'") % c)
        acc[monomial] = acc.get(monomial, 0) + sign * coeff

    def monomial(self):
        exps = [0] * self.nvars
        self.variable(exps)
        while True:
            self.skip()
            if self.peek() != "*":
                break
            self.pos += 1
            self.variable(exps)
        return tuple(exps)

    def variable(self, exps):
        self.skip()
        start = self.pos
        if self.peek() != "x":
            if not self.peek():
                self.error(_("unexpected end of input, expected a variable"))
            self.error(_("expected a variable, found '%s'") % self.peek())
        self.pos += 1
        m = re_digits.match(self.text, self.pos)
        if not m:
            self.error(_("expected a variable index after 'x'"))
        index = int(m.group())
        self.pos = m.end()
        exponent = 1
        save = self.pos
        self.skip()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            m = re_digits.match(self.text, self.pos)
            if not m:
                self.error(_("expected an exponent after '^'"))
            exponent = int(m.group())
            self.pos = m.end()
        else:
            self.pos = save
        if not 1 <= index <= self.nvars:
            raise VariableOutOfRange(index, self.nvars, self.text, start)
        exps[index - 1] += exponent


def poly_parse(ring: RingSpec, nvars: int, text: str) -> Polynomial:
    return _Parser(ring, nvars, text).parse()


def poly_to_json(p: Polynomial):
    return {
        "ring": str(p.ring),
        "nvars": p.nvars,
        "terms": [{"coeff": str(c.value), "exps": list(m)} for m, c in p.items()],
    }


def poly_from_json(obj) -> Polynomial:
    try:
        ring = parse_ring_spec(obj["ring"])
        nvars = int(obj["nvars"])
        terms = [(int(t["coeff"]), tuple(int(e) for e in t["exps"])) for t in obj["terms"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(_("malformed polynomial object: %s") % e)
    return Polynomial.from_terms(ring, nvars, terms)

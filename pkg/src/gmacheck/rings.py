"""Sparse multivariate polynomial arithmetic over weighted-graded rings.

A WeightedRing fixes variable names, an integer weight per variable (the
grading), a coefficient domain, a monomial order, and an optional list of
homogeneous relations (generators of the defining ideal).  Polynomial
arithmetic is free-ring arithmetic; reduction modulo the relations is a
separate, explicit operation backed by the Groebner engine.

Monomials are exponent tuples.  The monomial order never sees the weights:
weights are bookkeeping for the grading only.
"""

import threading

from .coeffs import ZZ, CoefficientDomain, DomainError


class RingError(ValueError):
    pass


class InhomogeneousError(RingError):
    """A polynomial mixes terms of different graded weights."""


class ZeroWeightUndefinedError(RingError):
    """The zero polynomial has no weight."""


class ParseError(RingError):
    def __init__(self, message, pos=None):
        super().__init__(message if pos is None else "%s (at position %d)" % (message, pos))
        self.pos = pos


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_divides(b, a):
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def _lex_key(exps):
    return exps


def _degrevlex_key(exps):
    # Total degree first; ties broken by the last differing exponent,
    # negated -- encoded as the reversed, negated exponent vector.
    return (sum(exps), tuple(-e for e in reversed(exps)))


ORDER_KEYS = {"lex": _lex_key, "degrevlex": _degrevlex_key}


def monomial_compare(order, m1, m2):
    """Total-order comparison under `order` ('lex' or 'degrevlex').

    Returns -1, 0 or 1.  Variable precedence is positional (declaration
    order of the ring the monomials came from).
    """
    if order not in ORDER_KEYS:
        raise RingError("unknown monomial order %r" % (order,))
    if len(m1) != len(m2):
        raise RingError("monomial length mismatch: %d vs %d" % (len(m1), len(m2)))
    k1, k2 = ORDER_KEYS[order](m1), ORDER_KEYS[order](m2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


# ---------------------------------------------------------------------------


class WeightedRing:
    """A weighted-graded polynomial ring, optionally with relations.

    Relations are stored as (free-ring) Polynomials and must each be
    weight-homogeneous.  The Groebner basis of the relation ideal is
    computed lazily exactly once (race-safe).
    """

    def __init__(self, names, weights=None, domain=ZZ, order="degrevlex", relations=()):
        names = list(names)
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names: %r" % (names,))
        for n in names:
            if not n or not (n[0].isalpha() or n[0] == "_") or not n.isidentifier():
                raise RingError("bad variable name %r" % (n,))
        if weights is None:
            weights = [0] * len(names)
        weights = [int(w) for w in weights]
        if len(weights) != len(names):
            raise RingError("need one weight per variable")
        if order not in ORDER_KEYS:
            raise RingError("unknown monomial order %r" % (order,))
        if not isinstance(domain, CoefficientDomain):
            raise RingError("domain must be a CoefficientDomain")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.domain = domain
        self.order = order
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}
        self._key = ORDER_KEYS[order]
        self.relations = tuple(
            self.parse(r) if isinstance(r, str) else self._own(r) for r in relations
        )
        for r in self.relations:
            if r.is_zero():
                raise RingError("zero relation")
            r.weight()  # raises InhomogeneousError when not homogeneous
        self._rel_gb = None
        self._rel_lock = threading.Lock()

    # -- construction helpers ------------------------------------------------

    def _own(self, poly):
        if not isinstance(poly, Polynomial):
            raise RingError("expected a Polynomial, got %r" % (poly,))
        if poly.ring is self:
            return poly
        # accept a polynomial from a structurally identical presentation
        # (compare raw fields: serialize() is unusable mid-construction)
        other = poly.ring
        if (
            other.names == self.names
            and other.weights == self.weights
            and other.domain == self.domain
            and other.order == self.order
        ):
            return Polynomial(self, dict(poly.terms))
        raise RingError("polynomial belongs to a different ring")

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.domain.normalize(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        if name not in self._index:
            raise RingError("no variable %r in %r" % (name, self.names))
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): self.domain.from_int(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def from_terms(self, terms):
        out = {}
        for m, c in terms.items():
            c = self.domain.normalize(c)
            if c != 0:
                out[tuple(m)] = c
        return Polynomial(self, out)

    # -- order / weights -----------------------------------------------------

    def mono_key(self, m):
        return self._key(m)

    def mono_weight(self, m):
        return sum(e * w for e, w in zip(m, self.weights))

    def mono_str(self, m):
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    # -- relation ideal ------------------------------------------------------

    def relation_basis(self):
        """GroebnerBasis of the relation ideal (lazy, compute-once)."""
        if self._rel_gb is None:
            with self._rel_lock:
                if self._rel_gb is None:
                    from .groebner import groebner_basis

                    self._rel_gb = groebner_basis(list(self.relations), ring=self)
        return self._rel_gb

    def nf(self, f):
        """Normal form of f modulo the relation ideal."""
        if not self.relations:
            return self._own(f)
        from .groebner import normal_form

        return normal_form(self._own(f), self.relation_basis())

    # -- conversion ----------------------------------------------------------

    def convert(self, f, target):
        """Map f into `target` by variable name, coercing coefficients.

        Every variable of self must exist in target.  Used for coefficient
        base change (same names) and for ring extensions (more names).
        """
        idx = []
        for n in self.names:
            if n not in target._index:
                raise RingError("target ring lacks variable %r" % n)
            idx.append(target._index[n])
        out = {}
        for m, c in f.terms.items():
            e = [0] * target.nvars
            for i, exp in enumerate(m):
                if exp:
                    e[idx[i]] = exp
            cc = _coerce_coeff(c, target.domain)
            if cc != 0:
                key = tuple(e)
                out[key] = target.domain.add(out.get(key, 0), cc) if key in out else cc
        return Polynomial(target, {m: c for m, c in out.items() if c != 0})

    def with_domain(self, domain):
        """The same presentation over another coefficient domain."""
        if domain == self.domain:
            return self
        shell = WeightedRing(self.names, self.weights, domain, self.order, ())
        rels = [self.convert(r, shell) for r in self.relations]
        rels = [r for r in rels if not r.is_zero()]
        return WeightedRing(self.names, self.weights, domain, self.order, rels)

    def extended(self, extra_names, extra_weights, extra_relations=()):
        """A ring with additional variables (and optional extra relations).

        Existing relations are carried over; extra relation strings are
        parsed in the extended ring.
        """
        shell = WeightedRing(
            list(self.names) + list(extra_names),
            list(self.weights) + list(extra_weights),
            self.domain,
            self.order,
            (),
        )
        rels = [self.convert(r, shell) for r in self.relations]
        for t in extra_relations:
            rels.append(shell.parse(t) if isinstance(t, str) else t)
        return WeightedRing(shell.names, shell.weights, self.domain, self.order, rels)

    # -- parsing / printing --------------------------------------------------

    def parse(self, text):
        return _parse_poly(self, text)

    def serialize(self):
        vars_part = ",".join("%s:%d" % (n, w) for n, w in zip(self.names, self.weights))
        rel_part = ";".join(sorted(str(r) for r in self.relations))
        return "%s[%s|%s]/(%s)" % (self.domain.name, vars_part, self.order, rel_part)

    def __repr__(self):
        return "<WeightedRing %s>" % self.serialize()

    def __eq__(self, other):
        return isinstance(other, WeightedRing) and self.serialize() == other.serialize()

    def __hash__(self):
        return hash(self.serialize())


def _coerce_coeff(c, domain):
    from fractions import Fraction

    if isinstance(c, Fraction) and not domain.is_field and domain.characteristic == 0:
        if c.denominator != 1:
            raise DomainError("cannot coerce %s into %s" % (c, domain.name))
        return domain.normalize(c.numerator)
    if isinstance(c, Fraction) and domain.characteristic > 0:
        num = domain.from_int(c.numerator)
        den = domain.from_int(c.denominator)
        return domain.mul(num, domain.inv(den))
    return domain.normalize(c)


class Polynomial:
    """Immutable sparse polynomial: finite map exponent-tuple -> coefficient."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._sorted = None

    # -- basic structure -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in descending monomial order (canonical iteration order)."""
        if self._sorted is None:
            key = self.ring.mono_key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def lead(self):
        """(monomial, coefficient) of the leading term."""
        if not self.terms:
            raise RingError("zero polynomial has no lead term")
        m = max(self.terms, key=self.ring.mono_key)
        return m, self.terms[m]

    def coeff(self, mono):
        return self.terms.get(tuple(mono), 0)

    def constant(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    # -- grading -------------------------------------------------------------

    def weight(self):
        """The common graded weight of all terms.

        Raises ZeroWeightUndefinedError on 0 and InhomogeneousError when two
        terms disagree (the error message names both offending terms).
        """
        if not self.terms:
            raise ZeroWeightUndefinedError("zero polynomial has no weight")
        it = iter(self.terms)
        first = next(it)
        w = self.ring.mono_weight(first)
        for m in it:
            w2 = self.ring.mono_weight(m)
            if w2 != w:
                raise InhomogeneousError(
                    "inhomogeneous: %s has weight %d but %s has weight %d"
                    % (self.ring.mono_str(first), w, self.ring.mono_str(m), w2)
                )
        return w

    def is_homogeneous(self):
        try:
            self.weight()
            return True
        except InhomogeneousError:
            return False
        except ZeroWeightUndefinedError:
            return True

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError("expected Polynomial, got %r" % type(other))
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingError("ring mismatch: %r vs %r" % (self.ring, other.ring))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = dom.add(out.get(m, 0), c)
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        dom = self.ring.domain
        return Polynomial(self.ring, {m: dom.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = self.ring.domain.from_int(other)
            if c == 0:
                return self.ring.zero()
            dom = self.ring.domain
            return Polynomial(
                self.ring,
                {m: v for m, v in ((m, dom.mul(cc, c)) for m, cc in self.terms.items()) if v != 0},
            )
        self._check(other)
        dom = self.ring.domain
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = dom.add(out.get(m, 0), dom.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise RingError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply by a raw domain coefficient."""
        dom = self.ring.domain
        c = dom.normalize(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {m: v for m, v in ((m, dom.mul(cc, c)) for m, cc in self.terms.items()) if v != 0},
        )

    def mono_shift(self, mono, c=1):
        """Multiply by the single term c * x^mono."""
        dom = self.ring.domain
        c = dom.normalize(c)
        if c == 0:
            return self.ring.zero()
        out = {}
        for m, cc in self.terms.items():
            v = dom.mul(cc, c)
            if v != 0:
                out[mono_mul(m, mono)] = v
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        chunks = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = _coeff_is_negative(c)
            mag = -c if neg else c
            mono = self.ring.mono_str(m)
            if mono == "1":
                body = dom.str_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s*%s" % (dom.str_coeff(mag), mono)
            if i == 0:
                chunks.append("-" + body if neg else body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return "<poly %s>" % self


def _coeff_is_negative(c):
    try:
        return c < 0
    except TypeError:
        return False


# ---------------------------------------------------------------------------
# spec-named free functions


def poly_mul(f, g):
    """Free-ring product of two polynomials of the same ring."""
    if not isinstance(f, Polynomial) or not isinstance(g, Polynomial):
        raise RingError("poly_mul expects Polynomials")
    if f.ring != g.ring:
        raise RingError("ring mismatch: %r vs %r" % (f.ring, g.ring))
    return f * g


def weight_of(f):
    """Common graded weight of all terms of f (errors on 0/inhomogeneous)."""
    if not isinstance(f, Polynomial):
        raise RingError("weight_of expects a Polynomial")
    return f.weight()


# ---------------------------------------------------------------------------
# parser: numbers, names, + - * ^ and parentheses


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            # rational literal p/q (only when q is a plain integer)
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                tokens.append(("num", text[i:k], i))
                i = k
            else:
                tokens.append(("num", text[i:j], i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError("expected %r, got %r" % (kind, t[1] or "end of input"), t[2])
        return t

    def parse(self):
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("trailing input %r" % t[1], t[2])
        return p

    def expr(self):
        t = self.peek()
        if t[0] == "-":
            self.next()
            p = -self.term()
        else:
            if t[0] == "+":
                self.next()
            p = self.term()
        while True:
            t = self.peek()
            if t[0] == "+":
                self.next()
                p = p + self.term()
            elif t[0] == "-":
                self.next()
                p = p - self.term()
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            t = self.peek()
            if t[0] == "*":
                self.next()
                p = p * self.factor()
            elif t[0] in ("name", "num", "("):
                # implicit product (e.g. "2 t1" is rejected; adjacency only
                # happens through parentheses like "2(x+y)")
                if t[0] == "(":
                    p = p * self.factor()
                else:
                    raise ParseError("missing '*' before %r" % t[1], t[2])
            else:
                return p

    def factor(self):
        t = self.next()
        if t[0] == "num":
            try:
                c = self.ring.domain.parse_coeff(t[1])
            except (ValueError, DomainError) as e:
                raise ParseError("bad coefficient %r: %s" % (t[1], e), t[2])
            base = self.ring.const(c)
        elif t[0] == "name":
            if t[1] not in self.ring._index:
                raise ParseError("unknown variable %r" % t[1], t[2])
            base = self.ring.var(t[1])
        elif t[0] == "(":
            base = self.expr()
            self.expect(")")
        elif t[0] == "-":
            return -self.factor()
        else:
            raise ParseError("unexpected %r" % (t[1] or "end of input"), t[2])
        if self.peek()[0] == "^":
            self.next()
            e = self.expect("num")
            if "/" in e[1]:
                raise ParseError("exponent must be an integer", e[2])
            base = base ** int(e[1])
        return base


def _parse_poly(ring, text):
    return _Parser(ring, text).parse()

"""Exact coefficient domains: integers, rationals, residues mod an odd prime.

Coefficient values are plain Python objects (int for ZZ and FP, Fraction
for QQ); a domain object carries only the behaviour that differs between
them: normalization, invertibility, and division-with-remainder (used by
strong reduction over the integers).
"""

from fractions import Fraction


class DomainError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class CoefficientDomain:
    """Base class; subclasses define normalize/is_unit/inv/divmod_reduce."""

    is_field = False
    characteristic = 0
    name = "?"

    def normalize(self, c):
        raise NotImplementedError

    def from_int(self, n):
        return self.normalize(n)

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def is_unit(self, c):
        raise NotImplementedError

    def inv(self, c):
        raise NotImplementedError

    def divmod_reduce(self, a, b):
        """q, r with a = q*b + r and r the canonical residue (fields: r = 0)."""
        raise NotImplementedError

    def str_coeff(self, c):
        return str(c)

    def parse_coeff(self, text):
        raise NotImplementedError

    def __repr__(self):
        return "<domain %s>" % self.name

    def __eq__(self, other):
        return isinstance(other, CoefficientDomain) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class IntegerDomain(CoefficientDomain):
    is_field = False
    characteristic = 0
    name = "zz"

    def normalize(self, c):
        return int(c)

    def is_unit(self, c):
        return c == 1 or c == -1

    def inv(self, c):
        if not self.is_unit(c):
            raise DomainError("not a unit in ZZ: %r" % (c,))
        return c

    def divmod_reduce(self, a, b):
        # b is kept positive by lead normalization; Python floor divmod
        # then gives the residue in [0, b).
        return divmod(a, b)

    def parse_coeff(self, text):
        return int(text)


class RationalDomain(CoefficientDomain):
    is_field = True
    characteristic = 0
    name = "qq"

    def normalize(self, c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def is_unit(self, c):
        return c != 0

    def inv(self, c):
        if c == 0:
            raise DomainError("division by zero in QQ")
        return 1 / self.normalize(c)

    def divmod_reduce(self, a, b):
        return self.normalize(a) / self.normalize(b), Fraction(0)

    def str_coeff(self, c):
        return str(c)

    def parse_coeff(self, text):
        return Fraction(text)


class PrimeFieldDomain(CoefficientDomain):
    is_field = True

    def __init__(self, p):
        if not _is_prime(p) or p == 2:
            raise DomainError("modulus must be an odd prime, got %r" % (p,))
        self.p = p
        self.characteristic = p
        self.name = "fp:%d" % p

    def normalize(self, c):
        return int(c) % self.p

    def is_unit(self, c):
        return c % self.p != 0

    def inv(self, c):
        c = self.normalize(c)
        if c == 0:
            raise DomainError("division by zero mod %d" % self.p)
        return pow(c, -1, self.p)

    def divmod_reduce(self, a, b):
        return self.mul(a, self.inv(b)), 0

    def parse_coeff(self, text):
        return self.normalize(int(text))


ZZ = IntegerDomain()
QQ = RationalDomain()

_fp_cache = {}


def FP(p):
    if p not in _fp_cache:
        _fp_cache[p] = PrimeFieldDomain(p)
    return _fp_cache[p]


def parse_domain(text):
    """Parse a domain descriptor: 'zz', 'qq' or 'fp:<odd prime>'."""
    if text == "zz":
        return ZZ
    if text == "qq":
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise DomainError("bad prime in %r" % text)
        return FP(p)
    raise DomainError("unknown coefficient domain %r" % text)


def xgcd(a, b):
    """Extended gcd: returns (g, x, y) with g = gcd(a,b) = a*x + b*y, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0

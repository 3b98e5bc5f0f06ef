"""Scalar ring tower: rationals, odd prime fields, float64, and nested
dual-number extensions R[eps] with eps^2 = 0.

Scalars are plain Python values (fractions.Fraction, float, Fp, Dual) so
the generic matrix kernels can use operator syntax; everything that needs
ring context (unit tests, inversion, zero/one, JSON) goes through a Ring
object. All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit, NotDual, RingMismatch

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rational = Fraction


class Fp:
    """Residue in an odd prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _check(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise RingMismatch(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        w = self._check(other)
        if w is None:
            return NotImplemented
        return Fp(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._check(other)
        if w is None:
            return NotImplemented
        return Fp(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._check(other)
        if w is None:
            return NotImplemented
        return Fp(w - self.v, self.p)

    def __mul__(self, other):
        w = self._check(other)
        if w is None:
            return NotImplemented
        return Fp(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}#%{self.p}"


class Dual:
    """a + b*eps over some base ring, eps^2 = 0.

    Parts may themselves be Dual values (nested extensions with
    independent nilpotents).
    """

    __slots__ = ("re", "eps")

    def __init__(self, re, eps):
        self.re = re
        self.eps = eps

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re + other.re, self.eps + other.eps)
        if isinstance(other, int):
            return Dual(self.re + other, self.eps)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re - other.re, self.eps - other.eps)
        if isinstance(other, int):
            return Dual(self.re - other, self.eps)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dual(other - self.re, -self.eps)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.re * other.re, self.re * other.eps + self.eps * other.re)
        if isinstance(other, int):
            return Dual(self.re * other, self.eps * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Dual(-self.re, -self.eps)

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.re == other.re and self.eps == other.eps
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.eps))

    def __repr__(self):
        return f"({self.re!r}+{self.eps!r}e)"


@dataclass(frozen=True)
class Ring:
    kind = "abstract"

    @property
    def depth(self):
        return 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k):
        raise NotImplementedError

    def is_unit(self, s):
        raise NotImplementedError

    def invert(self, s):
        raise NotImplementedError

    def pivot_magnitude(self, s):
        """Sort key for pivot selection; None means first unit wins."""
        return None

    def half(self):
        return self.invert(self.from_int(2))

    def inv_int(self, k):
        return self.invert(self.from_int(k))

    def is_exact(self):
        return True


@dataclass(frozen=True)
class RationalRing(Ring):
    kind = "rational"

    def zero(self):
        return _rational(0)

    def one(self):
        return _rational(1)

    def from_int(self, k):
        return _rational(k)

    def from_fraction(self, q):
        return _rational(q.numerator) / _rational(q.denominator)

    def is_unit(self, s):
        return s != 0

    def invert(self, s):
        if s == 0:
            raise NotAUnit("0 has no inverse")
        return 1 / s

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class Float64Ring(Ring):
    unit_tol: float = 1e-12
    kind = "float64"

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def from_int(self, k):
        return float(k)

    def is_unit(self, s):
        return abs(s) > self.unit_tol

    def invert(self, s):
        if not self.is_unit(s):
            raise NotAUnit(f"|{s}| below unit tolerance")
        return 1.0 / s

    def pivot_magnitude(self, s):
        return abs(s)

    def is_exact(self):
        return False

    def __repr__(self):
        return "R64"


def _is_odd_prime(p):
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeFieldRing(Ring):
    p: int
    kind = "prime_field"

    def __post_init__(self):
        if not _is_odd_prime(self.p):
            raise ValueError(f"modulus {self.p} is not an odd prime")

    def zero(self):
        return Fp(0, self.p)

    def one(self):
        return Fp(1, self.p)

    def from_int(self, k):
        return Fp(k, self.p)

    def is_unit(self, s):
        return s.v % self.p != 0

    def invert(self, s):
        if s.v % self.p == 0:
            raise NotAUnit(f"0 mod {self.p} has no inverse")
        return Fp(pow(s.v, -1, self.p), self.p)

    def __repr__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class DualRing(Ring):
    base: Ring
    kind = "dual"

    @property
    def depth(self):
        return 1 + self.base.depth

    def zero(self):
        return Dual(self.base.zero(), self.base.zero())

    def one(self):
        return Dual(self.base.one(), self.base.zero())

    def from_int(self, k):
        return Dual(self.base.from_int(k), self.base.zero())

    def is_unit(self, s):
        return self.base.is_unit(s.re)

    def invert(self, s):
        # (a + b eps)^-1 = a^-1 - a^-1 b a^-1 eps; scalars commute.
        ia = self.base.invert(s.re)
        return Dual(ia, -(ia * s.eps * ia))

    def pivot_magnitude(self, s):
        return self.base.pivot_magnitude(s.re)

    def is_exact(self):
        return self.base.is_exact()

    def lift(self, s):
        """Embed a base-ring scalar."""
        return Dual(s, self.base.zero())

    def __repr__(self):
        return f"{self.base!r}[e]"


RATIONAL = RationalRing()
FLOAT64 = Float64Ring()


def scalar_is_unit(ring, s):
    return ring.is_unit(s)


def scalar_invert(ring, s):
    return ring.invert(s)


def dual_lift(ring, a, b):
    """a + b*eps in DualRing(ring); a, b must live in `ring`."""
    return DualRing(ring), Dual(a, b)


def dual_parts(ring, s):
    if ring.kind != "dual":
        raise NotDual(f"{ring!r} is not a dual ring")
    return s.re, s.eps


def embed_scalar(s, src, dst):
    """Embed a scalar from `src` into `dst`, an iterated dual over `src`."""
    if dst == src:
        return s
    if dst.kind != "dual":
        raise RingMismatch(f"{dst!r} is not an extension of {src!r}")
    return Dual(embed_scalar(s, src, dst.base), dst.base.zero())


def base_chain(ring):
    """[ring, ring.base, ...] down to the non-dual base."""
    out = [ring]
    while ring.kind == "dual":
        ring = ring.base
        out.append(ring)
    return out


# --- JSON encodings -------------------------------------------------------

def ring_to_json(ring):
    if ring.kind == "rational":
        return {"kind": "rational"}
    if ring.kind == "float64":
        return {"kind": "float64"}
    if ring.kind == "prime_field":
        return {"kind": "prime_field", "p": ring.p}
    if ring.kind == "dual":
        return {"kind": "dual", "base": ring_to_json(ring.base)}
    raise ValueError(ring.kind)


def ring_from_json(obj):
    if isinstance(obj, str):
        if obj == "rational":
            return RATIONAL
        if obj == "float64":
            return FLOAT64
        if obj.startswith("fp:"):
            return PrimeFieldRing(int(obj[3:]))
        raise ValueError(f"unknown ring shorthand {obj!r}")
    kind = obj["kind"]
    if kind == "rational":
        return RATIONAL
    if kind == "float64":
        return FLOAT64
    if kind == "prime_field":
        return PrimeFieldRing(obj["p"])
    if kind == "dual":
        return DualRing(ring_from_json(obj["base"]))
    raise ValueError(f"unknown ring kind {kind!r}")


def scalar_to_json(ring, s):
    if ring.kind == "rational":
        return str(s) if s.denominator != 1 else str(s.numerator)
    if ring.kind == "float64":
        return s
    if ring.kind == "prime_field":
        return {"fp": s.v, "p": s.p}
    if ring.kind == "dual":
        return {"re": scalar_to_json(ring.base, s.re),
                "eps": scalar_to_json(ring.base, s.eps)}
    raise ValueError(ring.kind)


def scalar_from_json(ring, obj):
    if ring.kind == "rational":
        if isinstance(obj, (str, int)):
            return _rational(obj)
        raise ValueError(f"bad rational payload {obj!r}")
    if ring.kind == "float64":
        return float(obj)
    if ring.kind == "prime_field":
        if isinstance(obj, int):
            return Fp(obj, ring.p)
        if obj.get("p", ring.p) != ring.p:
            raise RingMismatch(f"payload mod {obj['p']} in F_{ring.p}")
        return Fp(obj["fp"], ring.p)
    if ring.kind == "dual":
        if isinstance(obj, dict) and "re" in obj:
            return Dual(scalar_from_json(ring.base, obj["re"]),
                        scalar_from_json(ring.base, obj["eps"]))
        # plain payload: embedded base scalar
        return ring.lift(scalar_from_json(ring.base, obj))
    raise ValueError(ring.kind)

"""Valued fields with involution.

A field here is ``B(t)`` or ``B`` where the base ``B`` is Q, a prime field
F_q, or a quadratic extension ``B0[α]/(α² + cα + d)``.  The involution acts on
α by ``α ↦ e + fα`` and optionally sends ``t ↦ -t``.  Supported valuations:

* ``t-adic``: order of vanishing at t = 0, trivial on the base;
* ``p-adic``: on a base over Q, either ``inert`` (α² + cα + d irreducible
  mod p, so ``ν(a + bα) = min(ν(a), ν(b))``) or ``split`` (ν through a
  p-adic root of the minimal polynomial, found by Hensel lifting); with t
  present the Gauss extension ``ν(Σ a_i t^i) = min ν(a_i)`` is used;
* ``trivial``.

Elements are kept as gcd-reduced fractions of polynomials in t with a monic
denominator, so equality is structural.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

INF = float("inf")


def _vp(x: int, p: int) -> float:
    if x == 0:
        return INF
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def vp_rational(x: Fraction, p: int) -> float:
    x = Fraction(x)
    if x == 0:
        return INF
    return _vp(x.numerator, p) - _vp(x.denominator, p)


def _small(x):
    # integral rationals are kept as ints, which is much faster
    return x.numerator if x.denominator == 1 else x


# -- base fields -----------------------------------------------------------

class BaseField:
    """Arithmetic on pairs ``(a, b)`` meaning ``a + bα`` (b = 0 without α).

    Coordinates are rationals (int when integral) in characteristic 0 and ints mod q otherwise.
    """

    def __init__(self, q: int, quadratic: bool, c: int, d: int, e: int, f: int):
        self.q = q
        self.quadratic = quadratic
        self.c, self.d, self.e, self.f = (self._coerce(v) for v in (c, d, e, f))
        self.zero = (self._coerce(0), self._coerce(0))
        self.one = (self._coerce(1), self._coerce(0))

    def _coerce(self, v):
        if self.q:
            if isinstance(v, Fraction):
                if v.denominator % self.q == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.q}")
                return v.numerator * pow(v.denominator, -1, self.q) % self.q
            return int(v) % self.q
        return _small(Fraction(v))

    def scalar(self, v):
        return (self._coerce(v), self._coerce(0))

    def add(self, x, y):
        if self.q:
            return ((x[0] + y[0]) % self.q, (x[1] + y[1]) % self.q)
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        if self.q:
            return ((x[0] - y[0]) % self.q, (x[1] - y[1]) % self.q)
        return (x[0] - y[0], x[1] - y[1])

    def neg(self, x):
        if self.q:
            return (-x[0] % self.q, -x[1] % self.q)
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        u, v = y
        bv = b * v
        # α² = -cα - d
        re = a * u - bv * self.d
        im = a * v + b * u - bv * self.c
        if self.q:
            return (re % self.q, im % self.q)
        return (re, im)

    def norm(self, x):
        a, b = x
        n = a * a - a * b * self.c + b * b * self.d
        return n % self.q if self.q else n

    def inv(self, x):
        n = self.norm(x)
        if not n:
            raise ZeroDivisionError("division by zero in the base field")
        a, b = x
        # other root is -c - α
        if self.q:
            ninv = pow(n, -1, self.q)
            return ((a - b * self.c) * ninv % self.q, -b * ninv % self.q)
        ninv = Fraction(1, 1) / n
        return (_small((a - b * self.c) * ninv), _small(-b * ninv))

    def conj(self, x):
        a, b = x
        if not self.quadratic:
            return x
        re = a + b * self.e
        im = b * self.f
        if self.q:
            return (re % self.q, im % self.q)
        return (re, im)


# -- polynomials in t over a base field ------------------------------------

def _trim(B: BaseField, p: list) -> tuple:
    while p and p[-1] == B.zero:
        p.pop()
    return tuple(p)


def padd(B, f, g):
    n = max(len(f), len(g))
    return _trim(B, [B.add(f[i] if i < len(f) else B.zero, g[i] if i < len(g) else B.zero) for i in range(n)])


def psub(B, f, g):
    n = max(len(f), len(g))
    return _trim(B, [B.sub(f[i] if i < len(f) else B.zero, g[i] if i < len(g) else B.zero) for i in range(n)])


def pmul(B, f, g):
    if not f or not g:
        return ()
    out = [B.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == B.zero:
            continue
        for j, b in enumerate(g):
            if b != B.zero:
                out[i + j] = B.add(out[i + j], B.mul(a, b))
    return _trim(B, out)


def pscale(B, f, c):
    return _trim(B, [B.mul(a, c) for a in f])


def pdivmod(B, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    lead_inv = B.inv(g[-1])
    dg = len(g) - 1
    quot = [B.zero] * max(len(f) - dg, 0)
    while len(rem) - 1 >= dg and rem:
        k = len(rem) - 1 - dg
        coef = B.mul(rem[-1], lead_inv)
        if not B.q:
            coef = (_small(coef[0]), _small(coef[1]))
        quot[k] = coef
        for i, b in enumerate(g):
            rem[i + k] = B.sub(rem[i + k], B.mul(coef, b))
        rem.pop()
        while rem and rem[-1] == B.zero:
            rem.pop()
    return _trim(B, quot), tuple(rem)


def pexact(B, f, g):
    q, r = pdivmod(B, f, g)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def pmonic(B, f):
    return pscale(B, f, B.inv(f[-1]))


def pgcd(B, f, g):
    while g:
        f, g = g, pdivmod(B, f, g)[1]
    return pmonic(B, f) if f else f


def porder(B, f) -> float:
    for i, a in enumerate(f):
        if a != B.zero:
            return i
    return INF


# -- field specs -----------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Description of a valued field with involution.

    ``quadratic`` adds α with α² + cα + d = 0 and ᾱ = e + fα.  ``char`` is 0
    for Q-based fields or a prime q.  ``has_t`` adjoins a transcendental t.
    ``valuation`` is ``"t-adic"``, ``"p-adic"`` or ``"trivial"``; p-adic
    needs ``p`` and ``mode`` (``"inert"`` or ``"split"``), and split mode
    uses the lift of the residue root ``branch`` (default: smallest).
    """

    quadratic: bool = False
    c: int = 0
    d: int = 0
    e: int = 0
    f: int = 1
    char: int = 0
    has_t: bool = False
    twist: bool = False
    valuation: str = "trivial"
    p: int | None = None
    mode: str | None = None
    branch: int | None = None
    violating: bool = False
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.valuation not in ("t-adic", "p-adic", "trivial"):
            raise ValueError(f"unknown valuation {self.valuation!r}")
        if self.valuation == "t-adic" and not self.has_t:
            raise ValueError("t-adic valuation needs t")
        if self.twist and not self.has_t:
            raise ValueError("the twist t -> -t needs t")
        if self.char and not _is_prime(self.char):
            raise ValueError(f"characteristic {self.char} is not prime")
        if self.valuation == "p-adic":
            if self.char:
                raise ValueError("p-adic valuations need a characteristic-0 base")
            if not self.p or not _is_prime(self.p):
                raise ValueError("p-adic valuation needs a prime p")
            if self.mode not in ("inert", "split"):
                raise ValueError("p-adic mode must be 'inert' or 'split'")
            if not self.quadratic and self.mode == "split":
                raise ValueError("split mode needs a quadratic base")
        if self.quadratic:
            self._check_quadratic()
        else:
            object.__setattr__(self, "mode", self.mode if self.valuation == "p-adic" else None)
        if self.valuation == "p-adic" and self.quadratic:
            roots = [r for r in range(self.p) if (r * r + self.c * r + self.d) % self.p == 0]
            if self.mode == "inert" and roots:
                raise ValueError(f"minimal polynomial has a root mod {self.p}; not inert")
            if self.mode == "split":
                good = [r for r in roots if (2 * r + self.c) % self.p]
                if not good:
                    raise ValueError(f"no simple root mod {self.p} to lift")
                if self.branch is None:
                    object.__setattr__(self, "branch", good[0])
                elif self.branch not in good:
                    raise ValueError(f"branch {self.branch} is not a simple root mod {self.p}")
        self._check_compatibility()

    def _check_quadratic(self):
        c, d, e, f = self.c, self.d, self.e, self.f
        q = self.char
        if q:
            if any((r * r + c * r + d) % q == 0 for r in range(q)):
                raise ValueError("α² + cα + d is reducible over the prime field")
        else:
            disc = c * c - 4 * d
            if disc >= 0 and _isqrt(disc) ** 2 == disc:
                raise ValueError("α² + cα + d is reducible over Q")
        # ᾱ must be a root of the same polynomial and the map must be an involution
        B = BaseField(q, True, c, d, e, f)
        ab = (B._coerce(e), B._coerce(f))
        root_check = B.add(B.add(B.mul(ab, ab), B.mul(B.scalar(c), ab)), B.scalar(d))
        if root_check != B.zero:
            raise ValueError("ᾱ = e + fα is not a root of the minimal polynomial")
        if B.conj(B.conj((B._coerce(0), B._coerce(1)))) != (B._coerce(0), B._coerce(1)):
            raise ValueError("conjugation is not an involution")

    def _check_compatibility(self):
        if self.violating or not self.quadratic or self.valuation != "p-adic":
            return
        K = ValuedField(self)
        a = K.alpha
        for x in (a, a + 1, a * 2 + 1, a - 3, a * 5 + 2):
            if x and K.valuation(x) != K.valuation(x.conj()):
                raise ValueError("involution does not preserve the valuation; mark the spec violating")

    @property
    def symbol_i(self) -> bool:
        """Whether ``i`` may be used for α (α² = -1)."""
        return self.quadratic and self.c == 0 and self.d == 1

    def to_json(self) -> dict:
        base = {"kind": "quadratic", "c": self.c, "d": self.d, "conj": [self.e, self.f]} if self.quadratic \
            else {"kind": "rational" if not self.char else "prime"}
        val = {"kind": self.valuation}
        if self.valuation == "p-adic":
            val.update(p=self.p, mode=self.mode)
            if self.mode == "split":
                val["branch"] = self.branch
        out = {"base": base, "char": self.char, "t": self.has_t, "twist": self.twist, "valuation": val}
        if self.violating:
            out["violating"] = True
        return out

    @classmethod
    def from_json(cls, data) -> "FieldSpec":
        if isinstance(data, str):
            return preset(data)
        try:
            base = data.get("base", {"kind": "rational"})
            val = data.get("valuation", {"kind": "trivial"})
            kwargs = dict(char=int(data.get("char", 0)), twist=bool(data.get("twist", False)),
                          violating=bool(data.get("violating", False)))
            if base.get("kind") == "quadratic":
                e, f = base.get("conj", [0, 1])
                kwargs.update(quadratic=True, c=int(base["c"]), d=int(base["d"]), e=int(e), f=int(f))
            kind = val.get("kind", "trivial")
            kwargs["valuation"] = kind
            kwargs["has_t"] = bool(data.get("t", kind == "t-adic" or kwargs["twist"]))
            if kind == "p-adic":
                kwargs.update(p=int(val["p"]), mode=val.get("mode", "inert"), branch=val.get("branch"))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed field spec: {exc}") from None
        return cls(**kwargs)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, _isqrt(n) + 1))


def _isqrt(n: int) -> int:
    from math import isqrt
    return isqrt(n)


# -- Hensel lifting --------------------------------------------------------

class _HenselCache:
    """Root of α² + cα + d in Z_p to growing precision, shared per spec."""

    def __init__(self, c: int, d: int, p: int, r0: int):
        self.c, self.d, self.p = c, d, p
        self.root = r0 % p
        self.prec = 1
        self.lock = threading.Lock()

    def get(self, k: int) -> int:
        with self.lock:
            while self.prec < k:
                prec = 2 * self.prec
                mod = self.p ** prec
                r = self.root
                fr = (r * r + self.c * r + self.d) % mod
                dfr = (2 * r + self.c) % mod
                self.root = (r - fr * pow(dfr, -1, mod)) % mod
                self.prec = prec
            return self.root % (self.p ** k)


HENSEL_CAP = 1 << 14


class PrecisionExceeded(ArithmeticError):
    pass


# -- the field and its elements --------------------------------------------

class ValuedField:
    """Factory and arithmetic context for elements of one ``FieldSpec``."""

    _cache: dict = {}
    _cache_lock = threading.Lock()

    def __new__(cls, spec: FieldSpec):
        with cls._cache_lock:
            obj = cls._cache.get(spec)
            if obj is None:
                obj = super().__new__(cls)
                obj._init(spec)
                cls._cache[spec] = obj
            return obj

    def _init(self, spec: FieldSpec):
        self.spec = spec
        self.B = BaseField(spec.char, spec.quadratic, spec.c, spec.d, spec.e, spec.f)
        self._hensel = None
        if spec.valuation == "p-adic" and spec.mode == "split":
            self._hensel = _HenselCache(spec.c, spec.d, spec.p, spec.branch)
        one = (self.B.one,)
        self.zero_elem = Elem(self, (), one)
        self.one_elem = Elem(self, one, one)

    def __repr__(self):
        return f"ValuedField({self.spec.name or self.spec.to_json()})"

    # constructors
    def __call__(self, x) -> "Elem":
        if isinstance(x, Elem):
            if x.K is not self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, str):
            from .parser import parse
            return parse(x, self)
        if isinstance(x, (int, Fraction)):
            c = self.B.scalar(x)
            return Elem(self, (c,) if c != self.B.zero else (), (self.B.one,))
        raise TypeError(f"cannot convert {type(x).__name__} to a field element")

    @property
    def alpha(self) -> "Elem":
        if not self.spec.quadratic:
            raise ValueError("this field has no α")
        return Elem(self, ((self.B._coerce(0), self.B._coerce(1)),), (self.B.one,))

    @property
    def t(self) -> "Elem":
        if not self.spec.has_t:
            raise ValueError("this field has no t")
        return Elem(self, (self.B.zero, self.B.one), (self.B.one,))

    def zero(self) -> "Elem":
        return self.zero_elem

    def one(self) -> "Elem":
        return self.one_elem

    def from_base_poly(self, num: Sequence, den: Sequence = None) -> "Elem":
        return self._make(tuple(num), tuple(den) if den is not None else (self.B.one,))

    def _make(self, num, den) -> "Elem":
        B = self.B
        num = _trim(B, list(num))
        den = _trim(B, list(den))
        if not den:
            raise ZeroDivisionError("division by zero")
        if not num:
            return self.zero_elem
        if len(den) > 1 and all(c == B.zero for c in den[:-1]):
            # monomial denominator: cancel the common power of t directly
            k = min(len(den) - 1, porder(B, num))
            num = num[k:]
            den = den[k:]
        elif len(den) > 1:
            g = pgcd(B, num, den)
            if len(g) > 1:
                num = pexact(B, num, g)
                den = pexact(B, den, g)
        lead = den[-1]
        if lead != B.one:
            inv = B.inv(lead)
            num = pscale(B, num, inv)
            den = pscale(B, den, inv)
        return Elem(self, num, den)

    # valuation and friends
    def _base_val(self, x) -> float:
        """Valuation of a base element under the spec's base valuation."""
        spec = self.spec
        if x == self.B.zero:
            return INF
        if spec.valuation != "p-adic":
            return 0
        a, b = x
        if not spec.quadratic or spec.mode == "inert":
            return min(vp_rational(a, spec.p), vp_rational(b, spec.p))
        return self._split_val(a, b)

    def _split_val(self, a: Fraction, b: Fraction) -> float:
        p = self.spec.p
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        A = int(a * den)
        Bc = int(b * den)
        shift = _vp(den, p)
        k = 8
        while k <= HENSEL_CAP:
            r = self._hensel.get(k)
            v = _vp((A + Bc * r) % p ** k, p) if (A + Bc * r) % p ** k else INF
            if v < k:
                return v - shift
            k *= 2
        raise PrecisionExceeded(f"valuation exceeds Hensel precision cap {HENSEL_CAP}")

    def _poly_val(self, f) -> float:
        spec = self.spec
        if not f:
            return INF
        if spec.valuation == "t-adic":
            return porder(self.B, f)
        if spec.valuation == "trivial":
            return 0
        return min(self._base_val(c) for c in f)

    def valuation(self, x: "Elem") -> float:
        if not x.num:
            return INF
        return self._poly_val(x.num) - self._poly_val(x.den)

    def residue_field(self) -> "ValuedField":
        spec = self.spec
        if spec.valuation == "trivial":
            return self
        if spec.valuation == "t-adic":
            return ValuedField(FieldSpec(spec.quadratic, spec.c, spec.d, spec.e, spec.f, spec.char,
                                         name=f"residue of {spec.name}" if spec.name else None))
        p = spec.p
        if spec.quadratic and spec.mode == "inert":
            return ValuedField(FieldSpec(True, spec.c % p, spec.d % p, spec.e % p, spec.f % p, p,
                                         name=f"residue of {spec.name}" if spec.name else None))
        return ValuedField(FieldSpec(char=p))

    def residue(self, x: "Elem") -> "Elem":
        """Image of ``x`` in the residue field; needs ``ν(x) >= 0``."""
        spec = self.spec
        v = self.valuation(x)
        if v < 0:
            raise ValueError("residue is only defined on the valuation ring")
        R = self.residue_field()
        if spec.valuation == "trivial":
            return x
        if v > 0:
            return R.zero()
        if spec.valuation == "t-adic":
            return R.from_base_poly((self.B.mul(x.num[0], self.B.inv(x.den[0])),))
        if len(x.num) > 1 or len(x.den) > 1:
            raise ValueError("p-adic residues are implemented for elements constant in t")
        c = self.B.mul(x.num[0], self.B.inv(x.den[0]))
        a, b = c
        p = spec.p
        if not spec.quadratic or spec.mode == "inert":
            return R.from_base_poly(((R.B._coerce(a), R.B._coerce(b)),))
        # split: evaluate a + b·r in Z_p and reduce
        den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        e = _vp(den, p)
        r = self._hensel.get(e + 2)
        val = (int(a * den) + int(b * den) * r) % p ** (e + 2)
        unit = (den // p ** e) % p
        return R(Fraction((val // p ** e) * pow(unit, -1, p) % p))

    def sign(self, x: "Elem") -> int:
        """Sign in the ordering where t is a positive infinitesimal."""
        spec = self.spec
        if spec.char or spec.quadratic:
            raise ValueError("sign needs an ordered base (the rationals)")
        if spec.valuation == "p-adic":
            raise ValueError("sign needs a t-adic or trivial valuation")
        if not x.num:
            return 0

        def low(f):
            for a in f:
                if a != self.B.zero:
                    return 1 if a[0] > 0 else -1
            return 0

        return low(x.num) * low(x.den)

    def random(self, rng, vmin: int = -2, vmax: int = 3, size: int = 3, zero_prob: float = 0.0) -> "Elem":
        """Random element with valuation in a small window (when one exists)."""
        if rng.random() < zero_prob:
            return self.zero()
        spec = self.spec
        B = self.B

        def rand_base(unit_at: int | None = None):
            while True:
                a = rng.randint(-size, size)
                b = rng.randint(-size, size) if spec.quadratic else 0
                x = (B._coerce(a), B._coerce(b))
                if x != B.zero:
                    return x

        k = rng.randint(vmin, vmax)
        if spec.valuation == "t-adic":
            deg = rng.randint(0, 2)
            num = [rand_base() for _ in range(deg + 1)]
            el = self.from_base_poly(num)
            return el * self.t ** k
        el = self.from_base_poly([rand_base()])
        if spec.has_t:
            deg = rng.randint(0, 1)
            el = el + self.from_base_poly([B.zero] * deg + [rand_base()]) if deg else el
        if spec.valuation == "p-adic":
            el = el * self(Fraction(spec.p) ** k)
        return el


class Elem:
    __slots__ = ("K", "num", "den")

    def __init__(self, K: ValuedField, num: tuple, den: tuple):
        self.K = K
        self.num = num
        self.den = den

    # coercion
    def _other(self, y) -> "Elem":
        if isinstance(y, Elem):
            if y.K is not self.K:
                raise ValueError("field elements from different specs")
            return y
        if isinstance(y, (int, Fraction)):
            return self.K(y)
        return NotImplemented

    def __add__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        B = self.K.B
        if self.den == y.den:
            if len(self.den) == 1:
                return Elem(self.K, padd(B, self.num, y.num), self.den) if padd(B, self.num, y.num) \
                    else self.K.zero_elem
            return self.K._make(padd(B, self.num, y.num), self.den)
        return self.K._make(padd(B, pmul(B, self.num, y.den), pmul(B, y.num, self.den)), pmul(B, self.den, y.den))

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.K, tuple(self.K.B.neg(a) for a in self.num), self.den)

    def __sub__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        return self + (-y)

    def __rsub__(self, y):
        return (-self) + y

    def __mul__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        B = self.K.B
        if not self.num or not y.num:
            return self.K.zero_elem
        num = pmul(B, self.num, y.num)
        if len(self.den) == 1 and len(y.den) == 1:
            return Elem(self.K, num, self.den)
        return self.K._make(num, pmul(B, self.den, y.den))

    __rmul__ = __mul__

    def inverse(self) -> "Elem":
        if not self.num:
            raise ZeroDivisionError("division by zero in the field")
        return self.K._make(self.den, self.num)

    def __truediv__(self, y):
        y = self._other(y)
        if y is NotImplemented:
            return y
        if not y.num:
            raise ZeroDivisionError("division by zero in the field")
        B = self.K.B
        if len(y.num) == 1 and len(y.den) == 1:
            inv = B.inv(y.num[0])
            return Elem(self.K, pscale(B, self.num, inv), self.den) if self.num else self
        return self.K._make(pmul(B, self.num, y.den), pmul(B, self.den, y.num))

    def __rtruediv__(self, y):
        return self.K(y) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.K.one_elem
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Elem":
        B = self.K.B
        twist = self.K.spec.twist

        def cp(f):
            out = []
            for i, a in enumerate(f):
                a = B.conj(a)
                out.append(B.neg(a) if twist and i % 2 else a)
            return tuple(out)

        if not twist and not self.K.spec.quadratic:
            return self
        return self.K._make(cp(self.num), cp(self.den))

    def __eq__(self, y):
        if isinstance(y, (int, Fraction)):
            y = self.K(y)
        if not isinstance(y, Elem):
            return NotImplemented
        return self.K is y.K and self.num == y.num and self.den == y.den

    def __hash__(self):
        return hash((self.K.spec, self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def valuation(self) -> float:
        return self.K.valuation(self)

    def residue(self) -> "Elem":
        return self.K.residue(self)

    def sign(self) -> int:
        return self.K.sign(self)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __str__(self):
        from .parser import format_elem
        return format_elem(self)

    def __repr__(self):
        return f"Elem({self})"


# -- presets ---------------------------------------------------------------

PRESETS = {
    "Q(i)(t)": dict(quadratic=True, c=0, d=1, e=0, f=-1, has_t=True, valuation="t-adic"),
    "Q(i)(t)-twist": dict(quadratic=True, c=0, d=1, e=0, f=-1, has_t=True, twist=True, valuation="t-adic"),
    "Q(i)(t)-twist-only": dict(quadratic=True, c=0, d=1, e=0, f=1, has_t=True, twist=True, valuation="t-adic"),
    "Q(t)": dict(has_t=True, valuation="t-adic"),
    "Q(t)-twist": dict(has_t=True, twist=True, valuation="t-adic"),
    "Q[w]-2adic": dict(quadratic=True, c=1, d=1, e=-1, f=-1, valuation="p-adic", p=2, mode="inert"),
    "Q[w](t)-2adic": dict(quadratic=True, c=1, d=1, e=-1, f=-1, has_t=True, valuation="p-adic", p=2,
                          mode="inert"),
    "Q-3adic": dict(valuation="p-adic", p=3, mode="inert"),
    "Q[i]-3adic": dict(quadratic=True, c=0, d=1, e=0, f=-1, valuation="p-adic", p=3, mode="inert"),
    "Q[i]-5adic-split": dict(quadratic=True, c=0, d=1, e=0, f=1, valuation="p-adic", p=5, mode="split"),
    "F4": dict(quadratic=True, c=1, d=1, e=1, f=1, char=2),
    "F4(t)": dict(quadratic=True, c=1, d=1, e=1, f=1, char=2, has_t=True, valuation="t-adic"),
    "Q[a2]-2adic-split": dict(quadratic=True, c=1, d=2, e=-1, f=-1, valuation="p-adic", p=2, mode="split",
                              violating=True),
}


def preset(name: str) -> FieldSpec:
    try:
        kwargs = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown field preset {name!r}; known: {', '.join(PRESETS)}") from None
    return FieldSpec(name=name, **kwargs)


def get_field(name_or_spec) -> ValuedField:
    spec = name_or_spec if isinstance(name_or_spec, FieldSpec) else preset(name_or_spec)
    return ValuedField(spec)

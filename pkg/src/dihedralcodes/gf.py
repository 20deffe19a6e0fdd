"""Exact arithmetic in prime fields GF(p) and extension fields GF(p^m).

Elements are polynomial residues with coefficients stored little-endian
(constant term first).  A :class:`FieldCtx` fixes the prime p, the monic
irreducible modulus and the cardinality q = p^m; contexts are immutable
and safe to share between threads.  All operations are pure.

Canonical choices, so that identical inputs reproduce identical outputs
everywhere:

* elements are enumerated by their index sum(c_i * p^i), ascending;
* the canonical multiplicative generator is the first element of order
  q-1 in that enumeration;
* the canonical primitive n-th root of unity is generator^((q-1)/n).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    MixedContextsError,
    NoSuchRootError,
    NotMonicError,
    NotPrimeError,
    ReducibleError,
    ZeroElementError,
)

# ---------------------------------------------------------------------------
# integer and polynomial helpers (coefficients little-endian, reduced mod p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _trim(cs):
    while cs and cs[-1] == 0:
        cs = cs[:-1]
    return cs


def _padd(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    """Quotient and remainder of a by b over GF(p); b need not be monic."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = (r[-1] * inv_lead) % p
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        r = _trim(r)
    return _trim(q), r


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    """Monic gcd over GF(p)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _ppowmod(base, e, modulus, p):
    result = [1]
    base = _pmod(base, modulus, p)
    while e > 0:
        if e & 1:
            result = _pmod(_pmul(result, base, p), modulus, p)
        base = _pmod(_pmul(base, base, p), modulus, p)
        e >>= 1
    return result


def _poly_roots(f, p):
    return [c for c in range(p) if _peval(f, c, p) == 0]


def _peval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _check_irreducible(modulus, p):
    """Raise ReducibleError if the monic polynomial factors over GF(p).

    Root search settles degree <= 3; degree >= 4 uses the x^(p^k) gcd
    ladder (f of degree m is irreducible iff x^(p^m) = x mod f and
    gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m).
    """
    m = len(modulus) - 1
    if m == 1:
        return
    roots = _poly_roots(modulus, p)
    if roots:
        raise ReducibleError(
            f"modulus has root {roots[0]} in GF({p})", root=roots[0]
        )
    if m <= 3:
        return
    x = [0, 1]
    powers = [x]  # powers[k] = x^(p^k) mod modulus
    t = x
    for _ in range(m):
        t = _ppowmod(t, p, modulus, p)
        powers.append(t)
    if _trim(powers[m]) != x:
        raise ReducibleError(
            f"modulus fails x^(p^{m}) = x over GF({p})"
        )
    for r in factorize(m):
        g = _pgcd(_psub(powers[m // r], x, p), modulus, p)
        if len(g) - 1 > 0:
            witness = g if len(g) - 1 < m else None
            raise ReducibleError(
                f"modulus shares a factor with x^(p^{m // r}) - x over GF({p})",
                factor=witness,
            )


# ---------------------------------------------------------------------------
# field context and elements


class FieldCtx:
    """Immutable description of GF(p^m): prime, modulus, cardinality."""

    __slots__ = ("p", "m", "modulus", "q", "_generator")

    def __init__(self, p: int, modulus: tuple[int, ...]):
        # use make_field(); this constructor assumes validated input
        self.p = p
        self.modulus = modulus
        self.m = len(modulus) - 1
        self.q = p ** self.m
        self._generator = None

    # -- construction of elements ------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an int (scalar), coefficient list, text form, or element."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise MixedContextsError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.m - 1)
            return FieldElement(self, tuple(coeffs))
        if isinstance(value, str):
            return parse_element(self, value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            extra = _trim(coeffs[self.m:])
            if extra:
                raise ValueError(
                    f"coefficient list longer than extension degree {self.m}"
                )
            coeffs = coeffs[: self.m]
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return self.element(1)

    def from_index(self, i: int) -> "FieldElement":
        """Element number i in the canonical enumeration, 0 <= i < q."""
        if not 0 <= i < self.q:
            raise IndexError(f"element index {i} out of range for q={self.q}")
        coeffs = []
        for _ in range(self.m):
            coeffs.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        for i in range(self.q):
            yield self.from_index(i)

    def random_element(self, rng) -> "FieldElement":
        return self.from_index(rng.randrange(self.q))

    def random_nonzero(self, rng) -> "FieldElement":
        return self.from_index(rng.randrange(1, self.q))

    def generator(self) -> "FieldElement":
        """Canonical primitive element: first of order q-1 in index order."""
        if self._generator is None:
            q1 = self.q - 1
            primes = factorize(q1) if q1 > 1 else []
            one = self.one()
            for i in range(1, self.q):
                x = self.from_index(i)
                if all(x ** (q1 // r) != one for r in primes):
                    self._generator = x
                    break
        return self._generator

    # -- encoding ------------------------------------------------------------

    def spec(self) -> str:
        mod = json.dumps(list(self.modulus), separators=(",", ":"))
        return f"p={self.p};mod={mod}"

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldCtx(GF({self.q}), {self.spec()})"


class FieldElement:
    """A residue in GF(p^m), canonical form: exactly m coefficients in [0, p)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise MixedContextsError("operands from different fields")
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(
            self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        if ctx.m == 1:
            return FieldElement(ctx, ((self.coeffs[0] * o.coeffs[0]) % ctx.p,))
        prod = _pmod(_pmul(self.coeffs, o.coeffs, ctx.p), ctx.modulus, ctx.p)
        prod = list(prod) + [0] * (ctx.m - len(prod))
        return FieldElement(ctx, tuple(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        ctx = self.ctx
        if e == 0:
            return ctx.one()
        if e < 0:
            return self.inverse() ** (-e)
        if ctx.m == 1:
            return FieldElement(ctx, (pow(self.coeffs[0], e, ctx.p),))
        result = ctx.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        ctx = self.ctx
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        if ctx.m == 1:
            return FieldElement(ctx, (pow(self.coeffs[0], ctx.p - 2, ctx.p),))
        # extended Euclid over GF(p)[x]
        p = ctx.p
        r0, r1 = list(ctx.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        inv_lead = pow(r0[-1], p - 2, p)
        inv = [(c * inv_lead) % p for c in s0]
        inv = inv + [0] * (ctx.m - len(inv))
        return FieldElement(ctx, tuple(inv[: ctx.m]))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.ctx.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def to_index(self) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * self.ctx.p + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def text(self) -> str:
        """Polynomial string, highest power first: "3x+4", "x", "0"."""
        parts = []
        for e in range(self.ctx.m - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                xs = "x" if e == 1 else f"x^{e}"
                parts.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return self.text()


# ---------------------------------------------------------------------------
# public constructors and operations


def make_field(p: int, modulus) -> FieldCtx:
    """Build GF(p^m) from a prime and a monic irreducible modulus.

    The modulus is a little-endian coefficient list; [0, 1] (the polynomial
    x) gives the prime field itself.  Raises NotPrimeError, NotMonicError,
    or ReducibleError (with a root or factor witness when available).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    coeffs = [int(c) % p for c in modulus]
    trimmed = _trim(coeffs)
    if len(trimmed) != len(coeffs) or len(coeffs) < 2 or coeffs[-1] != 1:
        raise NotMonicError(
            f"modulus {coeffs} is not monic of degree >= 1 over GF({p})"
        )
    _check_irreducible(coeffs, p)
    return FieldCtx(p, tuple(coeffs))


def element_order(x: FieldElement) -> int:
    """Least t >= 1 with x^t = 1; divides q-1."""
    if not x:
        raise ZeroElementError("order of zero is undefined")
    q1 = x.ctx.q - 1
    one = x.ctx.one()
    t = q1
    for r in factorize(q1):
        while t % r == 0 and x ** (t // r) == one:
            t //= r
    return t


def primitive_nth_root(ctx: FieldCtx, n: int) -> FieldElement:
    """Canonical element of exact multiplicative order n (needs n | q-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if (ctx.q - 1) % n != 0:
        raise NoSuchRootError(f"{n} does not divide q-1={ctx.q - 1}")
    return ctx.generator() ** ((ctx.q - 1) // n)


# ---------------------------------------------------------------------------
# text / spec parsing

_FIELD_SPEC_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*(?:;\s*mod\s*=\s*(\[[^\]]*\])\s*)?$")
_TERM_RE = re.compile(r"^(\d+)?x(?:\^(\d+))?$")


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse "p=5;mod=[2,0,1]" (mod defaults to [0,1], the prime field)."""
    m = _FIELD_SPEC_RE.match(spec)
    if not m:
        raise ValueError(f"cannot parse field spec {spec!r}")
    p = int(m.group(1))
    modulus = json.loads(m.group(2)) if m.group(2) else [0, 1]
    return make_field(p, modulus)


def parse_element(ctx: FieldCtx, s: str) -> FieldElement:
    """Parse "[4,3]" (little-endian list) or "3x+4" (polynomial text)."""
    s = s.strip()
    if s.startswith("["):
        coeffs = json.loads(s)
        if not isinstance(coeffs, list):
            raise ValueError(f"cannot parse element {s!r}")
        return ctx.element(coeffs)
    compact = s.replace(" ", "").replace("*", "")
    if not compact:
        raise ValueError("empty element string")
    coeffs = [0] * ctx.m
    for term in re.findall(r"[+-]?[^+-]+", compact):
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        tm = _TERM_RE.match(term)
        if tm:
            c = int(tm.group(1)) if tm.group(1) else 1
            e = int(tm.group(2)) if tm.group(2) else 1
        elif term.isdigit():
            c, e = int(term), 0
        else:
            raise ValueError(f"cannot parse element term {term!r}")
        if e >= ctx.m:
            raise ValueError(
                f"term {term!r} has degree {e} >= extension degree {ctx.m}"
            )
        coeffs[e] = (coeffs[e] + sign * c) % ctx.p
    return ctx.element(coeffs)


# ---------------------------------------------------------------------------
# integer lookup tables (used by distance search hot loops)

_TABLES_CACHE: dict[FieldCtx, "ArithTables"] = {}

_TABLE_LIMIT = 4096


@dataclass
class ArithTables:
    """q x q add/sub/mul tables plus inverses, indexed by element index."""

    q: int
    add: list[list[int]]
    sub: list[list[int]]
    mul: list[list[int]]
    inv: list[int]
    add_np: np.ndarray
    mul_np: np.ndarray


def arith_tables(ctx: FieldCtx) -> ArithTables:
    cached = _TABLES_CACHE.get(ctx)
    if cached is not None:
        return cached
    q = ctx.q
    if q > _TABLE_LIMIT:
        raise ValueError(f"arithmetic tables limited to q <= {_TABLE_LIMIT}")
    elems = [ctx.from_index(i) for i in range(q)]
    add = [[(a + b).to_index() for b in elems] for a in elems]
    sub = [[(a - b).to_index() for b in elems] for a in elems]
    mul = [[(a * b).to_index() for b in elems] for a in elems]
    inv = [0] + [elems[i].inverse().to_index() for i in range(1, q)]
    dtype = np.uint16 if q <= 65535 else np.uint32
    tables = ArithTables(
        q=q,
        add=add,
        sub=sub,
        mul=mul,
        inv=inv,
        add_np=np.array(add, dtype=dtype),
        mul_np=np.array(mul, dtype=dtype),
    )
    _TABLES_CACHE[ctx] = tables
    return tables

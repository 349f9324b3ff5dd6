"""Finite field towers with canonical integer element encoding.

A field is either a prime field GF(p) or an extension of an explicitly named
base field by a monic irreducible modulus.  Every element is encoded as a
canonical integer: for a prime field the residue itself, for an extension
sum(c_i * B**i) where (c_0, ..., c_{m-1}) are the coordinates over the base
(canonical integers again, B = base order).  The encoding nests, so subfield
elements keep the same integer when lifted up a tower, and "lies in the
subfield" is simply "value < suborder".

Arithmetic on canonical integers lives on the FieldSpec: log/antilog tables
are built for orders up to 2**16, larger extensions fall back to polynomial
arithmetic on coordinate vectors.  Characteristic-2 addition is XOR at every
tower level.

Construction is deterministic end to end: unspecified moduli are the
lexicographically smallest monic irreducibles (high-degree coefficients
compared first), and the primitive element is the first generator in
canonical integer order.  This pins down every derived object, e.g. which
n-th root of unity the cyclic machinery uses.
"""

from __future__ import annotations

import functools
import threading
from typing import Optional, Sequence

from .errors import (
    DegreeMismatch,
    FieldMismatch,
    LengthMismatch,
    NotPrime,
    NotSubfield,
    Reducible,
    SearchExceeded,
)
from .linalg import MatrixGF
from .poly import Polynomial, is_irreducible, smallest_irreducible

__all__ = [
    "FieldSpec",
    "FieldElement",
    "Basis",
    "prime_field",
    "extension",
    "trace_to",
    "dual_basis",
    "self_dual_basis",
]

_LOG_TABLE_MAX = 1 << 16


def _factorize(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """One level of a field tower.  Never construct directly; use
    prime_field / extension so instances are cached singletons."""

    def __init__(self, characteristic, degree_over_base, order, base, mod_coeffs):
        self.characteristic = characteristic
        self.degree_over_base = degree_over_base
        self.order = order
        self.base = base  # FieldSpec or None for prime fields
        self._mod = mod_coeffs  # tuple over base, len m+1, monic; None for prime
        self._xor_add = characteristic == 2
        self._exp = None
        self._log = None
        self.primitive_element = None  # set by the builders

    # -- encoding helpers -------------------------------------------------

    def coords(self, value: int):
        """Coordinate vector over the base, length degree_over_base."""
        if self.base is None:
            return (value,)
        b = self.base.order
        out = []
        for _ in range(self.degree_over_base):
            out.append(value % b)
            value //= b
        return tuple(out)

    def from_coords(self, coords) -> int:
        if self.base is None:
            return coords[0]
        b = self.base.order
        v = 0
        for c in reversed(coords):
            v = v * b + c
        return v

    # -- raw arithmetic on canonical integers ------------------------------

    def add(self, a: int, b: int) -> int:
        if self._xor_add:
            return a ^ b
        if self.base is None:
            return (a + b) % self.order
        base = self.base
        return self.from_coords(
            tuple(base.add(x, y) for x, y in zip(self.coords(a), self.coords(b)))
        )

    def neg(self, a: int) -> int:
        if self._xor_add:
            return a
        if self.base is None:
            return (-a) % self.order
        base = self.base
        return self.from_coords(tuple(base.neg(x) for x in self.coords(a)))

    def sub(self, a: int, b: int) -> int:
        if self._xor_add:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        if self.base is None:
            return (a * b) % self.order
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - 1) - self._log[a]]
        if self.base is None:
            return pow(a, self.order - 2, self.order)
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        n = self.order - 1
        e %= n
        if e == 0:
            return 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % n]
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _raw_mul(self, a: int, b: int) -> int:
        base = self.base
        m = self.degree_over_base
        ca, cb = self.coords(a), self.coords(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x == 0:
                continue
            for j, y in enumerate(cb):
                if y:
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        mod = self._mod
        for i in range(len(prod) - 1, m - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(m):
                if mod[j]:
                    prod[i - m + j] = base.sub(prod[i - m + j], base.mul(c, mod[j]))
        return self.from_coords(prod[:m])

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for p in _factorize(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def _build_tables(self):
        if not (2 < self.order <= _LOG_TABLE_MAX):
            return
        n = self.order - 1
        exp = [1] * (2 * n)
        log = [0] * self.order
        g = self.primitive_element
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self.mul(v, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log

    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        primes = _factorize(n)
        for g in range(2, self.order):
            if all(self.pow(g, n // p) != 1 for p in primes):
                return g
        raise SearchExceeded("no primitive element found (impossible)")

    # -- tower structure ----------------------------------------------------

    @property
    def modulus(self) -> Optional[Polynomial]:
        if self.base is None:
            return None
        return Polynomial(self.base, self._mod)

    def tower(self):
        """Chain from this field down to the prime field."""
        chain = [self]
        f = self
        while f.base is not None:
            f = f.base
            chain.append(f)
        return chain

    def has_substep(self, sub: "FieldSpec") -> bool:
        return any(f is sub for f in self.tower())

    def degree_over(self, sub: "FieldSpec") -> int:
        d = 1
        for f in self.tower():
            if f is sub:
                return d
            d *= f.degree_over_base
        raise NotSubfield(f"GF({sub.order}) is not a step of this tower")

    # -- element factory ------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not (0 <= value < self.order):
            raise ValueError(f"canonical value {value} out of range for GF({self.order})")
        return FieldElement(self, value)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.order))

    def __repr__(self):
        return f"GF({self.order})"


class FieldElement:
    """Thin wrapper pairing a canonical integer with its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coords(self):
        return self.field.coords(self.value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        if isinstance(other, int) and 0 <= other < self.field.order:
            return other
        raise FieldMismatch(f"cannot interpret {other!r} in GF({self.field.order})")

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.value == other.value
        )

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}@GF({self.field.order})"


_field_cache_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _prime_field_cached(p: int) -> FieldSpec:
    f = FieldSpec(p, 1, p, None, None)
    f.primitive_element = f._find_primitive()
    f._build_tables()
    return f


def prime_field(p: int) -> FieldSpec:
    """GF(p).  Primality is checked by trial division (inputs are small)."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    with _field_cache_lock:
        return _prime_field_cached(p)


@functools.lru_cache(maxsize=None)
def _extension_cached(base: FieldSpec, m: int, mod_coeffs) -> FieldSpec:
    f = FieldSpec(base.characteristic, m, base.order**m, base, mod_coeffs)
    f.primitive_element = f._find_primitive()
    f._build_tables()
    return f


def extension(base: FieldSpec, m: int, modulus: Optional[Polynomial] = None) -> FieldSpec:
    """Degree-m extension of `base`.

    With no modulus given, the lexicographically smallest monic irreducible
    of degree m over the base is selected, so repeated calls agree.
    """
    if m < 1:
        raise DegreeMismatch("extension degree must be positive")
    if modulus is None:
        modulus = smallest_irreducible(base, m)
    else:
        if modulus.field is not base:
            raise FieldMismatch("modulus must live over the base field")
        if modulus.degree != m:
            raise DegreeMismatch(f"modulus degree {modulus.degree}, expected {m}")
        if not modulus.is_monic:
            raise Reducible("modulus must be monic")
        if not is_irreducible(modulus):
            raise Reducible(f"{modulus} factors over GF({base.order})")
    with _field_cache_lock:
        return _extension_cached(base, m, modulus.coeffs)


def trace_to(x: FieldElement, target: FieldSpec) -> FieldElement:
    """Relative trace sum(x**(q**i), i < m) down to `target` (order q)."""
    f = x.field
    if not f.has_substep(target):
        raise NotSubfield(f"GF({target.order}) does not appear in the tower of GF({f.order})")
    if f is target:
        return x
    m = f.degree_over(target)
    q = target.order
    acc = 0
    t = x.value
    for _ in range(m):
        acc = f.add(acc, t)
        t = f.pow(t, q)
    # the trace of the full orbit lands in the subfield by construction
    if acc >= target.order:
        raise AssertionError("trace left the subfield; tower arithmetic is broken")
    return FieldElement(target, acc)


class Basis:
    """Ordered basis of an extension over its immediate-or-deeper base.

    `sub` defaults to the field's immediate base.  Expansion coefficients are
    solved through the coordinate matrix, cached on first use.
    """

    def __init__(self, field: FieldSpec, elements: Sequence[FieldElement], sub: Optional[FieldSpec] = None):
        sub = sub if sub is not None else field.base
        if sub is None:
            raise NotSubfield("prime fields have no basis over a subfield")
        m = field.degree_over(sub)
        elements = tuple(
            e if isinstance(e, FieldElement) else field.element(e) for e in elements
        )
        if any(e.field is not field for e in elements):
            raise FieldMismatch("basis elements must live in the extension")
        if len(elements) != m:
            raise LengthMismatch(f"need {m} elements, got {len(elements)}")
        self.field = field
        self.sub = sub
        self.elements = elements
        self._to_coords = None  # inverse coordinate matrix, built lazily
        cols = [self._sub_coords(e.value) for e in elements]
        mat = MatrixGF(sub, [[cols[j][i] for j in range(m)] for i in range(m)], m)
        if mat.rank() != m:
            raise LengthMismatch("basis elements are linearly dependent")
        self._coord_matrix = mat

    @property
    def size(self) -> int:
        return len(self.elements)

    def _sub_coords(self, value: int):
        """Coordinates of a field element over `sub`, flattening the tower."""
        f = self.field
        chain = []
        g = f
        while g is not self.sub:
            chain.append(g)
            g = g.base
        vals = [value]
        for g in chain:
            vals = [c for v in vals for c in g.coords(v)]
        return vals

    def _sub_uncoords(self, coords):
        f = self.field
        chain = []
        g = f
        while g is not self.sub:
            chain.append(g)
            g = g.base
        vals = list(coords)
        for g in reversed(chain):
            step = g.degree_over_base
            vals = [g.from_coords(vals[i : i + step]) for i in range(0, len(vals), step)]
        return vals[0]

    def expand(self, x: FieldElement):
        """Coefficients of x over this basis (tuple of sub-field integers)."""
        if x.field is not self.field:
            raise FieldMismatch("element not in the basis field")
        if self._to_coords is None:
            self._to_coords = self._coord_matrix.invert()
        s = self._sub_coords(x.value)
        inv = self._to_coords
        sub = self.sub
        return tuple(
            functools.reduce(
                sub.add, (sub.mul(inv.rows[i][j], s[j]) for j in range(len(s))), 0
            )
            for i in range(self.size)
        )

    def combine(self, coords) -> FieldElement:
        if len(coords) != self.size:
            raise LengthMismatch(f"need {self.size} coordinates")
        f = self.field
        acc = 0
        for c, g in zip(coords, self.elements):
            if c:
                acc = f.add(acc, f.mul(c, g.value))  # sub elements lift to the same int
        return FieldElement(f, acc)

    def dual(self) -> "Basis":
        return dual_basis(self)

    def is_self_dual(self) -> bool:
        d = self.dual()
        return all(a == b for a, b in zip(self.elements, d.elements))

    def __eq__(self, other):
        return (
            isinstance(other, Basis)
            and self.field is other.field
            and self.sub is other.sub
            and self.elements == other.elements
        )

    def __repr__(self):
        return f"Basis({[e.value for e in self.elements]} of GF({self.field.order})/GF({self.sub.order}))"


def dual_basis(basis: Basis) -> Basis:
    """The unique basis B' with trace(g_i * g'_j) = delta_ij.

    Solved from the trace Gram matrix: if G_ij = Tr(g_i g_j) then the dual
    elements are g'_j = sum_k (G^-1)_kj g_k.
    """
    f = basis.field
    sub = basis.sub
    m = basis.size
    els = [e.value for e in basis.elements]
    gram = MatrixGF(
        sub,
        [
            [trace_to(f.element(f.mul(els[i], els[j])), sub).value for j in range(m)]
            for i in range(m)
        ],
        m,
    )
    ginv = gram.invert()
    duals = []
    for j in range(m):
        acc = 0
        for k in range(m):
            c = ginv.rows[k][j]
            if c:
                acc = f.add(acc, f.mul(c, els[k]))
        duals.append(f.element(acc))
    return Basis(f, duals, sub)


def self_dual_basis(field: FieldSpec, sub: Optional[FieldSpec] = None, budget: int = 500_000) -> Optional[Basis]:
    """A basis equal to its own trace-dual, or None when none exists.

    Existence criterion: q even, or q and m both odd (q = |sub|, m the
    degree).  The search is a deterministic backtrack over canonical element
    order; orthonormal prefixes are automatically independent, so only the
    delta condition is checked.  `budget` caps visited nodes (SearchExceeded).
    """
    sub = sub if sub is not None else field.base
    if sub is None:
        raise NotSubfield("prime fields have no basis over a subfield")
    q = sub.order
    m = field.degree_over(sub)
    if q % 2 == 1 and m % 2 == 0:
        return None

    tr = lambda v: trace_to(field.element(v), sub).value
    nodes = 0
    chosen = []

    def extendable(v):
        if tr(field.mul(v, v)) != 1:
            return False
        return all(tr(field.mul(v, c)) == 0 for c in chosen)

    def search():
        nonlocal nodes
        if len(chosen) == m:
            return True
        # the delta condition is permutation-invariant, so searching in
        # increasing canonical order loses no solutions
        start = chosen[-1] + 1 if chosen else 1
        for v in range(start, field.order):
            nodes += 1
            if nodes > budget:
                raise SearchExceeded(f"self-dual basis search exceeded {budget} nodes")
            if extendable(v):
                chosen.append(v)
                if search():
                    return True
                chosen.pop()
        return False

    if not search():
        raise SearchExceeded("existence criterion satisfied but search found no basis")
    return Basis(field, [field.element(v) for v in chosen], sub)

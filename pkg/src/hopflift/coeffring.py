"""Exact arithmetic in F_{p^m} and the Galois rings GR(p^n, m).

GR(p^n, m) is the finite truncation W(F_{p^m})/p^n of the Witt vectors;
GR(p, m) = F_{p^m} and GR(p^n, 1) = Z/p^n.  Elements are length-m integer
coefficient vectors of polynomial residues, stored reduced mod (p^n, modulus).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _arrays as ra
from ._ntheory import is_prime, prime_factors
from .errors import (
    DescriptorMismatch,
    NotAUnit,
    NotDivisible,
    NotPrime,
    ReducibleModulus,
    SingularModP,
)

# ---------------------------------------------------------------------------
# polynomial helpers over F_p (plain int lists, ascending degree)


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, f, p):
    """a*b mod (f, p) with f monic."""
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_divmod(res, f, p)[1]


def _poly_divmod(a, f, p):
    a = [x % p for x in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    quot = [0] * max(0, len(a) - df)
    rem = list(a)
    for i in range(len(rem) - 1, df - 1, -1):
        c = rem[i] % p
        if c:
            c = c * inv_lead % p
            quot[i - df] = c
            for j in range(df + 1):
                rem[i - df + j] = (rem[i - df + j] - c * f[j]) % p
    return _poly_trim(quot), _poly_trim(rem[:df])


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_divmod(a, f, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_xgcd(a, b, p):
    """Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qpoly, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(qpoly, s1, p), p)
        t0, t1 = t1, _poly_sub(t0, _poly_mul(qpoly, t1, p), p)
    return r0, s0, t0


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_trim(res)


def _poly_sub(a, b, p):
    res = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        res[i] = x
    for i, x in enumerate(b):
        res[i] = (res[i] - x) % p
    return _poly_trim(res)


def _is_irreducible_mod_p(f, p):
    """Rabin test for a monic polynomial f over F_p."""
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    xq = _poly_powmod(x, p**m, f, p)
    if _poly_trim(_poly_sub(xq, x, p)):
        return False
    for ell in prime_factors(m):
        h = _poly_sub(_poly_powmod(x, p ** (m // ell), f, p), x, p)
        g = _poly_gcd(h, f, p)
        if len(g) - 1 > 0:
            return False
    return True


def _default_modulus(p, m):
    """Smallest monic irreducible of degree m over F_p in lex coefficient order."""
    for tail in itertools.product(range(p), repeat=m):
        f = list(tail) + [1]
        if _is_irreducible_mod_p(f, p):
            return tuple(f)
    raise ReducibleModulus(f"no irreducible of degree {m} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingDescriptor:
    """F_{p^m} when n == 1, otherwise GR(p^n, m); modulus is None iff m == 1."""

    p: int
    n: int
    m: int
    modulus: tuple[int, ...] | None = None

    @cached_property
    def q(self) -> int:
        return self.p**self.n

    @property
    def is_field(self) -> bool:
        return self.n == 1

    @cached_property
    def xm_red(self) -> np.ndarray:
        """Coefficients of x^m mod (modulus, p^n)."""
        if self.m == 1:
            return np.zeros(1, dtype=np.int64)
        return (-np.array(self.modulus[: self.m], dtype=np.int64)) % self.q

    @cached_property
    def red_table(self) -> np.ndarray:
        """Rows t = 0..2m-2: coefficient vector of x^t mod (modulus, p^n)."""
        m = self.m
        table = np.zeros((max(2 * m - 1, 1), m), dtype=np.int64)
        row = np.zeros(m, dtype=np.int64)
        row[0] = 1
        table[0] = row
        for t in range(1, 2 * m - 1):
            row = ra.mul_x(self, row)
            table[t] = row
        return table

    def residue(self) -> "RingDescriptor":
        return self.at_precision(1)

    def at_precision(self, k: int) -> "RingDescriptor":
        if not 1 <= k <= self.n:
            raise ValueError(f"precision {k} outside 1..{self.n}")
        if k == self.n:
            return self
        mod = None if self.m == 1 else tuple(c % self.p**k for c in self.modulus)
        return RingDescriptor(self.p, k, self.m, mod)

    def lift_compatible(self, other: "RingDescriptor") -> bool:
        if (self.p, self.m) != (other.p, other.m):
            return False
        if self.m == 1:
            return True
        qmin = self.p ** min(self.n, other.n)
        return all(a % qmin == b % qmin for a, b in zip(self.modulus, other.modulus))

    # element constructors -------------------------------------------------
    def element(self, coeffs) -> "RingElement":
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [int(coeffs)] + [0] * (self.m - 1)
        coeffs = [int(c) % self.q for c in coeffs]
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return RingElement(self, tuple(coeffs))

    @property
    def zero(self) -> "RingElement":
        return self.element(0)

    @property
    def one(self) -> "RingElement":
        return self.element(1)

    def __repr__(self):
        if self.m == 1:
            return f"GR({self.p}^{self.n})" if self.n > 1 else f"F_{self.p}"
        base = f"F_{self.p}^{self.m}" if self.n == 1 else f"GR({self.p}^{self.n},{self.m})"
        return base


def make_ring(p: int, n: int = 1, m: int = 1, modulus=None) -> RingDescriptor:
    """Build a verified descriptor for F_{p^m} (n=1) or GR(p^n, m)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    q = p**n
    if m == 1:
        if modulus is not None:
            raise ValueError("modulus only applies when m > 1")
        return RingDescriptor(p, n, 1, None)
    if modulus is None:
        mod = _default_modulus(p, m)
    else:
        mod = tuple(int(c) % q for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
    if not _is_irreducible_mod_p([c % p for c in mod], p):
        raise ReducibleModulus(f"modulus {mod} is reducible mod {p}")
    return RingDescriptor(p, n, m, mod)


@dataclass(frozen=True)
class RingElement:
    ring: RingDescriptor
    coeffs: tuple[int, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def as_int(self) -> int:
        if self.ring.m != 1:
            raise ValueError("as_int only for m == 1")
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_unit(self) -> bool:
        return any(c % self.ring.p for c in self.coeffs)

    def _bin(self, other, fn):
        if not isinstance(other, RingElement):
            other = self.ring.element(other)
        if other.ring != self.ring:
            raise DescriptorMismatch(f"{self.ring} vs {other.ring}")
        res = fn(self.as_array(), other.as_array())
        return RingElement(self.ring, tuple(int(c) for c in res))

    def __add__(self, other):
        return self._bin(other, lambda a, b: ra.add(self.ring, a, b))

    def __sub__(self, other):
        return self._bin(other, lambda a, b: ra.sub(self.ring, a, b))

    def __mul__(self, other):
        return self._bin(other, lambda a, b: ra.elem_mul(self.ring, a, b))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, tuple(int(c) for c in ra.neg(self.ring, self.as_array())))

    def __pow__(self, e):
        result = self.ring.one
        base = self
        e = int(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        if self.ring.m == 1:
            return f"{self.coeffs[0]} in {self.ring}"
        return f"{list(self.coeffs)} in {self.ring}"


def arith(op: str, a: RingElement, b: RingElement) -> RingElement:
    if a.ring != b.ring:
        raise DescriptorMismatch(f"{a.ring} vs {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _inv_coeffs_field(desc: RingDescriptor, coeffs: np.ndarray) -> np.ndarray:
    """Inverse of a nonzero element of F_{p^m}."""
    p = desc.p
    if desc.m == 1:
        return np.array([pow(int(coeffs[0]) % p, p - 2, p)], dtype=np.int64)
    g, s, _ = _poly_xgcd([int(c) % p for c in coeffs], list(desc.modulus), p)
    # g is a nonzero constant; divide s by it
    ginv = pow(g[0], p - 2, p)
    out = np.zeros(desc.m, dtype=np.int64)
    for i, c in enumerate(s):
        out[i] = c * ginv % p
    return out


def _inv_coeffs(desc: RingDescriptor, coeffs: np.ndarray) -> np.ndarray:
    """Inverse of a unit of GR(p^n, m): invert mod p, then Hensel refine."""
    if not np.any(coeffs % desc.p):
        raise NotAUnit(f"{list(coeffs)} lies in the maximal ideal of {desc}")
    x = _inv_coeffs_field(desc.residue(), coeffs % desc.p)
    if desc.n == 1:
        return x
    a = np.asarray(coeffs, dtype=np.int64) % desc.q
    prec = 1
    while prec < desc.n:
        # x <- x*(2 - a*x), doubling the number of correct p-digits
        ax = ra.elem_mul(desc, a, x)
        two = np.zeros(desc.m, dtype=np.int64)
        two[0] = 2
        x = ra.elem_mul(desc, x, (two - ax) % desc.q)
        prec *= 2
    return x


def invert(a: RingElement) -> RingElement:
    return RingElement(a.ring, tuple(int(c) for c in _inv_coeffs(a.ring, a.as_array())))


def digit_lift(a: RingElement, target: RingDescriptor) -> RingElement:
    """Canonical lift: keep the integer coefficient representatives."""
    if target.n < a.ring.n or not a.ring.lift_compatible(target):
        raise DescriptorMismatch(f"cannot digit-lift {a.ring} into {target}")
    return target.element(list(a.coeffs))


def reduce_element(a: RingElement, target: RingDescriptor) -> RingElement:
    if target.n > a.ring.n or not a.ring.lift_compatible(target):
        raise DescriptorMismatch(f"cannot reduce {a.ring} into {target}")
    return target.element([c % target.q for c in a.coeffs])


def exact_div_p(a: RingElement, k: int) -> RingElement:
    """Divide by p^k, landing in GR(p^{n-k}, m)."""
    desc = a.ring
    if not 0 < k < desc.n:
        raise ValueError(f"need 0 < k < {desc.n}")
    pk = desc.p**k
    if any(c % pk for c in a.coeffs):
        raise NotDivisible(f"{a} is not divisible by p^{k}")
    target = desc.at_precision(desc.n - k)
    return target.element([c // pk for c in a.coeffs])


def exact_div_p_array(desc: RingDescriptor, arr: np.ndarray, k: int):
    """Array version of exact_div_p; returns (target descriptor, divided array)."""
    if not 0 < k < desc.n:
        raise ValueError(f"need 0 < k < {desc.n}")
    pk = desc.p**k
    if np.any(arr % pk):
        raise NotDivisible(f"tensor not divisible by p^{k}")
    target = desc.at_precision(desc.n - k)
    return target, (arr // pk) % target.q


# ---------------------------------------------------------------------------
# linear solving (public wrappers; algorithms live in _linalg)


@dataclass
class LinearSolution:
    particular: list[RingElement] | None
    kernel_basis: list[list[RingElement]]
    rank: int


def _to_matrix_array(desc, rows):
    out = np.zeros((len(rows), len(rows[0]) if rows else 0, desc.m), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            e = v if isinstance(v, RingElement) else desc.element(v)
            if e.ring != desc:
                raise DescriptorMismatch("matrix entries from a different ring")
            out[i, j] = e.as_array()
    return out % desc.q


def _to_vector_array(desc, vec):
    out = np.zeros((len(vec), desc.m), dtype=np.int64)
    for i, v in enumerate(vec):
        e = v if isinstance(v, RingElement) else desc.element(v)
        out[i] = e.as_array()
    return out % desc.q


def solve_field(desc: RingDescriptor, matrix, rhs) -> LinearSolution:
    """Exact Gaussian elimination over F_{p^m} with deterministic pivoting.

    Returns the canonical particular solution (free variables zero) when the
    system is consistent, the full kernel basis, and the rank.
    """
    from ._linalg import FieldSolver

    if not desc.is_field:
        raise DescriptorMismatch("solve_field requires a field descriptor (n == 1)")
    marr = _to_matrix_array(desc, matrix)
    rarr = _to_vector_array(desc, rhs)
    solver = FieldSolver(desc, marr)
    x = solver.solve(rarr)
    particular = None if x is None else [desc.element(list(c)) for c in x]
    kern = [[desc.element(list(c)) for c in vec] for vec in solver.kernel_basis()]
    return LinearSolution(particular, kern, solver.rank)


def hensel_solve(desc: RingDescriptor, matrix, rhs) -> list[RingElement]:
    """Solve M x = rhs over GR(p^n, m) when M is invertible mod p."""
    marr = _to_matrix_array(desc, matrix)
    rarr = _to_vector_array(desc, rhs)
    x = hensel_solve_array(desc, marr, rarr)
    return [desc.element(list(c)) for c in x]


def hensel_solve_array(desc: RingDescriptor, marr: np.ndarray, rarr: np.ndarray) -> np.ndarray:
    """Array form of hensel_solve; rarr may be (R, m) or (R, w, m)."""
    from ._linalg import FieldSolver

    nrows, ncols = marr.shape[0], marr.shape[1]
    fdesc = desc.residue()
    solver = FieldSolver(fdesc, marr % desc.p)
    if solver.rank < ncols:
        raise SingularModP(f"matrix singular mod {desc.p} (rank {solver.rank} < {ncols})")
    x = np.zeros((ncols,) + rarr.shape[1:], dtype=np.int64)
    for k in range(desc.n):
        pk = desc.p**k
        resid = ra.sub(desc, rarr, ra.tensordot(desc, marr, x, ([1], [0])))
        if np.any(resid % pk):
            raise NotDivisible("hensel residual not divisible by p^k; inconsistent input")
        digit = (resid // pk) % desc.p
        y = solver.solve(digit)
        if y is None:
            raise SingularModP("reduced system inconsistent despite full column rank")
        x = (x + pk * y) % desc.q
    if np.any(ra.sub(desc, rarr, ra.tensordot(desc, marr, x, ([1], [0])))):
        raise SingularModP("hensel solve failed to reach an exact solution")
    return x

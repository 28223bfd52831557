"""Exact arithmetic in small finite fields F_{p^r} of odd characteristic.

Elements are canonical coefficient tuples (constant term first) modulo a monic
irreducible polynomial.  Everything is deterministic: element enumeration order,
the irreducible-modulus search, and square-root conventions are all fixed so
that downstream counts are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence


class FieldMismatchError(ValueError):
    """Raised when operands live in different fields."""


class NonUnitError(ZeroDivisionError):
    """Raised when inverting zero."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_divmod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    num = list(num)
    den = _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p)
    quot = [0] * max(0, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        coeff = (num[k + len(den) - 1] * inv_lead) % p
        quot[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] = (num[k + i] - coeff * d) % p
    return _poly_trim(quot), _poly_trim(num)


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    # constant term is the least significant digit of the counter
    for k in range(p**deg):
        coeffs = []
        n = k
        for _ in range(deg):
            coeffs.append(n % p)
            n //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    deg = len(poly) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            _, rem = _poly_divmod(poly, divisor, p)
            if not rem:
                return False
    return True


def find_irreducible(p: int, r: int) -> tuple[int, ...]:
    """First monic irreducible of degree r over F_p, constant term first.

    Candidates are enumerated with the constant coefficient as the least
    significant digit (x^2, x^2+1, ..., x^2+(p-1), x^2+x, ...), and the first
    irreducible one wins, so the choice is a pure function of (p, r).
    """
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r == 1:
        return (0, 1)
    for poly in _monic_polys(p, r):
        if _is_irreducible(poly, p):
            return poly
    raise RuntimeError("unreachable: an irreducible polynomial always exists")


@dataclass(frozen=True)
class FieldSpec:
    """A concrete F_{p^r}: odd prime p, degree r, monic modulus (constant first)."""

    p: int
    r: int = 1
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not _is_prime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if not self.modulus:
            object.__setattr__(self, "modulus", find_irreducible(self.p, self.r))
        mod = tuple(c % self.p for c in self.modulus)
        if len(mod) != self.r + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.r}")
        if self.r > 1 and not _is_irreducible(mod, self.p):
            raise ValueError(f"modulus {mod} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p**self.r

    def element(self, coeffs: int | Sequence[int]) -> "FieldElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.r:
            raise ValueError(f"too many coefficients for degree {self.r}")
        c += [0] * (self.r - len(c))
        return FieldElement(self, tuple(c))

    def from_index(self, k: int) -> "FieldElement":
        if not 0 <= k < self.q:
            raise ValueError(f"index {k} out of range for q={self.q}")
        coeffs = []
        for _ in range(self.r):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.r)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.r - 1))

    def elements(self) -> Iterator["FieldElement"]:
        for k in range(self.q):
            yield self.from_index(k)

    def chi_minus_one(self) -> int:
        """Quadratic character of -1: +1 iff q ≡ 1 (mod 4)."""
        return 1 if self.q % 4 == 1 else -1

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return FieldSpec(int(obj["p"]), int(obj.get("r", 1)), tuple(obj.get("modulus", ())))


@lru_cache(maxsize=None)
def _reduction_rows(spec: FieldSpec) -> tuple[tuple[int, ...], ...]:
    # rows[i] = coefficients of x^(r+i) reduced mod the modulus
    p, r, mod = spec.p, spec.r, spec.modulus
    rows = []
    current = [(-mod[i]) % p for i in range(r)]  # x^r
    rows.append(tuple(current))
    for _ in range(r - 2):
        shifted = [0] + current[:-1]
        lead = current[-1]
        if lead:
            shifted = [(shifted[i] + lead * rows[0][i]) % p for i in range(r)]
        current = shifted
        rows.append(tuple(current))
    return tuple(rows)


class FieldElement:
    """One element of a FieldSpec; immutable, hashable, with operator arithmetic."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    # -- structure ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.coeffs == other.coeffs
            and self.spec == other.spec
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.spec.r == 1:
            return f"F{self.spec.p}({self.coeffs[0]})"
        return f"F{self.spec.p}^{self.spec.r}{list(self.coeffs)}"

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def index(self) -> int:
        """Canonical integer index (constant term least significant)."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.spec.p + c
        return k

    def _check(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise FieldMismatchError(f"{self.spec} vs {other.spec}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        spec = self.spec
        p, r = spec.p, spec.r
        if r == 1:
            return FieldElement(spec, ((self.coeffs[0] * other.coeffs[0]) % p,))
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        rows = _reduction_rows(spec)
        out = prod[:r]
        for i in range(r, 2 * r - 1):
            c = prod[i]
            if c:
                row = rows[i - r]
                for k in range(r):
                    out[k] += c * row[k]
        return FieldElement(spec, tuple(v % p for v in out))

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise NonUnitError("zero has no inverse")
        if self.spec.r == 1:
            return FieldElement(self.spec, (pow(self.coeffs[0], self.spec.p - 2, self.spec.p),))
        return self ** (self.spec.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    # -- quadratic structure -------------------------------------------------

    def chi(self) -> int:
        """Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise."""
        if not self:
            return 0
        val = self ** ((self.spec.q - 1) // 2)
        return 1 if val == self.spec.one() else -1

    def is_square(self) -> bool:
        return self.chi() >= 0

    def sqrt(self) -> tuple["FieldElement", ...]:
        """All square roots: () for non-squares, (0,) for zero, else both roots.

        Roots are ordered by canonical index.  Prime fields use deterministic
        Tonelli-Shanks; extensions use a^((q+1)/4) when q ≡ 3 (mod 4) and an
        exhaustive scan otherwise (desk scale, q bounded by ~10^4).
        """
        spec = self.spec
        if not self:
            return (self,)
        if self.chi() == -1:
            return ()
        q = spec.q
        if spec.r == 1:
            root = spec.element(_tonelli_shanks(self.coeffs[0], spec.p))
        elif q % 4 == 3:
            root = self ** ((q + 1) // 4)
        else:
            root = None
            for cand in spec.elements():
                if cand * cand == self:
                    root = cand
                    break
            assert root is not None, "chi said square but no root found"
        assert root * root == self
        pair = sorted({root, -root}, key=lambda e: e.index)
        return tuple(pair)

    def to_json(self) -> int | list[int]:
        return self.coeffs[0] if self.spec.r == 1 else list(self.coeffs)


def _tonelli_shanks(a: int, p: int) -> int:
    """Square root of a quadratic residue a mod p (deterministic variant)."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = o * 2^s with o odd
    o, s = p - 1, 0
    while o % 2 == 0:
        o //= 2
        s += 1
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    c = pow(n, o, p)
    t = pow(a, o, p)
    root = pow(a, (o + 1) // 2, p)
    m = s
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = (t2 * t2) % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        root = (root * b) % p
        c = (b * b) % p
        t = (t * c) % p
        m = i
    return root


def element_from_json(spec: FieldSpec, obj: int | Sequence[int]) -> FieldElement:
    return spec.element(obj)

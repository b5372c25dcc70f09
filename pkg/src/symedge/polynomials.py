"""Dense integer polynomials and the transforms used on lattice-point counts."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntPoly:
    """Arbitrary-precision integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        if any(not isinstance(x, int) for x in c):
            raise ValueError("coefficients must be integers")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        k = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] + other[i] for i in range(k)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        k = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[i] - other[i] for i in range(k)))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self or not other:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        d = self.degree
        return all(self[i] == self[d - i] for i in range(d + 1))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def one_plus_x_power(k: int) -> IntPoly:
    return IntPoly(tuple(comb(k, i) for i in range(k + 1)))


def monomial(power: int, coeff: int = 1) -> IntPoly:
    return IntPoly((0,) * power + (coeff,))


def hstar_from_histogram(histogram: Sequence[int]) -> IntPoly:
    """The polynomial whose i-th coefficient counts trees with i tail edges."""
    if not histogram or sum(histogram) <= 0:
        raise ValueError("empty histogram")
    if histogram[0] != 1:
        raise ValueError(f"histogram must start with a single minimal tree, got {histogram[0]}")
    if any(h < 0 for h in histogram):
        raise ValueError("histogram entries must be nonnegative")
    return IntPoly(tuple(histogram))


def hstar_from_lattice_counts(counts: Sequence[int], dim: int) -> IntPoly:
    """Numerator of the rational generating function of dilation counts.

    Multiplies the count series by (1-t)^(dim+1) and truncates at the
    dimension; any nonzero coefficient between dim+1 and the last supplied
    count is an inconsistency.
    """
    if not counts or counts[0] != 1:
        raise ValueError("dilation counts must start with 1 (the origin)")
    if len(counts) < dim + 1:
        raise ValueError(f"need at least {dim + 1} counts, got {len(counts)}")
    top = len(counts) - 1
    prod = [0] * (top + 1)
    for j in range(top + 1):
        acc = 0
        for i in range(max(0, j - dim - 1), j + 1):
            acc += counts[i] * ((-1) ** (j - i)) * comb(dim + 1, j - i)
        prod[j] = acc
    for j in range(dim + 1, top + 1):
        if prod[j] != 0:
            raise ValueError(f"counts are not polynomial of degree {dim}: residue at t^{j}")
    return IntPoly(tuple(prod[: dim + 1]))


def gamma_transform(p: IntPoly) -> IntPoly:
    """Coordinates of a palindromic polynomial in the basis x^i (1+x)^(d-2i).

    Peels coefficients from the lowest degree up; negative entries are
    reported as-is since nonnegativity is a property under test, not an
    assumption.
    """
    if not p:
        raise ValueError("zero polynomial has no gamma vector")
    if not p.is_palindromic():
        raise ValueError("gamma vector requires a palindromic polynomial")
    d = p.degree
    residue = p
    gamma = []
    for i in range(d // 2 + 1):
        gi = residue[i]
        gamma.append(gi)
        if gi:
            residue = residue - monomial(i, gi) * one_plus_x_power(d - 2 * i)
    if residue:
        raise ValueError("palindromic reduction left a residue")
    return IntPoly(tuple(gamma))


def gamma_expand(gamma: IntPoly, degree: int) -> IntPoly:
    """Rebuild the degree-d palindromic polynomial from its gamma vector."""
    if 2 * gamma.degree > degree:
        raise ValueError("gamma vector too long for the requested degree")
    acc = IntPoly(())
    for i, gi in enumerate(gamma.coeffs):
        if gi:
            acc = acc + monomial(i, gi) * one_plus_x_power(degree - 2 * i)
    return acc


def cycle_gamma(n: int) -> IntPoly:
    """Closed-form gamma vector of a cycle: central binomials."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return IntPoly(tuple(comb(2 * i, i) for i in range((n - 1) // 2 + 1)))


def cycle_hstar_coefficient(n: int, i: int) -> int:
    """Closed-form count of cycle trees with i tail edges."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if not 0 <= i <= n - 1:
        raise ValueError(f"coefficient index {i} out of range for degree {n - 1}")
    if i > (n - 1) // 2:
        i = n - 1 - i  # palindromic upper half
    return sum(comb(2 * j, j) * comb(n - 1 - 2 * j, i - j) for j in range(i + 1))


def binom_identity_check(b: int, c: int, n: int) -> tuple[int, int]:
    """Both sides of the shifted central-binomial convolution identity."""
    if b < 0 or c < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    if not 0 <= c <= b - 2 * n:
        raise ValueError(f"need 0 <= c <= b - 2n, got (b,c,n)=({b},{c},{n})")
    left = sum(comb(2 * a, a) * comb(b - 2 * a, n - a) for a in range(n + 1))
    right = sum(comb(2 * a + c, a) * comb(b - c - 2 * a, n - a) for a in range(n + 1))
    return left, right

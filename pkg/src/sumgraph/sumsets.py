"""Sumsets in Z_n with bitset membership, and Cauchy-Davenport verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .verdict import Verdict


@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    bits: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if self.bits < 0 or self.bits >> self.modulus:
            raise ValueError("members must lie in 0..modulus-1")

    @classmethod
    def of(cls, modulus: int, members: Iterable[int]) -> "ResidueSet":
        bits = 0
        for a in members:
            if not 0 <= a < modulus:
                raise ValueError(f"residue {a} outside 0..{modulus - 1}")
            bits |= 1 << a
        return cls(modulus, bits)

    @classmethod
    def parse(cls, modulus: int, text: str) -> "ResidueSet":
        """Comma-separated integers, e.g. ``"0,1,4"``; values are reduced mod n."""
        items = [t.strip() for t in text.split(",") if t.strip()]
        try:
            values = [int(t) % modulus for t in items]
        except ValueError:
            raise ValueError(f"bad residue list {text!r}") from None
        return cls.of(modulus, values)

    @property
    def members(self) -> list[int]:
        return [a for a in range(self.modulus) if (self.bits >> a) & 1]

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, a: int) -> bool:
        return bool((self.bits >> (a % self.modulus)) & 1)

    def __iter__(self):
        return iter(self.members)

    def negate(self) -> "ResidueSet":
        return ResidueSet.of(self.modulus, ((-a) % self.modulus for a in self.members))

    def is_symmetric(self) -> bool:
        return self.negate() == self

    def symmetrized(self) -> "ResidueSet":
        return ResidueSet(self.modulus, self.bits | self.negate().bits)

    def without_zero(self) -> "ResidueSet":
        return ResidueSet(self.modulus, self.bits & ~1)

    def is_full(self) -> bool:
        return self.bits == (1 << self.modulus) - 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + f"}} mod {self.modulus}"


def _rotate(bits: int, shift: int, n: int) -> int:
    mask = (1 << n) - 1
    shift %= n
    return ((bits << shift) | (bits >> (n - shift))) & mask


def add_sets(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    if a.modulus != b.modulus:
        raise ValueError("moduli differ")
    n = a.modulus
    out = 0
    for x in b.members:
        out |= _rotate(a.bits, x, n)
    return ResidueSet(n, out)


def sumset_h(a: ResidueSet, h: int) -> ResidueSet:
    """hA = {a_1 + ... + a_h}, by h-1 shift-or convolutions."""
    if not a.bits:
        raise ValueError("sumset of the empty set")
    if not isinstance(h, int) or h < 1:
        raise ValueError(f"h must be a positive integer, got {h!r}")
    out = a
    for _ in range(h - 1):
        out = add_sets(out, a)
    return out


def is_basis(a: ResidueSet) -> tuple[bool, Optional[int]]:
    """Whether hA = Z_n for some h <= n, with the smallest such h."""
    if not a.bits:
        raise ValueError("empty set is never a basis")
    cur = a
    for h in range(1, a.modulus + 1):
        if cur.is_full():
            return True, h
        cur = add_sets(cur, a)
    return False, None


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def cd_bound(p: int, setsize: int, h: int) -> int:
    return min(p, h * setsize - (h - 1))


def check_cauchy_davenport(p: int, a: ResidueSet, hmax: int) -> list[Verdict]:
    if not is_prime(p):
        raise ValueError(f"p not prime: {p}")
    if a.modulus != p:
        raise ValueError(f"set modulus {a.modulus} differs from p={p}")
    if not a.bits:
        raise ValueError("A must be nonempty")
    if hmax < 1:
        raise ValueError("hmax must be >= 1")
    out = []
    cur = a
    for h in range(1, hmax + 1):
        if h > 1:
            cur = add_sets(cur, a)
        size = len(cur)
        linear = h * len(a) - (h - 1)
        rhs = min(p, linear)
        if size == p:
            branch = "p"
        else:
            branch = "linear" if linear <= p else "p"
        out.append(Verdict(
            name="cauchy_davenport",
            lhs=size,
            rhs=rhs,
            branch=branch,
            holds=size >= rhs,
            details={"p": p, "h": h, "A": a.members, "linear": linear},
        ))
    return out

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Tuple

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from utils.config import AppConfig
from utils.errors import InvalidArgumentError

# Every contribution is an exact fraction backed by arbitrary-precision integers.
Rational = Fraction


@dataclass(frozen=True, order=True)
class CyclicQuotient:
    """Terminal cyclic quotient singularity of type 1/r(1,-1,b)"""
    r: int
    b: int

    def __post_init__(self):
        if self.r < 2:
            raise InvalidArgumentError(f"index r must be at least 2, got {self.r}")
        if not 1 <= self.b < self.r:
            raise InvalidArgumentError(f"b must lie in [1, {self.r}), got {self.b}")
        if gcd(self.b, self.r) != 1:
            raise InvalidArgumentError(f"b={self.b} is not coprime to r={self.r}")

    def __str__(self) -> str:
        return f"1/{self.r}(1,-1,{self.b})"


@dataclass(frozen=True)
class BasketEntry:
    r: int
    b: int
    v: int

    def __post_init__(self):
        # reuses the coprimality checks
        CyclicQuotient(self.r, self.b)
        if not 1 <= self.v <= self.r // 2:
            raise InvalidArgumentError(
                f"v must lie in [1, {self.r // 2}] for r={self.r}, got {self.v}"
            )

    @property
    def quotient(self) -> CyclicQuotient:
        return CyclicQuotient(self.r, self.b)

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (self.r, self.v, self.b)

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.r, self.v)

    def __str__(self) -> str:
        # printed as (r,v,b) like the classification tables
        return f"({self.r},{self.v},{self.b})"


@dataclass(frozen=True)
class Basket:
    """Multiset of fictitious singularities, kept in canonical (r, v, b) order.

    Two baskets compare equal exactly when they are equal as multisets.
    """
    entries: Tuple[BasketEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: e.sort_key)))

    @classmethod
    def of(cls, *triples: Tuple[int, int, int]) -> "Basket":
        """Build from (r, b, v) triples"""
        return cls(tuple(BasketEntry(r, b, v) for r, b, v in triples))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[BasketEntry]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(e.pair for e in self.entries)

    @property
    def triples(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(e.sort_key for e in self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries) or AppConfig.EMPTY_BASKET_SYMBOL


@dataclass(frozen=True)
class DeltaProfile:
    """The indicator i -> 1 if r_P divides i else 0"""
    r_P: int

    def __post_init__(self):
        if self.r_P < 1:
            raise InvalidArgumentError(f"period must be positive, got {self.r_P}")

    def __call__(self, i: int) -> int:
        return 1 if i % self.r_P == 0 else 0

    def difference(self, i: int) -> int:
        return self(i + 1) - self(i)


@dataclass(frozen=True)
class DeltaVerdict:
    consistent: bool
    witness: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    @classmethod
    def ok(cls) -> "DeltaVerdict":
        return cls(True)

    @classmethod
    def failed_at(cls, i: int, lhs: Fraction, rhs: Fraction) -> "DeltaVerdict":
        return cls(False, i, lhs, rhs)

    def __bool__(self) -> bool:
        return self.consistent


@dataclass(frozen=True)
class GammaResult:
    """Outcome of solving for the constant term; gamma is None when inconsistent"""
    gamma: Optional[Fraction]
    witness: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    @property
    def consistent(self) -> bool:
        return self.gamma is not None


class Verdict(Enum):
    B0_SATISFIED = "b0-satisfied"
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"


class Stage(Enum):
    J = "J"
    JTILDE = "Jtilde"


@dataclass(frozen=True)
class JType:
    pairs: Tuple[Tuple[int, int], ...]
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        for r, v in self.pairs:
            if r < 2 or v < 1 or r < 2 * v:
                raise InvalidArgumentError(f"pair ({r},{v}) needs r >= 2 and r >= 2v >= 2")


@dataclass(frozen=True)
class JTildeType:
    basket: Basket
    label: Optional[str] = None

    @property
    def j_type(self) -> JType:
        return JType(self.basket.pairs)


@dataclass(frozen=True)
class ClassificationRow:
    label: str
    stage: Stage
    data: Tuple[Tuple[int, ...], ...]
    r_P: int
    verdict: Verdict
    basket: Optional[Basket] = field(default=None, compare=False)

    @property
    def label_number(self) -> Optional[int]:
        return int(self.label) if self.label.isdigit() else None

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        number = self.label_number
        return (number if number is not None else sys.maxsize, self.data)

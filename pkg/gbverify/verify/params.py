"""
하네스 파라미터 - Construction (p, m) 과 Example (p, e)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from ..core.coefficients import check_prime
from ..core.errors import InvalidParamsError, InvalidRingError


def _prime(p: int) -> int:
    try:
        check_prime(p)
    except InvalidRingError as exc:
        raise InvalidParamsError(str(exc)) from exc
    return p


@dataclass(frozen=True)
class ConstructionParams:
    """p: 소수, m >= 4, p ∤ m, n = 2m + 1"""

    p: int
    m: int

    def __post_init__(self):
        _prime(self.p)
        if self.m < 4:
            raise InvalidParamsError(f"m={self.m} 는 4 이상이어야 합니다")
        if self.m % self.p == 0:
            raise InvalidParamsError(f"p={self.p} 가 m={self.m} 을 나눕니다 (p ∤ m 이어야 함)")

    @property
    def n(self) -> int:
        return 2 * self.m + 1

    def as_dict(self) -> Dict[str, int]:
        return {"p": self.p, "m": self.m, "n": self.n}


@dataclass(frozen=True)
class ExampleParams:
    """p: 홀수 소수, e >= 1, q = p^e, n = pq, m = (n - 1) / 2"""

    p: int
    e: int

    def __post_init__(self):
        _prime(self.p)
        if self.p == 2:
            raise InvalidParamsError("p 는 홀수 소수여야 합니다")
        if self.e < 1:
            raise InvalidParamsError(f"e={self.e} 는 1 이상이어야 합니다")
        # n = pq 는 홀수이고 p 는 (pq - 1)/2 를 나누지 않습니다
        assert self.n % 2 == 1 and self.m_param % self.p != 0

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def m_param(self) -> int:
        return (self.n - 1) // 2

    def construction(self) -> ConstructionParams:
        return ConstructionParams(self.p, self.m_param)

    def as_dict(self) -> Dict[str, int]:
        return {"p": self.p, "e": self.e, "q": self.q, "n": self.n, "m": self.m_param}

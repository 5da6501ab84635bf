"""
계수체 산술 - 소수체 F_p 와 유리함수체 F_p(s)

두 체 모두 CoefficientField 라는 하나의 계약으로 다룹니다. 다항식 커널은 체 객체의
메서드(add/mul/inv ...)만 호출하고, 원소의 내부 표현은 체가 결정합니다:
  - PrimeField: 잉여 정수 int (0 <= r < p)
  - RationalFunctionField: RationalFunction (항상 기약, 분모 monic)
공개용 값 타입(PrimeFieldElement, RationalFunction)은 연산자 오버로딩을 제공합니다.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Tuple, Union

from sympy import isprime

from .errors import FieldDivisionByZero, IncompatibleFieldError, InvalidRingError

MAX_MODULUS = 2 ** 31


def check_prime(p: int) -> int:
    """표수 검증 (소수, p < 2^31)"""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidRingError(f"표수는 정수여야 합니다: {p!r}")
    if p >= MAX_MODULUS or not isprime(p):
        raise InvalidRingError(f"표수 {p} 는 2^31 미만의 소수가 아닙니다")
    return p


def symmetric_residue(r: int, p: int) -> int:
    """출력용 대칭 대표원 (-p/2, p/2]"""
    return r - p if r > p // 2 else r


# ---------------------------------------------------------------------------
# F_p
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeFieldElement:
    """F_p 의 원소 (residue 는 항상 [0, p) 로 정규화)"""

    residue: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise IncompatibleFieldError(
                    f"F_{self.modulus} 와 F_{other.modulus} 원소는 섞을 수 없습니다"
                )
            return other.residue
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def _new(self, r: int) -> "PrimeFieldElement":
        return PrimeFieldElement(r, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.residue)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.residue * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.residue)

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise FieldDivisionByZero(f"F_{self.modulus} 에서 0의 역원은 없습니다")
        return self._new(pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.residue, k, self.modulus))

    def __eq__(self, other):
        # int 는 F_p 로 보낸 상과 비교합니다 (a == 1, a == -1)
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return (other - self.residue) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        # [0, p) 의 대표 정수와 같은 해시
        return hash(self.residue)

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __str__(self):
        return str(symmetric_residue(self.residue, self.modulus))


# ---------------------------------------------------------------------------
# F_p[s]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnivariatePolynomial:
    """
    F_p[s] 의 조밀 다항식. coeffs[i] 는 s^i 의 계수(잉여 정수).
    최고차 계수는 0이 아니며, 영다항식은 빈 튜플입니다.
    """

    coeffs: Tuple[int, ...]
    modulus: int
    var: str = "s"

    def __post_init__(self):
        p = self.modulus
        cs = [c % p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int, modulus: int, var: str = "s") -> "UnivariatePolynomial":
        return cls((c,), modulus, var)

    @classmethod
    def generator(cls, modulus: int, var: str = "s") -> "UnivariatePolynomial":
        return cls((0, 1), modulus, var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "UnivariatePolynomial"):
        if other.modulus != self.modulus or other.var != self.var:
            raise IncompatibleFieldError(
                f"F_{self.modulus}[{self.var}] 와 F_{other.modulus}[{other.var}] 는 섞을 수 없습니다"
            )

    def _new(self, coeffs) -> "UnivariatePolynomial":
        return UnivariatePolynomial(tuple(coeffs), self.modulus, self.var)

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> "UnivariatePolynomial":
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + (-other)

    def __mul__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._new(out)

    def scale(self, c: int) -> "UnivariatePolynomial":
        return self._new([c * x for x in self.coeffs])

    def monic(self) -> "UnivariatePolynomial":
        if not self.coeffs:
            return self
        return self.scale(pow(self.lc, -1, self.modulus))

    def divmod(self, other: "UnivariatePolynomial"):
        """유클리드 나눗셈 (q, r), deg r < deg other"""
        self._check(other)
        if other.is_zero():
            raise FieldDivisionByZero("영다항식으로 나눌 수 없습니다")
        p = self.modulus
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = pow(other.lc, -1, p)
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lc % p
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * y) % p
        return self._new(quot), self._new(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __pow__(self, k: int) -> "UnivariatePolynomial":
        result = self._new((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def frobenius(self, q: int) -> "UnivariatePolynomial":
        """f(s)^q = f(s^q) (F_p 의 원소는 Frobenius 에 대해 고정)"""
        out = [0] * (self.degree * q + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * q] = c
        return self._new(out)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * value + c) % self.modulus
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = symmetric_residue(self.coeffs[i], self.modulus)
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            body = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            text = body + ("*" if body and mono else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)


def unipoly_gcd(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """monic gcd. gcd(0, f) = monic(f), gcd(0, 0) = 0"""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# F_p(s)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalFunction:
    """num/den, gcd(num, den) = 1, den monic. 0 은 0/1 로 표현"""

    num: UnivariatePolynomial
    den: UnivariatePolynomial

    @classmethod
    def make(cls, num: UnivariatePolynomial, den: UnivariatePolynomial) -> "RationalFunction":
        num._check(den)
        if den.is_zero():
            raise FieldDivisionByZero("분모가 0인 유리함수는 만들 수 없습니다")
        if num.is_zero():
            return cls(num, den._new((1,)))
        if den.is_constant():
            inv = pow(den.lc, -1, den.modulus)
            return cls(num.scale(inv), den._new((1,)))
        g = unipoly_gcd(num, den)
        if not g.is_one():
            num, den = num // g, den // g
        inv = pow(den.lc, -1, den.modulus)
        return cls(num.scale(inv), den.scale(inv))

    @classmethod
    def from_int(cls, c: int, modulus: int, var: str = "s") -> "RationalFunction":
        return cls(UnivariatePolynomial((c,), modulus, var), UnivariatePolynomial((1,), modulus, var))

    @classmethod
    def from_poly(cls, num: UnivariatePolynomial) -> "RationalFunction":
        return cls(num, num._new((1,)))

    @property
    def modulus(self) -> int:
        return self.num.modulus

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_one()

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.modulus != self.modulus or other.num.var != self.num.var:
                raise IncompatibleFieldError(
                    f"F_{self.modulus}({self.num.var}) 와 "
                    f"F_{other.modulus}({other.num.var}) 원소는 섞을 수 없습니다"
                )
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other, self.modulus, self.num.var)
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise IncompatibleFieldError(
                    f"F_{self.modulus}(s) 와 F_{other.modulus} 원소는 섞을 수 없습니다"
                )
            return RationalFunction.from_int(other.residue, self.modulus, self.num.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction(self.num + o.num, self.den)
        if self.den == o.den:
            return RationalFunction.make(self.num + o.num, self.den)
        return RationalFunction.make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction(self.num * o.num, self.den)
        return RationalFunction.make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise FieldDivisionByZero(f"F_{self.modulus}(s) 에서 0의 역원은 없습니다")
        return RationalFunction.make(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self * o.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def frobenius(self, q: int) -> "RationalFunction":
        return RationalFunction(self.num.frobenius(q), self.den.frobenius(q))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# 체 객체 - 다항식 커널이 사용하는 단일 계약
# ---------------------------------------------------------------------------

Scalar = Union[int, RationalFunction]


class CoefficientField(ABC):
    """계수체 연산 계약 (add, sub, mul, neg, inv, eq, zero, one)"""

    characteristic: int

    zero: Scalar
    one: Scalar

    @abstractmethod
    def from_int(self, n: int) -> Scalar: ...

    @abstractmethod
    def add(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def sub(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def mul(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def neg(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def is_zero(self, a: Scalar) -> bool: ...

    @abstractmethod
    def frobenius(self, a: Scalar, q: int) -> Scalar: ...

    @abstractmethod
    def lift(self, value) -> Scalar:
        """int / PrimeFieldElement / RationalFunction 을 내부 표현으로"""

    @abstractmethod
    def element(self, a: Scalar):
        """내부 표현을 공개용 값 타입으로"""

    @abstractmethod
    def format(self, a: Scalar) -> Tuple[bool, str]:
        """출력용 (음수 부호 여부, 절댓값 본문). 본문이 '' 이면 단위원 1"""

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return a == b

    def is_one(self, a: Scalar) -> bool:
        return a == self.one

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def pow(self, a: Scalar, k: int) -> Scalar:
        result, base = self.one, a
        if k < 0:
            base, k = self.inv(a), -k
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result


class PrimeField(CoefficientField):
    """F_p. 내부 표현은 [0, p) 의 int"""

    def __init__(self, p: int):
        self.characteristic = self.p = check_prime(p)
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        c = a + b
        return c - self.p if c >= self.p else c

    def sub(self, a, b):
        c = a - b
        return c + self.p if c < 0 else c

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise FieldDivisionByZero(f"F_{self.p} 에서 0의 역원은 없습니다")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def frobenius(self, a, q):
        return a

    def lift(self, value) -> int:
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise IncompatibleFieldError(f"F_{value.modulus} 원소를 F_{self.p} 에 넣을 수 없습니다")
            return value.residue
        if isinstance(value, int):
            return value % self.p
        raise IncompatibleFieldError(f"F_{self.p} 로 변환할 수 없는 값: {value!r}")

    def element(self, a) -> PrimeFieldElement:
        return PrimeFieldElement(a, self.p)

    def format(self, a):
        c = symmetric_residue(a, self.p)
        return c < 0, ("" if abs(c) == 1 else str(abs(c)))


class RationalFunctionField(CoefficientField):
    """F_p(param). 내부 표현은 RationalFunction"""

    def __init__(self, p: int, parameter: str = "s"):
        self.characteristic = self.p = check_prime(p)
        self.parameter = parameter
        self.zero = RationalFunction.from_int(0, p, parameter)
        self.one = RationalFunction.from_int(1, p, parameter)

    def __eq__(self, other):
        return (
            type(other) is RationalFunctionField
            and other.p == self.p
            and other.parameter == self.parameter
        )

    def __hash__(self):
        return hash(("F(s)", self.p, self.parameter))

    def __repr__(self):
        return f"RationalFunctionField({self.p}, {self.parameter!r})"

    def generator(self) -> RationalFunction:
        return RationalFunction.from_poly(UnivariatePolynomial.generator(self.p, self.parameter))

    def from_int(self, n: int) -> RationalFunction:
        return RationalFunction.from_int(n, self.p, self.parameter)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a) -> bool:
        return a.num.is_zero()

    def frobenius(self, a, q):
        return a.frobenius(q)

    def lift(self, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return self.zero._coerce(value)
        if isinstance(value, (int, PrimeFieldElement)):
            return self.zero._coerce(value)
        raise IncompatibleFieldError(f"F_{self.p}({self.parameter}) 로 변환할 수 없는 값: {value!r}")

    def element(self, a) -> RationalFunction:
        return a

    def format(self, a):
        if a.den.is_one():
            num = a.num
            nonzero = [i for i, c in enumerate(num.coeffs) if c]
            if len(nonzero) == 1:
                # 단항 c*s^k 은 부호를 앞으로 접습니다
                k = nonzero[0]
                c = symmetric_residue(num.coeffs[k], self.p)
                mono = "" if k == 0 else (self.parameter if k == 1 else f"{self.parameter}^{k}")
                if not mono:
                    return c < 0, ("" if abs(c) == 1 else str(abs(c)))
                return c < 0, (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            return False, f"({num})"
        return False, f"({a.num})/({a.den})"

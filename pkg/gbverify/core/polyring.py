"""
희소 다변수 다항식 - 단항식 순서, 산술, 파싱/출력

Polynomial 은 불변 값이며 항 (monomial, coefficient) 을 단항식 순서의 내림차순으로
정렬된 튜플로 보관합니다. 단항식은 RingSpec.variables 에 맞춘 지수 튜플입니다.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from .coefficients import CoefficientField, PrimeField, RationalFunctionField, check_prime
from .errors import (
    IncompatibleRingError,
    InvalidRingError,
    NonDivisibleError,
    PolynomialParseError,
    UndefinedLeadingTermError,
    UnknownVariableError,
)

Monomial = Tuple[int, ...]

ORDER_KINDS = ("lex", "grevlex")


# ---------------------------------------------------------------------------
# 단항식 연산
# ---------------------------------------------------------------------------

def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """a | b"""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b (b | a 이어야 함)"""
    out = tuple([x - y for x, y in zip(a, b)])
    if any(e < 0 for e in out):
        raise NonDivisibleError(f"단항식 {b} 는 {a} 를 나누지 않습니다")
    return out


def monomial_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# 단항식 순서 / 환
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """kind: lex | grevlex, priority: 변수 이름의 우선순위(높은 것부터)"""

    kind: str
    priority: Tuple[str, ...]

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise InvalidRingError(f"지원하지 않는 단항식 순서: {self.kind!r}")
        object.__setattr__(self, "priority", tuple(self.priority))

    def __str__(self):
        return f"{self.kind}({'>'.join(self.priority)})"


def _identity(m: Monomial) -> Monomial:
    return m


class Term(NamedTuple):
    coefficient: object
    monomial: Monomial


@dataclass(frozen=True)
class RingSpec:
    """
    다항식환 명세

    characteristic: 소수 p
    variables: 변수 이름 (지수 벡터의 저장 순서)
    order: 단항식 순서
    parameter: 유리함수 계수체 F_p(parameter) 를 쓰면 그 이름, 아니면 None (F_p)
    """

    characteristic: int
    variables: Tuple[str, ...]
    order: MonomialOrder
    parameter: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        check_prime(self.characteristic)
        names = list(self.variables)
        if len(set(names)) != len(names):
            raise InvalidRingError(f"변수 이름이 중복됩니다: {names}")
        for name in names + ([self.parameter] if self.parameter else []):
            if not _IDENT.fullmatch(name):
                raise InvalidRingError(f"올바르지 않은 이름: {name!r}")
        if self.parameter is not None and self.parameter in names:
            raise InvalidRingError(f"계수 파라미터 {self.parameter!r} 가 변수와 겹칩니다")
        if sorted(self.order.priority) != sorted(names):
            raise InvalidRingError(
                f"순서 우선순위 {self.order.priority} 는 변수 {names} 의 순열이어야 합니다"
            )

    @classmethod
    def create(
        cls,
        characteristic: int,
        variables: Sequence[str],
        order: str = "lex",
        parameter: Optional[str] = None,
        priority: Optional[Sequence[str]] = None,
    ) -> "RingSpec":
        return cls(
            characteristic,
            tuple(variables),
            MonomialOrder(order, tuple(priority or variables)),
            parameter,
        )

    # -- 파생 정보 ---------------------------------------------------------

    @cached_property
    def field(self) -> CoefficientField:
        if self.parameter is None:
            return PrimeField(self.characteristic)
        return RationalFunctionField(self.characteristic, self.parameter)

    @cached_property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    @cached_property
    def priority_indices(self) -> Tuple[int, ...]:
        return tuple(self.index[name] for name in self.order.priority)

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        """단항식 -> 비교 키 (키가 클수록 큰 단항식)"""
        perm = self.priority_indices
        if self.order.kind == "lex":
            if perm == tuple(range(self.nvars)):
                return _identity
            return lambda m: tuple([m[i] for i in perm])
        rev = perm[::-1]
        return lambda m: (sum(m), tuple([-m[i] for i in rev]))

    @property
    def coefficient_kind(self) -> str:
        return "prime-field" if self.parameter is None else "rational-functions"

    # -- 환 변형 -------------------------------------------------------------

    def with_order(self, kind: str, priority: Optional[Sequence[str]] = None) -> "RingSpec":
        return RingSpec(
            self.characteristic,
            self.variables,
            MonomialOrder(kind, tuple(priority or self.order.priority)),
            self.parameter,
        )

    def fresh_name(self, base: str = "r") -> str:
        taken = set(self.variables) | {self.parameter}
        name = base
        while name in taken:
            name += "'"
        return name

    def adjoin_variable(self, base: str = "r") -> Tuple["RingSpec", str]:
        """새 변수를 최고 우선순위로 붙인 lex 환"""
        name = self.fresh_name(base)
        ring = RingSpec(
            self.characteristic,
            (name,) + self.variables,
            MonomialOrder("lex", (name,) + self.order.priority),
            self.parameter,
        )
        return ring, name

    def subring(self, keep: Iterable[str]) -> "RingSpec":
        keep = set(keep)
        unknown = keep - set(self.variables)
        if unknown:
            raise UnknownVariableError(f"환에 없는 변수: {sorted(unknown)}")
        return RingSpec(
            self.characteristic,
            tuple(v for v in self.variables if v in keep),
            MonomialOrder(self.order.kind, tuple(v for v in self.order.priority if v in keep)),
            self.parameter,
        )

    # -- 원소 생성 -----------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        F = self.field
        c = F.lift(c)
        if F.is_zero(c):
            return self.zero()
        return Polynomial._raw(self, (((0,) * self.nvars, c),))

    def monomial(self, exponents: Monomial, coefficient=1) -> "Polynomial":
        return Polynomial(self, [(tuple(exponents), coefficient)])

    def var(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise UnknownVariableError(f"환에 없는 변수: {name!r}")
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return Polynomial._raw(self, ((tuple(exps), self.field.one),))

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def poly(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __str__(self):
        coeffs = f"F_{self.characteristic}"
        if self.parameter:
            coeffs += f"({self.parameter})"
        return f"{coeffs}[{','.join(self.variables)}] {self.order}"


# ---------------------------------------------------------------------------
# 다항식
# ---------------------------------------------------------------------------

Coefficient = object
Binding = Union["Polynomial", int, object]


class Polynomial:
    """희소 다항식. terms 는 단항식 순서 내림차순, 계수 0 없음, 단항식 중복 없음"""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: Iterable[Tuple[Monomial, Coefficient]] = ()):
        F = ring.field
        acc: Dict[Monomial, Coefficient] = {}
        for mono, c in terms:
            mono = tuple(mono)
            if len(mono) != ring.nvars:
                raise IncompatibleRingError(f"단항식 {mono} 의 길이가 변수 수 {ring.nvars} 와 다릅니다")
            if any(e < 0 for e in mono):
                raise IncompatibleRingError(f"음수 지수: {mono}")
            c = F.lift(c)
            acc[mono] = F.add(acc[mono], c) if mono in acc else c
        self.ring = ring
        self.terms = _sorted_terms(ring, acc)

    @classmethod
    def _raw(cls, ring: RingSpec, terms: Tuple[Tuple[Monomial, Coefficient], ...]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    # -- 기본 질의 -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> Term:
        if not self.terms:
            raise UndefinedLeadingTermError("영다항식에는 선도항이 없습니다")
        mono, c = self.terms[0]
        return Term(c, mono)

    def leading_monomial(self) -> Monomial:
        return self.leading_term().monomial

    def leading_coefficient(self):
        return self.leading_term().coefficient

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def involves(self, name: str) -> bool:
        i = self.ring.index[name]
        return any(m[i] for m, _ in self.terms)

    def coefficient(self, mono: Monomial):
        for m, c in self.terms:
            if m == tuple(mono):
                return c
        return self.ring.field.zero

    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise IncompatibleRingError(f"서로 다른 환의 다항식입니다: {self.ring} / {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    # -- 산술 ----------------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return Polynomial._raw(self.ring, _merge(self.ring, self.terms, other.terms, False))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return Polynomial._raw(self.ring, _merge(self.ring, self.terms, other.terms, True))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial._raw(self.ring, tuple([(m, neg(c)) for m, c in self.terms]))

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.field.lift(other))
        self._check(other)
        if len(other.terms) == 1:
            m, c = other.terms[0]
            return self.mul_term(c, m)
        if len(self.terms) == 1:
            m, c = self.terms[0]
            return other.mul_term(c, m)
        F = self.ring.field
        acc: Dict[Monomial, Coefficient] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = monomial_mul(ma, mb)
                c = F.mul(ca, cb)
                acc[m] = F.add(acc[m], c) if m in acc else c
        return Polynomial._raw(self.ring, _sorted_terms(self.ring, acc))

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(self.ring.field.lift(other))

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        if F.is_zero(c):
            return self.ring.zero()
        if F.is_one(c):
            return self
        mul = F.mul
        return Polynomial._raw(self.ring, tuple([(m, mul(c, d)) for m, d in self.terms]))

    def mul_term(self, c, mono: Monomial) -> "Polynomial":
        """c * x^mono * self (단항식 곱은 순서를 보존)"""
        F = self.ring.field
        if F.is_zero(c):
            return self.ring.zero()
        mul = F.mul
        return Polynomial._raw(
            self.ring, tuple([(monomial_mul(m, mono), mul(c, d)) for m, d in self.terms])
        )

    def mul_monomial(self, mono: Monomial) -> "Polynomial":
        return Polynomial._raw(self.ring, tuple([(monomial_mul(m, mono), d) for m, d in self.terms]))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("다항식의 음수 거듭제곱은 정의되지 않습니다")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        return self.scale(F.inv(self.terms[0][1]))

    def frobenius(self, q: int) -> "Polynomial":
        """Frobenius 환 사상 f -> f^q (표수 p, q = p^e). 항별로 c^q x^(q*mono)"""
        frob = self.ring.field.frobenius
        return Polynomial._raw(
            self.ring, tuple([(tuple([e * q for e in m]), frob(c, q)) for m, c in self.terms])
        )

    def to_ring(self, ring: RingSpec) -> "Polynomial":
        """변수 이름으로 다른 환에 재배치 (같은 계수체, 사용된 변수가 모두 있어야 함)"""
        if ring is self.ring or ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise IncompatibleRingError(f"계수체가 다릅니다: {self.ring} -> {ring}")
        target = []
        for i, name in enumerate(self.ring.variables):
            if name in ring.index:
                target.append(ring.index[name])
            elif any(m[i] for m, _ in self.terms):
                raise IncompatibleRingError(f"변수 {name!r} 가 대상 환 {ring} 에 없습니다")
            else:
                target.append(None)
        acc = {}
        for m, c in self.terms:
            exps = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    exps[target[i]] = e
            acc[tuple(exps)] = c
        return Polynomial._raw(ring, _sorted_terms(ring, acc))

    def substitute(self, bindings: Mapping[str, Binding], target: Optional[RingSpec] = None) -> "Polynomial":
        return substitute(self, bindings, target)

    # -- 비교/출력 -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms and (other.ring is self.ring or other.ring == self.ring)
        if isinstance(other, int):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _sorted_terms(ring: RingSpec, acc: Dict[Monomial, Coefficient]):
    is_zero = ring.field.is_zero
    key = ring.key
    items = [(m, c) for m, c in acc.items() if not is_zero(c)]
    items.sort(key=lambda t: key(t[0]), reverse=True)
    return tuple(items)


def _merge(ring: RingSpec, a, b, negate: bool):
    """두 정렬된 항 목록의 합(negate=True 면 a - b)"""
    F = ring.field
    key = ring.key
    add = F.sub if negate else F.add
    neg = F.neg
    is_zero = F.is_zero
    out: List[Tuple[Monomial, Coefficient]] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            c = add(ca, cb)
            if not is_zero(c):
                out.append((ma, c))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append((mb, neg(cb)) if negate else b[j])
            j += 1
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend([(m, neg(c)) for m, c in b[j:]] if negate else b[j:])
    return tuple(out)


def leading_term(f: Polynomial) -> Term:
    return f.leading_term()


def leading_monomial(f: Polynomial) -> Monomial:
    return f.leading_monomial()


def substitute(
    f: Polynomial, bindings: Mapping[str, Binding], target: Optional[RingSpec] = None
) -> Polynomial:
    """
    준동형 대입. bindings 의 값은 대상 환의 다항식이나 계수체 원소.
    묶이지 않은 변수는 대상 환의 같은 이름 변수로 보냅니다.
    """
    ring = f.ring
    target = target or ring
    unknown = set(bindings) - set(ring.variables)
    if unknown:
        raise UnknownVariableError(f"대입 대상이 환의 변수가 아닙니다: {sorted(unknown)}")
    values: List[Polynomial] = []
    for name in ring.variables:
        if name in bindings:
            v = bindings[name]
            if isinstance(v, Polynomial):
                if v.ring != target:
                    raise IncompatibleRingError(f"{name} 에 대입할 다항식의 환이 {target} 가 아닙니다")
                values.append(v)
            else:
                values.append(target.constant(v))
        else:
            values.append(target.var(name) if name in target.index else None)
    powers: Dict[Tuple[int, int], Polynomial] = {}
    result = target.zero()
    for mono, c in f.terms:
        term = target.constant(c)
        for i, e in enumerate(mono):
            if not e:
                continue
            if values[i] is None:
                raise IncompatibleRingError(f"변수 {ring.variables[i]!r} 가 대상 환에 없습니다")
            pw = powers.get((i, e))
            if pw is None:
                pw = powers[(i, e)] = values[i] ** e
            term = term * pw
        result = result + term
    return result


# ---------------------------------------------------------------------------
# 출력
# ---------------------------------------------------------------------------

def format_monomial(ring: RingSpec, mono: Monomial) -> str:
    parts = []
    for name in ring.order.priority:
        e = mono[ring.index[name]]
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """내림차순 항, 부호는 계수에 접어 ' - ' 로 표기"""
    if not f.terms:
        return "0"
    F = f.ring.field
    out = []
    for mono, c in f.terms:
        negative, body = F.format(c)
        mtext = format_monomial(f.ring, mono)
        if not mtext:
            text = body or "1"
        elif body:
            text = f"{body}*{mtext}"
        else:
            text = mtext
        if not out:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


# ---------------------------------------------------------------------------
# 파싱
# ---------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*'*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*'*)|(\*\*|[-+*/^()]))")


class _Parser:
    """
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor | factor)*
    factor := '-' factor | atom (('^'|'**') INT)?
    atom   := INT | IDENT | '(' expr ')'
    """

    def __init__(self, text: str, ring: RingSpec):
        self.text = text
        self.ring = ring
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise PolynomialParseError(f"알 수 없는 문자 {text[bad]!r}", bad)
            start = m.start(m.lastindex)
            kind = ("num", "ident", "op")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            raise PolynomialParseError(f"{value!r} 가 필요합니다 (받은 값 {v or 'EOF'!r})", pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialParseError("빈 입력", 0)
        result = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise PolynomialParseError(f"예상치 못한 토큰 {v!r}", pos)
        return result

    def expr(self) -> Polynomial:
        kind, v, _ = self.peek()
        sign = 1
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, _ = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and v == "/":
                self.take()
                _, _, dpos = self.peek()
                d = self.factor()
                if not d.is_constant() or d.is_zero():
                    raise PolynomialParseError("0이 아닌 계수로만 나눌 수 있습니다", dpos)
                acc = acc.scale(self.ring.field.inv(d.terms[0][1]))
            elif kind in ("num", "ident") or (kind == "op" and v == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v in ("^", "**"):
            self.take()
            kind, v, pos = self.take()
            if kind != "num":
                raise PolynomialParseError("지수는 음이 아닌 정수여야 합니다", pos)
            return base ** int(v)
        return base

    def atom(self) -> Polynomial:
        kind, v, pos = self.take()
        ring = self.ring
        if kind == "num":
            return ring.constant(int(v))
        if kind == "ident":
            if v in ring.index:
                return ring.var(v)
            if ring.parameter is not None and v == ring.parameter:
                return ring.constant(ring.field.generator())
            raise UnknownVariableError(f"알 수 없는 식별자 {v!r} (position {pos})")
        if kind == "op" and v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolynomialParseError(f"예상치 못한 토큰 {v or 'EOF'!r}", pos)


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """다항식 문법 문자열을 정규형 Polynomial 로"""
    return _Parser(text, ring).parse()

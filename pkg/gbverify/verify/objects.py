"""
Construction 의 대상들 - A = F_p[s,x,y] (lex s>x>y), g, f, e, h, b, m 과
Gröbner 기저 G (e), F (B = F_p[r,s,x,y] 의 a = r h B + (1 - r) s B)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from ..core.idealops import Ideal, ideal_power
from ..core.polyring import Polynomial, RingSpec
from .params import ConstructionParams


@dataclass(frozen=True)
class ConstructionObjects:
    params: ConstructionParams
    ring: RingSpec
    g: Polynomial
    f: Polynomial
    e: Ideal
    h: Ideal
    b: Ideal
    max_ideal: Ideal
    G: Tuple[Polynomial, ...]
    big_ring: RingSpec
    a: Ideal
    F: Tuple[Polynomial, ...]

    @property
    def n(self) -> int:
        return self.params.n


def construction_ring(p: int) -> RingSpec:
    return RingSpec.create(p, ("s", "x", "y"), "lex")


def hypersurface(ring: RingSpec) -> Polynomial:
    """g = xy(x - y)(x + y - sy)"""
    s, x, y = (ring.var(v) for v in ("s", "x", "y"))
    return x * y * (x - y) * (x + y - s * y)


def alternating_f(ring: RingSpec, n: int) -> Polynomial:
    """f = Σ_{j=2}^{n-1} (-1)^j x^(n+1-j) y^j"""
    x, y = ring.var("x"), ring.var("y")
    f = ring.zero()
    for j in range(2, n):
        term = x ** (n + 1 - j) * y ** j
        f = f + term if j % 2 == 0 else f - term
    return f


def g_basis(ring: RingSpec, n: int) -> Tuple[Polynomial, ...]:
    """G = (g, x^n, x^(n-1) y^3, ..., x^3 y^(n-1), y^n)"""
    x, y = ring.var("x"), ring.var("y")
    middle = [x ** (n - 1 - k) * y ** (3 + k) for k in range(n - 3)]
    return (hypersurface(ring), x ** n, *middle, y ** n)


def f_basis(big: RingSpec, n: int, m: int) -> Tuple[Polynomial, ...]:
    """F_0 .. F_(n+4) (길이 n + 5)"""
    r, s, x, y = (big.var(v) for v in ("r", "s", "x", "y"))
    g = hypersurface(big)
    f = alternating_f(big, n)
    c = r * x ** 3 * y - r * x * y ** 3 - s * x ** 2 * y ** 2 + s * x * y ** 3
    d = m * r * x ** 2 * y ** (n - 1)
    for j in range(1, n - 2):
        sign = 1 if j % 2 == 1 else -1
        d = d + (sign * j) * s * x ** (n - 1 - j) * y ** (j + 2)
    tail = [s * x ** (n - 2 - k) * y ** (4 + k) for k in range(n - 4)]
    return (
        r * s - s,
        r * x ** n,
        c,
        d,
        r * y ** n,
        -(s * g),
        s * x ** n,
        s * f,
        *tail,
        s * y ** n,
    )


def build_construction_objects(params: ConstructionParams) -> ConstructionObjects:
    n, m = params.n, params.m
    A = construction_ring(params.p)
    s, x, y = A.gens()
    g = hypersurface(A)
    f = alternating_f(A, n)
    e = Ideal(A, [x ** n, y ** n, g])
    h = Ideal(A, [x ** n, y ** n, g, f])
    b = ideal_power(Ideal(A, [x, y]), n + 2)
    B = RingSpec.create(params.p, ("r", "s", "x", "y"), "lex")
    r = B.var("r")
    a = Ideal(B, [r * u.to_ring(B) for u in h.generators] + [(1 - r) * s.to_ring(B)])
    return ConstructionObjects(
        params=params,
        ring=A,
        g=g,
        f=f,
        e=e,
        h=h,
        b=b,
        max_ideal=Ideal(A, [s, x, y]),
        G=g_basis(A, n),
        big_ring=B,
        a=a,
        F=f_basis(B, n, m),
    )

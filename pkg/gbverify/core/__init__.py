"""
대수 커널 - 계수체, 다항식환, Gröbner 기저, 아이디얼 연산, 국소 코호몰로지 길이
"""
from .coefficients import PrimeField, PrimeFieldElement, RationalFunction, RationalFunctionField
from .errors import GbVerifyError
from .groebner import GroebnerBasis, SpolyCertificate, buchberger, divide, is_groebner, s_polynomial
from .idealops import Ideal, membership
from .polyring import Polynomial, RingSpec, parse_poly

__all__ = [
    "GbVerifyError",
    "GroebnerBasis",
    "Ideal",
    "Polynomial",
    "PrimeField",
    "PrimeFieldElement",
    "RationalFunction",
    "RationalFunctionField",
    "RingSpec",
    "SpolyCertificate",
    "buchberger",
    "divide",
    "is_groebner",
    "membership",
    "parse_poly",
    "s_polynomial",
]

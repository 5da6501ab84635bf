"""
gbverify 예외 계층
모든 커널/하네스 오류는 GbVerifyError 를 상속합니다.
"""


class GbVerifyError(Exception):
    """gbverify 공통 예외"""


class FieldDivisionByZero(GbVerifyError, ZeroDivisionError):
    """0의 역원을 구하려 할 때"""


class IncompatibleFieldError(GbVerifyError):
    """서로 다른 체(모듈러스/파라미터)의 원소를 섞어 연산할 때"""


class IncompatibleRingError(GbVerifyError):
    """서로 다른 다항식환의 원소/아이디얼을 섞어 연산할 때"""


class InvalidRingError(GbVerifyError):
    """RingSpec 검증 실패 (소수가 아닌 표수, 변수 이름 중복 등)"""


class UnknownVariableError(GbVerifyError):
    """파싱 중 환에 없는 식별자를 만났을 때"""


class PolynomialParseError(GbVerifyError):
    """다항식 문법 오류 (position: 0부터 시작하는 문자 위치)"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.message = message
        self.position = position


class UndefinedLeadingTermError(GbVerifyError):
    """영다항식의 선도항을 요구할 때"""


class NonDivisibleError(GbVerifyError):
    """나누어떨어지지 않는 단항식 몫"""


class InvalidBracketPowerError(GbVerifyError):
    """q 가 표수 p 의 거듭제곱이 아닐 때"""


class UnsupportedEliminationError(GbVerifyError):
    """lex 가 아니거나 소거 변수가 우선순위 접두사가 아닐 때"""


class PreconditionError(GbVerifyError):
    """연산의 사전 조건 위반 (예: J ⊄ U)"""


class InternalConsistencyError(GbVerifyError):
    """일어나서는 안 되는 내부 불변식 위반"""


class CertificateError(GbVerifyError):
    """인증서 인덱스 범위 초과, 알 수 없는 쌍 등"""


class InvalidParamsError(GbVerifyError):
    """검증 하네스 파라미터 오류"""


class ConfigError(GbVerifyError):
    """환경 변수 설정 오류"""


class FileFormatError(GbVerifyError):
    """ring/ideal/certificate 파일 형식 오류"""

    def __init__(self, message: str, path: str = "", line: int = 0):
        where = f"{path}:{line}: " if path else ""
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line

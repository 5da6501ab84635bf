"""
gbverify - 유한체와 유리함수체 위의 Gröbner 기저, 아이디얼 연산, 검증 하네스
"""
__version__ = "0.1.0"

"""
erws 예외 계층

모든 라이브러리 예외는 ErwsError에서 파생됩니다.
검증 에러는 필드 목록(errors: [{"field", "message"}])을 유지합니다.
"""

from typing import Dict, List


class ErwsError(Exception):
    """erws 기본 예외"""


class ValidationError(ErwsError):
    """검증 실패 예외 (한 번의 호출에서 발견된 모든 필드 에러를 모음)"""

    def __init__(self, errors: List[Dict[str, str]]):
        self.errors = errors
        messages = [f"{err['field']}: {err['message']}" for err in errors]
        super().__init__("; ".join(messages))

    def to_dict(self) -> dict:
        """에러를 딕셔너리로 변환"""
        return {"error": type(self).__name__, "details": self.errors}


class NormalizationError(ValidationError):
    """확률 합이 1에서 허용 오차 이상 벗어남"""


class RangeError(ValidationError):
    """값이 허용 구간을 벗어남"""


class DomainError(ErwsError):
    """감마 함수 비율이 정의되지 않는 인자 (t + alpha <= 0)"""


class CapExceeded(ErwsError):
    """열거 오라클의 t 상한 초과"""

    def __init__(self, t: int, cap: int):
        self.t = t
        self.cap = cap
        super().__init__(f"t={t} exceeds the enumeration cap {cap}")


class InsufficientData(ErwsError):
    """지수 피팅에 필요한 데이터 포인트 부족"""


class ResourceError(ErwsError):
    """앙상블 누산기가 메모리 상한을 초과"""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"ensemble accumulators need {required} bytes, cap is {cap} bytes"
        )


class CsvFormatError(ErwsError):
    """입력 CSV 형식 오류"""


class ResonanceFallback(UserWarning):
    """닫힌 형식 대신 점화식 반복(또는 피팅된 전개)을 사용했음을 알리는 경고"""


def single_error(field: str, message: str) -> List[Dict[str, str]]:
    """단일 필드 에러 목록 생성"""
    return [{"field": field, "message": message}]

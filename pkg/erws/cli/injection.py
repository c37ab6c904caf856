"""
FlagInjector - 문자열 플래그 값을 핸들러 시그니처의 타입으로 변환
"""

import inspect
import types
from typing import Any, Callable, Dict, List, Optional, Tuple, Union, get_args, get_origin, get_type_hints

from erws.errors import ValidationError


def flag_name(param_name: str) -> str:
    """파라미터 이름을 플래그로: t_max -> --t-max, input_ -> --input"""
    return "--" + param_name.rstrip("_").replace("_", "-")


def _unwrap_optional(param_type: Any) -> Tuple[Any, bool]:
    origin = get_origin(param_type)
    if origin is Union or origin is types.UnionType:
        args = [arg for arg in get_args(param_type) if arg is not type(None)]
        if len(args) == 1:
            return args[0], True
    return param_type, False


class FlagInjector:
    """
    핸들러 파라미터 값 주입 및 타입 변환

    이 injector는:
    1. 파싱된 플래그에서 값을 가져옴
    2. 타입 변환 수행 (int, float, bool, list 등)
    3. 필수 플래그 검증
    4. 기본값 처리
    한 번의 호출에서 발견된 모든 에러를 ValidationError 하나로 보고합니다.
    """

    def parameters(self, handler: Callable) -> List[Tuple[str, inspect.Parameter, Any]]:
        """(이름, 파라미터, 타입) 목록 ('self' 제외)"""
        sig = inspect.signature(handler)
        hints = get_type_hints(handler)
        result = []
        for param_name, param in sig.parameters.items():
            if param_name == "self":
                continue
            if param_name not in hints:
                raise TypeError(
                    f"Parameter '{param_name}' of '{handler.__name__}' must have a type annotation"
                )
            result.append((param_name, param, hints[param_name]))
        return result

    def inject(self, handler: Callable, raw: Dict[str, Optional[str]]) -> Dict[str, Any]:
        """
        파라미터 값을 주입

        Args:
            handler: 서브커맨드 핸들러
            raw: 파라미터 이름 -> 문자열 값 (없으면 None)

        Returns:
            변환된 키워드 인자

        Raises:
            ValidationError: 누락 또는 변환 실패 시
        """
        values: Dict[str, Any] = {}
        errors = []
        for param_name, param, param_type in self.parameters(handler):
            value = raw.get(param_name)
            if value is None:
                if param.default is not inspect.Parameter.empty:
                    values[param_name] = param.default
                else:
                    errors.append(
                        {
                            "field": flag_name(param_name),
                            "message": f"Missing required flag '{flag_name(param_name)}'",
                        }
                    )
                continue
            try:
                values[param_name] = self._convert_type(value, param_type, param_name)
            except (ValueError, TypeError) as e:
                errors.append({"field": flag_name(param_name), "message": str(e)})

        if errors:
            raise ValidationError(errors)
        return values

    def _convert_type(self, value: Any, param_type: Any, param_name: str) -> Any:
        """타입 변환 수행"""
        param_type, _ = _unwrap_optional(param_type)

        origin = get_origin(param_type)
        if origin is list:
            return self._convert_to_list(value, param_type, param_name)

        if isinstance(param_type, type) and isinstance(value, param_type):
            if not (param_type is int and isinstance(value, bool)):
                return value

        try:
            if param_type is bool:
                return self._convert_to_bool(value)
            elif param_type is int:
                return self._convert_to_int(value)
            elif param_type is float:
                return float(value)
            elif param_type is str:
                return str(value)
            return value
        except (ValueError, TypeError) as e:
            raise ValueError(
                f"Cannot convert '{flag_name(param_name)}' value {value!r} "
                f"to {getattr(param_type, '__name__', param_type)}: {e}"
            )

    def _convert_to_int(self, value: Any) -> int:
        """정수 변환 ('1e6'처럼 정수 값을 갖는 지수 표기 허용)"""
        try:
            return int(value)
        except (ValueError, TypeError):
            number = float(value)
            if not number.is_integer():
                raise ValueError(f"{value!r} is not an integer")
            return int(number)

    def _convert_to_bool(self, value: Any) -> bool:
        if isinstance(value, bool):
            return value
        lower_value = str(value).lower()
        if lower_value in ("true", "1", "yes", "on"):
            return True
        elif lower_value in ("false", "0", "no", "off"):
            return False
        raise ValueError(f"Cannot convert '{value}' to boolean")

    def _convert_to_list(self, value: Any, param_type: Any, param_name: str) -> List:
        """쉼표 구분 문자열을 리스트로"""
        items = value if isinstance(value, list) else [
            item.strip() for item in str(value).split(",") if item.strip()
        ]
        args = get_args(param_type)
        if not args:
            return list(items)
        return [
            self._convert_type(item, args[0], f"{param_name}[{i}]")
            for i, item in enumerate(items)
        ]

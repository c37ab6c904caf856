"""
범용 핸들러 컨테이너 및 인터셉터

서브커맨드 핸들러는 인터셉터 체인(before -> handler -> after, 실패 시 on_error)으로 감싸여 실행됩니다.
"""

import functools
import logging
import time
import warnings
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, TypeVar

from erws.errors import ResonanceFallback

T = TypeVar("T")

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_FALLBACK = 3
EXIT_MISMATCH = 4


@dataclass
class CommandResult:
    """서브커맨드 실행 결과"""

    exit_code: int = EXIT_OK
    fallbacks: int = 0
    message: Optional[str] = None


class HandlerInterceptor:
    """핸들러 인터셉터 인터페이스"""

    def before(self, *args, **kwargs) -> tuple:
        """
        핸들러 실행 전 호출
        args, kwargs를 수정하여 반환 가능
        """
        return args, kwargs

    def after(self, result: Any, *args, **kwargs) -> Any:
        """
        핸들러 실행 후 호출
        결과를 수정하여 반환 가능
        """
        return result

    def on_error(self, error: Exception, *args, **kwargs):
        """에러 발생 시 호출, 기본 동작은 재발생"""
        raise error


class LoggingInterceptor(HandlerInterceptor):
    """서브커맨드 시작/완료/실패 로깅"""

    def __init__(self):
        self._started: List[float] = []

    def before(self, *args, **kwargs) -> tuple:
        logger.info(f"Command started with flags {kwargs}")
        self._started.append(time.perf_counter())
        return args, kwargs

    def after(self, result: Any, *args, **kwargs) -> Any:
        elapsed = time.perf_counter() - self._started.pop()
        logger.info(f"Command finished in {elapsed:.3f}s: {result}")
        return result

    def on_error(self, error: Exception, *args, **kwargs):
        if self._started:
            self._started.pop()
        logger.info(f"Command failed - {type(error).__name__}: {error}")
        raise error


class FallbackInterceptor(HandlerInterceptor):
    """
    실행 중 발생한 ResonanceFallback 경고를 기록

    --strict가 주어졌고 대체 경로가 한 번이라도 쓰였으면 종료 코드를 3으로 바꿉니다.
    """

    def __init__(self):
        self._recorders: List[warnings.catch_warnings] = []
        self._records: List[list] = []

    def before(self, *args, **kwargs) -> tuple:
        recorder = warnings.catch_warnings(record=True)
        self._records.append(recorder.__enter__())
        self._recorders.append(recorder)
        warnings.simplefilter("always", ResonanceFallback)
        return args, kwargs

    def _finish(self) -> int:
        recorder = self._recorders.pop()
        records = self._records.pop()
        recorder.__exit__(None, None, None)
        fallbacks = [w for w in records if issubclass(w.category, ResonanceFallback)]
        for record in records:
            if record not in fallbacks:
                warnings.warn_explicit(
                    record.message, record.category, record.filename, record.lineno
                )
        return len(fallbacks)

    def after(self, result: Any, *args, **kwargs) -> Any:
        fallbacks = self._finish()
        if isinstance(result, CommandResult):
            result.fallbacks += fallbacks
            if fallbacks and kwargs.get("strict") and result.exit_code == EXIT_OK:
                result.exit_code = EXIT_FALLBACK
                result.message = f"{fallbacks} numerical fallback(s) under --strict"
        return result

    def on_error(self, error: Exception, *args, **kwargs):
        self._finish()
        raise error


class HandlerContainer:
    """핸들러 메타데이터와 인터셉터 목록"""

    def __init__(self, target: Callable):
        self.target = target
        self.interceptors: List[HandlerInterceptor] = []
        self.metadata: Dict[str, Any] = {}

    def add_interceptor(self, interceptor: HandlerInterceptor):
        self.interceptors.append(interceptor)

    def set_metadata(self, key: str, value: Any):
        self.metadata[key] = value

    def get_metadata(self, key: str, default: Any = None) -> Any:
        return self.metadata.get(key, default)

    def wrap_handler(self, handler: Callable) -> Callable:
        """핸들러를 인터셉터로 감싸기"""

        @functools.wraps(handler)
        def wrapped(*args, **kwargs):
            for interceptor in self.interceptors:
                args, kwargs = interceptor.before(*args, **kwargs)

            try:
                result = handler(*args, **kwargs)

                for interceptor in reversed(self.interceptors):
                    result = interceptor.after(result, *args, **kwargs)

                return result

            except Exception as e:
                for interceptor in reversed(self.interceptors):
                    try:
                        interceptor.on_error(e, *args, **kwargs)
                    except Exception:
                        pass
                raise

        return wrapped


def create_handler_decorator(
    *interceptor_classes: type[HandlerInterceptor],
    metadata_key: Optional[str] = None,
):
    """
    인터셉터를 붙이는 핸들러 데코레이터 팩토리

    Examples:
        Monitored = create_handler_decorator(
            LoggingInterceptor, metadata_key="__erws_monitored__"
        )
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        if not isinstance(getattr(func, "__erws_container__", None), HandlerContainer):
            func.__erws_container__ = HandlerContainer(func)
        for interceptor_class in interceptor_classes:
            func.__erws_container__.add_interceptor(interceptor_class())
        if metadata_key:
            setattr(func, metadata_key, True)
        return func

    return decorator


Logged = create_handler_decorator(LoggingInterceptor, metadata_key="__erws_logged__")

FallbackAware = create_handler_decorator(
    FallbackInterceptor, metadata_key="__erws_fallback_aware__"
)

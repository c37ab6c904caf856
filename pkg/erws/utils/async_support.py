"""
Async Support Utilities

asgiref로 동기 계산 함수를 스레드 풀 코루틴으로 바꾸고, 순서를 보존하며 모읍니다.
앙상블 러너는 블록 계산을 이 경로로 분산합니다.
"""

import asyncio
import inspect
from typing import Any, Awaitable, Callable, Coroutine, Iterable, List, ParamSpec, TypeVar

from asgiref.sync import async_to_sync, sync_to_async

T = TypeVar("T")
P = ParamSpec("P")
R = TypeVar("R")


def is_async_callable(func: Callable[..., Any]) -> bool:
    """
    함수가 async 함수인지 확인

    Args:
        func: 확인할 함수 (바운드 메서드, callable 객체 포함)

    Returns:
        bool: async 함수면 True
    """
    if inspect.iscoroutinefunction(func):
        return True
    if hasattr(func, "__func__"):
        return inspect.iscoroutinefunction(func.__func__)
    call = getattr(func, "__call__", None)
    return call is not None and inspect.iscoroutinefunction(call)


def run_sync_or_async(
    func: Callable[P, R] | Callable[P, Coroutine[Any, Any, R]],
) -> Callable[P, Coroutine[Any, Any, R]]:
    """
    sync 함수는 별도 스레드에서 도는 코루틴으로, async 함수는 그대로 반환

    thread_sensitive=False이므로 numpy 연산이 GIL을 놓는 동안 블록들이 겹쳐 실행됩니다.
    """
    if is_async_callable(func):
        return func  # type:ignore
    return sync_to_async(func, thread_sensitive=False)  # type:ignore


def force_sync(func: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
    """
    sync 또는 async 함수를 동기 방식으로 실행

    Examples:
        >>> curve = force_sync(runner.run_async, params, cfg)
    """
    if is_async_callable(func):
        return async_to_sync(func, force_new_loop=False)(*args, **kwargs)
    return func(*args, **kwargs)


async def gather_bounded(
    func: Callable[..., T], items: Iterable[tuple], limit: int
) -> List[T]:
    """
    items의 각 인자 튜플로 func를 호출하되 동시에 최대 limit개만 실행

    결과는 items 순서 그대로 반환됩니다 (asyncio.gather는 입력 순서를 보존).
    """
    semaphore = asyncio.Semaphore(max(1, limit))
    call = run_sync_or_async(func)

    async def bounded(args: tuple) -> T:
        async with semaphore:
            return await call(*args)

    tasks: List[Awaitable[T]] = [bounded(args) for args in items]
    return list(await asyncio.gather(*tasks))

from erws.utils.async_support import (
    force_sync,
    gather_bounded,
    is_async_callable,
    run_sync_or_async,
)

__all__ = ["force_sync", "gather_bounded", "is_async_callable", "run_sync_or_async"]

"""
@CommandGroup 및 @Subcommand 데코레이터
"""

from typing import Any, Callable, Dict, Optional, Type, TypeVar, Union, get_type_hints

from erws.cli.handler import HandlerContainer

T = TypeVar("T")


class SubcommandHandler(HandlerContainer):
    """서브커맨드 핸들러 컨테이너"""

    def __init__(self, target: Callable, name: str, help: str = ""):
        super().__init__(target)
        self.name = name
        self.help = help
        self.set_metadata("name", name)
        self.set_metadata("help", help)


class CommandGroupContainer:
    """
    커맨드 그룹 컨테이너

    타입 힌트가 달린 속성에 제공자(provider) 인스턴스를 타입 기준으로 주입합니다.
    """

    def __init__(self, target: Type):
        self.target = target
        self.instance = None

    def initialize(self, providers: Optional[Dict[type, Any]] = None) -> Any:
        providers = providers or {}

        try:
            hints = get_type_hints(self.target)
        except Exception:
            hints = {}

        self.instance = self.target()
        for attr_name, attr_type in hints.items():
            if attr_type in providers:
                setattr(self.instance, attr_name, providers[attr_type])
        return self.instance


def CommandGroup(cls: Type[T]) -> Type[T]:
    """
    클래스를 서브커맨드 묶음으로 등록하는 데코레이터

    사용 예:
    @CommandGroup
    class Commands:
        settings: Settings

        @Subcommand("exact")
        def exact(self, eps: float) -> CommandResult: ...
    """
    cls.__erws_container__ = CommandGroupContainer(cls)
    cls.__erws_command_group__ = True
    return cls


def Subcommand(
    name_or_func: Union[Callable[..., T], str, None] = None, /, help: str = ""
):
    """
    메서드를 서브커맨드로 등록

    사용법:
    - @Subcommand          # 메서드 이름 사용
    - @Subcommand("scan")  # 이름 지정
    """

    def wrapper(func: Callable[..., T]) -> Callable[..., T]:
        name = "" if callable(name_or_func) else (name_or_func or "")
        name = name or func.__name__.replace("_", "-")
        doc = (func.__doc__ or "").strip().splitlines()
        container = SubcommandHandler(func, name, help or (doc[0] if doc else ""))

        # 먼저 붙은 인터셉터 유지
        previous = getattr(func, "__erws_container__", None)
        if isinstance(previous, HandlerContainer):
            container.interceptors = previous.interceptors

        func.__erws_subcommand__ = True
        func.__erws_container__ = container
        return func

    if callable(name_or_func):
        return wrapper(name_or_func)
    return wrapper

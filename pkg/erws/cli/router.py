"""
CommandRouter - 커맨드 그룹을 argparse 파서로 만들고 서브커맨드를 실행
"""

import argparse
import inspect
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from erws.cli.command import SubcommandHandler
from erws.cli.injection import FlagInjector, _unwrap_optional, flag_name
from erws.errors import ValidationError

logger = logging.getLogger(__name__)


class UsageError(ValidationError):
    """명령줄 구문 오류"""

    def __init__(self, message: str):
        super().__init__([{"field": "argv", "message": message}])


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


class Route:
    """서브커맨드 하나: 바운드 핸들러와 인터셉터로 감싼 실행 함수"""

    def __init__(self, container: SubcommandHandler, handler: Callable):
        self.container = container
        self.handler = handler
        self.wrapped = container.wrap_handler(handler)

    @property
    def name(self) -> str:
        return self.container.name


class CommandRouter:
    """
    커맨드 라우터

    책임:
    - @CommandGroup 인스턴스 생성 및 타입 기반 속성 주입
    - @Subcommand 메서드마다 argparse 서브파서 생성 (플래그는 시그니처에서 유도)
    - 파싱 -> FlagInjector 변환 -> 인터셉터 체인 실행
    """

    def __init__(
        self,
        *groups: type,
        providers: Optional[Dict[type, Any]] = None,
        prog: str = "erws",
    ):
        self.injector = FlagInjector()
        self.routes: Dict[str, Route] = {}
        self.parser = _ArgumentParser(prog=prog)
        self.parser.add_argument(
            "--debug", action="store_true", help="verbose logging to stderr"
        )
        self._subparsers = self.parser.add_subparsers(dest="command", metavar="command")
        self._subparsers.required = True

        for group in groups:
            self.register(group, providers or {})

    def register(self, group: type, providers: Dict[type, Any]) -> None:
        """커맨드 그룹 등록"""
        if not getattr(group, "__erws_command_group__", False):
            raise TypeError(f"{group.__name__} is not decorated with @CommandGroup")
        instance = group.__erws_container__.initialize(providers)

        for attr_name, member in inspect.getmembers(group, inspect.isfunction):
            if not getattr(member, "__erws_subcommand__", False):
                continue
            container: SubcommandHandler = member.__erws_container__
            route = Route(container, getattr(instance, attr_name))
            self._add_subparser(route)
            self.routes[route.name] = route
            logger.debug(f"Registered subcommand '{route.name}'")

    def _add_subparser(self, route: Route) -> None:
        subparser = self._subparsers.add_parser(route.name, help=route.container.help)
        for param_name, param, param_type in self.injector.parameters(route.handler):
            base_type, _ = _unwrap_optional(param_type)
            has_default = param.default is not inspect.Parameter.empty
            if base_type is bool:
                subparser.add_argument(
                    flag_name(param_name), dest=param_name, action="store_const", const="true"
                )
                continue
            subparser.add_argument(
                flag_name(param_name),
                dest=param_name,
                default=None,
                metavar=getattr(base_type, "__name__", "value").upper(),
                help=f"default: {param.default}" if has_default else "required",
            )

    def dispatch(self, argv: Sequence[str]) -> Any:
        """
        명령줄 실행

        Raises:
            UsageError: 구문 오류
            ValidationError: 플래그 변환 실패
        """
        namespace = vars(self.parser.parse_args(list(argv)))
        route = self.routes[namespace.pop("command")]
        namespace.pop("debug", None)
        kwargs = self.injector.inject(route.handler, namespace)
        return route.wrapped(**kwargs)

    @property
    def commands(self) -> List[str]:
        return sorted(self.routes)

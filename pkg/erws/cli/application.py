"""
ErwsApplication - 명령줄 실행 전체 흐름 관리

책임 분리:
- CommandRouter: 파싱과 서브커맨드 실행
- ErwsApplication: 로깅 설정, 제공자 구성, 예외 -> 종료 코드 변환
"""

import logging
import sys
from typing import IO, List, Optional, Sequence

from erws.cli.commands import ErwsCommands
from erws.cli.handler import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, CommandResult
from erws.cli.router import CommandRouter
from erws.config import Settings, get_settings
from erws.errors import CapExceeded, ErwsError, ValidationError
from erws.sim import EnsembleRunner

logger = logging.getLogger(__name__)


class ErwsApplication:
    """
    erws 명령줄 애플리케이션

    사용 예:
        app = ErwsApplication(debug=True)
        code = app.run(["exact", "--eps", "0.1", "--r", "0.2", "--gamma", "0.3"])
    """

    def __init__(
        self,
        debug: bool = False,
        settings: Optional[Settings] = None,
        stderr: Optional[IO[str]] = None,
    ):
        self.debug = debug
        self.settings = settings or get_settings()
        self.stderr = stderr
        self._setup_logging()
        self.router = CommandRouter(
            ErwsCommands,
            providers={
                Settings: self.settings,
                EnsembleRunner: EnsembleRunner(self.settings),
            },
        )

    def _setup_logging(self):
        """로깅 설정 (stdout은 결과 전용이므로 stderr로 출력)"""
        log_level = logging.DEBUG if self.debug else logging.WARNING
        logging.basicConfig(
            level=log_level,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            stream=sys.stderr,
        )

    def _report(self, message: str) -> None:
        print(message, file=self.stderr or sys.stderr)

    def _handle_error(self, error: Exception) -> int:
        """예외를 종료 코드로 변환"""
        if isinstance(error, ValidationError):
            for detail in error.errors:
                self._report(f"erws: {detail['field']}: {detail['message']}")
            return EXIT_USAGE
        if isinstance(error, CapExceeded):
            self._report(f"erws: {error}")
            return EXIT_USAGE
        if isinstance(error, ErwsError):
            self._report(f"erws: {type(error).__name__}: {error}")
            return EXIT_RUNTIME
        raise error

    def run(self, argv: Sequence[str]) -> int:
        """
        서브커맨드 실행

        Returns:
            종료 코드 (0 성공, 1 실행 오류, 2 사용법, 3 --strict 대체 경로, 4 오라클 불일치)
        """
        try:
            result = self.router.dispatch(argv)
        except ErwsError as e:
            return self._handle_error(e)

        if not isinstance(result, CommandResult):
            return EXIT_OK
        if result.message:
            self._report(f"erws: {result.message}")
        return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """콘솔 진입점"""
    argv = list(sys.argv[1:] if argv is None else argv)
    debug = "--debug" in argv
    return ErwsApplication(debug=debug).run(argv)

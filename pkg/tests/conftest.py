"""
pytest configuration
"""

import sys
from pathlib import Path
import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


@pytest.fixture(autouse=True)
def reset_global_settings():
    """각 테스트 전후로 전역 설정을 기본값으로 되돌립니다."""
    from erws.config import reset_settings

    reset_settings()

    yield

    reset_settings()


@pytest.fixture
def params_1d():
    """기준 1D 파라미터 (p, q, r, ε, s) = (0.55, 0.25, 0.2, 0.1, 0.5)"""
    from erws.model import validate_params_1d

    return validate_params_1d(0.55, 0.25, 0.2, 0.1, 0.5)


@pytest.fixture
def params_2d():
    """기준 2D 파라미터 (p, q, p', q', r, ε) = (0.3, 0.1, 0.2, 0.2, 0.2, 0.1)"""
    from erws.model import validate_params_2d

    return validate_params_2d(0.3, 0.1, 0.2, 0.2, 0.2, 0.1, 0.25, 0.25, 0.25, 0.25)

"""
erws 서브커맨드: exact | simulate | scan | oracle | fit
"""

import json
import logging
import secrets
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError, model_validator

from erws.cli.command import CommandGroup, Subcommand
from erws.cli.csvio import numeric_column, open_output, read_csv, write_csv
from erws.cli.handler import EXIT_MISMATCH, CommandResult, FallbackAware, Logged
from erws.config import Settings
from erws.errors import CsvFormatError, ValidationError, single_error
from erws.exact import (
    classify_parameters,
    first_moment,
    first_moment_2d,
    moment_table,
    second_moment_2d,
    second_moment_asymptotics,
    second_moment_exact,
)
from erws.model import Params1D, Params2D
from erws.oracle import (
    enumerate_exact,
    enumerate_exact_2d,
    iterate_recurrences,
    iterate_recurrences_2d,
)
from erws.sim import (
    EnsembleConfig,
    EnsembleRunner,
    curve_from_values,
    default_checkpoints,
    fit_exponent,
)

logger = logging.getLogger(__name__)

INVALID_REGIME = "invalid"
LINEAR_CHECKPOINTS = 100


def parse_checkpoints(text: str, t_max: int) -> List[int]:
    """
    --checkpoints 해석: log | linear | 쉼표 구분 목록

    Raises:
        ValidationError: 목록 값이 [1, t_max]를 벗어날 때
    """
    if text == "log":
        return default_checkpoints(t_max)
    if text == "linear":
        grid = np.linspace(1, t_max, num=min(t_max, LINEAR_CHECKPOINTS))
        return sorted({int(round(t)) for t in grid})
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ValidationError(
            single_error("--checkpoints", f"expected log, linear or a list, got {text!r}")
        )
    fractional = [value for value in values if not value.is_integer()]
    if fractional:
        raise ValidationError(
            single_error("--checkpoints", f"checkpoints must be integers, got {fractional[0]!r}")
        )
    points = sorted({int(value) for value in values})
    if not points or points[0] < 1 or points[-1] > t_max:
        raise ValidationError(
            single_error("--checkpoints", f"checkpoints must lie in [1, {t_max}]")
        )
    return points


def parse_range(flag: str, text: str, parts: int) -> Tuple[float, ...]:
    """'lo:hi[:n]' 형식 해석"""
    items = text.split(":")
    try:
        if len(items) != parts:
            raise ValueError
        return tuple(float(item) for item in items)
    except ValueError:
        layout = "lo:hi:n" if parts == 3 else "lo:hi"
        raise ValidationError(single_error(flag, f"expected {layout}, got {text!r}"))


class ScanGrid(BaseModel):
    """(r, γ) 격자"""

    model_config = ConfigDict(frozen=True)

    eps: float = Field(ge=0.0, lt=1.0)
    r_range: Tuple[float, float, int]
    gamma_range: Tuple[float, float, int]
    include_baseline: bool = False

    @model_validator(mode="after")
    def _check_ranges(self):
        for name, (lo, hi, steps), bounds in (
            ("r_range", self.r_range, (0.0, 1.0)),
            ("gamma_range", self.gamma_range, (-1.0, 1.0)),
        ):
            if steps < 2:
                raise ValueError(f"{name} needs at least 2 steps")
            if not (bounds[0] < lo <= hi < bounds[1]):
                raise ValueError(f"{name} must satisfy {bounds[0]} < lo <= hi < {bounds[1]}")
        if self.eps == 0.0 and not self.include_baseline:
            raise ValueError("eps must be positive unless the baseline grid is requested")
        return self

    @staticmethod
    def axis(lo: float, hi: float, steps: int) -> List[float]:
        # 12자리 반올림으로 0.49 같은 격자점이 정확히 나오게 한다
        return [round(float(v), 12) for v in np.linspace(lo, hi, int(steps))]

    def cells(self):
        """ε 격자 칸, --baseline이면 같은 (r, γ)의 ε = 0 칸을 뒤에 덧붙임"""
        eps_rows = [self.eps] if self.eps > 0.0 else []
        if self.include_baseline:
            eps_rows.append(0.0)
        for eps in eps_rows:
            for r in self.axis(*self.r_range):
                for gamma in self.axis(*self.gamma_range):
                    yield eps, r, gamma


def scan_cell(eps: float, r: float, gamma: float) -> List[Any]:
    """격자 칸 하나의 CSV 행"""
    p = (1.0 - r + gamma) / 2.0
    q = (1.0 - r - gamma) / 2.0
    if not (0.0 < p < 1.0 and 0.0 < q < 1.0):
        return [eps, r, gamma, INVALID_REGIME, None, None, None]
    report = classify_parameters(eps, r, gamma)
    diffusivity = report.diffusivity
    gap = diffusivity - 1.0 / r if diffusivity is not None else None
    return [eps, r, gamma, report.regime.value, report.leading_exponent, diffusivity, gap]


def _resolve_seed(seed: str, settings: Settings) -> int:
    if seed == "default":
        return settings.default_master_seed
    if seed == "random":
        value = secrets.randbits(64)
        logger.warning(f"Using random master seed {value}")
        return value
    try:
        value = int(seed, 0)
    except ValueError:
        raise ValidationError(single_error("--seed", f"expected an integer, 'default' or 'random', got {seed!r}"))
    if not 0 <= value < 2**64:
        raise ValidationError(single_error("--seed", "seed must fit in 64 bits"))
    return value


def _write_json(out: str, payload: Dict[str, Any]) -> None:
    with open_output(out) as stream:
        stream.write(json.dumps(payload, indent=2) + "\n")


@CommandGroup
class ErwsCommands:
    """erws 서브커맨드 묶음"""

    settings: Settings
    runner: EnsembleRunner

    @Subcommand("exact", help="closed-form moments on checkpoints")
    @FallbackAware
    @Logged
    def exact(
        self,
        eps: float,
        r: float,
        gamma: float,
        s: float = 0.5,
        t_max: int = 1000,
        checkpoints: str = "log",
        out: str = "-",
        strict: bool = False,
    ) -> CommandResult:
        params = Params1D.from_gamma(eps, r, gamma, s)
        points = parse_checkpoints(checkpoints, t_max)
        table, method = moment_table(params, points)
        leading = second_moment_asymptotics(params).leading

        rows = [
            [t, m1, sigma2, m2, m2 / t, leading.value(t), method.value]
            for t, sigma2, m1, m2 in zip(table.t_values, table.sigma2, table.m1, table.m2)
        ]
        write_csv(
            out,
            ["t", "m1", "sigma2", "m2", "m2_over_t", "m2_leading_term", "method"],
            rows,
        )
        return CommandResult()

    @Subcommand("simulate", help="Monte Carlo ensemble moments")
    @FallbackAware
    @Logged
    def simulate(
        self,
        eps: float,
        r: float,
        gamma: float,
        gamma_prime: float = 0.0,
        dim: int = 1,
        lateral: Optional[float] = None,
        s: float = 0.5,
        s1: float = 0.25,
        s2: float = 0.25,
        s3: float = 0.25,
        s4: float = 0.25,
        walkers: int = 10000,
        t_max: int = 1000,
        checkpoints: str = "log",
        seed: str = "default",
        threads: int = 1,
        out: str = "-",
        strict: bool = False,
    ) -> CommandResult:
        if dim not in (1, 2):
            raise ValidationError(single_error("--dim", "dim must be 1 or 2"))
        if dim == 2:
            params = Params2D.from_gamma(
                eps, r, gamma, gamma_prime, lateral, (s1, s2, s3, s4)
            )
        else:
            params = Params1D.from_gamma(eps, r, gamma, s)

        cfg = EnsembleConfig.build(
            walkers=walkers,
            t_max=t_max,
            checkpoints=parse_checkpoints(checkpoints, t_max),
            master_seed=_resolve_seed(seed, self.settings),
            worker_count=threads,
        )
        curve = self.runner.run(params, cfg)

        header = ["t", "mean_x"] + (["mean_y"] if dim == 2 else []) + ["msd", "msd_se", "walkers"]
        rows = [
            [t, *mean, msd, se, curve.walkers]
            for t, mean, msd, se in zip(curve.checkpoints, curve.mean, curve.msd, curve.msd_se)
        ]
        write_csv(out, header, rows)
        return CommandResult()

    @Subcommand("scan", help="regime classification over an (r, gamma) grid")
    @FallbackAware
    @Logged
    def scan(
        self,
        r_range: str,
        gamma_range: str,
        eps: float = 0.0,
        baseline: bool = False,
        out: str = "-",
        strict: bool = False,
    ) -> CommandResult:
        r_lo, r_hi, r_steps = parse_range("--r-range", r_range, 3)
        g_lo, g_hi, g_steps = parse_range("--gamma-range", gamma_range, 3)
        try:
            grid = ScanGrid(
                eps=eps,
                r_range=(r_lo, r_hi, int(r_steps)),
                gamma_range=(g_lo, g_hi, int(g_steps)),
                include_baseline=baseline,
            )
        except PydanticValidationError as e:
            raise ValidationError(
                [{"field": "scan", "message": error["msg"]} for error in e.errors()]
            )

        rows = [scan_cell(*cell) for cell in grid.cells()]
        write_csv(
            out,
            ["eps", "r", "gamma", "regime", "leading_exponent", "diffusivity", "residual_gap"],
            rows,
        )
        return CommandResult()

    @Subcommand("oracle", help="enumeration vs closed form vs recurrence")
    @FallbackAware
    @Logged
    def oracle(
        self,
        eps: float,
        r: float,
        gamma: float,
        t: int,
        dim: int = 1,
        gamma_prime: float = 0.0,
        lateral: Optional[float] = None,
        s: float = 0.5,
        out: str = "-",
        strict: bool = False,
    ) -> CommandResult:
        if dim == 1:
            params = Params1D.from_gamma(eps, r, gamma, s)
            enum_m1, enum_m2 = enumerate_exact(params, t)
            enum_means = [enum_m1]
            closed_means = [first_moment(params, t)]
            closed_m2 = second_moment_exact(params, t)
            _, rec_m1, rec_m2 = iterate_recurrences(params, t, [t]).row(t)
            rec_means = [rec_m1]
        elif dim == 2:
            params = Params2D.from_gamma(eps, r, gamma, gamma_prime, lateral)
            enum_vector, enum_m2 = enumerate_exact_2d(params, t)
            enum_means = list(enum_vector)
            closed_means = list(first_moment_2d(params, t))
            closed_m2 = second_moment_2d(params, t)
            _, rec_vector, rec_m2 = iterate_recurrences_2d(params, t, [t]).row(t)
            rec_means = list(rec_vector)
        else:
            raise ValidationError(single_error("--dim", "dim must be 1 or 2"))

        exact_values = enum_means + [enum_m2]
        diffs = [
            abs(Fraction(value) - reference)
            for values in (closed_means + [closed_m2], rec_means + [rec_m2])
            for value, reference in zip(values, exact_values)
        ]
        diffs += [
            abs(a - b)
            for a, b in zip(closed_means + [closed_m2], rec_means + [rec_m2])
        ]
        max_abs_diff = float(max(diffs))

        def pack(means, m2):
            m1 = [float(m) for m in means]
            return {"m1": m1[0] if dim == 1 else m1, "m2": float(m2)}

        _write_json(
            out,
            {
                "enumeration": pack(enum_means, enum_m2),
                "closed_form": pack(closed_means, closed_m2),
                "recurrence": pack(rec_means, rec_m2),
                "max_abs_diff": max_abs_diff,
            },
        )
        if max_abs_diff > self.settings.oracle_tolerance:
            return CommandResult(
                exit_code=EXIT_MISMATCH,
                message=f"oracle mismatch: max_abs_diff={max_abs_diff!r}",
            )
        return CommandResult()

    @Subcommand("fit", help="log-log exponent fit of a moment curve CSV")
    @FallbackAware
    @Logged
    def fit(
        self,
        input_: str,
        window: str = "1e4:1e6",
        out: str = "-",
        strict: bool = False,
    ) -> CommandResult:
        t_lo, t_hi = parse_range("--window", window, 2)
        header, rows = read_csv(input_)
        if "t" not in header:
            raise CsvFormatError("input CSV has no 't' column")
        column = "m2" if "m2" in header else "msd" if "msd" in header else None
        if column is None:
            raise CsvFormatError("input CSV needs an 'm2' or 'msd' column")

        curve = curve_from_values(
            [int(t) for t in numeric_column(rows, "t")], numeric_column(rows, column)
        )
        result = fit_exponent(curve, (t_lo, t_hi))
        _write_json(out, result._asdict())
        return CommandResult()

"""
Settings read from the environment, optionally through a ``.env`` file.
"""
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional, Tuple

from dotenv import load_dotenv

from utils import parse_pair, parse_positive_int

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    budget: int = 10_000
    seed: int = 0
    models: int = 5
    max_carrier: int = 3
    log_level: str = "WARNING"
    skew: Tuple[float, float] = (0.45, 0.25)
    scale: float = 40.0

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None, dotenv: bool = True) -> "Settings":
        """
        Read ``SHEETS_*`` variables; unset ones keep their defaults.

        Raises:
            ValueError: If a variable is set to something unparseable
        """
        if env is None:
            if dotenv:
                load_dotenv()
            env = os.environ
        settings = cls()
        changes = {}
        if "SHEETS_BUDGET" in env:
            changes["budget"] = parse_positive_int(env["SHEETS_BUDGET"], "SHEETS_BUDGET")
        if "SHEETS_SEED" in env:
            try:
                changes["seed"] = int(env["SHEETS_SEED"])
            except ValueError as e:
                raise ValueError(f"Invalid SHEETS_SEED: {env['SHEETS_SEED']!r}") from e
        if "SHEETS_MODELS" in env:
            changes["models"] = parse_positive_int(env["SHEETS_MODELS"], "SHEETS_MODELS")
        if "SHEETS_MAX_CARRIER" in env:
            changes["max_carrier"] = parse_positive_int(env["SHEETS_MAX_CARRIER"], "SHEETS_MAX_CARRIER")
        if "SHEETS_LOG_LEVEL" in env:
            level = env["SHEETS_LOG_LEVEL"].strip().upper()
            if level not in LOG_LEVELS:
                raise ValueError(f"Invalid SHEETS_LOG_LEVEL: {level!r}, expected one of {', '.join(LOG_LEVELS)}")
            changes["log_level"] = level
        if "SHEETS_SKEW" in env:
            changes["skew"] = parse_pair(env["SHEETS_SKEW"], "SHEETS_SKEW")
        if "SHEETS_SCALE" in env:
            try:
                scale = float(env["SHEETS_SCALE"])
            except ValueError as e:
                raise ValueError(f"Invalid SHEETS_SCALE: {env['SHEETS_SCALE']!r}") from e
            if scale <= 0:
                raise ValueError(f"SHEETS_SCALE must be positive, got {scale}")
            changes["scale"] = scale
        return replace(settings, **changes)

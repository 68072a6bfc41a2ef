"""
Small text helpers shared by the command line and configuration.
"""
from typing import Sequence, Tuple


def parse_pair(text: str, name: str = "pair") -> Tuple[float, float]:
    """
    Parse a string in the format 'x,y' or 'x, y' into a tuple of floats.

    Args:
        text: String containing two numbers separated by a comma
        name: What the pair is, for error messages

    Returns:
        Tuple of (x, y) as floats

    Raises:
        ValueError: If the input string cannot be parsed into two numbers
    """
    try:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"{name} must contain exactly one comma")
        x, y = map(float, parts)
        return x, y
    except (ValueError, TypeError, AttributeError) as e:
        raise ValueError(f"Invalid {name}: {text!r}. Expected 'x,y' (e.g., '0.45,0.25')") from e


def parse_positive_int(text: str, name: str) -> int:
    """
    Raises:
        ValueError: If ``text`` is not a positive integer
    """
    try:
        value = int(text)
    except (ValueError, TypeError) as e:
        raise ValueError(f"Invalid {name}: {text!r}. Expected a positive integer") from e
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def format_permutation(p: Sequence[int]) -> str:
    """One-line form of a permutation: output position -> input sheet."""
    if not p:
        return "()"
    return " ".join(f"{k}<-{source}" for k, source in enumerate(p))

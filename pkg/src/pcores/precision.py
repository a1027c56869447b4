"""Working-precision configuration and certified integer rounding.

Every high-precision value in this package is produced inside an mpmath
context cloned for a specific :class:`PrecisionConfig`, so callers with
different precision needs never share mutable global state.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import mpmath


class PrecisionError(Exception):
    """A value could not be resolved at the configured precision."""


class VerificationError(Exception):
    """A cross-checked computation disagreed beyond its tolerance."""


@dataclass(frozen=True)
class PrecisionConfig:
    """How many digits to carry and how eagerly to round to integers.

    decimal_digits  target number of correct decimal digits
    snap_tolerance  largest |x - nearest integer| accepted by snapping
    guard_digits    extra digits carried internally beyond the target
    """

    decimal_digits: int = 60
    snap_tolerance: float = 1e-30
    guard_digits: int = 10

    def __post_init__(self) -> None:
        if self.decimal_digits < 20:
            raise ValueError("decimal_digits must be at least 20")
        if self.guard_digits < 1:
            raise ValueError("guard_digits must be positive")
        if not self.snap_tolerance > 0:
            raise ValueError("snap_tolerance must be positive")
        # A snap tolerance below what the working precision can resolve
        # would reject exact integers on rounding noise alone.
        floor = 10.0 ** -(self.decimal_digits - self.guard_digits)
        if self.snap_tolerance < floor:
            raise ValueError(
                f"snap_tolerance {self.snap_tolerance:g} is finer than the "
                f"resolvable floor {floor:g} at {self.decimal_digits} digits"
            )

    @classmethod
    def for_digits(cls, decimal_digits: int, guard_digits: int = 10) -> "PrecisionConfig":
        """Build a config for a digit count, widening the snap tolerance
        when the default would violate the resolvability invariant."""
        snap = max(1e-30, 10.0 ** -(decimal_digits - guard_digits))
        return cls(decimal_digits=decimal_digits, snap_tolerance=snap,
                   guard_digits=guard_digits)

    @property
    def working_dps(self) -> int:
        return self.decimal_digits + self.guard_digits

    def context(self):
        """The (shared, treat-as-immutable) mpmath context for this config."""
        return _context(self.working_dps)

    def eps(self) -> float:
        """Granularity of the target precision, as a float."""
        return 10.0 ** -self.decimal_digits


DEFAULT_PRECISION = PrecisionConfig()


@functools.lru_cache(maxsize=None)
def _context(dps: int):
    ctx = mpmath.mp.clone()
    ctx.dps = dps
    return ctx


def to_mpf(ctx, value):
    """Convert exactly representable inputs to an mpf of ``ctx``.

    Fractions are converted by one correctly rounded division (mpf() does
    not accept them directly); ints, floats, and mpfs pass through mpf().
    """
    if isinstance(value, Fraction):
        return ctx.fdiv(value.numerator, value.denominator)
    return ctx.mpf(value)


@dataclass(frozen=True)
class SnappedInteger:
    """A high-precision value resolved to its nearest integer.

    ``residual`` is |raw - nearest| (complex modulus when the raw value has
    an imaginary component), so it certifies both integrality and realness.
    """

    raw: object
    nearest: int
    residual: float

    def __int__(self) -> int:
        return self.nearest

    def __index__(self) -> int:
        return self.nearest


def snap_integer(value, config: PrecisionConfig = DEFAULT_PRECISION,
                 label: str = "value") -> SnappedInteger:
    """Round ``value`` to the nearest integer with a certified residual.

    Raises PrecisionError when the residual exceeds config.snap_tolerance.
    """
    ctx = config.context()
    if isinstance(value, Fraction):
        raw = to_mpf(ctx, value)
    else:
        raw = ctx.convert(value)
    nearest = int(ctx.nint(raw.real))
    residual = float(abs(raw - nearest))
    if residual > config.snap_tolerance:
        raise PrecisionError(
            f"{label} {ctx.nstr(raw, 25)} sits {residual:.3e} from the "
            f"nearest integer; snap tolerance is {config.snap_tolerance:g}"
        )
    return SnappedInteger(raw=raw, nearest=nearest, residual=residual)

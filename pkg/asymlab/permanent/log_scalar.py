from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Any, Union

from mpmath.ctx_mp import MPContext

from asymlab.config import PRECISION_BITS

ctx = MPContext()
ctx.prec = PRECISION_BITS

Real = Union[int, float, str, Any]


def on_config_change() -> None:
    ctx.prec = PRECISION_BITS


def log_factorial(n: int) -> Any:
    return ctx.loggamma(n + 1)


@total_ordering
@dataclass(frozen=True)
class LogScalar:
    """A real number kept as its sign and the natural log of its
    magnitude."""

    sign: int
    log_mag: Any

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f'sign {self.sign}')
        if (self.sign == 0) != (self.log_mag == ctx.ninf):
            raise ValueError('zero must carry a log magnitude of -inf')

    # region Constructors
    @classmethod
    def zero(cls) -> LogScalar:
        return cls(0, ctx.ninf)

    @classmethod
    def from_log(cls, log_mag: Real) -> LogScalar:
        return cls(1, ctx.mpf(log_mag))

    @classmethod
    def from_value(cls, x: Union[int, Real]) -> LogScalar:
        if x == 0:
            return cls.zero()
        sign = 1 if x > 0 else -1
        return cls(sign, ctx.log(ctx.mpf(abs(x))))
    # endregion

    def ln(self) -> Any:
        if self.sign != 1:
            raise ValueError('logarithm of a non-positive value')
        return self.log_mag

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        return float(self.sign * ctx.exp(self.log_mag))

    # region Arithmetic
    def __neg__(self) -> LogScalar:
        return LogScalar(-self.sign, self.log_mag)

    def __mul__(self, other: LogScalar) -> LogScalar:
        if self.sign == 0 or other.sign == 0:
            return LogScalar.zero()
        return LogScalar(self.sign * other.sign, self.log_mag + other.log_mag)

    def __truediv__(self, other: LogScalar) -> LogScalar:
        if other.sign == 0:
            raise ZeroDivisionError('division by a zero LogScalar')
        if self.sign == 0:
            return LogScalar.zero()
        return LogScalar(self.sign * other.sign, self.log_mag - other.log_mag)

    def __pow__(self, exponent: Real) -> LogScalar:
        if self.sign != 1:
            raise ValueError('real power of a non-positive value')
        return LogScalar(1, self.log_mag * ctx.mpf(exponent))

    def __add__(self, other: LogScalar) -> LogScalar:
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        big, small = (
            (self, other) if self.log_mag >= other.log_mag else (other, self)
        )
        ratio = ctx.exp(small.log_mag - big.log_mag)
        if big.sign == small.sign:
            return LogScalar(big.sign, big.log_mag + ctx.log1p(ratio))
        if ratio == 1:
            return LogScalar.zero()
        return LogScalar(big.sign, big.log_mag + ctx.log1p(-ratio))

    def __sub__(self, other: LogScalar) -> LogScalar:
        return self + (-other)
    # endregion

    def __lt__(self, other: LogScalar) -> bool:
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign == 0:
            return False
        if self.sign > 0:
            return bool(self.log_mag < other.log_mag)
        return bool(self.log_mag > other.log_mag)

    def __str__(self) -> str:
        if self.sign == 0:
            return '0'
        prefix = '-' if self.sign < 0 else ''
        return f'{prefix}exp({ctx.nstr(self.log_mag, 20)})'

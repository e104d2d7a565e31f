"""
Precision-generic real arithmetic.

Every numerical routine in the package is written against a ScalarContext:
values are whatever the context produces (Python floats or mpmath numbers)
and combine with the ordinary operators, while elementary functions, constants
and conversions are reached through the context. Each context owns its
precision state, so independent rules can be built side by side.
"""

import math
import sys
from abc import ABC, abstractmethod
from decimal import Decimal
from typing import Any, Iterable, Optional, Union

import mpmath

from gaussquad.core.config import get_settings

Real = Any
Number = Union[int, float, str, Decimal, Any]

LOG10_2 = math.log10(2.0)


class ScalarContext(ABC):
    """Contract shared by the binary64 and the arbitrary precision backends."""

    backend: str = "abstract"

    @property
    @abstractmethod
    def bits(self) -> int:
        """Binary precision of the significand."""

    @property
    @abstractmethod
    def digits(self) -> int:
        """Working decimal digits D."""

    @property
    @abstractmethod
    def unit_roundoff(self) -> Real:
        """u = 2^(1 - bits), with D close to -log10(u)."""

    @abstractmethod
    def convert(self, value: Number) -> Real:
        """Bring an integer, float, Decimal or decimal string into the context."""

    @property
    def zero(self) -> Real:
        return self.convert(0)

    @property
    def one(self) -> Real:
        return self.convert(1)

    @property
    @abstractmethod
    def pi(self) -> Real: ...

    @property
    @abstractmethod
    def inf(self) -> Real: ...

    @property
    @abstractmethod
    def tiny(self) -> Real:
        """Underflow threshold; values below it are reported as zero."""

    @property
    @abstractmethod
    def max_log(self) -> Real:
        """Largest x for which exp(x) is representable."""

    @abstractmethod
    def sqrt(self, x: Real) -> Real: ...

    @abstractmethod
    def exp(self, x: Real) -> Real: ...

    @abstractmethod
    def exp_neg_square(self, x: Real) -> Real:
        """e^{-x²} from an unrounded square; rounding x*x first costs x² ulps."""

    @abstractmethod
    def log(self, x: Real) -> Real: ...

    @abstractmethod
    def atan(self, x: Real) -> Real: ...

    @abstractmethod
    def atanh(self, x: Real) -> Real: ...

    @abstractmethod
    def floor(self, x: Real) -> Real: ...

    @abstractmethod
    def loggamma(self, x: Real) -> Real: ...

    @abstractmethod
    def fsum(self, values: Iterable[Real]) -> Real:
        """Sum with a single final rounding."""

    @abstractmethod
    def isinf(self, x: Real) -> bool: ...

    @abstractmethod
    def to_exact_string(self, x: Real) -> str:
        """Decimal string that converts back to exactly the same value."""

    @abstractmethod
    def format(self, x: Real, digits: int) -> str:
        """Decimal string with `digits` significant digits, rounded to nearest."""

    def power10(self, exponent: Real) -> Real:
        return self.exp(exponent * self.log(self.convert(10)))

    @property
    def series_tolerance(self) -> Real:
        """Relative tolerance 10^-D used to truncate series and fractions."""
        return self.power10(-self.digits)

    def isfinite(self, x: Real) -> bool:
        return not self.isinf(x) and x == x

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(bits={self.bits}, digits={self.digits})"


class FloatContext(ScalarContext):
    """IEEE binary64 through Python floats and the math module."""

    backend = "float"

    @property
    def bits(self) -> int:
        return sys.float_info.mant_dig

    @property
    def digits(self) -> int:
        return round((self.bits - 1) * LOG10_2)

    @property
    def unit_roundoff(self) -> float:
        return sys.float_info.epsilon

    def convert(self, value: Number) -> float:
        return float(value)

    @property
    def pi(self) -> float:
        return math.pi

    @property
    def inf(self) -> float:
        return math.inf

    @property
    def tiny(self) -> float:
        return sys.float_info.min

    @property
    def max_log(self) -> float:
        return math.log(sys.float_info.max)

    def sqrt(self, x: float) -> float:
        return math.sqrt(x)

    def exp(self, x: float) -> float:
        if x > self.max_log:
            return math.inf
        return math.exp(x)

    def exp_neg_square(self, x: float) -> float:
        with mpmath.workprec(2 * self.bits + 16):
            return float(mpmath.exp(-mpmath.mpf(x) ** 2))

    def log(self, x: float) -> float:
        return math.log(x)

    def atan(self, x: float) -> float:
        return math.atan(x)

    def atanh(self, x: float) -> float:
        return math.atanh(x)

    def floor(self, x: float) -> float:
        return float(math.floor(x))

    def loggamma(self, x: float) -> float:
        return math.lgamma(x)

    def fsum(self, values: Iterable[float]) -> float:
        return math.fsum(values)

    def isinf(self, x: float) -> bool:
        return math.isinf(x)

    def to_exact_string(self, x: float) -> str:
        return repr(float(x))

    def format(self, x: float, digits: int) -> str:
        return f"{float(x):.{digits}g}"


class MPMathContext(ScalarContext):
    """
    Arbitrary precision through a private mpmath.MPContext.

    Build it from decimal digits (MPMathContext(digits=256)) or from a binary
    precision (MPMathContext(bits=113)). Passing both keeps the binary
    precision and labels it with the given digit count, which is how a
    deserialized rule restores its original context.
    """

    backend = "mpmath"

    def __init__(self, digits: Optional[int] = None, bits: Optional[int] = None):
        if digits is None and bits is None:
            raise ValueError("MPMathContext needs digits or bits")
        self.mp = mpmath.MPContext()
        if bits is not None:
            if bits < 2:
                raise ValueError(f"bits must be >= 2, got {bits}")
            self.mp.prec = bits
            self._digits = digits if digits is not None else round((bits - 1) * LOG10_2)
        else:
            if digits < 1:
                raise ValueError(f"digits must be >= 1, got {digits}")
            self.mp.dps = digits
            self._digits = digits
        self._pi = self.mp.mpf(self.mp.pi)
        self._roundoff = self.mp.ldexp(self.mp.mpf(1), 1 - self.mp.prec)

    @property
    def bits(self) -> int:
        return int(self.mp.prec)

    @property
    def digits(self) -> int:
        return self._digits

    @property
    def unit_roundoff(self):
        return self._roundoff

    def convert(self, value: Number):
        if isinstance(value, Decimal):
            value = str(value)
        return self.mp.mpf(value)

    @property
    def pi(self):
        return self._pi

    @property
    def inf(self):
        return self.mp.inf

    @property
    def tiny(self):
        return self.mp.zero

    @property
    def max_log(self):
        return self.mp.inf

    def sqrt(self, x):
        return self.mp.sqrt(x)

    def exp(self, x):
        return self.mp.exp(x)

    def exp_neg_square(self, x):
        with self.mp.extraprec(self.bits + 16):
            value = self.mp.exp(-x * x)
        return +value

    def log(self, x):
        return self.mp.log(x)

    def atan(self, x):
        return self.mp.atan(x)

    def atanh(self, x):
        return self.mp.atanh(x)

    def floor(self, x):
        return self.mp.floor(x)

    def loggamma(self, x):
        return self.mp.loggamma(x)

    def fsum(self, values):
        return self.mp.fsum(values)

    def isinf(self, x) -> bool:
        return bool(self.mp.isinf(x))

    def to_exact_string(self, x) -> str:
        # ceil(p*log10(2)) + 1 significant digits identify a p-bit value uniquely
        return self.mp.nstr(self.mp.mpf(x), int(math.ceil(self.bits * LOG10_2)) + 1, strip_zeros=False)

    def format(self, x, digits: int) -> str:
        return self.mp.nstr(self.mp.mpf(x), digits)


def digits(ctx: ScalarContext) -> int:
    """Working decimal digits of a context."""
    return ctx.digits


def get_context(digits: Optional[int] = None) -> ScalarContext:
    """
    Pick a backend for the requested number of decimal digits.

    Up to 16 digits the binary64 backend is used; beyond that a fresh
    mpmath context with exactly `digits` decimal digits.
    """
    if digits is None:
        digits = get_settings().default_digits
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    if digits <= FloatContext().digits:
        return FloatContext()
    return MPMathContext(digits=digits)


def context_for(backend: str, bits: int, digits: int) -> ScalarContext:
    """Rebuild the context a rule was computed with."""
    if backend == FloatContext.backend:
        return FloatContext()
    if backend == MPMathContext.backend:
        return MPMathContext(digits=digits, bits=bits)
    raise ValueError(f"Unknown scalar backend: {backend}")

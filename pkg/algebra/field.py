"""Exact scalar fields: the rationals and prime fields.

Scalars are sympy domain elements (``QQ`` or ``GF(p)``); no float ever enters.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ

from utils.errors import InputError

logger = logging.getLogger(__name__)

RATIONALS = 'rationals'
PRIME_FIELD = 'prime-field'


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    characteristic: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic is not None:
                raise InputError("the rationals take no characteristic")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.characteristic, int) or not isprime(self.characteristic):
                raise InputError(f"characteristic {self.characteristic!r} is not a prime")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p):
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text):
        """
        Parse the command-line/JSON spelling of a field.

        Args:
            text: ``"q"`` for the rationals or ``"p:K"`` for the prime field F_K

        Returns:
            FieldSpec
        """
        if not isinstance(text, str):
            raise InputError(f"field must be a string, got {text!r}")
        spelled = text.strip().lower()
        if spelled in ('q', 'qq', 'rationals'):
            return cls.rationals()
        if spelled.startswith('p:'):
            try:
                p = int(spelled[2:])
            except ValueError:
                raise InputError(f"cannot read characteristic from {text!r}")
            return cls.prime(p)
        raise InputError(f"unknown field {text!r}; use 'q' or 'p:K'")

    @property
    def label(self):
        return 'q' if self.kind == RATIONALS else f'p:{self.characteristic}'

    @property
    def is_finite(self):
        return self.kind == PRIME_FIELD

    @cached_property
    def domain(self):
        if self.is_finite:
            return GF(self.characteristic, symmetric=False)
        return QQ

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value):
        """Coerce an int, Fraction, "num/den" string or domain element into this field."""
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Fraction):
            return self.fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            text = value.strip()
            try:
                if '/' in text:
                    num, den = text.split('/', 1)
                    return self.fraction(int(num), int(den))
                return self.domain(int(text))
            except ValueError:
                raise InputError(f"cannot read scalar {value!r}")
        if self.domain.of_type(value):
            return value
        raise InputError(f"cannot coerce {value!r} into {self.label}")

    def fraction(self, num, den):
        if den == 0:
            raise InputError("zero denominator")
        if self.is_finite:
            if den % self.characteristic == 0:
                raise InputError(f"denominator {den} vanishes in F_{self.characteristic}")
            return self.domain(num) / self.domain(den)
        return QQ(num, den)

    def is_zero(self, x):
        return x == self.zero

    def to_int(self, x):
        """Residue of x in 0..p-1 (prime fields only)."""
        return int(self.domain.to_sympy(x)) % self.characteristic

    def as_fraction(self, x):
        if self.is_finite:
            return Fraction(self.to_int(x))
        rational = self.domain.to_sympy(x)
        return Fraction(int(rational.p), int(rational.q))

    def key(self, x):
        """Sortable, hashable image of a scalar."""
        if self.is_finite:
            return self.to_int(x)
        return self.as_fraction(x)

    def to_json(self, x):
        if self.is_finite:
            return self.to_int(x)
        value = self.as_fraction(x)
        return f"{value.numerator}/{value.denominator}"

    def render(self, x):
        if self.is_finite:
            return str(self.to_int(x))
        value = self.as_fraction(x)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

    def elements(self):
        if not self.is_finite:
            raise InputError("the rationals cannot be enumerated")
        return [self.domain(k) for k in range(self.characteristic)]

    def random_element(self, rng, bound=4):
        if self.is_finite:
            return self.domain(rng.randrange(self.characteristic))
        return QQ(rng.randint(-bound, bound), rng.randint(1, bound))

    def reduce(self, x, target):
        """Map a rational scalar of this field into the prime field ``target``."""
        value = self.as_fraction(x)
        return target.fraction(value.numerator, value.denominator)

    def __repr__(self):
        return f"FieldSpec({self.label})"

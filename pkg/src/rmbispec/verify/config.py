"""Suite configuration."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..qseries import Params, prime_supports_disjoint
from ..ring import rat_str

DEFAULT_Q = Fraction(2, 7)
DEFAULT_T = Fraction(3, 5)
DEFAULT_S_RATIOS = (Fraction(1, 5), Fraction(1, 11))
PRIME_POOL = (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class SuiteConfig:
    n: Optional[int] = None
    Dz: Optional[int] = None
    Dw: Optional[int] = None
    q: Fraction = DEFAULT_Q
    t: Fraction = DEFAULT_T
    s_ratios: Tuple[Fraction, ...] = DEFAULT_S_RATIOS
    seed: int = 0
    backend: str = "exact"
    precision: int = 256
    N: Optional[int] = None
    tol: Optional[float] = None
    timing: bool = False

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("n must be at least 1")
        for d in (self.Dz, self.Dw):
            if d is not None and d < 0:
                raise ValueError("degree caps must be nonnegative")
        # validates q, t and genericity
        self.params()

    def params(self) -> Params:
        return Params(self.q, self.t, self.backend, self.precision, generic=True)

    def caps_for(self, default: Tuple[int, int]) -> Tuple[int, int]:
        return (default[0] if self.Dz is None else self.Dz,
                default[1] if self.Dw is None else self.Dw)

    def ns(self, default: List[int]) -> List[int]:
        return default if self.n is None else [self.n]

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def pool(self) -> List[int]:
        """Primes usable as denominators of random draws (disjoint from q, t)."""
        return [p for p in PRIME_POOL
                if prime_supports_disjoint(Fraction(1, p), self.q)
                and prime_supports_disjoint(Fraction(1, p), self.t)]

    def draw(self, rng: random.Random) -> Fraction:
        num = rng.randint(1, 9) * rng.choice((1, -1))
        return Fraction(num, rng.choice(self.pool()))

    def to_json(self) -> dict:
        return {
            "n": self.n, "Dz": self.Dz, "Dw": self.Dw,
            "q": rat_str(self.q), "t": rat_str(self.t),
            "s_ratios": [rat_str(r) for r in self.s_ratios],
            "seed": self.seed, "backend": self.backend, "precision": self.precision,
            "N": self.N, "tol": self.tol,
        }

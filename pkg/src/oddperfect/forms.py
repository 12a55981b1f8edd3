"""Structural constraints on a hypothetical odd perfect number.

Every "requirement" below is conditional on sigma(N) = 2N. A classifier
verdict of Exclusion means "no odd perfect number has this shape", not a
statement about N itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from oddperfect.arithmetic import Factorization, is_prime, sigma_prime_power


class ExclusionReason(str, enum.Enum):
    SPECIAL_PRIME_COMPOSITE = "SpecialPrimeComposite"
    THREE_DIVISIBILITY_CONFLICT = "ThreeDivisibilityConflict"
    SEVEN_DIVISIBILITY_CONFLICT = "SevenDivisibilityConflict"
    KUHNEL_VIOLATION = "KuhnelViolation"
    NOT_EULER_FORM = "NotEulerForm"


@dataclass(frozen=True)
class Exclusion:
    reason: ExclusionReason
    detail: str = ""

    def to_json(self) -> dict:
        return {"exclusion": self.reason.value, "detail": self.detail}


@dataclass(frozen=True)
class EulerForm:
    """N = p**alpha * Q**2 with p prime, p = alpha = 1 (mod 4), Q odd, p not dividing Q."""

    special_prime: int
    exponent: int
    cofactor: int

    def __post_init__(self):
        p, a, q = self.special_prime, self.exponent, self.cofactor
        if not is_prime(p) or p % 4 != 1:
            raise ValueError(f"special prime must be a prime = 1 (mod 4), got {p}")
        if a < 1 or a % 4 != 1:
            raise ValueError(f"exponent must be = 1 (mod 4), got {a}")
        if q < 1 or q % 2 == 0 or q % p == 0:
            raise ValueError(f"cofactor must be odd and coprime to {p}, got {q}")

    @property
    def p(self) -> int:
        return self.special_prime

    @property
    def alpha(self) -> int:
        return self.exponent

    @property
    def q(self) -> int:
        return self.cofactor

    @property
    def value(self) -> int:
        return self.special_prime**self.exponent * self.cofactor**2

    def to_json(self) -> dict:
        return {"p": str(self.p), "alpha": str(self.alpha), "Q": str(self.q)}


def euler_decompose(f: Factorization) -> Union[EulerForm, Exclusion]:
    """Split an odd N into its Euler form, or say which Euler condition fails."""
    if f.exponent(2):
        raise ValueError("Euler form applies to odd N only")
    odd = [(p, e) for p, e in f if e % 2 == 1]
    if len(odd) != 1:
        return Exclusion(ExclusionReason.NOT_EULER_FORM, f"{len(odd)} primes carry an odd exponent")
    p, alpha = odd[0]
    if alpha % 4 != 1:
        return Exclusion(ExclusionReason.NOT_EULER_FORM, f"exponent {alpha} of {p} is not 1 mod 4")
    if p % 4 != 1:
        return Exclusion(ExclusionReason.NOT_EULER_FORM, f"special prime {p} is not 1 mod 4")
    q = 1
    for r, e in f:
        if r != p:
            q *= r ** (e // 2)
    return EulerForm(p, alpha, q)


# -- Touchard -----------------------------------------------------------------


class TouchardVariant(str, enum.Enum):
    ONE_MOD_12 = "OneMod12"
    NINE_MOD_36 = "NineMod36"
    EXCLUDED = "Excluded"


@dataclass(frozen=True)
class TouchardClass:
    variant: TouchardVariant
    k: Optional[int] = None
    reason: str = ""

    @classmethod
    def one_mod_12(cls, n: int) -> "TouchardClass":
        return cls(TouchardVariant.ONE_MOD_12, (n - 1) // 12)

    @classmethod
    def nine_mod_36(cls, n: int) -> "TouchardClass":
        return cls(TouchardVariant.NINE_MOD_36, (n - 9) // 36)

    @property
    def excluded(self) -> bool:
        return self.variant is TouchardVariant.EXCLUDED

    def to_json(self) -> dict:
        out: dict = {"class": self.variant.value}
        if self.k is not None:
            out["k"] = str(self.k)
        if self.reason:
            out["reason"] = self.reason
        return out


def touchard_class_direct(n: int) -> TouchardClass:
    """Classify n by residue alone: 12k+1, 36k+9, or neither."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 12 == 1:
        return TouchardClass.one_mod_12(n)
    if n % 36 == 9:
        return TouchardClass.nine_mod_36(n)
    return TouchardClass(TouchardVariant.EXCLUDED, reason=f"n = {n % 36} (mod 36)")


def touchard_from_euler(e: EulerForm) -> TouchardClass:
    """Derive the Touchard class of p**alpha * Q**2 from its Euler form.

    If 3 | Q then N = 9 * (1 mod 4) = 36k + 9. Otherwise p = 1 (mod 12)
    gives N = 1 (mod 12), since Q**2 = 1 (mod 12). The remaining case,
    p = 5 (mod 12) with 3 not dividing Q, is impossible for a perfect N
    because 3 | p + 1 | sigma(p**alpha).
    """
    if e.q % 3 == 0:
        return TouchardClass.nine_mod_36(e.value)
    if e.p % 12 == 1:
        return TouchardClass.one_mod_12(e.value)
    return TouchardClass(
        TouchardVariant.EXCLUDED,
        reason=ExclusionReason.THREE_DIVISIBILITY_CONFLICT.value,
    )


# -- the quartic factor p^4 + p^2 + 1 ------------------------------------------


class Mod7Prediction(str, enum.Enum):
    DIVIDES = "Divides"
    DOES_NOT_DIVIDE = "DoesNotDivide"
    PRIME_IMPOSSIBLE = "PrimeImpossible"


# n mod 7 -> prediction, for p = 12n + 1 and p = 12n + 5
_MOD7_TABLE = {
    1: {2: "D", 3: "D", 5: "D", 6: "D", 0: "N", 1: "N", 4: "X"},
    5: {0: "D", 1: "D", 4: "D", 5: "D", 2: "N", 3: "N", 6: "X"},
}
_MOD7_CODES = {
    "D": Mod7Prediction.DIVIDES,
    "N": Mod7Prediction.DOES_NOT_DIVIDE,
    "X": Mod7Prediction.PRIME_IMPOSSIBLE,
}


def quartic(p: int) -> int:
    return p**4 + p**2 + 1


def quartic_div3(p: int) -> bool:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if p % 3 == 0:
        raise ValueError(f"3 divides {p}; the special prime is never a multiple of 3")
    return quartic(p) % 3 == 0


def quartic_div7_predict(p_residue: int, n_mod_7: int) -> Mod7Prediction:
    """Predict whether 7 | p^4 + p^2 + 1 for p = 12n + p_residue from n mod 7."""
    if p_residue not in _MOD7_TABLE:
        raise ValueError(f"p residue mod 12 must be 1 or 5, got {p_residue}")
    return _MOD7_CODES[_MOD7_TABLE[p_residue][n_mod_7 % 7]]


def quartic_div7_direct(p: int) -> bool:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return quartic(p) % 7 == 0


# -- sigma(p^(12 lambda + 5)) ---------------------------------------------------


@dataclass(frozen=True)
class Eq3Factors:
    """(p + 1) * (p^4 + p^2 + 1) * sum_{g=0}^{2 lambda} p^(6 g)."""

    linear: int
    quartic: int
    tail: int

    @property
    def product(self) -> int:
        return self.linear * self.quartic * self.tail


def sigma_factorization_eq3(p: int, lam: int) -> Eq3Factors:
    if lam < 0:
        raise ValueError(f"lambda must be >= 0, got {lam}")
    if p % 12 != 1 or not is_prime(p):
        raise ValueError(f"p must be a prime = 1 (mod 12), got {p}")
    p6 = p**6
    tail = sum(p6**g for g in range(2 * lam + 1))
    return Eq3Factors(p + 1, quartic(p), tail)


# -- the eight refined forms ------------------------------------------------------

# (p mod 12, alpha mod 12, 7 forced) -> form number
_FORM_NUMBERS = {
    (1, 1, False): 1,
    (1, 9, False): 2,
    (5, 1, False): 3,
    (5, 9, False): 4,
    (1, 5, False): 5,
    (5, 5, False): 6,
    (1, 5, True): 7,
    (5, 5, True): 8,
}


@dataclass(frozen=True)
class RefinedForm:
    """One of the eight shapes (12n + r)^(12 lambda + s) * (m Q')^2, m in {1, 3, 21}."""

    p_residue: int
    alpha_residue: int
    three_divides_n: bool
    seven_divides_n: bool
    n: int
    lam: int
    inner_cofactor: int

    @property
    def number(self) -> int:
        return _FORM_NUMBERS[(self.p_residue, self.alpha_residue, self.seven_divides_n)]

    @property
    def multiplier(self) -> int:
        return 21 if self.seven_divides_n else 3 if self.three_divides_n else 1

    def describe(self) -> str:
        inner = {1: "Q", 3: "(3Q)", 21: "(21Q)"}[self.multiplier]
        return f"(12n+{self.p_residue})^(12λ+{self.alpha_residue}) {inner}^2"

    def to_json(self) -> dict:
        return {
            "form": self.number,
            "shape": self.describe(),
            "n": str(self.n),
            "lambda": str(self.lam),
            "inner_Q": str(self.inner_cofactor),
            "three_divides_N": self.three_divides_n,
            "seven_divides_N": self.seven_divides_n,
        }


FormClass = Union[RefinedForm, Exclusion]


def refined_classify(e: EulerForm) -> FormClass:
    """Place an Euler form into one of the eight refined shapes.

    Requirements are checked in a fixed order (3, then 7, then Kuhnel's
    105 ∤ N in the 21Q shapes) and the first failure is returned.
    """
    p, alpha, q = e.p, e.alpha, e.q
    p_res, a_res = p % 12, alpha % 12
    n, lam = (p - p_res) // 12, (alpha - a_res) // 12

    need3 = p_res == 5 or a_res == 5
    if need3 and q % 3:
        why = "3 | p+1" if p_res == 5 else "3 | p^4+p^2+1"
        return Exclusion(ExclusionReason.THREE_DIVISIBILITY_CONFLICT, f"{why} forces 3 | Q")

    need7 = False
    if a_res == 5:
        pred = quartic_div7_predict(p_res, n % 7)
        if pred is Mod7Prediction.PRIME_IMPOSSIBLE:
            return Exclusion(ExclusionReason.SPECIAL_PRIME_COMPOSITE, f"7 | {p}")
        need7 = pred is Mod7Prediction.DIVIDES
        if need7 and q % 7:
            return Exclusion(
                ExclusionReason.SEVEN_DIVISIBILITY_CONFLICT,
                f"n = {n % 7} (mod 7) forces 7 | Q",
            )

    if need7 and (p == 5 or q % 5 == 0):
        return Exclusion(ExclusionReason.KUHNEL_VIOLATION, "105 | N")

    mult = 21 if need7 else 3 if need3 else 1
    return RefinedForm(p_res, a_res, need3, need7, n, lam, q // mult)


def kuhnel_check(f: Factorization) -> bool:
    """True iff 105 does not divide the factored number."""
    return not all(f.exponent(r) for r in (3, 5, 7))

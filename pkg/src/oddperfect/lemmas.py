"""Exhaustive lemma suites behind ``oddperfect verify-lemmas``.

Each suite returns a LemmaResult; ``failures`` holds a few counterexamples
for the report, ``checked`` the number of cases examined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from oddperfect.arithmetic import factorize, primes_below, sigma_prime_power
from oddperfect.forms import (
    EulerForm,
    Exclusion,
    Mod7Prediction,
    RefinedForm,
    euler_decompose,
    quartic_div3,
    quartic_div7_direct,
    quartic_div7_predict,
    refined_classify,
    sigma_factorization_eq3,
    touchard_class_direct,
    touchard_from_euler,
)

MAX_SHOWN = 5


@dataclass
class LemmaResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, case) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_SHOWN:
                self.failures.append(case)


def _euler_forms(prime_bound, alpha_bound, q_bound):
    for p in primes_below(prime_bound + 1):
        if p % 4 != 1:
            continue
        for alpha in range(1, alpha_bound + 1, 4):
            for q in range(1, q_bound + 1, 2):
                if q % p:
                    yield EulerForm(p, alpha, q)


def p_plus_one_divides(prime_bound: int, alpha_bound: int) -> LemmaResult:
    res = LemmaResult("(p+1) | sigma(p^alpha), alpha odd")
    for p in primes_below(prime_bound + 1):
        for alpha in range(1, alpha_bound + 1, 2):
            res.record(sigma_prime_power(p, alpha) % (p + 1) == 0, (p, alpha))
    return res


def quartic_mod3(prime_bound: int) -> LemmaResult:
    res = LemmaResult("3 | p^4+p^2+1 for p = 1 (mod 12)")
    for p in primes_below(prime_bound + 1):
        if p % 12 == 1:
            res.record(quartic_div3(p), p)
    return res


def quartic_mod7(prime_bound: int) -> LemmaResult:
    res = LemmaResult("7 | p^4+p^2+1 matches the n mod 7 table")
    for p in primes_below(prime_bound + 1):
        r = p % 12
        if r not in (1, 5):
            continue
        pred = quartic_div7_predict(r, (p - r) // 12 % 7)
        ok = pred is not Mod7Prediction.PRIME_IMPOSSIBLE and (
            (pred is Mod7Prediction.DIVIDES) == quartic_div7_direct(p)
        )
        res.record(ok, p)
    return res


def eq3_identity(prime_bound: int, max_lambda: int = 2) -> LemmaResult:
    res = LemmaResult("sigma(p^(12l+5)) = (p+1)(p^4+p^2+1) sum p^(6g)")
    for p in primes_below(prime_bound + 1):
        if p % 12 != 1:
            continue
        for lam in range(max_lambda + 1):
            f = sigma_factorization_eq3(p, lam)
            res.record(f.product == sigma_prime_power(p, 12 * lam + 5), (p, lam))
    return res


def touchard_consistency(prime_bound, alpha_bound, q_bound) -> LemmaResult:
    res = LemmaResult("Touchard from Euler form agrees with residue of N")
    for e in _euler_forms(prime_bound, alpha_bound, q_bound):
        t = touchard_from_euler(e)
        if t.excluded:
            ok = e.p % 12 == 5 and e.q % 3 != 0
        else:
            ok = t == touchard_class_direct(e.value)
        res.record(ok, e)
    return res


def exclusion_soundness(prime_bound, alpha_bound, q_bound) -> LemmaResult:
    res = LemmaResult("Touchard exclusions rest on 3 | sigma(p^alpha)")
    for e in _euler_forms(prime_bound, alpha_bound, q_bound):
        if touchard_from_euler(e).excluded:
            res.record(sigma_prime_power(e.p, e.alpha) % 3 == 0, e)
    return res


def no_three_demand_for_forms_1_2(prime_bound: int) -> LemmaResult:
    res = LemmaResult("alpha = 1, 9 (mod 12), p = 1 (mod 12): 3 does not divide sigma(p^alpha)")
    for p in primes_below(prime_bound + 1):
        if p % 12 != 1:
            continue
        for alpha in (1, 9):
            e = EulerForm(p, alpha, 1)
            f = refined_classify(e)
            ok = (
                sigma_prime_power(p, alpha) % 3 != 0
                and isinstance(f, RefinedForm)
                and not f.three_divides_n
            )
            res.record(ok, (p, alpha))
    return res


def classifier_totality(prime_bound, alpha_bound, q_bound) -> LemmaResult:
    res = LemmaResult("refined_classify is total and never invents a 21Q form")
    for e in _euler_forms(prime_bound, alpha_bound, q_bound):
        f = refined_classify(e)
        ok = isinstance(f, (RefinedForm, Exclusion))
        if isinstance(f, RefinedForm) and f.seven_divides_n:
            r = e.p % 12
            ok = quartic_div7_predict(r, (e.p - r) // 12 % 7) is Mod7Prediction.DIVIDES
        res.record(ok, e)
    return res


def euler_round_trip(prime_bound, alpha_bound, q_bound) -> LemmaResult:
    res = LemmaResult("euler_decompose(factorize(p^alpha Q^2)) round-trips")
    for e in _euler_forms(prime_bound, alpha_bound, q_bound):
        res.record(euler_decompose(factorize(e.value)) == e, e)
    return res


def run_all(
    prime_bound: int = 10**4,
    alpha_bound: int = 13,
    q_bound: int = 45,
    progress: Callable[[LemmaResult], None] | None = None,
) -> list[LemmaResult]:
    # round-trip factorizes every p^alpha Q^2; cap its prime range
    sweep = min(prime_bound, 2000)
    suites = [
        lambda: p_plus_one_divides(prime_bound, alpha_bound),
        lambda: quartic_mod3(prime_bound),
        lambda: quartic_mod7(prime_bound),
        lambda: eq3_identity(prime_bound),
        lambda: no_three_demand_for_forms_1_2(prime_bound),
        lambda: touchard_consistency(prime_bound, alpha_bound, q_bound),
        lambda: exclusion_soundness(prime_bound, alpha_bound, q_bound),
        lambda: classifier_totality(prime_bound, alpha_bound, q_bound),
        lambda: euler_round_trip(sweep, alpha_bound, q_bound),
    ]
    out = []
    for suite in suites:
        r = suite()
        out.append(r)
        if progress is not None:
            progress(r)
    return out

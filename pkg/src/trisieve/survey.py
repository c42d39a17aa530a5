"""Per-denominator density statistics and CSV emission.

A survey runs the batch obstruction sweep for each denominator, tallies
how many window pairs are ruled out under each mode, and writes one CSV
row per denominator so the vanishing proportion of survivors can be
tabulated and plotted downstream.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import log
from typing import Iterable, Iterator, TextIO

from .arith import factor_profile, is_prime
from .criterion import MODE_TWO_OF_THREE, _check_mode, sweep_window
from .fourier import exceptional_set

CSV_HEADER = (
    "n,p_plus,omega_plus,h_size,ruled_two_pq,ruled_two_of_three,"
    "s_ge5,in_C,q_div_P,frac_ruled"
)

FILTERS = ("all", "primes", "omega_plus")


@dataclass(frozen=True)
class SurveyRecord:
    """Aggregate counts for one denominator. frac_ruled is the ruled
    fraction under the two-of-three mode. e_n (the size of the
    exceptional-pair region) is only filled by deep audits and never
    enters the CSV schema."""

    n: int
    p_plus: int
    omega_plus: bool | None
    h_size: int
    ruled_two_pq: int
    ruled_two_of_three: int
    s_ge5: int
    in_C: int
    q_div_P: int
    frac_ruled: float
    e_n: int | None = None


def omega_plus_member(n: int) -> bool | None:
    """Whether the largest prime factor of n reaches n**(1/log log n).

    Returns None for 2 <= n < 16: below e**e the exponent formula has no
    honest value, so no flag is fabricated there.
    """
    if n < 2:
        raise ValueError(f"omega_plus_member needs n >= 2, got {n}")
    if n < 16:
        return None
    return factor_profile(n).largest_prime >= n ** (1.0 / log(log(n)))


def in_region_C(n: int, p: int, q: int) -> bool:
    """Whether (2p-1)(2q-1) <= n**(2 - 1/(2 log log n)), the region where
    the main term is too small to dominate. Exact integer left side
    against a double-precision right side; rejects n < 16."""
    if n < 16:
        raise ValueError(f"in_region_C needs n >= 16, got {n}")
    return (2 * p - 1) * (2 * q - 1) <= n ** (2.0 - 1.0 / (2.0 * log(log(n))))


def survey_n(
    n: int,
    mode: str = MODE_TWO_OF_THREE,
    eta=0,
    deep_audit: bool = False,
    R: float | None = None,
) -> SurveyRecord:
    """Aggregate the batch sweep of one denominator into a SurveyRecord.

    Both criterion modes are always tallied (mode is validated and kept
    for interface symmetry with batch_survey). With deep_audit=True the
    exceptional residue classes are computed per q and the size of the
    excluded pair region rides along as e_n; R defaults to ceil(log n).
    For n < 16 the region-C count is reported as 0 (the defining formula
    has no value there, so the region is treated as empty).
    """
    if n < 5:
        raise ValueError(f"survey_n needs n >= 5, got {n}")
    _check_mode(mode)
    table = sweep_window(n, eta)
    p_plus = factor_profile(n).largest_prime
    use_region = n >= 16
    ruled_pq = ruled_23 = s_ge5 = in_c = q_div = 0
    for (p, q), st in table.items():
        if st.ruled_two_pq:
            ruled_pq += 1
        if st.ruled_two_of_three:
            ruled_23 += 1
        if st.s_count >= 5:
            s_ge5 += 1
        if use_region and in_region_C(n, p, q):
            in_c += 1
        if q % p_plus == 0:
            q_div += 1
    h_size = len(table)
    frac = ruled_23 / h_size if h_size else 0.0
    e_n = _deep_audit_count(n, table.keys(), R) if deep_audit else None
    return SurveyRecord(
        n,
        p_plus,
        omega_plus_member(n),
        h_size,
        ruled_pq,
        ruled_23,
        s_ge5,
        in_c,
        q_div,
        frac,
        e_n,
    )


def _deep_audit_count(
    n: int, pairs: Iterable[tuple[int, int]], R: float | None
) -> int:
    """Size of the exceptional pair region: pairs with gcd(q, P) = 1 where
    either P | p or p mod d lands in the exceptional classes for q."""
    prof = factor_profile(n)
    P = prof.largest_prime
    d = P ** prof.valuation(P)
    if R is None:
        R = max(2, math.ceil(log(n)))
    members_cache: dict[int, frozenset[int]] = {}
    count = 0
    for p, q in pairs:
        if q % P == 0:
            continue
        if p % P == 0:
            count += 1
            continue
        members = members_cache.get(q)
        if members is None:
            members = exceptional_set(n, q, R).members
            members_cache[q] = members
        if p % d in members:
            count += 1
    return count


def _admits(filter: str, n: int) -> bool:
    if filter == "all":
        return True
    if filter == "primes":
        return is_prime(n)
    return omega_plus_member(n) is True


def survey_range(
    n_min: int,
    n_max: int,
    filter: str = "all",
    mode: str = MODE_TWO_OF_THREE,
    eta=0,
    deep_audit: bool = False,
    R: float | None = None,
    workers: int = 1,
) -> Iterator[SurveyRecord]:
    """SurveyRecords for the admissible n in [n_min, n_max], ascending.

    filter "all" admits every n, "primes" the primes, "omega_plus" the
    denominators whose largest prime factor clears the n**(1/log log n)
    threshold. With workers > 1 the denominators are distributed across
    processes; the output order and content do not depend on workers.
    """
    if not 5 <= n_min <= n_max:
        raise ValueError(f"need 5 <= n_min <= n_max, got [{n_min}, {n_max}]")
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}, got {filter!r}")
    ns = [n for n in range(n_min, n_max + 1) if _admits(filter, n)]
    job = partial(survey_n, mode=mode, eta=eta, deep_audit=deep_audit, R=R)
    if workers <= 1:
        for n in ns:
            yield job(n)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(job, ns)


def record_row(record: SurveyRecord) -> str:
    """One CSV line (no trailing newline) in the fixed schema; omega_plus
    serializes as true/false/na, frac_ruled with 6 decimal digits."""
    if record.omega_plus is None:
        omega = "na"
    else:
        omega = "true" if record.omega_plus else "false"
    return (
        f"{record.n},{record.p_plus},{omega},{record.h_size},"
        f"{record.ruled_two_pq},{record.ruled_two_of_three},{record.s_ge5},"
        f"{record.in_C},{record.q_div_P},{record.frac_ruled:.6f}"
    )


def write_csv(records: Iterable[SurveyRecord], stream: TextIO) -> int:
    """Write the header plus one row per record; returns the row count.
    Newlines are '\\n'; open file targets with newline='' and UTF-8."""
    stream.write(CSV_HEADER + "\n")
    rows = 0
    for record in records:
        stream.write(record_row(record) + "\n")
        rows += 1
    return rows

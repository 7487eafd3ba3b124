from zetafrac.series.continued_fraction import cf_second_term, cf_terms, certify_cf_second_term
from zetafrac.series.primes import PrimeTable, sieve
from zetafrac.series.schedule import PrimeSchedule, ZetaSchedule
from zetafrac.series.zeta import SeriesRequest, prime_zeta, zeta_minus1

__all__ = [
    "PrimeSchedule",
    "PrimeTable",
    "SeriesRequest",
    "ZetaSchedule",
    "certify_cf_second_term",
    "cf_second_term",
    "cf_terms",
    "prime_zeta",
    "sieve",
    "zeta_minus1",
]

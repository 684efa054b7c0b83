"""ubdyn: exact arithmetic for uniform boundedness in families z^d + psi(c).

Pipeline: parse psi, decompose its pole divisor and check the irreducible-
support hypothesis, search for good-reduction primes, build a period-bound
certificate N = (p^2-1)(q^2-1), and enumerate the complete rational
preperiodic set of each family member with machine-checkable completeness
certificates. Everything is exact; no floating point anywhere.
"""

from .dynamics import (
    MapSpec,
    PreperGraph,
    affine_fixed_points,
    apply_map,
    brute_force_preper_oracle,
    candidate_denominator,
    classify_orbit,
    enumerate_preperiodic,
    escape_radius,
)
from .family import (
    FamilyCertificate,
    ScanRow,
    ScanSummary,
    build_certificate,
    scan_family,
    verify_example,
)
from .primesearch import (
    GoodPrimeReport,
    empirical_density,
    find_good_primes,
    verify_lemma1,
)
from .ratfunc import (
    HypothesisReport,
    PoleDecomposition,
    RatFuncQ,
    check_hypothesis,
    eval_psi,
    homog_decompose,
    parse_psi,
)
from .rational import (
    INF,
    is_square_rat,
    nth_root_exact,
    padic_valuation,
    rat,
    rat_from_str,
    rat_height,
    rat_to_str,
)

__version__ = "0.1.0"

"""Monogenic cyclic cubic trinomials: decision procedures, families and scans."""

from .arith import FactoredInteger, as_perfect_square, factor, is_prime, is_squarefree, isqrt, valuation
from .families import (
    Family,
    FamilyMember,
    classify_member,
    equal_discriminant,
    family1,
    family2,
    simplest_cubic,
    the_four_exceptional,
)
from .jks import (
    JksCase,
    JksPrimeAnalysis,
    MonogenicityReport,
    Verdict,
    dedekind_prime_check,
    jks_prime_analysis,
    monogenicity_report,
)
from .numfield import RingElement, express_root, fields_equal, real_roots, verify_split
from .polycore import (
    Cubic,
    GaloisType,
    Irreducibility,
    Trinomial,
    cubic_trinomial_discriminant,
    galois_type_cubic,
    generic_cubic_discriminant,
    is_irreducible,
    resultant_discriminant,
    swan_discriminant,
)
from .scan import ScanResult, family_audit, reproduce_final_remarks, reproduce_theorem_item2, scan_form

__version__ = "0.1.0"

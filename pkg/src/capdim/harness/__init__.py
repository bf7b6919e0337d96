"""Random instances, exhaustive oracles and inequality-by-inequality verification."""
from .generate import EIGHTHS, SvmSampleSpec, gen_class, gen_svm_class
from .hull import absconv_fat_dimension
from .suites import SUITES, SuiteConfig, VerificationReport, verify, verify_lemma9_hull

__all__ = [
    "EIGHTHS",
    "SUITES",
    "SuiteConfig",
    "SvmSampleSpec",
    "VerificationReport",
    "absconv_fat_dimension",
    "gen_class",
    "gen_svm_class",
    "verify",
    "verify_lemma9_hull",
]

from ._core import (
    DocumentError,
    SingularDenominator,
    bracket,
    compute_a,
    compute_b,
    compute_rc,
    content_hash,
    eisenstein,
    rc_bracket,
    rc_terms,
    run_cli,
    twist_coefficient,
    verify_counit,
    verify_lemma1,
    verify_twist,
    verify_zero_omega,
)

__all__ = [
    "DocumentError",
    "SingularDenominator",
    "bracket",
    "compute_a",
    "compute_b",
    "compute_rc",
    "content_hash",
    "eisenstein",
    "rc_bracket",
    "rc_terms",
    "run_cli",
    "twist_coefficient",
    "verify_counit",
    "verify_lemma1",
    "verify_twist",
    "verify_zero_omega",
]

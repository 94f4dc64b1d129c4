from _adqec import (
    CodeSet,
    RecoveryReport,
    SearchResult,
    ValidationReport,
    bare_fidelity,
    code_fidelity,
    conflicts,
    max_first_order_residual,
    quantum_hamming_bound,
    search,
    validate_code_set,
    verify_recovery,
)

__all__ = [
    "CodeSet",
    "RecoveryReport",
    "SearchResult",
    "ValidationReport",
    "bare_fidelity",
    "code_fidelity",
    "conflicts",
    "max_first_order_residual",
    "quantum_hamming_bound",
    "search",
    "validate_code_set",
    "verify_recovery",
]

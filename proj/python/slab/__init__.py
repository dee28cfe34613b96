"""Python access to the slab checkers.

Documents are passed as .slab source text; commands return Report objects
whose ``machine()`` form is the line format read by ``parse_report``.
"""

from ._slab import (
    Case,
    Condition,
    ParseError,
    Report,
    Tally,
    Verdict,
    check,
    contact_sweep,
    dualize,
    fuzz,
    names,
    normalize,
    parse_report,
    theorem_ids,
    verify,
)

__all__ = [
    "Case",
    "Condition",
    "ParseError",
    "Report",
    "Tally",
    "Verdict",
    "check",
    "contact_sweep",
    "dualize",
    "fuzz",
    "names",
    "normalize",
    "parse_report",
    "theorem_ids",
    "verify",
]

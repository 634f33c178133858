import os
import sys

try:
    from ._fo3ra import (  # noqa: F401
        ParseError,
        Trace,
        TypingError,
        Verdict,
        backtranslate,
        check_equiv_fo3,
        check_equiv_ra,
        default_het_rules,
        default_hom_rules,
        fuzz,
        lift,
        mine,
        simplify,
        translate,
        typecheck,
    )
except ImportError:
    # in-tree runs: FO3RA_EXT_DIR points at the CMake build directory
    _ext_dir = os.environ.get("FO3RA_EXT_DIR")
    if _ext_dir and _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    from _fo3ra import (  # noqa: F401
        ParseError,
        Trace,
        TypingError,
        Verdict,
        backtranslate,
        check_equiv_fo3,
        check_equiv_ra,
        default_het_rules,
        default_hom_rules,
        fuzz,
        lift,
        mine,
        simplify,
        translate,
        typecheck,
    )

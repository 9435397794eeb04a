"""Two-sender unicast index coding toolkit."""

try:
    from ._icx import (  # packaged layout: extension lives inside the package
        Caps,
        CapExceeded,
        Instance,
        ParseError,
        ValidationError,
        analyze,
        encode,
        generate,
        local_chromatic_number,
        mais,
        oracle,
        reduce,
        verify,
    )
except ImportError:  # development build: extension sits on sys.path
    from _icx import (
        Caps,
        CapExceeded,
        Instance,
        ParseError,
        ValidationError,
        analyze,
        encode,
        generate,
        local_chromatic_number,
        mais,
        oracle,
        reduce,
        verify,
    )

__all__ = [
    "Caps",
    "CapExceeded",
    "Instance",
    "ParseError",
    "ValidationError",
    "analyze",
    "encode",
    "generate",
    "local_chromatic_number",
    "mais",
    "oracle",
    "reduce",
    "verify",
]

"""Relation type of ideals via Rees-ideal elimination."""

try:
    from ._core import (
        PreconditionError,
        ResourceAbort,
        ScriptError,
        groebner,
        rees_equations,
        relation_type,
        run,
        trinomialize,
    )
except ImportError:  # running against a plain build tree
    from _core import (
        PreconditionError,
        ResourceAbort,
        ScriptError,
        groebner,
        rees_equations,
        relation_type,
        run,
        trinomialize,
    )

__all__ = [
    "PreconditionError",
    "ResourceAbort",
    "ScriptError",
    "groebner",
    "rees_equations",
    "relation_type",
    "run",
    "trinomialize",
]

"""Specification bindings and the checked-call runtime."""

from mbcheck.engine.specs import (
    ARG0,
    ARG1,
    TARGET,
    ClassSpec,
    InvariantClause,
    ModelQuery,
    NamedPred,
    Param,
    RoutineSpec,
    arg_role,
    bind,
    derive_frame_postconditions,
    index_param,
    item_param,
    pred,
    ref_param,
)
from mbcheck.engine.runtime import (
    CALLEE,
    CALLER,
    FRAME,
    INVARIANT_ENTRY,
    INVARIANT_EXIT,
    KINDS,
    MODEL_EVAL_ERROR,
    POSTCONDITION,
    PRECONDITION,
    CallCtx,
    CallOutcome,
    CheckedObject,
    Engine,
    ModelSnapshot,
    Violation,
    invariant_clause_eligible,
)
from mbcheck.engine.completeness import AbstractCtx, ProbeResult, completeness_probe

__all__ = [
    "ARG0",
    "ARG1",
    "TARGET",
    "ClassSpec",
    "InvariantClause",
    "ModelQuery",
    "NamedPred",
    "Param",
    "RoutineSpec",
    "arg_role",
    "bind",
    "derive_frame_postconditions",
    "index_param",
    "item_param",
    "pred",
    "ref_param",
    "CALLEE",
    "CALLER",
    "FRAME",
    "INVARIANT_ENTRY",
    "INVARIANT_EXIT",
    "KINDS",
    "MODEL_EVAL_ERROR",
    "POSTCONDITION",
    "PRECONDITION",
    "CallCtx",
    "CallOutcome",
    "CheckedObject",
    "Engine",
    "ModelSnapshot",
    "Violation",
    "invariant_clause_eligible",
    "AbstractCtx",
    "ProbeResult",
    "completeness_probe",
]

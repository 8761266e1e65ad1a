"""Contract clauses common to the cursor containers.

Preconditions are written over derivable names (``old_int`` resolves either a
model query or a derived attribute), so one predicate object serves the weak
binding, the strong binding, and abstract probe states alike. The motion
postconditions are pure index arithmetic and equally strong at either level.
"""

from __future__ import annotations

from mbcheck.engine import pred

PRE = {
    "cursor_on_item": pred(
        "cursor_on_item",
        lambda ctx: 1 <= ctx.old_int("index") <= ctx.old_int("count"),
    ),
    "not_after": pred(
        "not_after", lambda ctx: ctx.old_int("index") <= ctx.old_int("count")
    ),
    "not_before": pred("not_before", lambda ctx: ctx.old_int("index") >= 1),
    "other_given": pred("other_given", lambda ctx: not ctx.arg_is_void(0)),
    "other_not_current": pred(
        "other_not_current", lambda ctx: not ctx.arg_is_target(0)
    ),
    "position_in_range": pred(
        "position_in_range",
        lambda ctx: 0 <= ctx.arg(0) <= ctx.old_int("count") + 1,
    ),
}

MOTION_POST = {
    "at_first": pred("at_first", lambda ctx: ctx.now_int("index") == 1),
    "at_last": pred("at_last", lambda ctx: ctx.now_int("index") == ctx.old_int("count")),
    "stepped": pred("stepped", lambda ctx: ctx.now_int("index") == ctx.old_int("index") + 1),
    "stepped_back": pred(
        "stepped_back", lambda ctx: ctx.now_int("index") == ctx.old_int("index") - 1
    ),
    "went": pred("went", lambda ctx: ctx.now_int("index") == ctx.arg(0)),
    "cursor_reset": pred("cursor_reset", lambda ctx: ctx.now_int("index") == 0),
    "reports_off": pred(
        "reports_off",
        lambda ctx: ctx.result
        == (ctx.old_int("index") < 1 or ctx.old_int("index") > ctx.old_int("count")),
    ),
}

INDEX_UNCHANGED = pred(
    "index_unchanged", lambda ctx: ctx.now_int("index") == ctx.old_int("index")
)

COUNT_UP = pred("count_up", lambda ctx: ctx.now_int("count") == ctx.old_int("count") + 1)
COUNT_DOWN = pred(
    "count_down", lambda ctx: ctx.now_int("count") == ctx.old_int("count") - 1
)
COUNT_UNCHANGED = pred(
    "count_unchanged", lambda ctx: ctx.now_int("count") == ctx.old_int("count")
)
COUNT_ZERO = pred("count_zero", lambda ctx: ctx.now_int("count") == 0)

"""Array with adjustable bounds, indexed from ``lower``.

``put``/``item`` work inside the current bounds; ``force`` is total and grows
the array in either direction, filling newly created positions with the
default value 0.
"""

from __future__ import annotations

import mbcheck.values as V
from mbcheck.containers._shared import item_value
from mbcheck.engine import (
    ClassSpec,
    ModelQuery,
    RoutineSpec,
    index_param,
    item_param,
    pred,
)

CLASS_NAME = "resizable_array"

_DEFAULT = 0

_IN_BOUNDS = pred(
    "index_in_bounds",
    lambda ctx: ctx.old_int("lower")
    <= ctx.arg(1)
    <= ctx.old_int("lower") + ctx.old_int("count") - 1,
)

_QUERY_IN_BOUNDS = pred(
    "index_in_bounds",
    lambda ctx: ctx.old_int("lower")
    <= ctx.arg(0)
    <= ctx.old_int("lower") + ctx.old_int("count") - 1,
)


class ResizableArray:

    def __init__(self, bugs=frozenset()):
        self._bugs = bugs
        self.lower = 1
        self.storage = []

    @property
    def upper(self):
        return self.lower + len(self.storage) - 1

    def put(self, v, i):
        self.storage[i - self.lower] = v

    def force(self, v, i):
        if not self.storage:
            self.storage = [v]
            self.lower = i
        elif i < self.lower:
            self.storage[:0] = [v] + [_DEFAULT] * (self.lower - i - 1)
            self.lower = i
        elif i > self.upper:
            gap = i - self.upper - 1
            fill = [_DEFAULT] * gap
            if "AF-1" in self._bugs and gap >= 1:
                fill[0] = 99
            self.storage.extend(fill)
            self.storage.append(v)
        else:
            self.storage[i - self.lower] = v

    def wipe_out(self):
        self.lower = 1
        self.storage = []

    def item(self, i):
        return self.storage[i - self.lower]

    def item_count(self):
        return len(self.storage)


def _forced(ctx):
    s = ctx.old("sequence")
    n = V.seq_count(s)
    low = ctx.old_int("lower")
    v = item_value(ctx.arg(0))
    i = ctx.arg(1)
    zero = V.integer(_DEFAULT)
    if n == 0:
        expected = V.sequence([v])
        expected_lower = i
    elif i < low:
        pad = V.sequence([zero] * (low - i - 1))
        expected = V.seq_concat(V.seq_concat(V.sequence([v]), pad), s)
        expected_lower = i
    elif i > low + n - 1:
        pad = V.sequence([zero] * (i - (low + n - 1) - 1))
        expected = V.seq_extended(V.seq_concat(s, pad), v)
        expected_lower = low
    else:
        expected = V.seq_replaced_at(s, i - low + 1, v)
        expected_lower = low
    return ctx.now("sequence") == expected and ctx.now_int("lower") == expected_lower


def _strong_spec(bugs):
    model = [
        ModelQuery(
            "sequence", lambda o: V.sequence(item_value(x) for x in o.storage)
        ),
        ModelQuery("lower", lambda o: V.integer(o.lower)),
    ]
    routines = {
        "put": RoutineSpec(
            "put",
            [item_param(), index_param()],
            ResizableArray.put,
            pre=[_IN_BOUNDS],
            post=[
                pred(
                    "stored",
                    lambda ctx: ctx.now("sequence")
                    == V.seq_replaced_at(
                        ctx.old("sequence"),
                        ctx.arg(1) - ctx.old_int("lower") + 1,
                        item_value(ctx.arg(0)),
                    ),
                )
            ],
            modify=("sequence",),
        ),
        "force": RoutineSpec(
            "force",
            [item_param(), index_param()],
            ResizableArray.force,
            post=[pred("force_extends", _forced)],
            modify=("sequence", "lower"),
        ),
        "wipe_out": RoutineSpec(
            "wipe_out",
            [],
            ResizableArray.wipe_out,
            post=[
                pred("emptied", lambda ctx: V.seq_is_empty(ctx.now("sequence"))),
                pred("lower_reset", lambda ctx: ctx.now_int("lower") == 1),
            ],
            modify=("sequence", "lower"),
        ),
        "item": RoutineSpec(
            "item",
            [index_param()],
            ResizableArray.item,
            pre=[_QUERY_IN_BOUNDS],
            post=[
                pred(
                    "reports_item",
                    lambda ctx: item_value(ctx.result)
                    == V.seq_item(
                        ctx.now("sequence"), ctx.arg(0) - ctx.old_int("lower") + 1
                    ),
                )
            ],
            modify=(),
            returns_value=True,
        ),
        "item_count": RoutineSpec(
            "item_count",
            [],
            ResizableArray.item_count,
            post=[
                pred(
                    "reports_count",
                    lambda ctx: ctx.result == V.seq_count(ctx.now("sequence")),
                )
            ],
            modify=(),
            returns_value=True,
        ),
    }
    return ClassSpec(
        CLASS_NAME,
        "strong",
        model,
        [],
        routines,
        lambda: ResizableArray(bugs),
        attr_derivations={
            "count": lambda m: V.integer(V.seq_count(m["sequence"])),
        },
        size_of=lambda o: len(o.storage),
    )


def _weak_spec(bugs):
    model = [
        ModelQuery("count", lambda o: V.integer(len(o.storage))),
        ModelQuery("lower", lambda o: V.integer(o.lower)),
    ]
    routines = {
        "put": RoutineSpec(
            "put",
            [item_param(), index_param()],
            ResizableArray.put,
            pre=[_IN_BOUNDS],
            post=[
                pred(
                    "holds_value",
                    lambda ctx: ctx.obj.item(ctx.arg(1)) == ctx.arg(0),
                ),
                pred(
                    "count_unchanged",
                    lambda ctx: ctx.now_int("count") == ctx.old_int("count"),
                ),
            ],
            modify=None,
        ),
        "force": RoutineSpec(
            "force",
            [item_param(), index_param()],
            ResizableArray.force,
            post=[
                pred(
                    "holds_value",
                    lambda ctx: ctx.obj.item(ctx.arg(1)) == ctx.arg(0),
                ),
                pred(
                    "bounds_cover_index",
                    lambda ctx: ctx.now_int("lower")
                    <= ctx.arg(1)
                    <= ctx.now_int("lower") + ctx.now_int("count") - 1,
                ),
            ],
            modify=None,
        ),
        "wipe_out": RoutineSpec(
            "wipe_out",
            [],
            ResizableArray.wipe_out,
            post=[
                pred("count_zero", lambda ctx: ctx.now_int("count") == 0),
                pred("lower_reset", lambda ctx: ctx.now_int("lower") == 1),
            ],
            modify=None,
        ),
        "item": RoutineSpec(
            "item",
            [index_param()],
            ResizableArray.item,
            pre=[_QUERY_IN_BOUNDS],
            modify=None,
            returns_value=True,
        ),
        "item_count": RoutineSpec(
            "item_count",
            [],
            ResizableArray.item_count,
            post=[
                pred(
                    "reports_count",
                    lambda ctx: ctx.result == ctx.old_int("count"),
                )
            ],
            modify=None,
            returns_value=True,
        ),
    }
    return ClassSpec(
        CLASS_NAME,
        "weak",
        model,
        [],
        routines,
        lambda: ResizableArray(bugs),
        size_of=lambda o: len(o.storage),
    )


def build(level, bugs=frozenset()):
    if level == "strong":
        return _strong_spec(bugs)
    return _weak_spec(bugs)

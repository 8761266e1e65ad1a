"""Bounded completeness probe over small synthetic bindings."""

from __future__ import annotations

import pytest

import mbcheck.values as V
from mbcheck.engine import (
    ARG0,
    ClassSpec,
    InvariantClause,
    ModelQuery,
    RoutineSpec,
    bind,
    completeness_probe,
    index_param,
    item_param,
    pred,
    ref_param,
)
from mbcheck.errors import ConfigError


class Box:
    """Concrete class is irrelevant to the probe; bodies never run."""

    def __init__(self):
        self.n = 0
        self.cap = 0


def box_spec(routines):
    model = [
        ModelQuery("n", lambda o: V.integer(o.n)),
        ModelQuery("cap", lambda o: V.integer(o.cap)),
    ]
    invariants = [
        InvariantClause(
            "n_in_cap",
            lambda m, o: 0 <= V.as_int(m["n"]) <= V.as_int(m["cap"]),
            kind="model",
        )
    ]
    spec = ClassSpec("abox", "strong", model, invariants, routines, Box)
    bind({"abox": spec})
    return spec


class BoxDomain:
    """Pre-states: every (n, cap) with 0 <= n <= cap <= 2.

    Candidate values per free coordinate: integers 0..4. Ref-argument roles
    get the same (n, cap) grid.
    """

    def __init__(self, caps=(0, 1, 2), vals=range(5)):
        self.caps = tuple(caps)
        self.vals = tuple(vals)
        self._spec = None

    def role_spec(self, ref_class):
        return self._spec

    def _grid(self):
        for cap in self.caps:
            for n in range(cap + 1):
                yield {"n": V.integer(n), "cap": V.integer(cap)}

    def pre_states(self, class_spec, routine):
        self._spec = class_spec
        for tm in self._grid():
            roles = {-1: tm}
            if routine.ref_params:
                for am in self._grid():
                    r2 = dict(roles)
                    r2[0] = am
                    yield {"roles": r2, "args": (object(),)}
                # and the void argument
                yield {"roles": roles, "args": (None,)}
            elif routine.params:
                for a in (0, 1):
                    yield {"roles": roles, "args": (a,)}
            else:
                yield {"roles": roles, "args": ()}

    def value_choices(self, idx, qname, pre):
        return [V.integer(v) for v in self.vals]

    def result_choices(self, routine, pre):
        return [V.integer(v) for v in self.vals]


def probe(routine_spec, domain=None):
    spec = box_spec({routine_spec.name: routine_spec})
    domain = domain or BoxDomain()
    domain._spec = spec
    return completeness_probe(spec, spec.routines[routine_spec.name], domain)


# --- verdicts -------------------------------------------------------------


def test_pinned_increment_is_complete():
    r = RoutineSpec(
        "bump",
        [],
        lambda o: None,
        pre=[pred("room", lambda ctx: ctx.old_int("n") < ctx.old_int("cap"))],
        post=[pred("up_one", lambda ctx: ctx.now_int("n") == ctx.old_int("n") + 1)],
        modify=("n",),
    )
    res = probe(r)
    assert res.verdict == "complete"
    # pre-states with n == cap were filtered by the precondition
    assert res.pre_states_checked == 3  # (0,1) (0,2) (1,2)


def test_lower_bound_only_is_incomplete_with_two_witnesses():
    r = RoutineSpec(
        "loosen",
        [],
        lambda o: None,
        pre=[pred("room", lambda ctx: ctx.old_int("n") < ctx.old_int("cap"))],
        post=[pred("not_less", lambda ctx: ctx.now_int("n") >= ctx.old_int("n"))],
        modify=("n",),
    )
    res = probe(r)
    assert res.verdict == "incomplete"
    assert len(res.witness_posts) == 2
    assert not res.unsatisfiable
    a = V.as_int(res.witness_posts[0][0][-1]["n"])
    b = V.as_int(res.witness_posts[1][0][-1]["n"])
    assert a != b


def test_unreachable_post_is_unsatisfiable():
    r = RoutineSpec(
        "teleport",
        [],
        lambda o: None,
        post=[pred("way_up", lambda ctx: ctx.now_int("n") == ctx.old_int("n") + 10)],
        modify=("n",),
    )
    res = probe(r)
    assert res.verdict == "incomplete"
    assert res.witness_posts == []
    assert res.unsatisfiable is True


def test_invariant_filter_can_make_a_weak_post_complete():
    # at n == cap the model invariant leaves a single candidate above old n
    r = RoutineSpec(
        "nudge",
        [],
        lambda o: None,
        pre=[pred("full", lambda ctx: ctx.old_int("n") == ctx.old_int("cap"))],
        post=[pred("not_less", lambda ctx: ctx.now_int("n") >= ctx.old_int("n"))],
        modify=("n",),
    )
    res = probe(r)
    assert res.verdict == "complete"


def test_unframed_routine_frees_every_query():
    # the same pinned post is ambiguous once cap may drift too
    r = RoutineSpec(
        "bump_unframed",
        [],
        lambda o: None,
        pre=[pred("room", lambda ctx: ctx.old_int("n") < ctx.old_int("cap"))],
        post=[pred("up_one", lambda ctx: ctx.now_int("n") == ctx.old_int("n") + 1)],
        modify=None,
    )
    res = probe(r)
    assert res.verdict == "incomplete"
    caps = {V.as_int(w[0][-1]["cap"]) for w in res.witness_posts}
    assert len(caps) == 2


def test_pure_routine_with_no_post_is_complete():
    r = RoutineSpec("peek", [], lambda o: None, modify=())
    res = probe(r)
    assert res.verdict == "complete"
    assert res.pre_states_checked == 6  # full (n, cap) grid


def test_query_with_pinned_result_is_complete():
    r = RoutineSpec(
        "value",
        [],
        lambda o: None,
        post=[pred("reports_n", lambda ctx: ctx.result == ctx.now("n"))],
        modify=(),
        returns_value=True,
    )
    res = probe(r)
    assert res.verdict == "complete"


def test_query_with_free_result_is_incomplete():
    r = RoutineSpec(
        "some_value",
        [],
        lambda o: None,
        post=[pred("anything", lambda ctx: True)],
        modify=(),
        returns_value=True,
    )
    res = probe(r)
    assert res.verdict == "incomplete"
    # both witnesses share the (unchanged) exit state, differing in result only
    assert res.witness_posts[0][0] == res.witness_posts[1][0]
    assert res.witness_posts[0][1] != res.witness_posts[1][1]


def test_reference_argument_coordinates_probe_jointly():
    r = RoutineSpec(
        "pour_into",
        [ref_param("abox")],
        lambda o, p: None,
        pre=[
            pred("other_given", lambda ctx: not ctx.arg_is_void(0)),
            pred(
                "fits",
                lambda ctx: ctx.old_int("n") <= ctx.old_int("cap", ARG0),
            ),
        ],
        post=[
            pred(
                "moved",
                lambda ctx: ctx.now_int("n", ARG0) == ctx.old_int("n")
                and ctx.now_int("n") == 0,
            )
        ],
        modify=(("target", "n"), (ARG0, "n")),
    )
    res = probe(r)
    assert res.verdict == "complete"


def test_reference_argument_left_loose_is_incomplete():
    r = RoutineSpec(
        "spill_into",
        [ref_param("abox")],
        lambda o, p: None,
        pre=[pred("other_given", lambda ctx: not ctx.arg_is_void(0))],
        post=[pred("emptied", lambda ctx: ctx.now_int("n") == 0)],
        modify=(("target", "n"), (ARG0, "n")),
    )
    res = probe(r)
    assert res.verdict == "incomplete"


def test_concrete_precondition_is_rejected_loudly():
    r = RoutineSpec(
        "grounded",
        [],
        lambda o: None,
        pre=[pred("concrete", lambda ctx: ctx.obj.n == 0)],
        modify=(),
    )
    with pytest.raises(ConfigError):
        probe(r)


def test_unbound_spec_is_rejected():
    model = [ModelQuery("n", lambda o: V.integer(o.n))]
    spec = ClassSpec("loose", "strong", model, [], {"r": RoutineSpec("r", [], lambda o: None, modify=())}, Box)
    with pytest.raises(ConfigError):
        completeness_probe(spec, spec.routines["r"], BoxDomain())


# --- sequence-valued coordinates over the toy binding ---------------------


def all_seqs(max_len, alphabet):
    out = [[]]
    frontier = [[]]
    for _ in range(max_len):
        frontier = [s + [a] for s in frontier for a in range(alphabet)]
        out.extend(frontier)
    return [V.sequence(map(V.integer, s)) for s in out]


class SeqDomain:
    """Target role only: sequences up to length 2, index in bounds."""

    def __init__(self, pre_len=2, choice_len=3, alphabet=2):
        self.pre = all_seqs(pre_len, alphabet)
        self.choices = all_seqs(choice_len, alphabet)
        self.alphabet = alphabet

    def role_spec(self, ref_class):
        raise AssertionError("no reference params in these probes")

    def pre_states(self, class_spec, routine):
        for s in self.pre:
            for i in range(V.seq_count(s) + 2):
                roles = {-1: {"sequence": s, "index": V.integer(i)}}
                if routine.params:
                    for a in range(self.alphabet):
                        yield {"roles": roles, "args": (a,)}
                else:
                    yield {"roles": roles, "args": ()}

    def value_choices(self, idx, qname, pre):
        if qname == "sequence":
            return self.choices
        return [V.integer(v) for v in range(-1, 5)]

    def result_choices(self, routine, pre):
        return [V.integer(v) for v in range(self.alphabet)]


def toy_seq_spec(routines):
    class Holder:
        pass

    model = [
        ModelQuery("sequence", lambda o: V.EMPTY_SEQ),
        ModelQuery("index", lambda o: V.integer(0)),
    ]
    invariants = [
        InvariantClause(
            "index_bounds",
            lambda m, o: 0 <= V.as_int(m["index"]) <= V.seq_count(m["sequence"]) + 1,
            kind="model",
        )
    ]
    spec = ClassSpec("holder", "strong", model, invariants, routines, Holder)
    bind({"holder": spec})
    return spec


def test_append_post_is_complete_over_sequences():
    r = RoutineSpec(
        "append",
        [item_param()],
        lambda o, v: None,
        post=[
            pred(
                "appended",
                lambda ctx: ctx.now("sequence")
                == V.seq_extended(ctx.old("sequence"), V.integer(ctx.arg(0))),
            )
        ],
        modify=("sequence",),
    )
    spec = toy_seq_spec({"append": r})
    res = completeness_probe(spec, spec.routines["append"], SeqDomain())
    assert res.verdict == "complete"
    assert res.pre_states_checked > 0


def test_count_only_post_is_incomplete_over_sequences():
    r = RoutineSpec(
        "append_loose",
        [item_param()],
        lambda o, v: None,
        post=[
            pred(
                "count_up",
                lambda ctx: V.seq_count(ctx.now("sequence"))
                == V.seq_count(ctx.old("sequence")) + 1,
            )
        ],
        modify=("sequence",),
    )
    spec = toy_seq_spec({"append_loose": r})
    res = completeness_probe(spec, spec.routines["append_loose"], SeqDomain())
    assert res.verdict == "incomplete"
    assert len(res.witness_posts) == 2

"""Bounded completeness probe.

A routine spec is complete (relative to the model) when, for every abstract
pre-state satisfying the precondition, exactly one post-state satisfies the
postconditions plus derived frame predicates. The probe enumerates a finite
abstract domain and counts admitted post-states, stopping at the first
pre-state that admits two (ambiguous spec) or zero (unsatisfiable spec).

The caller supplies the domain: an object yielding abstract pre-states and
candidate values per (role, query). Predicates are evaluated over an abstract
context with the same surface as the runtime one; predicates that probe
concrete state raise and are reported as not abstractly evaluable.
"""

from __future__ import annotations

import itertools

from mbcheck.errors import ConfigError, ModelEvalError
from mbcheck.engine.specs import TARGET, arg_role
from mbcheck.values import as_int


class AbstractCtx:
    """Predicate context over abstract model assignments.

    Attribute names mirror the runtime context so the same predicate objects
    (including derived frame predicates) evaluate on either.
    """

    __slots__ = ("role_index", "role_specs", "entry_models", "exit_models", "arg_cos", "args", "result")

    def __init__(self, role_index, role_specs, entry_models, arg_cos, args):
        self.role_index = role_index
        self.role_specs = role_specs
        self.entry_models = entry_models
        self.exit_models = None
        self.arg_cos = arg_cos
        self.args = args
        self.result = None

    def _resolve(self, models, qname, role):
        idx = self.role_index[role]
        m = models[idx]
        v = m.get(qname)
        if v is not None:
            return v
        deriv = self.role_specs[idx].attr_derivations.get(qname)
        if deriv is None:
            raise ModelEvalError(
                "%s is neither a model query nor a derived attribute" % qname
            )
        return deriv(m)

    def old(self, qname, role=TARGET):
        return self.entry_models[self.role_index[role]][qname]

    def now(self, qname, role=TARGET):
        return self.exit_models[self.role_index[role]][qname]

    def old_int(self, qname, role=TARGET):
        v = self._resolve(self.entry_models, qname, role)
        return as_int(v) if type(v) is tuple else v

    def now_int(self, qname, role=TARGET):
        v = self._resolve(self.exit_models, qname, role)
        return as_int(v) if type(v) is tuple else v

    @property
    def obj(self):
        raise ModelEvalError("concrete state is not available on abstract states")

    def attr(self, name):
        return self._resolve(self.entry_models, name, TARGET)

    def arg_attr(self, k, name):
        return self._resolve(self.entry_models, name, arg_role(k))

    def arg(self, k):
        return self.args[k]

    def arg_is_void(self, k):
        return self.arg_cos.get(k) is None and self.args[k] is None

    def arg_is_target(self, k):
        return False

    def self_id(self):
        raise ModelEvalError("object identity is not part of abstract states")

    def arg_id(self, k):
        raise ModelEvalError("object identity is not part of abstract states")


class ProbeResult:
    __slots__ = ("verdict", "witness_pre", "witness_posts", "pre_states_checked")

    def __init__(self, verdict, witness_pre, witness_posts, pre_states_checked):
        self.verdict = verdict
        self.witness_pre = witness_pre
        self.witness_posts = witness_posts
        self.pre_states_checked = pre_states_checked

    @property
    def unsatisfiable(self):
        return self.verdict == "incomplete" and not self.witness_posts

    def __repr__(self):
        return "ProbeResult(%s, %d pre-states)" % (self.verdict, self.pre_states_checked)


def completeness_probe(class_spec, routine, domain):
    """Probe one routine over ``domain``; see module docstring.

    ``class_spec`` provides the abstract state space (its model queries span
    the target role); the routine may come from any binding of the same
    concrete class, so a weak routine spec can be probed over the richer
    model.
    """
    if not class_spec.bound:
        raise ConfigError("class spec %s has not been bound" % class_spec.name)

    role_specs = {-1: class_spec}
    for k in routine.ref_params:
        role_specs[k] = domain.role_spec(routine.params[k].ref_class)

    # model-kind invariants filter candidate post-states per role
    model_invariants = {
        idx: tuple(cl for cl in spec.invariants if cl.kind == "model")
        for idx, spec in role_specs.items()
    }

    checked = 0
    for pre in domain.pre_states(class_spec, routine):
        entry = pre["roles"]
        args = pre["args"]
        arg_cos = {k: (object() if k in entry else None) for k in routine.ref_params}
        ctx = AbstractCtx(routine.role_index, role_specs, entry, arg_cos, args)
        try:
            if not all(p.fn(ctx) for p in routine.pre):
                continue
        except ModelEvalError as e:
            raise ConfigError(
                "%s.%s precondition is not abstractly evaluable: %s"
                % (class_spec.name, routine.name, e)
            )
        checked += 1

        universe = []
        for idx in sorted(entry, key=lambda i: (i != -1, i)):
            role = TARGET if idx == -1 else arg_role(idx)
            for qname in entry[idx]:
                universe.append((role, idx, qname))

        if routine.modify is None:
            free = universe
        else:
            modified = set(routine.modify)
            free = [u for u in universe if (u[0], u[2]) in modified]

        choice_lists = [domain.value_choices(idx, qname, pre) for _, idx, qname in free]
        results = (
            domain.result_choices(routine, pre) if routine.returns_value else (None,)
        )

        found = []
        for combo in itertools.product(*choice_lists):
            exit_maps = {idx: dict(m) for idx, m in entry.items()}
            for (_, idx, qname), val in zip(free, combo):
                exit_maps[idx][qname] = val
            ok = True
            for idx, clauses in model_invariants.items():
                m = exit_maps.get(idx)
                if m is None:
                    continue
                for cl in clauses:
                    if not cl.fn(m, None):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            ctx.exit_models = exit_maps
            for result in results:
                ctx.result = result
                try:
                    admitted = all(p.fn(ctx) for p in routine.post) and all(
                        p.fn(ctx) for p in routine.frame_preds
                    )
                except ModelEvalError as e:
                    raise ConfigError(
                        "%s.%s postcondition is not abstractly evaluable: %s"
                        % (class_spec.name, routine.name, e)
                    )
                if admitted:
                    found.append((exit_maps, result))
                    if len(found) == 2:
                        return ProbeResult("incomplete", pre, found, checked)
        if not found:
            return ProbeResult("incomplete", pre, [], checked)
    return ProbeResult("complete", None, [], checked)

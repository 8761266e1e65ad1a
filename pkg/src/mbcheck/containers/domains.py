"""Bounded abstract domains for the completeness probe.

A domain enumerates abstract pre-states and candidate post-values for the
sequence-plus-index container models. Bounds are small on purpose: the probe
is a desk check, not a verifier, and a routine judged incomplete here is
incomplete, full stop; one judged complete is complete up to the bound.
"""

from __future__ import annotations

import itertools

import mbcheck.values as V
from mbcheck.errors import ConfigError

# queries a boolean-valued routine may produce; everything else gets items
_BOOL_ROUTINES = frozenset(["off", "is_equal", "has", "is_empty"])


def _all_seqs(max_len, alphabet, unique=False):
    out = [()]
    for n in range(1, max_len + 1):
        for combo in itertools.product(range(alphabet), repeat=n):
            if unique and len(set(combo)) != n:
                continue
            out.append(combo)
    return [V.sequence(V.integer(x) for x in s) for s in out]


class SequenceDomain:
    """Abstract domain for one class whose strong model is sequence + index.

    ``role_specs`` maps class name -> bound strong spec, used to resolve
    reference-argument roles. Objects whose model lacks an index query (the
    stack and the queue) get sequence-only states.
    """

    def __init__(self, role_specs, max_len=3, alphabet=2, unique=False, value_len=None):
        self.role_specs_by_name = dict(role_specs)
        self.max_len = max_len
        self.alphabet = alphabet
        self.unique = unique
        value_len = 2 * max_len if value_len is None else value_len
        self.pre_seqs = _all_seqs(max_len, alphabet, unique)
        self.value_seqs = _all_seqs(value_len, alphabet, unique)
        self.index_values = [V.integer(i) for i in range(0, value_len + 2)]

    def role_spec(self, ref_class):
        spec = self.role_specs_by_name.get(ref_class)
        if spec is None:
            raise ConfigError("domain has no spec for class %r" % (ref_class,))
        return spec

    def _role_states(self, spec):
        has_index = "index" in spec.model_names
        for s in self.pre_seqs:
            if has_index:
                for i in range(V.seq_count(s) + 2):
                    yield {"sequence": s, "index": V.integer(i)}
            else:
                yield {"sequence": s}

    def pre_states(self, class_spec, routine):
        target_states = list(self._role_states(class_spec))
        plain = [p.kind for p in routine.params if p.kind != "ref"]
        if plain:
            arg_pools = []
            for kind in plain:
                if kind == "item":
                    arg_pools.append(tuple(range(self.alphabet)))
                else:
                    arg_pools.append(tuple(range(-1, self.max_len + 2)))
            plain_args = list(itertools.product(*arg_pools))
        else:
            plain_args = [()]

        ref_ks = routine.ref_params
        for tm in target_states:
            if not ref_ks:
                for args in plain_args:
                    yield {"roles": {-1: tm}, "args": args}
                continue
            # a single reference parameter is all the containers use
            k = ref_ks[0]
            arg_spec = self.role_spec(routine.params[k].ref_class)
            for am in self._role_states(arg_spec):
                for args in plain_args:
                    full = list(args)
                    full.insert(k, object())
                    yield {"roles": {-1: tm, k: am}, "args": tuple(full)}
            for args in plain_args:
                full = list(args)
                full.insert(k, None)
                yield {"roles": {-1: tm}, "args": tuple(full)}

    def value_choices(self, idx, qname, pre):
        if qname == "sequence":
            return self.value_seqs
        if qname == "index":
            return self.index_values
        raise ConfigError("no candidate values for query %r" % (qname,))

    def result_choices(self, routine, pre):
        if routine.name in _BOOL_ROUTINES:
            return (False, True)
        return tuple(range(self.alphabet))

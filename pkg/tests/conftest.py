import os

import pytest

from atmod.formulas import (And, Atom, Iff, Imp, Literal, Not, Or, conj)
from atmod.theory import (ActionTheory, EffectLaw, ExecutabilityLaw,
                          InexecutabilityLaw, StaticLaw, load_theory)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name + ".at")


@pytest.fixture
def theory():
    return lambda name: load_theory(fixture_path(name))


def random_formula(rng, atoms, depth=2):
    if depth == 0 or rng.random() < 0.4:
        return Atom(rng.choice(atoms))
    kind = rng.randrange(5)
    if kind == 0:
        return Not(random_formula(rng, atoms, depth - 1))
    cls = (And, Or, Imp, Iff)[kind - 1]
    return cls(random_formula(rng, atoms, depth - 1),
               random_formula(rng, atoms, depth - 1))


def random_theory(rng, max_fluents=3, max_actions=2, max_laws=2):
    fluents = ["p%d" % i for i in range(1, rng.randint(1, max_fluents) + 1)]
    actions = ["a%d" % i for i in range(1, rng.randint(1, max_actions) + 1)]
    statics = tuple(StaticLaw(random_formula(rng, fluents))
                    for _ in range(rng.randint(0, max_laws)))
    effects, execs, inexecs = [], [], []
    dependence = set()
    for action in actions:
        for _ in range(rng.randint(0, max_laws)):
            post = conj(Literal(f, rng.random() < 0.5).formula()
                        for f in rng.sample(fluents,
                                            rng.randint(1, len(fluents))))
            effects.append(EffectLaw(action, random_formula(rng, fluents),
                                     post))
        if rng.random() < 0.7:
            execs.append(ExecutabilityLaw(action,
                                          random_formula(rng, fluents)))
        if rng.random() < 0.4:
            inexecs.append(InexecutabilityLaw(action,
                                              random_formula(rng, fluents)))
        for f in fluents:
            for negated in (False, True):
                if rng.random() < 0.5:
                    dependence.add((action, Literal(f, negated)))
    return ActionTheory(name="random", fluents=tuple(fluents),
                        actions=tuple(actions), statics=statics,
                        effects=tuple(effects), execs=tuple(execs),
                        inexecs=tuple(inexecs),
                        dependence=frozenset(dependence))

import random

import pytest
from hypothesis import settings

from envalg.realize import PhaseElement, WeylElement
from envalg.scalar import random_scalar

settings.register_profile("envalg", deadline=None, print_blob=True)
settings.load_profile("envalg")


def random_laurent(cls, rng, max_terms=3, max_num=4):
    """Random element with Laurent positions (exponent -1..2) and polynomial momenta."""
    out = cls()
    for _ in range(rng.randint(1, max_terms)):
        exps = [rng.randint(-1, 2) for _ in range(3)] + [rng.randint(0, 2) for _ in range(3)]
        out = out + cls.monomial(exps, random_scalar(rng, max_terms=2, max_deg=1, max_num=max_num))
    return out


def random_phase(rng, **kw):
    return random_laurent(PhaseElement, rng, **kw)


def random_weyl(rng, **kw):
    return random_laurent(WeylElement, rng, **kw)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def full_report():
    from envalg.suite import run_suite
    return run_suite("all")


def pbw_words(e):
    """Expand a PBW-ordered element back into (ordered word, coefficient) pairs."""
    out = []
    for m, c in e.terms.items():
        out.append(([k + 1 for k, n in enumerate(m) for _ in range(n)], c))
    return out


def registry_round_trip_failures():
    """Every check's two sides must survive print -> parse unchanged.

    Also covers the printed value of each environment definition: its text
    evaluates back to the same element.
    """
    from envalg.dsl import parse, to_text
    from envalg.envs import ENVIRONMENTS, get_env
    from envalg.suite import CHECKS

    bad = []
    for c in CHECKS:
        for side in [c.lhs, c.rhs] + [v.rhs for v in c.variants]:
            node = parse(side)
            if parse(to_text(node)) != node:
                bad.append((c.id, side))
    for name in ENVIRONMENTS:
        env = get_env(name)
        for n, node in env.definitions:
            if parse(to_text(node)) != node:
                bad.append((name, n))
            value = env[n]
            eng = env.engine()
            if eng.run(parse(str(value))) != value:
                bad.append((name, n, "value"))
    return bad

"""Randomised representation-law checks for any module."""
from __future__ import annotations

import random

from uslab import scalars
from uslab.lab import vectors as vec
from uslab.lab.modules import Module
from uslab.pbw import serialize


class ModuleAxiomFailure(AssertionError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def _describe(v: dict) -> str:
    return " + ".join(f"{scalars.format_scalar(c)}*{k}" for k, c in sorted(v.items(), key=repr)) or "0"


def axiom_defect(module: Module, g, h, v: dict) -> dict:
    """[g,h].v - (g.(h.v) - h.(g.v))."""
    lie = module.lie
    lhs = module.act_element(lie.bracket(g, h), v)
    rhs = vec.vsub(module.act(g, module.act(h, v)), module.act(h, module.act(g, v)))
    return vec.vsub(lhs, rhs)


def module_axiom_check(module: Module, seed: int = 0, trials: int = 50, raise_on_failure: bool = True) -> dict:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    gens = module.lie.generators
    for t in range(trials):
        g, h = rng.choice(gens), rng.choice(gens)
        v = module.random_vector(rng)
        bad = axiom_defect(module, g, h, v)
        if bad:
            # shrink to a single basis key of v
            witness_v = v
            for key, c in sorted(v.items(), key=repr):
                if axiom_defect(module, g, h, {key: c}):
                    witness_v = {key: c}
                    break
            witness = {
                "g": str(g), "h": str(h), "vector": _describe(witness_v),
                "bracket": serialize(module.lie.bracket(g, h)),
                "defect": _describe(axiom_defect(module, g, h, witness_v)),
            }
            if raise_on_failure:
                raise ModuleAxiomFailure(f"module law fails for ({g}, {h}) on {module.name}", witness)
            return {"status": "fail", "trials": t + 1, "witness": witness}
    return {"status": "pass", "trials": trials, "witness": None}

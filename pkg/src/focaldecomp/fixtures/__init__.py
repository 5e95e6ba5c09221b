"""Reference mass functions shared by the test suite and the CLI examples.

``M_CONS``  consonant chain {a} ⊂ {a,b} ⊂ Ω on Ω = {a,b,c}
``M_QB``    quasi-Bayesian {a}, {b}, Ω on Ω = {a,b,c}
``M_FP``    overlapping {a,b}, {b,c}, Ω on Ω = {a,b,c,d}
``M_SUB``   subnormal chain ∅ ⊂ {a} ⊂ Ω on Ω = {a,b}
"""

import json
from importlib import resources

NAMES = ("M_CONS", "M_QB", "M_FP", "M_SUB")


def load(name: str):
    from ..documents import mass_from_document

    text = resources.files(__name__).joinpath(f"{name}.json").read_text()
    return mass_from_document(json.loads(text))


def load_all() -> dict:
    return {name: load(name) for name in NAMES}

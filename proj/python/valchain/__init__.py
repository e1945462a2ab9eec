"""MacLane-Vaquie chains and abstract key polynomial sequences over (Q, v_p).

Values are exact strings such as "3/2" or "(1, 7/2)".
"""

import json

from ._valchain import Chain, InputError, Sequence, UnresolvedStability, hensel_digits, scenario
from ._valchain import run_demo as _run_demo

__all__ = ["Chain", "Sequence", "InputError", "UnresolvedStability", "hensel_digits", "scenario",
           "run_demo", "validate"]


def run_demo(name, depth=8, window=8, seed=1):
    return json.loads(_run_demo(name, depth, window, seed))


def validate(obj, depth=8, seed=1):
    """Validation report of a Chain or Sequence as a dict."""
    return json.loads(obj.validate(depth, seed))

"""Named sequence registry used by the command line and the test suite.

Registered selectors:

    const1              gamma_k = 1
    linear(a)           gamma_k = k + a          (a rational, e.g. linear(3))
    example311          gamma_k of e^(x/2) * (1 + x)^2
    besselJ0            gamma_k = 1/k!
    exp-half-cosh       gamma_k of e^(x/2) * cosh(sqrt(2x))
    geom-factorial(r)   gamma_k = r^k / k!       (r rational, e.g. geom-factorial(3/5))
    file:PATH           explicit list from a JSON file {"gammas": ["p/q", ...]}

Selectors with an argument take one rational in parentheses.  `file:` data
beyond the listed prefix is treated as an all-zero tail.
"""

import json
import re
from fractions import Fraction

from .jensen import FactoredSpec, GammaSeq, bessel_j0_spec, exp_half_cosh_spec
from .ratpoly import parse_rat

NAMES = ("const1", "linear(a)", "example311", "besselJ0", "exp-half-cosh",
         "geom-factorial(r)", "file:PATH")

_ARG_FORM = re.compile(r"^([a-zA-Z0-9-]+)\(([^)]+)\)$")


def example311_spec() -> FactoredSpec:
    """Factored data for the sequence registered as example311."""
    return FactoredSpec(c=1, m=0, sigma=Fraction(1, 2), zeros=(1, 1))


def _from_file(path: str) -> GammaSeq:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "gammas" not in data:
        raise ValueError(f"sequence file {path} must be a JSON object with a 'gammas' list")
    values = [parse_rat(v) for v in data["gammas"]]
    return GammaSeq.from_values(values, name=f"file:{path}")


def make_sequence(selector: str) -> GammaSeq:
    """Build the sequence named by a selector string (see module docstring)."""
    text = selector.strip()
    if text == "const1":
        seq = GammaSeq.constant(1)
        seq.name = "const1"
        return seq
    if text == "example311":
        return GammaSeq.from_lpplus(example311_spec(), name="example311")
    if text == "besselJ0":
        return GammaSeq.from_lpplus(bessel_j0_spec())
    if text == "exp-half-cosh":
        return GammaSeq.from_lpplus(exp_half_cosh_spec())
    if text.startswith("file:"):
        return _from_file(text[len("file:"):])
    match = _ARG_FORM.match(text)
    if match:
        head, arg = match.group(1), match.group(2)
        if head == "linear":
            return GammaSeq.linear(parse_rat(arg))
        if head == "geom-factorial":
            return GammaSeq.geometric_factorial(parse_rat(arg))
    raise ValueError(f"unknown sequence selector {selector!r}; known: {', '.join(NAMES)}")


def factored_from_json(text: str) -> FactoredSpec:
    """Parse a factored generator from a JSON object string.

    Keys: "sigma" (required, "p/q"), "c" (default "1"), "m" (default 0),
    "zeros" (default [], list of "p/q").
    """
    data = json.loads(text)
    if not isinstance(data, dict) or "sigma" not in data:
        raise ValueError('factored generator needs a JSON object with at least "sigma"')
    return FactoredSpec(
        c=parse_rat(str(data.get("c", "1"))),
        m=int(data.get("m", 0)),
        sigma=parse_rat(str(data["sigma"])),
        zeros=tuple(parse_rat(str(z)) for z in data.get("zeros", ())),
    )

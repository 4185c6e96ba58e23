"""Named example maps and the JSON map-spec loader.

Gallery names accepted everywhere a map is requested:

    identity                     f(z) = z
    scaled:M                     f(z) = M z, M > 0
    affine:a,b                   f(z) = a z + b zbar        (complex a, b)
    poly:z+c*zbar^n              f(z) = z + c zbar^n        (real c, int n)
    poisson:phi=t+eps*sin(t)     Poisson map with that boundary phase

Complex literals in ``affine:`` use Python syntax (``0.5+0.25j``).  The
``poisson:`` phase expression is parsed with a whitelisted arithmetic
AST; the only free variable is ``t`` and the only functions are sin,
cos, tan, atan, atan2, sqrt, exp, log (all numpy, so the phase evaluates
on arrays).

JSON map specs are objects with a ``kind`` key:

    {"kind": "series", "analytic": [[0,0],[1,0]], "antianalytic": [[0.3,0]]}
    {"kind": "affine", "c0": [0,0], "a": [1,0], "b": [0.5,0]}
    {"kind": "poisson", "scale": 2.0, "phi": "t + 0.2*sin(t)"}
    {"kind": "gallery", "name": "poly:z+0.5*zbar^3"}

Complex numbers are two-element [re, im] arrays.
"""

from __future__ import annotations

import ast
import json
import re

import numpy as np

from .errors import MapSpecError
from .maps import AffineHarmonicMap, PoissonHarmonicMap, SeriesHarmonicMap

_PHI_FUNCS = {
    "sin": np.sin, "cos": np.cos, "tan": np.tan, "atan": np.arctan,
    "atan2": np.arctan2, "sqrt": np.sqrt, "exp": np.exp, "log": np.log,
}
_PHI_CONSTS = {"pi": np.pi, "e": np.e}

_ALLOWED_NODES = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Call,
                  ast.Name, ast.Load, ast.Constant, ast.Add, ast.Sub,
                  ast.Mult, ast.Div, ast.Pow, ast.Mod, ast.USub, ast.UAdd)


def _compile_phase(expr):
    """Compile a phase expression in the variable t to an array function."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise MapSpecError(f"cannot parse phase expression {expr!r}: {exc}")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise MapSpecError(
                f"phase expression {expr!r} uses disallowed syntax "
                f"({type(node).__name__})")
        if isinstance(node, ast.Call):
            if (not isinstance(node.func, ast.Name)
                    or node.func.id not in _PHI_FUNCS or node.keywords):
                raise MapSpecError(
                    f"phase expression {expr!r} calls a disallowed function")
        if isinstance(node, ast.Name):
            if node.id not in _PHI_FUNCS and node.id not in _PHI_CONSTS \
                    and node.id != "t":
                raise MapSpecError(
                    f"unknown name {node.id!r} in phase expression {expr!r}")
        if isinstance(node, ast.Constant) and not isinstance(
                node.value, (int, float)):
            raise MapSpecError(
                f"non-numeric constant in phase expression {expr!r}")
    code = compile(tree, "<phase>", "eval")
    env = {"__builtins__": {}}
    env.update(_PHI_FUNCS)
    env.update(_PHI_CONSTS)

    def phi(t):
        return eval(code, env, {"t": np.asarray(t, dtype=float)})

    phi.expression = expr
    return phi


_POLY_RE = re.compile(
    r"^z\+(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\*zbar\^(\d+)$")


def gallery_map(name):
    """Construct a gallery map from its name string."""
    name = name.strip()
    if name == "identity":
        return SeriesHarmonicMap([0.0, 1.0])
    if name.startswith("scaled:"):
        try:
            M = float(name[len("scaled:"):])
        except ValueError:
            raise MapSpecError(f"bad scale in gallery name {name!r}")
        if M <= 0:
            raise MapSpecError("scaled: factor must be positive")
        return SeriesHarmonicMap([0.0, M])
    if name.startswith("affine:"):
        body = name[len("affine:"):]
        parts = body.split(",")
        if len(parts) != 2:
            raise MapSpecError(
                f"affine: needs two comma-separated coefficients, got {name!r}")
        try:
            a = complex(parts[0])
            b = complex(parts[1])
        except ValueError:
            raise MapSpecError(f"bad complex literal in gallery name {name!r}")
        return AffineHarmonicMap(0.0, a, b)
    if name.startswith("poly:"):
        body = name[len("poly:"):].replace(" ", "")
        m = _POLY_RE.match(body)
        if not m:
            raise MapSpecError(
                f"poly: gallery names look like poly:z+c*zbar^n, got {name!r}")
        c = float(m.group(1))
        n = int(m.group(2))
        if n < 1:
            raise MapSpecError("poly: exponent must be >= 1")
        if not n * abs(c) < 1.0:
            raise MapSpecError(
                f"poly:z+c*zbar^n needs n*|c| < 1 to stay sense-preserving, "
                f"got n*|c| = {n * abs(c)}")
        anti = np.zeros(n, dtype=complex)
        # f = z + c zbar^n means conj(b_n) = c
        anti[n - 1] = np.conj(c)
        return SeriesHarmonicMap([0.0, 1.0], anti, sense_preserving=True)
    if name.startswith("poisson:"):
        body = name[len("poisson:"):]
        if not body.startswith("phi="):
            raise MapSpecError(
                f"poisson: gallery names look like poisson:phi=<expr>, "
                f"got {name!r}")
        return PoissonHarmonicMap(1.0, _compile_phase(body[len("phi="):]))
    raise MapSpecError(f"unknown gallery map {name!r}")


def gallery_names():
    """Representative concrete instances of every gallery family."""
    return ["identity", "scaled:2.0", "affine:1,0.5", "poly:z+0.3*zbar^2",
            "poisson:phi=t+0.2*sin(t)"]


def _as_complex(obj, what):
    if isinstance(obj, (int, float)):
        return complex(obj)
    if (isinstance(obj, (list, tuple)) and len(obj) == 2
            and all(isinstance(x, (int, float)) for x in obj)):
        return complex(obj[0], obj[1])
    raise MapSpecError(f"{what} must be a number or a [re, im] pair")


def parse_map_spec(spec):
    """Build a map from a parsed JSON object (dict) spec."""
    if not isinstance(spec, dict):
        raise MapSpecError("map spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "series":
        a = [_as_complex(c, "analytic coefficient")
             for c in spec.get("analytic", [])]
        b = [_as_complex(c, "antianalytic coefficient")
             for c in spec.get("antianalytic", [])]
        if not a:
            raise MapSpecError("series spec needs a nonempty analytic list")
        return SeriesHarmonicMap(
            a, b, sense_preserving=bool(spec.get("sense_preserving", False)))
    if kind == "affine":
        return AffineHarmonicMap(
            _as_complex(spec.get("c0", 0.0), "c0"),
            _as_complex(spec.get("a", 1.0), "a"),
            _as_complex(spec.get("b", 0.0), "b"))
    if kind == "poisson":
        phi = spec.get("phi")
        if not isinstance(phi, str):
            raise MapSpecError("poisson spec needs a string phi expression")
        scale = spec.get("scale", 1.0)
        if not isinstance(scale, (int, float)):
            raise MapSpecError("poisson scale must be a number")
        kwargs = {}
        if "kernel_tol" in spec:
            kwargs["kernel_tol"] = float(spec["kernel_tol"])
        return PoissonHarmonicMap(float(scale), _compile_phase(phi), **kwargs)
    if kind == "gallery":
        name = spec.get("name")
        if not isinstance(name, str):
            raise MapSpecError("gallery spec needs a name string")
        return gallery_map(name)
    raise MapSpecError(
        f"unknown map kind {kind!r}; expected series, affine, poisson "
        f"or gallery")


def load_map_spec(path):
    """Read and build a map from a JSON file."""
    try:
        with open(path) as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise MapSpecError(f"cannot read map spec {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise MapSpecError(f"map spec {path} is not valid JSON: {exc}")
    return parse_map_spec(spec)

"""Max-times spectral theory and diagonal scaling.

Matrices are square nested sequences. Entries may be ints, strings such as
"5/11", fractions.Fraction or floats; a float entry selects float mode unless
``mode`` says otherwise. Exact results come back as strings, float results as
floats.
"""

from fractions import Fraction
import json

from . import _tropvis
from ._tropvis import DomainError, UsageError

__all__ = [
    "DomainError",
    "UsageError",
    "cli",
    "check_visualization",
    "critical_structure",
    "dimensions",
    "eigencone_basis",
    "kleene_star",
    "lambda_",
    "linear_rank",
    "maximal_permutation",
    "membership",
    "quotient_matrix",
    "strict_visualizer",
    "subeigencone_basis",
    "visualize_assignment",
]


def _entry(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _text(a):
    rows = [list(r) for r in a]
    lines = [str(len(rows))]
    lines += [" ".join(_entry(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _mode(a, mode):
    if mode != "auto":
        return mode
    return "float" if any(isinstance(v, float) for r in a for v in r) else "auto"


def lambda_(a, mode="auto"):
    return _tropvis.max_cycle_geometric_mean(_text(a), _mode(a, mode))


def kleene_star(a, mode="auto"):
    return _tropvis.kleene_star(_text(a), _mode(a, mode))


def critical_structure(a, mode="auto"):
    return _tropvis.critical_structure(_text(a), _mode(a, mode))


def subeigencone_basis(a, mode="auto"):
    return _tropvis.cone_basis(_text(a), False, _mode(a, mode))


def eigencone_basis(a, mode="auto"):
    return _tropvis.cone_basis(_text(a), True, _mode(a, mode))


def membership(a, x, mode="auto"):
    return _tropvis.membership(_text(a), [_entry(v) for v in x], _mode(a, mode))


def dimensions(a, mode="auto"):
    return _tropvis.dimensions(_text(a), _mode(a, mode))


def linear_rank(a):
    return _tropvis.linear_rank(_text(a))


def check_visualization(a, mode="auto"):
    return _tropvis.check_visualization(_text(a), _mode(a, mode))


def strict_visualizer(a, method="sum", weights=(), mode="auto"):
    """Returns (x, X^-1 A X). Methods other than "sum" run in float mode."""
    m = _mode(a, mode)
    if method != "sum" and m == "auto":
        m = "float"
    return _tropvis.strict_visualizer(_text(a), method, list(weights), m)


def quotient_matrix(a, mode="auto"):
    return _tropvis.quotient_matrix(_text(a), _mode(a, mode))


def maximal_permutation(a, mode="auto"):
    return _tropvis.maximal_permutation(_text(a), _mode(a, mode))


def visualize_assignment(a, mode="auto"):
    return _tropvis.visualize_assignment(_text(a), _mode(a, mode))


def cli(args, stdin=""):
    """Runs the command-line tool in-process. Returns (exit code, report or None, stderr)."""
    code, out, err = _tropvis.run_cli([str(a) for a in args], stdin)
    return code, (json.loads(out) if out.strip() and code == 0 else None), err

"""Figure-grid evaluation: rectangular parameter sweeps of the two built-in
surface expressions, emitted as deterministic delimited text and optionally
rendered to an image.

Built-ins:
  fig-tangent-quotient-rhs   exp(2 e^(2imn) Phi(e^(2imn),1,1+1/(2n))
                                 - 2 e^(2inr) Phi(e^(2inr),1,1+1/(2n)))
                             over (m, r) at fixed n
  fig-loggamma-product-rhs   2i log(G((a+ib)/4)/(2 G((a+ib+2)/4)))
                                * log(4 G((a+ib+3)/4)^2 / G((a+ib+1)/4)^2)
                             over (a, b) = (Re, Im) of the argument
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, LerchkitError
from .lerch import phi
from .numerics import gamma

CHANNELS = ("re", "im", "abs")


@dataclass(frozen=True)
class AxisSpec:
    name: str
    lo: float
    hi: float
    steps: int

    def values(self) -> list[float]:
        h = (self.hi - self.lo) / (self.steps - 1)
        return [self.lo + i * h for i in range(self.steps)]


@dataclass(frozen=True)
class GridSpec:
    expression: str
    p1: AxisSpec
    p2: AxisSpec
    fixed: dict = field(default_factory=dict)
    channel: str = "abs"

    def validate(self) -> None:
        if self.expression not in _EXPRESSIONS:
            raise DomainError(f"unknown grid expression {self.expression!r}; "
                              f"built-ins: {sorted(_EXPRESSIONS)}")
        for axis in (self.p1, self.p2):
            if axis.steps < 2:
                raise DomainError(f"axis {axis.name}: steps must be >= 2")
            if not axis.lo < axis.hi:
                raise DomainError(f"axis {axis.name}: min must be < max")
        if self.channel not in CHANNELS:
            raise DomainError(f"channel must be one of {CHANNELS}")
        expected = _EXPRESSIONS[self.expression].axes
        got = (self.p1.name, self.p2.name)
        if got != expected:
            raise DomainError(
                f"{self.expression} sweeps parameters {expected}, got {got}")


class _TangentQuotientRhs:
    """Separable in m and r: per-axis Lerch terms are cached."""

    axes = ("m", "r")
    defaults = (AxisSpec("m", -1.0, 1.0, 101), AxisSpec("r", -1.0, 1.0, 101))
    default_fixed = {"n": 5}

    def __init__(self, fixed: dict):
        self.n = int(fixed.get("n", 5))
        if self.n < 1:
            raise DomainError("fig-tangent-quotient-rhs: n must be >= 1")
        self._cache: dict[float, complex] = {}

    def _axis_term(self, t: float) -> complex:
        if t not in self._cache:
            n = self.n
            z = cmath.exp(2j * t * n)
            self._cache[t] = 2.0 * z * phi(z, 1.0, 1.0 + 1.0 / (2 * n)).value
        return self._cache[t]

    def __call__(self, m: float, r: float) -> complex:
        return cmath.exp(self._axis_term(m) - self._axis_term(r))


class _LoggammaProductRhs:
    axes = ("a", "b")
    defaults = (AxisSpec("a", 2.5, 8.0, 101), AxisSpec("b", -4.0, 4.0, 101))
    default_fixed: dict = {}

    def __init__(self, fixed: dict):
        if fixed:
            raise DomainError("fig-loggamma-product-rhs takes no fixed parameters")

    def __call__(self, a: float, b: float) -> complex:
        c = complex(a, b)
        log1 = cmath.log(gamma(c / 4) / (2 * gamma((c + 2) / 4)))
        log2 = cmath.log(4 * gamma((c + 3) / 4) ** 2 / gamma((c + 1) / 4) ** 2)
        return 2j * log1 * log2


_EXPRESSIONS = {
    "fig-tangent-quotient-rhs": _TangentQuotientRhs,
    "fig-loggamma-product-rhs": _LoggammaProductRhs,
}


def expression_names() -> tuple[str, ...]:
    return tuple(sorted(_EXPRESSIONS))


def default_spec(expression: str) -> GridSpec:
    cls = _EXPRESSIONS.get(expression)
    if cls is None:
        raise DomainError(f"unknown grid expression {expression!r}")
    return GridSpec(expression=expression, p1=cls.defaults[0], p2=cls.defaults[1],
                    fixed=dict(cls.default_fixed))


def evaluate_grid(spec: GridSpec) -> list[tuple[float, float, complex | None]]:
    """steps^2 rows (p1, p2, value) in row-major order; None marks
    non-evaluable points."""
    spec.validate()
    fn = _EXPRESSIONS[spec.expression](spec.fixed)
    rows: list[tuple[float, float, complex | None]] = []
    for x1 in spec.p1.values():
        for x2 in spec.p2.values():
            try:
                val = fn(x1, x2)
                if not (math.isfinite(val.real) and math.isfinite(val.imag)):
                    val = None
            except LerchkitError:
                val = None
            rows.append((x1, x2, val))
    return rows


def grid_csv(rows: list[tuple[float, float, complex | None]]) -> str:
    """Delimited text, header p1,p2,re,im,abs; byte-deterministic."""
    lines = ["p1,p2,re,im,abs"]
    for x1, x2, val in rows:
        if val is None:
            lines.append(f"{x1!r},{x2!r},nan,nan,nan")
        else:
            lines.append(f"{x1!r},{x2!r},{val.real!r},{val.imag!r},{abs(val)!r}")
    return "\n".join(lines) + "\n"


def render_grid(rows, spec: GridSpec, path: str) -> None:
    """Render the selected channel of a grid as a heatmap image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    pick = {"re": lambda z: z.real, "im": lambda z: z.imag, "abs": abs}[spec.channel]
    data = np.full((spec.p1.steps, spec.p2.steps), np.nan)
    for idx, (_, _, val) in enumerate(rows):
        if val is not None:
            data[idx // spec.p2.steps, idx % spec.p2.steps] = pick(val)

    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    mesh = ax.imshow(
        data.T, origin="lower", aspect="auto",
        extent=(spec.p1.lo, spec.p1.hi, spec.p2.lo, spec.p2.hi),
        cmap="viridis",
    )
    fig.colorbar(mesh, ax=ax)
    ax.set_xlabel(spec.p1.name)
    ax.set_ylabel(spec.p2.name)
    ax.set_title(f"{spec.expression} [{spec.channel}]")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)

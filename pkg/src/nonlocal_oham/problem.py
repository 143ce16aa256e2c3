"""Nonlocal two-point problems ``alpha(p) y'' = h(x) + lam * y**m``.

Here ``y(0) = a``, ``y(1) = b``, ``p = int_0^1 y`` and ``alpha(p) = p**gamma``.
The module holds the problem description, the four built-in benchmark
problems, the config-file reader/writer and the closed-form solutions.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .poly import ZERO, Polynomial


class ProblemError(ValueError):
    """Invalid problem data."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        super().__init__(message)
        self.field = field
        self.line = line


class ConfigParseError(ProblemError):
    """Malformed config text."""


class NonpositiveNonlocalCoefficient(ArithmeticError):
    """``alpha(p)`` cannot be formed for the nonlocal value ``p`` produced by the series."""

    def __init__(self, p: float, gamma: float, stage: int | None = None):
        where = f" at stage {stage}" if stage is not None else ""
        super().__init__(f"alpha(p) = p**{gamma:g} is not a positive real for p = {p!r}{where}")
        self.p = p
        self.gamma = gamma
        self.stage = stage


class ExactKind(enum.Enum):
    NONE = "none"
    CUBIC = "cubic"
    INV_SQRT = "inv_sqrt"
    INV_LINEAR = "inv_linear"
    SAMPLE_TABLE = "file"


@dataclass(frozen=True)
class ExactSolution:
    kind: ExactKind = ExactKind.NONE
    samples: tuple[tuple[float, float], ...] = ()
    source: str | None = None

    def __post_init__(self):
        if self.kind is ExactKind.SAMPLE_TABLE:
            xs = [x for x, _ in self.samples]
            if len(xs) < 2:
                raise ProblemError("sample table needs at least two rows", field="exact")
            if any(not 0.0 <= x <= 1.0 for x in xs) or any(b <= a for a, b in zip(xs, xs[1:])):
                raise ProblemError("sample abscissae must be strictly increasing in [0, 1]",
                                   field="exact")

    @classmethod
    def from_csv(cls, path: str | Path) -> "ExactSolution":
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["x", "y"]:
                raise ConfigParseError(f"{path}: sample table header must be 'x,y'", field="exact")
            rows = tuple((float(r["x"]), float(r["y"])) for r in reader)
        return cls(ExactKind.SAMPLE_TABLE, rows, str(path))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind is ExactKind.CUBIC:
            y = x ** 3
        elif self.kind is ExactKind.INV_SQRT:
            y = 1.0 / np.sqrt(1.0 + x)
        elif self.kind is ExactKind.INV_LINEAR:
            y = 1.0 / (1.0 + x)
        elif self.kind is ExactKind.SAMPLE_TABLE:
            xs, ys = zip(*self.samples)
            y = np.interp(x, xs, ys)
        else:
            return None
        return float(y) if y.ndim == 0 else y


@dataclass(frozen=True)
class ProblemSpec:
    a: float
    b: float
    gamma: float
    forcing: Polynomial = ZERO
    lam: float = 0.0
    power: int = 1
    exact: ExactSolution = field(default_factory=ExactSolution)
    name: str = ""

    def __post_init__(self):
        for name in ("a", "b", "gamma", "lam"):
            if not math.isfinite(getattr(self, name)):
                raise ProblemError(f"{name} must be finite", field=name)
        if self.a < 0:
            raise ProblemError("boundary value a must be nonnegative", field="a")
        if self.b < 0:
            raise ProblemError("boundary value b must be nonnegative", field="b")
        if self.power < 0:
            raise ProblemError("power must be a nonnegative integer", field="power")
        if self.lam != 0 and (self.power < 1 or self.power % 2 == 0):
            raise ProblemError(f"power must be an odd integer >= 1, got {self.power}",
                               field="power")
        if self.lam == 0 and self.forcing.is_zero():
            raise ProblemError("lambda = 0 together with zero forcing leaves nothing to solve",
                               field="lambda")

    @property
    def boundary_line(self) -> Polynomial:
        return Polynomial.line(self.a, self.b)

    def rhs(self, y: Polynomial) -> Polynomial:
        """``f(x, y) = h(x) + lam * y**m`` as a polynomial in x."""
        if self.lam == 0:
            return self.forcing
        return self.forcing + self.lam * y ** self.power


def alpha(spec: ProblemSpec, p: float, stage: int | None = None) -> float:
    """``p**gamma``, refusing values that are not positive reals."""
    g = spec.gamma
    integer_exponent = g >= 0 and float(g).is_integer()
    if not math.isfinite(p) or (not integer_exponent and p <= 0):
        raise NonpositiveNonlocalCoefficient(p, g, stage)
    value = p ** g
    if not (math.isfinite(value) and value > 0):
        raise NonpositiveNonlocalCoefficient(p, g, stage)
    return value


def exact_eval(spec: ProblemSpec, x):
    return spec.exact(x)


_CBRT4 = 4.0 ** (1.0 / 3.0)
_S2 = math.sqrt(2.0)


def builtin(example_id: int) -> ProblemSpec:
    """The four benchmark problems.

    1. ``p**(1/3) y'' = (6/cbrt 4) x``, y(0)=0, y(1)=1, solution x**3.
    2. ``(1/p) y'' = 3/(4(2 sqrt2 - 2)) y**5``, solution 1/sqrt(1+x).
    3. ``p y'' = 3(2 sqrt2 - 2)/4 y**5``, solution 1/sqrt(1+x).
    4. ``(1/p)**2 y'' = 2/(ln 2)**2 y**3``, solution 1/(1+x).
    """
    if example_id == 1:
        return ProblemSpec(0.0, 1.0, 1.0 / 3.0, Polynomial([0.0, 6.0 / _CBRT4]), 0.0, 1,
                           ExactSolution(ExactKind.CUBIC), name="example-1")
    if example_id == 2:
        return ProblemSpec(1.0, _S2 / 2, -1.0, ZERO, 3.0 / (4.0 * (2 * _S2 - 2)), 5,
                           ExactSolution(ExactKind.INV_SQRT), name="example-2")
    if example_id == 3:
        return ProblemSpec(1.0, _S2 / 2, 1.0, ZERO, 3.0 * (2 * _S2 - 2) / 4.0, 5,
                           ExactSolution(ExactKind.INV_SQRT), name="example-3")
    if example_id == 4:
        return ProblemSpec(1.0, 0.5, -2.0, ZERO, 2.0 / math.log(2.0) ** 2, 3,
                           ExactSolution(ExactKind.INV_LINEAR), name="example-4")
    raise ProblemError(f"unknown built-in example {example_id!r}; choose 1-4", field="example")


_KEYS = ("a", "b", "gamma", "forcing", "lambda", "power", "exact")
_REQUIRED = ("a", "b", "gamma")


def _parse_float(text: str, key: str, lineno: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigParseError(f"line {lineno}: field {key}: cannot parse {text!r} as a number",
                               field=key, line=lineno) from None
    if not math.isfinite(value):
        raise ConfigParseError(f"line {lineno}: field {key}: value must be finite",
                               field=key, line=lineno)
    return value


def parse_problem(config_text: str, base_dir: str | Path | None = None) -> ProblemSpec:
    """Parse ``key=value`` config text into a validated :class:`ProblemSpec`.

    Relative ``exact=file:<path>`` entries resolve against ``base_dir``.
    """
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(config_text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"line {lineno}: expected key=value, got {line!r}", line=lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigParseError(f"line {lineno}: unknown field {key!r}", field=key, line=lineno)
        if key in raw:
            raise ConfigParseError(f"line {lineno}: duplicate field {key!r}", field=key, line=lineno)
        raw[key] = (value, lineno)

    for key in _REQUIRED:
        if key not in raw:
            raise ConfigParseError(f"missing required field {key}", field=key)

    nums = {k: _parse_float(raw[k][0], k, raw[k][1])
            for k in ("a", "b", "gamma", "lambda") if k in raw}
    forcing = ZERO
    if "forcing" in raw:
        text, lineno = raw["forcing"]
        parts = [s.strip() for s in text.split(",")] if text else []
        forcing = Polynomial([_parse_float(s, "forcing", lineno) for s in parts])
    power = 1
    if "power" in raw:
        text, lineno = raw["power"]
        try:
            power = int(text)
        except ValueError:
            raise ConfigParseError(f"line {lineno}: field power: expected an integer, got {text!r}",
                                   field="power", line=lineno) from None
    exact = ExactSolution()
    if "exact" in raw:
        text, lineno = raw["exact"]
        if text.startswith("file:"):
            path = Path(text[5:])
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            exact = ExactSolution.from_csv(path)
        else:
            try:
                kind = ExactKind(text)
            except ValueError:
                raise ConfigParseError(f"line {lineno}: field exact: unknown kind {text!r}",
                                       field="exact", line=lineno) from None
            if kind is ExactKind.SAMPLE_TABLE:
                raise ConfigParseError(f"line {lineno}: field exact: use file:<path>",
                                       field="exact", line=lineno)
            exact = ExactSolution(kind)

    return ProblemSpec(nums["a"], nums["b"], nums["gamma"], forcing, nums.get("lambda", 0.0),
                       power, exact)


def serialize_problem(spec: ProblemSpec) -> str:
    """Inverse of :func:`parse_problem`; floats are written with ``repr`` so they round-trip."""
    lines = [
        f"a={spec.a!r}",
        f"b={spec.b!r}",
        f"gamma={spec.gamma!r}",
        "forcing=" + ",".join(repr(float(c)) for c in spec.forcing.coeffs),
        f"lambda={spec.lam!r}",
        f"power={spec.power}",
    ]
    if spec.exact.kind is ExactKind.SAMPLE_TABLE:
        lines.append(f"exact=file:{spec.exact.source}")
    else:
        lines.append(f"exact={spec.exact.kind.value}")
    return "\n".join(lines) + "\n"


def load_problem(path: str | Path) -> ProblemSpec:
    path = Path(path)
    return parse_problem(path.read_text(encoding="utf-8"), base_dir=path.parent)

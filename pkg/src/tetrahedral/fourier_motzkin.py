"""Exact Fourier-Motzkin elimination over the rationals.

Constraints read ``sum(coeffs[v] * v) <rel> rhs``. Everything is computed
with :class:`fractions.Fraction`; there is no floating point in this module.

Besides the public relations ``>=``, ``<=`` and ``=``, a strict ``>`` is
accepted so that redundancy can be decided exactly (the negation of
``c >= r`` is ``-c > -r``).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

RELATIONS = (">=", "<=", "=", ">")


class UnsupportedInputError(ValueError):
    """Raised when no finite integer search box can be derived."""


class FormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: Mapping[str, Fraction]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        clean = {v: _frac(c) for v, c in self.coeffs.items() if c != 0}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))
        object.__setattr__(self, "rhs", _frac(self.rhs))

    def __hash__(self):
        return hash((tuple(self.coeffs.items()), self.relation, self.rhs))

    @property
    def is_ground(self) -> bool:
        return not self.coeffs

    def lhs(self, point: Mapping[str, Fraction]) -> Fraction:
        return sum((c * point[v] for v, c in self.coeffs.items()), Fraction(0))

    def satisfied_by(self, point: Mapping[str, Fraction]) -> bool:
        lhs = self.lhs(point)
        if self.relation == ">=":
            return lhs >= self.rhs
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">":
            return lhs > self.rhs
        return lhs == self.rhs

    def negated(self) -> "LinearConstraint":
        """Complement of a ``>=`` constraint, as a strict ``>``."""
        if self.relation != ">=":
            raise ValueError("only >= constraints can be negated")
        return LinearConstraint({v: -c for v, c in self.coeffs.items()}, ">", -self.rhs)

    def canonical(self) -> "LinearConstraint":
        """Scale so that the first nonzero coefficient is +-1 (ground: rhs +-1 or 0)."""
        if self.coeffs:
            s = abs(next(iter(self.coeffs.values())))
        else:
            s = abs(self.rhs) or Fraction(1)
        return LinearConstraint({v: c / s for v, c in self.coeffs.items()}, self.relation, self.rhs / s)

    def __str__(self):
        return format_constraint(self)


def ge(coeffs: Mapping[str, object], rhs=0) -> LinearConstraint:
    return LinearConstraint({v: _frac(c) for v, c in coeffs.items()}, ">=", _frac(rhs))


def le(coeffs: Mapping[str, object], rhs=0) -> LinearConstraint:
    return LinearConstraint({v: _frac(c) for v, c in coeffs.items()}, "<=", _frac(rhs))


def eq(coeffs: Mapping[str, object], rhs=0) -> LinearConstraint:
    return LinearConstraint({v: _frac(c) for v, c in coeffs.items()}, "=", _frac(rhs))


@dataclass(frozen=True)
class LinearSystem:
    variables: tuple
    constraints: tuple = field(default=())

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        constraints = tuple(self.constraints)
        declared = set(variables)
        for c in constraints:
            unknown = set(c.coeffs) - declared
            if unknown:
                raise ValueError(f"constraint {c} uses undeclared variables {sorted(unknown)}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "constraints", constraints)

    @property
    def is_normalized(self) -> bool:
        return all(c.relation in (">=", ">") for c in self.constraints)

    def satisfied_by(self, point: Mapping[str, object]) -> bool:
        p = {v: _frac(point[v]) for v in self.variables}
        return all(c.satisfied_by(p) for c in self.constraints)

    def with_constraints(self, constraints: Iterable[LinearConstraint]) -> "LinearSystem":
        return LinearSystem(self.variables, tuple(constraints))

    def __len__(self):
        return len(self.constraints)

    def __str__(self):
        return format_system(self)


def normalize(sys: LinearSystem) -> LinearSystem:
    """Rewrite every constraint as one or two ``>=`` (or strict ``>``) rows."""
    out = []
    for c in sys.constraints:
        if c.relation in (">=", ">"):
            out.append(c)
            continue
        flipped = LinearConstraint({v: -x for v, x in c.coeffs.items()}, ">=", -c.rhs)
        if c.relation == "=":
            out.append(LinearConstraint(c.coeffs, ">=", c.rhs))
        out.append(flipped)
    return sys.with_constraints(out)


def _combine(lower: LinearConstraint, upper: LinearConstraint, var: str) -> LinearConstraint:
    # lower has +1 on var, upper has -1: adding cancels var
    coeffs = dict(lower.coeffs)
    for v, c in upper.coeffs.items():
        coeffs[v] = coeffs.get(v, 0) + c
    del coeffs[var]
    strict = ">" if ">" in (lower.relation, upper.relation) else ">="
    return LinearConstraint(coeffs, strict, lower.rhs + upper.rhs)


def _scaled(c: LinearConstraint, s: Fraction) -> LinearConstraint:
    return LinearConstraint({v: x / s for v, x in c.coeffs.items()}, c.relation, c.rhs / s)


def eliminate(sys: LinearSystem, var: str) -> LinearSystem:
    """Project the solution set of ``sys`` along ``var``."""
    if var not in sys.variables:
        raise ValueError(f"variable {var!r} is not declared")
    if not sys.is_normalized:
        sys = normalize(sys)
    lower, upper, rest = [], [], []
    for c in sys.constraints:
        k = c.coeffs.get(var, 0)
        if k > 0:
            lower.append(_scaled(c, k))
        elif k < 0:
            upper.append(_scaled(c, -k))
        else:
            rest.append(c)
    combined = [_combine(lo, up, var) for up in upper for lo in lower]
    variables = tuple(v for v in sys.variables if v != var)
    return LinearSystem(variables, tuple(combined + rest))


def _ground_ok(c: LinearConstraint) -> bool:
    return 0 > c.rhs if c.relation == ">" else 0 >= c.rhs


def _prune(sys: LinearSystem) -> Optional[LinearSystem]:
    """Cheap cleanup between eliminations: drop duplicates and true ground rows.

    Returns ``None`` if a false ground row shows up.
    """
    seen, keep = set(), []
    for c in sys.constraints:
        if c.is_ground:
            if not _ground_ok(c):
                return None
            continue
        key = c.canonical()
        if key in seen:
            continue
        seen.add(key)
        keep.append(c)
    return sys.with_constraints(keep)


def is_feasible_rational(sys: LinearSystem) -> bool:
    cur = _prune(normalize(sys))
    if cur is None:
        return False
    for var in reversed(sys.variables):
        cur = _prune(eliminate(cur, var))
        if cur is None:
            return False
    return True


def remove_redundant(sys: LinearSystem) -> LinearSystem:
    """Greedily drop constraints implied by the others kept so far.

    A row ``c >= r`` is redundant iff the remaining rows together with
    ``c < r`` have no rational solution.
    """
    sys = normalize(sys)
    keep = list(sys.constraints)
    i = 0
    while i < len(keep):
        c = keep[i]
        others = keep[:i] + keep[i + 1:]
        probe = sys.with_constraints(others + [_negate(c)])
        if is_feasible_rational(probe):
            i += 1
        else:
            del keep[i]
    return sys.with_constraints(keep)


def _negate(c: LinearConstraint) -> LinearConstraint:
    if c.relation == ">=":
        return c.negated()
    # c > r  negates to  -c >= -r
    return LinearConstraint({v: -x for v, x in c.coeffs.items()}, ">=", -c.rhs)


def implies(premise: LinearSystem, conclusion: LinearSystem) -> bool:
    """True iff every rational solution of ``premise`` solves ``conclusion``."""
    variables = tuple(dict.fromkeys(premise.variables + conclusion.variables))
    base = LinearSystem(variables, normalize(premise).constraints)
    for c in normalize(conclusion).constraints:
        probe = base.with_constraints(base.constraints + (_negate(c),))
        if is_feasible_rational(probe):
            return False
    return True


def equivalent(s1: LinearSystem, s2: LinearSystem) -> bool:
    return implies(s1, s2) and implies(s2, s1)


def _bounds(sys: LinearSystem, var: str, point: Mapping[str, Fraction]):
    """Rational lower/upper bounds on ``var`` once ``point`` is substituted."""
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for c in sys.constraints:
        k = c.coeffs.get(var, 0)
        rest = c.rhs - sum((x * point[v] for v, x in c.coeffs.items() if v != var), Fraction(0))
        if k == 0:
            if not (0 > rest if c.relation == ">" else 0 >= rest):
                return None
            continue
        b = rest / k
        if k > 0:
            lo = b if lo is None else max(lo, b)
        else:
            hi = b if hi is None else min(hi, b)
    return lo, hi


def _back_substitute(stages: Sequence[LinearSystem], order: Sequence[str]) -> Optional[dict]:
    point: dict[str, Fraction] = {}
    for sys, var in zip(stages, order):
        bounds = _bounds(sys, var, point)
        if bounds is None:
            return None
        lo, hi = bounds
        if lo is not None:
            val = Fraction(math.ceil(lo))
        elif hi is not None:
            val = Fraction(math.floor(hi))
        else:
            val = Fraction(0)
        if hi is not None and val > hi:
            return None
        point[var] = val
    return point


def _search_box(sys: LinearSystem) -> list[range]:
    box = []
    for var in sys.variables:
        proj = sys
        for other in reversed(sys.variables):
            if other != var:
                proj = _prune(eliminate(proj, other))
                if proj is None:
                    return [range(0)]
        bounds = _bounds(proj, var, {})
        if bounds is None:
            return [range(0)]
        lo, hi = bounds
        if lo is None or hi is None:
            raise UnsupportedInputError(f"variable {var!r} is unbounded")
        box.append(range(math.ceil(lo), math.floor(hi) + 1))
    return box


def integer_point(sys: LinearSystem) -> Optional[tuple[int, ...]]:
    """Find an integer solution, or return ``None`` if there is none.

    Variables are eliminated last-to-first and then assigned first-to-last,
    each one to the ceiling of its largest lower bound. If that greedy
    assignment gets stuck, the bounded box is searched exhaustively.
    """
    sys = normalize(sys)
    cur = _prune(sys)
    if cur is None:
        return None
    chain = [cur]
    for var in reversed(sys.variables):
        cur = _prune(eliminate(cur, var))
        if cur is None:
            return None
        chain.append(cur)
    # chain[k] still contains variables[:len(variables) - k]
    order = list(sys.variables)
    stages = [chain[len(order) - 1 - i] for i in range(len(order))]
    point = _back_substitute(stages, order)
    if point is not None and sys.satisfied_by(point):
        return tuple(int(point[v]) for v in order)
    for cand in itertools.product(*_search_box(sys)):
        if sys.satisfied_by(dict(zip(order, cand))):
            return tuple(cand)
    return None


def tetra_system(a: Sequence[int], d: int) -> LinearSystem:
    """Lattice points of degree ``d`` whose degree-``d`` piece of H^1 is nonzero.

    Unknowns y1..y4; solutions are exactly the degree-``d`` part of the
    finite set enumerated in :mod:`tetrahedral.s_module`.
    """
    a1, a2, a3, a4, a5, a6 = a
    rows = [
        ge({"y1": 1, "y3": 1}, a2),
        ge({"y1": 1, "y4": 1}, a3),
        ge({"y2": 1, "y3": 1}, a4),
        ge({"y2": 1, "y4": 1}, a5),
        le({"y1": 1, "y2": 1}, a1 - 1),
        le({"y3": 1, "y4": 1}, a6 - 1),
        eq({"y1": 1, "y2": 1, "y3": 1, "y4": 1}, d),
    ]
    rows += [ge({v: 1}, 0) for v in ("y1", "y2", "y3", "y4")]
    return LinearSystem(("y1", "y2", "y3", "y4"), tuple(rows))


# -- text format -----------------------------------------------------------

def parse_system(text: str) -> LinearSystem:
    """Parse the line format ``c1 ... cn <rel> rhs`` after a header of names."""
    variables = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if variables is None:
            variables = tuple(tokens)
            if len(set(variables)) != len(variables):
                raise FormatError(lineno, "duplicate variable names")
            continue
        if len(tokens) != len(variables) + 2:
            raise FormatError(lineno, f"expected {len(variables) + 2} fields, got {len(tokens)}")
        *coeffs, rel, rhs = tokens
        if rel not in (">=", "<=", "="):
            raise FormatError(lineno, f"unknown relation {rel!r}")
        try:
            values = [Fraction(t) for t in coeffs]
            bound = Fraction(rhs)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(lineno, f"bad number: {exc}") from None
        rows.append(LinearConstraint(dict(zip(variables, values)), rel, bound))
    return LinearSystem(variables or (), tuple(rows))


def format_constraint(c: LinearConstraint) -> str:
    terms = []
    for v, x in c.coeffs.items():
        sign = "-" if x < 0 else "+"
        mag = abs(x)
        body = v if mag == 1 else f"{mag}*{v}"
        terms.append(f"{sign} {body}")
    lhs = " ".join(terms).lstrip("+ ") if terms else "0"
    if lhs.startswith("- "):
        lhs = "-" + lhs[2:]
    return f"{lhs} {c.relation} {c.rhs}"


def format_system(sys: LinearSystem) -> str:
    return "\n".join(format_constraint(c) for c in sys.constraints)


def dump_system(sys: LinearSystem) -> str:
    """Inverse of :func:`parse_system` for non-strict systems."""
    lines = [" ".join(sys.variables)]
    for c in sys.constraints:
        coeffs = [str(c.coeffs.get(v, 0)) for v in sys.variables]
        lines.append(" ".join(coeffs + [c.relation, str(c.rhs)]))
    return "\n".join(lines) + "\n"

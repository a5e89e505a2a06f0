"""Check records shared by the verification suites and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field

from .frame_alg import Bilinear, Endo, KForm, Trilinear
from .scalar import Expr

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass
class Check:
    id: str
    ref: str
    status: str
    residual: str = "0"
    substitutions: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.ref,
            "status": self.status,
            "residual": self.residual,
            "substitutions": {k: str(v) for k, v in self.substitutions.items()},
        }


def first_residual(x) -> str:
    """``"0"`` for a vanishing object, otherwise its first nonzero entry as text."""
    if x is None:
        return "0"
    if isinstance(x, (bool,)):
        return "0" if x else "1"
    if isinstance(x, Expr):
        return str(x)
    if isinstance(x, KForm):
        if x.is_zero:
            return "0"
        k, v = min(x.items())
        return f"e{''.join(str(i + 1) for i in k)}: {v}"
    if isinstance(x, Trilinear):
        hit = x.first_nonzero()
        if hit is None:
            return "0"
        (a, b, c), v = hit
        return f"({a + 1},{b + 1},{c + 1}): {v}"
    if isinstance(x, Bilinear):
        if x.is_zero:
            return "0"
        (a, b), v = min(x.items())
        return f"({a + 1},{b + 1}): {v}"
    if isinstance(x, Endo):
        if x.is_zero:
            return "0"
        w = x.first_difference(Endo.zero(x.dim))
        return f"entry {tuple(i + 1 for i in w)}: {x.entry(*w)}"
    if isinstance(x, dict):
        for k in sorted(x):
            r = first_residual(x[k])
            if r != "0":
                return f"{k}: {r}"
        return "0"
    if isinstance(x, (list, tuple)):
        for i, item in enumerate(x):
            r = first_residual(item)
            if r != "0":
                return f"[{i}] {r}"
        return "0"
    return str(x)


def is_zero(x) -> bool:
    return first_residual(x) == "0"


def residual_check(id: str, ref: str, residual) -> Check:
    r = first_residual(residual)
    return Check(id, ref, PASS if r == "0" else FAIL, r)


def bool_check(id: str, ref: str, ok: bool, detail: str = "") -> Check:
    return Check(id, ref, PASS if ok else FAIL, "0" if ok else (detail or "condition violated"))


def skipped(id: str, ref: str, reason: str) -> Check:
    """A check that does not apply to the input; never counts as a failure."""
    return Check(id, ref, SKIP, reason)


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

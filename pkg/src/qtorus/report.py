"""Pass/fail records produced by the exact and numeric verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    truncation: tuple[int, ...]
    passed: bool
    # offending coefficient for failures: its degree(s) in t (or s, t), the
    # sub-identity it belongs to, and the nonzero residual itself
    witness_degree: tuple[int, ...] | None = None
    witness: object = None
    identity: str = ""
    residual: float | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing check {self.name!r} must carry a witness")

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "truncation": list(self.truncation),
            "status": "pass" if self.passed else "fail",
            "witness": None,
        }
        if not self.passed:
            value = self.witness
            out["witness"] = {
                "degree": None if self.witness_degree is None else list(self.witness_degree),
                "identity": self.identity,
                "value": value if isinstance(value, (int, float)) else value.to_json(),
            }
        if self.residual is not None:
            out["residual"] = self.residual
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        trunc = ",".join(map(str, self.truncation))
        text = f"{status}  {self.name} [{trunc}]"
        if self.residual is not None:
            text += f" residual={self.residual:.3e}"
        if not self.passed:
            where = "" if self.witness_degree is None else f" at degree {self.witness_degree}"
            text += f"  -- {self.identity}{where}: {self.witness}"
        return text


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = len(self.failures())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)

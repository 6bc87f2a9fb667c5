"""Verification reports listing every violated law with a witness."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    law: str
    witness: dict

    def to_dict(self):
        return {"law": self.law, "witness": self.witness}


@dataclass
class VerificationReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def add(self, law, **witness):
        self.violations.append(Violation(law, witness))

    def laws(self):
        """Violated law names, in first-seen order."""
        return list(dict.fromkeys(v.law for v in self.violations))

    def witnesses(self, law):
        return [v.witness for v in self.violations if v.law == law]

    def extend(self, other, prefix=""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.law, v.witness))
        return self

    def to_dict(self):
        return {"passed": self.passed,
                "violations": [v.to_dict() for v in self.violations]}

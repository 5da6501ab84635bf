"""
검증 보고서 - 항목별 기록과 텍스트/기계 판독용 출력

기계 판독 출력은 `key=value` 블록이며 시간 정보를 넣지 않아 실행마다 바이트 단위로 같습니다.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _clean(value) -> str:
    if isinstance(value, bool):
        return _flag(value)
    return str(value).replace("\n", " ")


@dataclass
class ClaimRecord:
    claim: str
    description: str
    expected: str
    computed: str
    passed: bool
    witness: Dict[str, str] = field(default_factory=dict)


@dataclass
class VerificationReport:
    kind: str
    params: Dict[str, int]
    claims: List[ClaimRecord] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, claim: str, description: str, expected, computed, passed: bool, **witness) -> ClaimRecord:
        record = ClaimRecord(
            claim,
            description,
            _clean(expected),
            _clean(computed),
            bool(passed),
            {k: _clean(v) for k, v in witness.items()},
        )
        self.claims.append(record)
        return record

    def failed_claims(self) -> List[str]:
        return [c.claim for c in self.claims if not c.passed]

    def param_label(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params.items())

    def sort_key(self) -> Tuple:
        return (self.kind, tuple(sorted(self.params.items())))

    # -- 출력 ------------------------------------------------------------------

    def render_machine(self) -> str:
        lines = [f"report={self.kind}"]
        lines += [f"param.{k}={v}" for k, v in self.params.items()]
        for c in self.claims:
            lines.append("")
            lines.append(f"[claim {c.claim}]")
            lines.append(f"description={c.description}")
            lines.append(f"expected={c.expected}")
            lines.append(f"computed={c.computed}")
            lines.append(f"passed={_flag(c.passed)}")
            lines += [f"witness.{k}={v}" for k, v in sorted(c.witness.items())]
        for i, note in enumerate(self.notes):
            lines.append(f"note.{i}={_clean(note)}")
        lines.append("")
        lines.append(f"overall={'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"

    def render_text(self) -> str:
        lines = [f"== {self.kind} ({self.param_label()}) =="]
        for c in self.claims:
            mark = "✅" if c.passed else "❌"
            lines.append(f"{mark} [{c.claim}] {c.description}")
            lines.append(f"    expected: {c.expected}")
            lines.append(f"    computed: {c.computed}")
            for k, v in sorted(c.witness.items()):
                lines.append(f"    {k}: {v}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.timings:
            spent = ", ".join(f"{k} {v:.2f}s" for k, v in self.timings.items())
            lines.append(f"timing: {spent}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "text") -> str:
        return self.render_machine() if fmt == "machine" else self.render_text()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "passed": self.passed,
            "claims": [
                {
                    "claim": c.claim,
                    "description": c.description,
                    "expected": c.expected,
                    "computed": c.computed,
                    "passed": c.passed,
                    "witness": dict(c.witness),
                }
                for c in self.claims
            ],
            "notes": list(self.notes),
        }

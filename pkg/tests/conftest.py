import pytest

# criterion id -> list of (label, ok, detail); filled by the acceptance tests
ACCEPTANCE: dict[int, list] = {}


@pytest.fixture
def record():
    def _record(criterion: int, label: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE.setdefault(criterion, []).append((label, bool(ok), detail))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[crit]
        ok = all(p[1] for p in parts)
        tr.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}")
        for label, sub_ok, detail in parts:
            tail = f" [{detail}]" if detail else ""
            tr.write_line(f"    {'ok  ' if sub_ok else 'FAIL'} {label}{tail}")

CRITERIA: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    CRITERIA[name] = (ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(CRITERIA.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}".rstrip())

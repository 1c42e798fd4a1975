# filled by test_acceptance.py, one (number, name, passed, detail) tuple per criterion
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {num:2d}. {name}: {detail}")
    passed = sum(p for _, _, p, _ in ACCEPTANCE)
    terminalreporter.write_line(f"{passed}/{len(ACCEPTANCE)} acceptance criteria passed")

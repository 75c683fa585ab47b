def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], outcome, props.get("seconds")))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome, seconds in sorted(rows):
        mark = "PASS" if outcome == "passed" else "FAIL"
        took = f" ({seconds:.2f}s)" if seconds is not None else ""
        terminalreporter.write_line(f"criterion {number:2d} {mark}  {title}{took}")

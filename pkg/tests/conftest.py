"""Per-criterion verdict lines for the acceptance suite.

Every test marked ``criterion(n)`` contributes to the verdict for criterion n.
The lines are printed in the terminal summary, so they appear whether or not
output capture is on.
"""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "published examples reproduced by closed form and oracle",
    2: "formula-only lists match printed text and satisfy invariants",
    3: "5202/5208 misprint reported as a documented divergence",
    4: "closed form equals oracle over the desk sweep",
    5: "weight-count and divisibility properties over the sweep",
    6: "representation equations, recurrences and orbit invariance",
}

_outcomes = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append((item.name, report.passed))


def verdict_lines():
    lines = []
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            continue
        failed = [name for name, ok in results if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {n} [{status}] {title}: {len(results) - len(failed)}/{len(results)} checks"
        if failed:
            line += "; failing: " + ", ".join(failed)
        lines.append(line)
    return lines


def pytest_terminal_summary(terminalreporter):
    lines = verdict_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

from hypothesis import HealthCheck, settings, strategies as st

from semiflows.periodic import EventuallyPeriodic

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@st.composite
def eventually_periodic(draw, max_prefix=6, max_period=6):
    prefix = draw(st.lists(st.booleans(), max_size=max_prefix))
    cycle = draw(st.lists(st.booleans(), min_size=1, max_size=max_period))
    return EventuallyPeriodic(tuple(prefix), tuple(cycle))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

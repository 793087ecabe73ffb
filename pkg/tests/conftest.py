import pytest

from zecap.channel import ChannelGraph, single_edge


@pytest.fixture
def one_memory_graph():
    """One-memory binary graph whose only isolated vertex is 11."""
    return ChannelGraph.from_edges([("00", "01"), ("00", "10"), ("01", "10")])


@pytest.fixture
def four_edge_graph():
    return ChannelGraph.from_edges([("000", "111"), ("010", "101"), ("100", "011"), ("110", "001")])


@pytest.fixture
def g000_001():
    return single_edge("000", "001")


_CRITERIA: dict[int, tuple[bool, str]] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.details: list[str] = []

    def note(self, text: str) -> None:
        self.details.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        detail = "; ".join(self.details)
        if not ok:
            detail = f"{detail}; {exc_type.__name__}: {exc}".lstrip("; ")
        line = f"criterion {self.number} {'PASS' if ok else 'FAIL'}: {self.title}" + (f" ({detail})" if detail else "")
        _CRITERIA[self.number] = (ok, line)
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n][1])

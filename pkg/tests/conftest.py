import pytest

from affine_annex.coxeter_core import from_word, get_context, parse_word

PLANE_TAGS = ("A2~", "C2~", "G2~")

ACCEPTANCE_LINES = []


@pytest.fixture(params=PLANE_TAGS)
def plane_ctx(request):
    return get_context(request.param)


@pytest.fixture
def a2():
    return get_context("A2~")


def elt(ctx, word):
    return from_word(ctx, parse_word(ctx, word))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

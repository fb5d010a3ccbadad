import pytest

from genusfield.extension import build_spec
from genusfield.gf import make_field
from genusfield.polyring import parse_poly

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


def poly(field, text):
    return parse_poly(field, text)


def kummer(field, l, gens, **kw):
    """build_spec from (gamma, "D text") pairs."""
    return build_spec(field, l, [(field.parse(str(g)), parse_poly(field, D)) for g, D in gens], **kw)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")

import pytest

from hindiwsd.corpus import Instance, SenseId
from hindiwsd.features import Resources
from hindiwsd.text import normalize, tokenize

# Table 2, sense 2 (necklace) paragraph, first sentence.
NECKLACE_TEXT = "न्यूयॉर्क। हीरे का हार पहनी एक बार्बी गुडिया न्यूयॉर्क में रेकॉर्ड कीमत में नीलाम हुई है।"
# Table 2, sense 1 (defeat) paragraph.
DEFEAT_TEXT = (
    "निर्माता-निर्देशक करण जौहर ने ट्विटर पर लिखा है केकेआर की हार से बहुत दुख हुआ। "
    "खेल को खेल भावना से देखना चाहिए और हार स्वीकार करनी चाहिए।"
)

_ACCEPTANCE = []


@pytest.fixture
def resources():
    return Resources.default()


@pytest.fixture
def necklace():
    tokens = tokenize(normalize(NECKLACE_TEXT))
    return Instance("हार", tokens.index("हार"), tokens, SenseId("हार", "माला"))


@pytest.fixture
def acceptance():
    """Record a one-line verdict for an acceptance criterion."""

    def record(criterion, passed, detail=""):
        _ACCEPTANCE.append((criterion, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        verdict = {True: "PASS", False: "FAIL", None: "SKIP"}[passed]
        terminalreporter.write_line(f"[{verdict}] {criterion}: {detail}")

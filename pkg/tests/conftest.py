import os
import sys
import tempfile
from pathlib import Path

# keep the Eisenstein cache out of the user's home during tests
os.environ.setdefault("DIVBETA_CACHE_DIR", tempfile.mkdtemp(prefix="divbeta-test-"))

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)

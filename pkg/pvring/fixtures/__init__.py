"""Bundled problem files."""

from pathlib import Path

FIXTURE_DIR = Path(__file__).parent


def fixture_path(name: str) -> Path:
    """Path of a bundled problem file, e.g. ``fixture_path("shift_t.pv")``."""
    path = FIXTURE_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture {name!r}")
    return path

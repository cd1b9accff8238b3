"""
Theme files shipped with the package, transcribed from public-domain scores.
"""
from pathlib import Path
from typing import Dict, List

from .theme import AbstractTheme
from .theme_parser import load_theme

__all__ = ['THEME_DIR', 'fixture_names', 'fixture_path', 'load_fixture', 'load_fixtures']

THEME_DIR = Path(__file__).parent / "themes"


def fixture_names() -> List[str]:
    return sorted(p.stem for p in THEME_DIR.glob("*.theme"))


def fixture_path(name: str) -> str:
    path = THEME_DIR / f"{name}.theme"
    if not path.is_file():
        raise FileNotFoundError(f"No fixture theme named {name!r}; known: {fixture_names()}")
    return str(path)


def load_fixture(name: str) -> AbstractTheme:
    return load_theme(fixture_path(name))


def load_fixtures() -> Dict[str, AbstractTheme]:
    return {name: load_fixture(name) for name in fixture_names()}

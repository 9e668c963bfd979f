"""Location of the bundled example diagrams and link specs."""

import os
from pathlib import Path

from .links import Diagram, FramedLink, load_link, parse_pd

ENV_VAR = "SURGERY_CORPUS_DIR"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else Path(__file__).with_name("corpus")


def corpus_path(name: str) -> Path:
    return corpus_dir() / name


def load_diagram(name: str) -> Diagram:
    return parse_pd(corpus_path(name).read_text())


def load_corpus_link(name: str) -> FramedLink:
    return load_link(corpus_path(name))[0]


def resolve(path) -> Path:
    """A path as given if it exists, otherwise the corpus file of that name."""
    p = Path(path)
    if p.exists():
        return p
    alt = corpus_path(p.name)
    return alt if alt.exists() else p

"""Word-set manifests (YAML)."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List

import yaml
from pydantic import BaseModel, ConfigDict, Field

from bws_core.exceptions import ConfigError
from bws_core.settings import settings

__all__ = [
    "WordSet",
    "load_word_sets",
]


class WordSet(BaseModel):
    """A named set of words whose series are averaged into one."""

    name: str
    description: str = ""
    words: List[str] = Field(default_factory=list)
    paths: Dict[str, str] = Field(default_factory=dict)

    model_config = ConfigDict(extra="forbid" if settings.pydantic_mode == "strict" else "allow")


def load_word_sets(path: str | Path) -> Dict[str, WordSet]:
    """Read a manifest and resolve each member's count file.

    Members are looked up as ``<counts_dir>/<word>.csv`` with ``counts_dir``
    relative to the manifest, unless the member gives its own ``path``.
    """
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML ({exc})") from exc
    if "sets" not in raw:
        raise ConfigError(f"{path}: a manifest needs a top-level 'sets' mapping")

    counts_dir = path.parent / raw.get("counts_dir", ".")
    sets: Dict[str, WordSet] = {}
    for name, body in raw["sets"].items():
        words: List[str] = []
        paths: Dict[str, str] = {}
        for entry in body.get("words", []):
            if isinstance(entry, dict):
                word, member_path = entry["word"], path.parent / entry["path"]
            else:
                word, member_path = str(entry), counts_dir / f"{entry}.csv"
            words.append(word)
            paths[word] = str(member_path)
        sets[str(name)] = WordSet(
            name=str(name),
            description=body.get("description", ""),
            words=words,
            paths=paths,
        )
    return sets

from __future__ import annotations

import pytest

from classgraph.construct import builtin_atlas


@pytest.fixture(scope="session")
def atlas():
    """Name -> AtlasEntry for every built-in group (built once per session)."""
    return {entry.group.name: entry for entry in builtin_atlas()}


@pytest.fixture(scope="session")
def atlas_groups(atlas):
    return {name: entry.group for name, entry in atlas.items()}

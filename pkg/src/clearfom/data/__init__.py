"""Shipped example configs and the synthetic historical sample.

All parameter values here are illustrative, chosen at literature-plausible
magnitudes; they are not measurements and the historical sample is synthetic.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

__all__ = ["example_path", "EXAMPLES"]

EXAMPLES = (
    "devices/four_technologies.json",
    "links/four_technologies.json",
    "networks/mesh16_comparison.json",
    "trend/sample_synthetic_systems.csv",
)


def example_path(relative: str) -> Path:
    """Filesystem path of one shipped example (see EXAMPLES)."""
    path = Path(str(resources.files(__package__).joinpath(relative)))
    if not path.is_file():
        raise FileNotFoundError(f"no shipped example named '{relative}'")
    return path

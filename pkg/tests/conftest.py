# tests/conftest.py
import sys
from pathlib import Path

# --- Configuración del Path ---
ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

import math
import os

import numpy as np
import pytest

os.environ.setdefault("LOG_JSON", "false")
os.environ.setdefault("METRICS_ENABLED", "true")

from hermite_bezier.domain.enums import Topology
from hermite_bezier.services.geometry import HermitePair, HermiteSequence

DEFAULT_SEED = 20240607


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: búsquedas exhaustivas y experimentos largos")


# ---------- Fixtures ----------
@pytest.fixture
def rng() -> np.random.Generator:
    """Generador reproducible; HERMITE_SEED permite fijar otra semilla."""
    return np.random.default_rng(int(os.environ.get("HERMITE_SEED", DEFAULT_SEED)))


@pytest.fixture
def quarter_circle_pair() -> tuple[HermitePair, HermitePair]:
    """Cuarto de circunferencia unitaria: (1,0) -> (0,1)."""
    return HermitePair.of((1.0, 0.0), (0.0, 1.0)), HermitePair.of((0.0, 1.0), (-1.0, 0.0))


@pytest.fixture
def circle_data() -> HermiteSequence:
    """Cuatro muestras exactas de la circunferencia unitaria (topología cerrada)."""
    angles = np.arange(4) * math.pi / 2
    points = np.column_stack([np.cos(angles), np.sin(angles)])
    tangents = np.column_stack([-np.sin(angles), np.cos(angles)])
    return HermiteSequence.from_arrays(points, tangents, Topology.closed)


@pytest.fixture
def line_data() -> HermiteSequence:
    """Cinco puntos alineados con tangentes constantes."""
    points = np.column_stack([np.arange(5.0), 2.0 * np.arange(5.0)])
    return HermiteSequence.from_arrays(points, np.tile([1.0, 2.0], (5, 1)))


@pytest.fixture
def tmp_json(tmp_path: Path) -> Path:
    return tmp_path / "data.json"

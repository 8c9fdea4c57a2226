import numpy as np
import pytest

from generator import corpus
from models import Rect, SimDrawing, Subdivision
from simdraw.engine import run
from storage import SAMPLE_FILE, load_rsub


@pytest.fixture
def pin5() -> Subdivision:
    return load_rsub(SAMPLE_FILE)


@pytest.fixture
def pin5_drawing(pin5) -> SimDrawing:
    return run(pin5)


@pytest.fixture
def pin5_centres(pin5) -> SimDrawing:
    """PIN5 itself with every vertex at its rect's centre; a valid drawing."""
    return SimDrawing(rects=list(pin5.rects), positions={r.id: r.center for r in pin5.rects})


@pytest.fixture
def single_rect() -> Subdivision:
    r = Rect.of("r", 0, 0, 2, 1)
    return Subdivision(r.moved(id="bounds"), (r,))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=[12])
def small_corpus(request):
    return list(corpus(request.param, seed=100, min_rects=5, max_rects=25, pinwheel_p=0.4))

import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings as hypothesis_settings

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

hypothesis_settings.register_profile("dev", max_examples=200, deadline=None)
hypothesis_settings.register_profile("ci", max_examples=1000, deadline=None)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


# (g, a, b, c, witnesses for bc+1, ac+1, ab+1)
KNOWN_TRIPLES = [
    (23, 65, 17, 7, ((5, 2), (19, 2), (2, 3))),
    (42, 136, 93, 6, ((13, 2), (19, 2), (7, 3))),
    (104, 292, 187, 32, ((57, 2), (89, 2), (5, 3))),
    (171, 5607, 619, 5, ((18, 2), (163, 2), (118, 3))),
    (190, 439, 248, 67, ((87, 2), (154, 2), (3, 3))),
]


@pytest.fixture
def known_triples():
    return KNOWN_TRIPLES

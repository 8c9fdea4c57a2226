import sys
from pathlib import Path

# flat top-level modules (models, storage, app, ...) import from the repo root
sys.path.insert(0, str(Path(__file__).parent))

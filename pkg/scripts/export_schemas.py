"""
Write JSON Schemas for every document the CLI emits into schemas/.
"""

import json
import sys
from pathlib import Path
from typing import List, Optional

# Project paths
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from config.settings import settings
from src.group_decomposition.reporting import ALL_DOCUMENTS


def export_schemas(target_dir: Optional[Path] = None) -> List[Path]:
    """Write one <name>.schema.json per document model."""
    target_dir = Path(target_dir or settings.schemas_dir)
    target_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, model in sorted(ALL_DOCUMENTS.items()):
        path = target_dir / f"{name}.schema.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(model.model_json_schema(), f, indent=2, sort_keys=True)
            f.write("\n")
        written.append(path)
    return written


if __name__ == "__main__":
    for path in export_schemas(Path(sys.argv[1]) if len(sys.argv) > 1 else None):
        print(f"wrote {path}")

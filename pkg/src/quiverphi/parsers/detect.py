import json
import os

QA = "qa"
REGISTRY = "registry"
UNKNOWN = "unknown"


def detect_format(path: str) -> str:
    # extension first, then a peek at the content
    lower = os.path.basename(path).lower()
    if lower.endswith(".qa"):
        return QA
    try:
        with open(path, encoding="utf-8") as fh:
            head = fh.read(4096)
    except (OSError, UnicodeDecodeError):
        return UNKNOWN
    stripped = head.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped) if len(head) < 4096 else None
        except ValueError:
            doc = None
        # a truncated peek still shows the registry keys near the top
        if (doc is not None and "algebra_fingerprint" in doc) or '"algebra_fingerprint"' in head:
            return REGISTRY
        return UNKNOWN
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[0] in ("algebra", "module", "glue", "params"):
            return QA
        break
    return UNKNOWN

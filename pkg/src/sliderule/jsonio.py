"""Single canonical JSON encoding shared by the CLI and the service, so
both front doors emit byte-identical reports for identical inputs."""

from __future__ import annotations

import json


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)

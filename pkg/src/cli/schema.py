"""
Machine-readable output schema
Every --json document is checked against docs/output_schema.json
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional

from jsonschema import Draft7Validator

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parents[2] / "docs" / "output_schema.json"


@lru_cache(maxsize=None)
def load_schema(path: Path = SCHEMA_PATH) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        schema = json.load(f)
    Draft7Validator.check_schema(schema)
    logger.debug(f"Loaded output schema from {path}")
    return schema


@lru_cache(maxsize=None)
def _validator(command: str) -> Optional[Draft7Validator]:
    schema = load_schema()
    command_schema = schema['commands'].get(command)
    if command_schema is None:
        return None
    # $refs point into #/definitions
    return Draft7Validator({**command_schema, 'definitions': schema['definitions']})


def validate_document(document: Dict[str, Any]) -> List[str]:
    """Problems found in a document; empty when it conforms"""
    command = document.get('command')
    validator = _validator(command) if isinstance(command, str) else None
    if validator is None:
        return [f"unknown command '{command}'"]
    problems = []
    errors = sorted(validator.iter_errors(document),
                    key=lambda e: [str(part) for part in e.absolute_path])
    for error in errors:
        where = ".".join(str(part) for part in error.absolute_path) or "<document>"
        problems.append(f"{command}: {where}: {error.message}")
    return problems

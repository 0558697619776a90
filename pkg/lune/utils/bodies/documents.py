from __future__ import annotations

import json
from dataclasses import dataclass, field
from utils.errors import SchemaError
from utils.regions import Cap
from utils.sphere import SpherePoint
from .BodyTypes import Body, ConvexPolygon, DiskPolygon, body_kind

"""
Body documents
    The JSON file format shared by the commands: a versioned envelope around one body.
    Reading a document rebuilds the body, so every body invariant is checked again.
"""

# ==========
# Constants
# ==========
SCHEMA_VERSION = "1"
DOCUMENT_FIELDS = {"schema_version", "kind", "data", "metadata"}


@dataclass(frozen=True)
class BodyDocument:
    kind: str
    data: dict
    metadata: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    # This function is used to rebuild (and so re-validate) the body
    def body(self) -> Body:
        try:
            if self.kind == "cap":
                return Cap(SpherePoint.from_vector(self.data["center"]), float(self.data["radius"]))
            if self.kind == "polygon":
                return ConvexPolygon.fromDict(self.data)
            if self.kind == "disk_polygon":
                return DiskPolygon.fromDict(self.data)
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise SchemaError(f"bad {self.kind} record: {e}") from e
        raise SchemaError(f"unknown body kind {self.kind!r}")

    # Convert the document to a dictionary
    def toJson(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "data": self.data,
            "metadata": self.metadata,
        }

    # Convert a dictionary to a document
    @classmethod
    def fromDict(cls, raw: dict, strict: bool = False) -> BodyDocument:
        """
        :param raw: The parsed JSON object.
        :param strict: Reject unknown top-level fields instead of keeping them in metadata.
        """
        if not isinstance(raw, dict):
            raise SchemaError("a body document must be a JSON object")
        version = raw.get("schema_version")
        if version != SCHEMA_VERSION:
            raise SchemaError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION!r}")
        for key in ("kind", "data"):
            if key not in raw:
                raise SchemaError(f"missing field {key!r}")
        unknown = set(raw) - DOCUMENT_FIELDS
        if unknown and strict:
            raise SchemaError(f"unknown fields {sorted(unknown)}")
        metadata = dict(raw.get("metadata") or {})
        for key in sorted(unknown):
            metadata[key] = raw[key]
        document = cls(raw["kind"], raw["data"], metadata)
        document.body()
        return document


# This function is used to wrap a body into a document
def document_from_body(body: Body, metadata: dict | None = None) -> BodyDocument:
    if isinstance(body, Cap):
        data = {"center": body.center.toJson(), "radius": body.radius}
    else:
        data = body.toJson()
    return BodyDocument(body_kind(body), data, dict(metadata or {}))

# This function is used to write a document as UTF-8 JSON
def save_document(document: BodyDocument, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document.toJson(), f, indent=2)
        f.write("\n")

# This function is used to read a document, re-validating its body
def load_document(path: str, strict: bool = False) -> BodyDocument:
    with open(path, encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{path} is not valid JSON: {e}") from e
    return BodyDocument.fromDict(raw, strict)
